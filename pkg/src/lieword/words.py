"""Declarative word specifications and finite prefixes of them.

A :data:`WordSpec` describes a finite word, a periodic infinite word u^ω,
the fixed point of a prolongable substitution (optionally followed by a
coding), or a base-k automatic sequence.  Prefixes use 1-based positions:
``materialize_prefix(spec, n)`` is w[1..n].

Factor questions about infinite words are answered on a finite prefix,
the *horizon*.  For u^ω a horizon of |u|+n-1 symbols is exact for
length-n factors; for morphic/automatic words the horizon is a heuristic
``max(floor, multiplier*n)`` and published values must survive a
doubled-horizon recomputation (see :mod:`lieword.verify`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from .dfao import Dfao, eval_dfao
from .errors import HorizonTooSmall, ParseError, RequestedBeyondFiniteWord

EXACT = "exact"
HEURISTIC = "heuristic"

DEFAULT_FLOOR = 4096
DEFAULT_MULTIPLIER = 64


@dataclass(frozen=True)
class Horizon:
    """How many symbols to materialize, and whether that is provably enough."""

    length: int
    mode: str = EXACT

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("horizon length must be >= 1")
        if self.mode not in (EXACT, HEURISTIC):
            raise ValueError(f"unknown horizon mode {self.mode!r}")

    def doubled(self) -> "Horizon":
        return Horizon(self.length * 2, self.mode)

    def as_dict(self) -> dict:
        return {"length": self.length, "mode": self.mode}


def _check_symbols(word: str, what: str) -> None:
    for c in word:
        if c.isspace():
            raise ValueError(f"{what} contains a whitespace symbol")


@dataclass(frozen=True)
class Finite:
    symbols: str

    def __post_init__(self):
        _check_symbols(self.symbols, "finite word")


@dataclass(frozen=True)
class PowerOmega:
    """The periodic infinite word root·root·root···"""

    root: str

    def __post_init__(self):
        if not self.root:
            raise ValueError("power root must be nonempty")
        _check_symbols(self.root, "power root")


@dataclass(frozen=True)
class Morphic:
    """Fixed point of a substitution, optionally followed by a coding.

    The substitution must be prolongable: rules[seed] starts with seed and
    has length >= 2, so iterating from the seed converges to a fixed point.
    """

    rules: Mapping[str, str]
    seed: str
    coding: Mapping[str, str] | None = None

    def __post_init__(self):
        object.__setattr__(self, "rules", dict(self.rules))
        if self.coding is not None:
            object.__setattr__(self, "coding", dict(self.coding))
        if len(self.seed) != 1:
            raise ValueError("seed must be a single symbol")
        image = self.rules.get(self.seed)
        if image is None or not image.startswith(self.seed) or len(image) < 2:
            raise ValueError(
                "rules must be prolongable: rules[seed] starts with the seed "
                "and has length >= 2"
            )
        for sym, img in self.rules.items():
            if len(sym) != 1:
                raise ValueError("rule keys must be single symbols")
            if not img:
                raise ValueError(f"empty image for symbol {sym!r}")
            _check_symbols(img, f"image of {sym!r}")
            for c in img:
                if c not in self.rules:
                    raise ValueError(f"no rule for symbol {c!r} (used in an image)")
        if self.coding is not None:
            for sym in self.rules:
                out = self.coding.get(sym, sym)
                if len(out) != 1 or out.isspace():
                    raise ValueError(f"coding of {sym!r} must be a single symbol")


@dataclass(frozen=True)
class Automatic:
    """w[i] = str(output of the machine on the base-k digits of i-1)."""

    machine: Dfao
    base: int

    def __post_init__(self):
        if self.base != self.machine.base:
            raise ValueError(
                f"declared base {self.base} != machine base {self.machine.base}"
            )
        for out in self.machine.outputs.values():
            if len(str(out)) != 1:
                raise ValueError(f"output {out} is not a single symbol")


WordSpec = Union[Finite, PowerOmega, Morphic, Automatic]


def _dedup(symbols) -> tuple[str, ...]:
    return tuple(dict.fromkeys(symbols))


def declared_alphabet(spec: WordSpec) -> tuple[str, ...]:
    """Symbols of the word in declaration order.

    Declaration order fixes the total order used by every lexicographic
    operation (canonical rotations, sorted output); the complexity counts
    themselves do not depend on it.
    """
    if isinstance(spec, Finite):
        return _dedup(spec.symbols)
    if isinstance(spec, PowerOmega):
        return _dedup(spec.root)
    if isinstance(spec, Morphic):
        internal = [spec.seed]
        for sym, img in spec.rules.items():
            internal.append(sym)
            internal.extend(img)
        coding = spec.coding or {}
        return _dedup(coding.get(c, c) for c in internal)
    if isinstance(spec, Automatic):
        return _dedup(str(spec.machine.outputs[s]) for s in spec.machine.states)
    raise TypeError(f"not a WordSpec: {spec!r}")


def symbol_rank(spec: WordSpec) -> dict[str, int]:
    """Position of each symbol in the declared order."""
    return {c: i for i, c in enumerate(declared_alphabet(spec))}


def materialize_prefix(spec: WordSpec, length: int) -> str:
    """w[1..length] as a plain string.

    Raises RequestedBeyondFiniteWord when a Finite spec is shorter than
    the request.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    if isinstance(spec, Finite):
        if length > len(spec.symbols):
            raise RequestedBeyondFiniteWord(
                f"finite word has {len(spec.symbols)} symbols, {length} requested"
            )
        return spec.symbols[:length]
    if isinstance(spec, PowerOmega):
        reps = -(-length // len(spec.root))  # ceil
        return (spec.root * reps)[:length]
    if isinstance(spec, Morphic):
        word = spec.seed
        while len(word) < length:
            word = "".join(spec.rules[c] for c in word)
        if spec.coding:
            word = "".join(spec.coding.get(c, c) for c in word)
        return word[:length]
    if isinstance(spec, Automatic):
        return "".join(str(eval_dfao(spec.machine, i)) for i in range(length))
    raise TypeError(f"not a WordSpec: {spec!r}")


def is_finite(spec: WordSpec) -> bool:
    return isinstance(spec, Finite)


def choose_horizon(
    spec: WordSpec,
    n: int,
    floor: int = DEFAULT_FLOOR,
    multiplier: int = DEFAULT_MULTIPLIER,
) -> Horizon:
    """A prefix length sufficient to collect the length-n factors.

    Finite words and u^ω admit exact horizons (|w|, respectively |u|+n-1,
    since every length-n factor of u^ω occurs among the first |u|+n-1
    symbols).  Morphic and automatic words get the configurable heuristic
    max(floor, multiplier*n).
    """
    if n < 1:
        raise ValueError("factor length must be >= 1")
    if isinstance(spec, Finite):
        return Horizon(max(1, len(spec.symbols)), EXACT)
    if isinstance(spec, PowerOmega):
        return Horizon(len(spec.root) + n - 1, EXACT)
    if isinstance(spec, (Morphic, Automatic)):
        return Horizon(max(floor, multiplier * n), HEURISTIC)
    raise TypeError(f"not a WordSpec: {spec!r}")


def prefix_for(spec: WordSpec, horizon: Horizon, needed: int) -> str:
    """Materialize the horizon prefix, clamping finite words to their length.

    ``needed`` is the longest factor the caller will ask about; a
    non-finite spec whose horizon cannot cover it raises HorizonTooSmall
    (for a finite word the short prefix is the whole truth, not an error).
    """
    if isinstance(spec, Finite):
        return spec.symbols
    if horizon.length < needed:
        raise HorizonTooSmall(
            f"horizon {horizon.length} cannot answer length-{needed} factor queries"
        )
    return materialize_prefix(spec, horizon.length)


def parse_word_spec(text: str, dfao_loader=None) -> WordSpec:
    """Parse the one-line word-spec format.

    ``finite <word>`` | ``power <u>`` |
    ``morphic <seed> <a>-><image> ... [coding <a>-><c> ...]`` |
    ``automatic <base> <dfao-file>``

    ``dfao_loader`` maps the file token of an ``automatic`` line to a
    Dfao (defaults to reading it as a filesystem path).
    """
    from .dfao import load_dfao  # local import: cli passes custom loaders

    tokens = text.split()
    if not tokens:
        raise ParseError("empty word spec")
    kind, args = tokens[0], tokens[1:]
    try:
        if kind == "finite":
            if len(args) != 1:
                raise ParseError("usage: finite <word>")
            return Finite(args[0])
        if kind == "power":
            if len(args) != 1:
                raise ParseError("usage: power <u>")
            return PowerOmega(args[0])
        if kind == "morphic":
            if not args:
                raise ParseError("usage: morphic <seed> <a>-><image> ...")
            seed, rest = args[0], args[1:]
            rules: dict[str, str] = {}
            coding: dict[str, str] = {}
            target = rules
            for tok in rest:
                if tok == "coding":
                    target = coding
                    continue
                if "->" not in tok:
                    raise ParseError(f"expected <symbol>-><image>, got {tok!r}")
                sym, img = tok.split("->", 1)
                if len(sym) != 1 or not img:
                    raise ParseError(f"bad rule {tok!r}")
                if sym in target:
                    raise ParseError(f"duplicate rule for {sym!r}")
                target[sym] = img
            return Morphic(rules, seed, coding or None)
        if kind == "automatic":
            if len(args) != 2:
                raise ParseError("usage: automatic <base> <dfao-file>")
            try:
                base = int(args[0])
            except ValueError:
                raise ParseError(f"bad base {args[0]!r}") from None
            machine = (dfao_loader or load_dfao)(args[1])
            return Automatic(machine, base)
        raise ParseError(f"unknown word kind {kind!r}")
    except ValueError as exc:  # invariant violations from the dataclasses
        raise ParseError(str(exc)) from exc


def format_word_spec(spec: WordSpec) -> str:
    """A short, stable identifier for reports (inverse-ish of the parser)."""
    if isinstance(spec, Finite):
        return f"finite {spec.symbols}"
    if isinstance(spec, PowerOmega):
        return f"power {spec.root}"
    if isinstance(spec, Morphic):
        parts = [f"morphic {spec.seed}"]
        parts += [f"{s}->{img}" for s, img in spec.rules.items()]
        if spec.coding:
            parts.append("coding")
            parts += [f"{s}->{c}" for s, c in spec.coding.items()]
        return " ".join(parts)
    if isinstance(spec, Automatic):
        return f"automatic {spec.base} <{len(spec.machine.states)} states>"
    raise TypeError(f"not a WordSpec: {spec!r}")
