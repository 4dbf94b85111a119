"""Deterministic finite automata with output, reading base-k digits of n.

The text format is line oriented (``#`` starts a comment):

    base <k> order <msd|lsd>
    state <id> output <int>
    on <digit> -> <id>
    ...

The first ``state`` line names the start state.  Every state must define a
transition for every digit 0..k-1.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field

from .errors import ParseError, PartialTransition

MSD_FIRST = "msd"
LSD_FIRST = "lsd"


def digits(n: int, k: int, order: str = MSD_FIRST) -> list[int]:
    """Canonical base-k digits of n (no leading zeros); 0 -> []."""
    if k < 2:
        raise ValueError("base must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []
    while n:
        out.append(n % k)
        n //= k
    if order == MSD_FIRST:
        out.reverse()
    return out


@dataclass(frozen=True)
class Dfao:
    """A complete automaton with per-state integer output."""

    base: int
    states: tuple[str, ...]
    start: str
    transitions: dict[tuple[str, int], str]
    outputs: dict[str, int]
    order: str = MSD_FIRST
    zero_sensitive: bool = field(init=False, default=False)

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be >= 2")
        if self.order not in (MSD_FIRST, LSD_FIRST):
            raise ValueError(f"unknown digit order {self.order!r}")
        for s in self.states:
            for d in range(self.base):
                if (s, d) not in self.transitions:
                    raise PartialTransition(f"missing transition ({s}, {d})")
        # Padding with extra zero digits changes nothing iff the start
        # state absorbs 0; flag machines where it does not.
        object.__setattr__(
            self, "zero_sensitive", self.transitions[(self.start, 0)] != self.start
        )


def eval_dfao(machine: Dfao, n: int) -> int:
    """Output after feeding the canonical base-k representation of n."""
    state = machine.start
    for d in digits(n, machine.base, machine.order):
        state = machine.transitions[(state, d)]
    return machine.outputs[state]


def parse_dfao(text: str) -> Dfao:
    """Parse the line-oriented automaton format; totality is checked."""
    base = None
    order = MSD_FIRST
    states: list[str] = []
    outputs: dict[str, int] = {}
    transitions: dict[tuple[str, int], str] = {}
    current: str | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == "base":
            if base is not None:
                raise ParseError("duplicate base line", lineno)
            if len(words) != 4 or words[2] != "order":
                raise ParseError("expected: base <k> order <msd|lsd>", lineno)
            try:
                base = int(words[1])
            except ValueError:
                raise ParseError(f"bad base {words[1]!r}", lineno) from None
            if base < 2:
                raise ParseError(f"base must be >= 2, got {base}", lineno)
            order = words[3]
            if order not in (MSD_FIRST, LSD_FIRST):
                raise ParseError(f"bad digit order {order!r}", lineno)
        elif words[0] == "state":
            if base is None:
                raise ParseError("state before base line", lineno)
            if len(words) != 4 or words[2] != "output":
                raise ParseError("expected: state <id> output <int>", lineno)
            name = words[1]
            if name in outputs:
                raise ParseError(f"duplicate state {name!r}", lineno)
            try:
                outputs[name] = int(words[3])
            except ValueError:
                raise ParseError(f"bad output {words[3]!r}", lineno) from None
            states.append(name)
            current = name
        elif words[0] == "on":
            if current is None:
                raise ParseError("transition before any state", lineno)
            if len(words) != 4 or words[2] != "->":
                raise ParseError("expected: on <digit> -> <id>", lineno)
            try:
                digit = int(words[1])
            except ValueError:
                raise ParseError(f"bad digit {words[1]!r}", lineno) from None
            if not 0 <= digit < base:
                raise ParseError(f"digit {digit} out of range for base {base}", lineno)
            if (current, digit) in transitions:
                raise ParseError(f"duplicate transition ({current}, {digit})", lineno)
            transitions[(current, digit)] = words[3]
        else:
            raise ParseError(f"unrecognized directive {words[0]!r}", lineno)

    if base is None:
        raise ParseError("missing base line")
    if not states:
        raise ParseError("no states declared")
    known = set(states)
    for (src, d), dst in transitions.items():
        if dst not in known:
            raise ParseError(f"transition ({src}, {d}) targets unknown state {dst!r}")
    return Dfao(
        base=base,
        states=tuple(states),
        start=states[0],
        transitions=transitions,
        outputs=outputs,
        order=order,
    )


def load_dfao(path) -> Dfao:
    with open(path, encoding="utf-8") as fh:
        return parse_dfao(fh.read())


def builtin_dfao(name: str) -> Dfao:
    """Load one of the bundled machines: thue_morse, el_tm, dpl_tm."""
    resource = importlib.resources.files("lieword.data").joinpath(f"{name}.dfao")
    return parse_dfao(resource.read_text(encoding="utf-8"))
