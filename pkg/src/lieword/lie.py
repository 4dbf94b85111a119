"""The complexity functions: factor, Lie, extended Lie, prefix Lie.

All of them count conjugacy classes whose members occur in the word:

* ``lie_complexity(n)``       — classes of length-n words, all rotations present.
* ``primitive_lie(n)``        — the same, restricted to primitive classes.
* ``extended_lie_complexity`` — primitive classes of any length d <= n whose
  length-n fractional-power set is fully present.
* ``prefix_lie(i)``           — classes (any length, the empty one included)
  fully contained in the factors of the length-i prefix; exact, no horizon.

``complexity_table`` assembles everything per n, including the
quasi-small-circuit count from :mod:`lieword.rauzy`, and enforces the
doubled-horizon stability rule for heuristic horizons.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import kernel, rauzy
from .core import (
    FactorSet,
    canonical_rotation,
    class_power_set,
    factor_set,
    is_primitive,
    rotations,
)
from .errors import HorizonTooSmall, UnstableHorizon
from .words import (
    DEFAULT_FLOOR,
    DEFAULT_MULTIPLIER,
    HEURISTIC,
    Horizon,
    WordSpec,
    choose_horizon,
    is_finite,
    materialize_prefix,
    prefix_for,
    symbol_rank,
)


class _Universe:
    """Factor sets of one materialized prefix, cached per length."""

    def __init__(self, spec: WordSpec, prefix: str, horizon: Horizon):
        self.spec = spec
        self.prefix = prefix
        self.horizon = horizon
        self._sets: dict[int, FactorSet] = {}

    def factors(self, n: int) -> FactorSet:
        fs = self._sets.get(n)
        if fs is None:
            if n > len(self.prefix):
                if not is_finite(self.spec):
                    raise HorizonTooSmall(
                        f"prefix of {len(self.prefix)} symbols has no length-{n} factors"
                    )
                fs = FactorSet(n, frozenset(), self.horizon)
            else:
                fs = factor_set(self.prefix, n, self.horizon)
            self._sets[n] = fs
        return fs


def _universe(spec, needed, horizon, floor, multiplier) -> _Universe:
    if horizon is None:
        horizon = choose_horizon(spec, max(1, needed), floor, multiplier)
    return _Universe(spec, prefix_for(spec, horizon, needed), horizon)


def _closed_class_count(fs: FactorSet, primitive_only: bool = False) -> int:
    """Classes of length-n words whose every rotation is a factor."""
    present = fs.members
    seen: set[str] = set()
    count = 0
    for u in present:
        c = canonical_rotation(u)
        if c in seen:
            continue
        seen.add(c)
        if primitive_only and not is_primitive(u):
            continue
        if all(r in present for r in rotations(u)):
            count += 1
    return count


def _iter_period_roots(u: str):
    """(d, u[:d]) for every period d of u, shortest first."""
    borders = kernel.border_array(kernel.encode_symbols(u))
    n = len(u)
    chain = []
    b = borders[-1]
    while True:
        chain.append(n - b)
        if b == 0:
            break
        b = borders[b - 1]
    for d in reversed(chain):
        yield d, u[:d]


def _extended_class_count(fs: FactorSet, divisors_only: bool = False) -> int:
    """Primitive classes q, |q| <= n, with the whole power set [q]_n present.

    Candidates come from the factors actually present: any qualifying
    class has its power of some rotation among them, exposing the root as
    a period.  ``divisors_only`` restricts to |q| dividing n, which by the
    divisor decomposition counts the plain Lie complexity instead.
    """
    n = fs.n
    present = fs.members
    counted: set[str] = set()
    rejected: set[str] = set()
    for u in present:
        for d, root in _iter_period_roots(u):
            if divisors_only and n % d != 0:
                continue
            if not is_primitive(root):
                continue
            key = canonical_rotation(root)
            if key in counted or key in rejected:
                continue
            if class_power_set(root, n) <= present:
                counted.add(key)
            else:
                rejected.add(key)
    return len(counted)


def divisor_decomposition_count(fs: FactorSet) -> int:
    """Independent double-count of the Lie complexity: sum over divisors
    d | n of the primitive classes of length d whose power set is present."""
    return _extended_class_count(fs, divisors_only=True)


def lie_complexity(
    spec: WordSpec,
    n: int,
    horizon: Horizon | None = None,
    floor: int = DEFAULT_FLOOR,
    multiplier: int = DEFAULT_MULTIPLIER,
) -> int:
    """Number of conjugacy classes of length-n words fully inside the factors."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    return _closed_class_count(
        _universe(spec, n, horizon, floor, multiplier).factors(n)
    )


def extended_lie_complexity(
    spec: WordSpec,
    n: int,
    horizon: Horizon | None = None,
    floor: int = DEFAULT_FLOOR,
    multiplier: int = DEFAULT_MULTIPLIER,
) -> int:
    """Number of power classes [q]_n, q primitive with |q| <= n, fully present."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    return _extended_class_count(
        _universe(spec, n, horizon, floor, multiplier).factors(n)
    )


def primitive_lie(
    spec: WordSpec,
    n: int,
    horizon: Horizon | None = None,
    floor: int = DEFAULT_FLOOR,
    multiplier: int = DEFAULT_MULTIPLIER,
) -> int:
    """Primitive conjugacy classes of length exactly n fully present."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _closed_class_count(
        _universe(spec, n, horizon, floor, multiplier).factors(n), primitive_only=True
    )


def _profile(spec: WordSpec, length: int) -> list[int]:
    word = materialize_prefix(spec, length)
    return kernel.prefix_lie_profile(kernel.encode_symbols(word))


def prefix_lie(spec: WordSpec, i: int) -> int:
    """Classes fully contained in the factors of w[1..i]; exact, pL(0) = 1."""
    if i < 0:
        raise ValueError("prefix length must be >= 0")
    if i == 0:
        return 1
    return _profile(spec, i)[i]


def delta_prefix_lie(spec: WordSpec, n: int) -> int:
    """First difference pL(n+1) - pL(n); always 0 or 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    profile = _profile(spec, n + 1)
    return profile[n + 1] - profile[n]


@dataclass(frozen=True)
class ComplexityRow:
    """One tabulated length: every complexity function plus circuit count."""

    n: int
    C: int
    L: int
    eL: int
    p: int
    pL: int
    dpL: int
    Qs: int
    horizon: Horizon

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "C": self.C,
            "L": self.L,
            "eL": self.eL,
            "p": self.p,
            "pL": self.pL,
            "dpL": self.dpL,
            "Qs": self.Qs,
            "horizon": self.horizon.as_dict(),
        }


def _table_at(spec, n_max, horizon, cap) -> list[ComplexityRow]:
    uni = _universe(spec, n_max + 2, horizon, 0, 0)
    rank = symbol_rank(spec)

    # prefix-Lie column: exact on w itself, clamped for finite words whose
    # factor sets stop growing at |w|
    plen = n_max + 1
    if is_finite(spec):
        plen = min(plen, len(spec.symbols))
    profile = kernel.prefix_lie_profile(
        kernel.encode_symbols(materialize_prefix(spec, plen))
    )

    def pl(i: int) -> int:
        return profile[min(i, plen)]

    rows = []
    for n in range(n_max + 1):
        fs = uni.factors(n)
        graph = rauzy.graph_from_factor_sets(fs, uni.factors(n + 1))
        circuits = rauzy.elementary_circuits(graph, cap, rank)
        qs = sum(1 for c in circuits if c.kind != rauzy.KIND_NOT_QUASI_SMALL)
        rows.append(
            ComplexityRow(
                n=n,
                C=len(fs.members),
                L=1 if n == 0 else _closed_class_count(fs),
                eL=1 if n == 0 else _extended_class_count(fs),
                p=0 if n == 0 else _closed_class_count(fs, primitive_only=True),
                pL=pl(n),
                dpL=pl(n + 1) - pl(n),
                Qs=qs,
                horizon=horizon,
            )
        )
    return rows


def complexity_table(
    spec: WordSpec,
    n_max: int,
    floor: int = DEFAULT_FLOOR,
    multiplier: int = DEFAULT_MULTIPLIER,
    cap: int = rauzy.DEFAULT_CIRCUIT_CAP,
) -> list[ComplexityRow]:
    """Rows for n = 0..n_max with every column populated.

    Heuristic horizons are validated by recomputing the whole table at a
    doubled horizon; any drift raises UnstableHorizon instead of letting a
    possibly-unconverged value out.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    horizon = choose_horizon(spec, n_max + 2, floor, multiplier)
    rows = _table_at(spec, n_max, horizon, cap)
    if horizon.mode == HEURISTIC:
        redone = _table_at(spec, n_max, horizon.doubled(), cap)
        for a, b in zip(rows, redone):
            for name in ("C", "L", "eL", "p", "pL", "dpL", "Qs"):
                if getattr(a, name) != getattr(b, name):
                    raise UnstableHorizon(
                        f"{name} at n={a.n} changed from {getattr(a, name)} to "
                        f"{getattr(b, name)} when the horizon doubled to "
                        f"{horizon.length * 2}; increase the horizon floor"
                    )
    return rows


def table_to_tsv(rows: list[ComplexityRow]) -> str:
    lines = ["n\tC\tL\teL\tp\tpL\tdpL\tQs"]
    for r in rows:
        lines.append(
            f"{r.n}\t{r.C}\t{r.L}\t{r.eL}\t{r.p}\t{r.pL}\t{r.dpL}\t{r.Qs}"
        )
    return "\n".join(lines) + "\n"


def table_to_json(rows: list[ComplexityRow]) -> str:
    return json.dumps([r.as_dict() for r in rows], indent=2) + "\n"
