"""Mechanical checks of the proved inequalities, with explicit margins.

Each check computes both sides of an inequality and reports the margin
(rhs - lhs); a negative margin on a converged horizon means a bug, so
violations are reported, never swallowed.  The checks:

* T1.1      L(n)            <= C(n) - C(n-1) + 1                  (n >= 1)
* T-eL      eL(n)           <= C(n) - C(n-1) + 1                  (n >= 1)
* T1.2      Qs(n)           <= C(n+1) - C(n) + 1                  (n >= 1)
* T1.3      L(n) + L(n+1)   <= C(n) - C(n-1) + 1 + A + p(n+1)     (n >= 1)
* T1.4      L(n)+L(n+1)+L(n+2)
                            <= C(n) - C(n-1) + 1 + 3A + A^2
                               + p(n+1) + p(n+2)     (asserted for n >= 6,
                                                      evaluated below that)
* T-prefix  0 <= pL(i+1) - pL(i) <= 1                             (i >= 0)

with A the alphabet size.  ``L-size`` is the exhaustive power-class
cardinality check (``check_lemma_size``).
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass
from itertools import product

from . import lie, rauzy
from .core import canonical_rotation, class_power_set, is_primitive
from .words import (
    DEFAULT_FLOOR,
    DEFAULT_MULTIPLIER,
    Finite,
    Horizon,
    Morphic,
    PowerOmega,
    WordSpec,
    choose_horizon,
    format_word_spec,
    symbol_rank,
)

DEFAULT_SEED = 0


@dataclass(frozen=True)
class TheoremReport:
    word_id: str
    theorem_id: str
    n: int
    lhs: int
    rhs: int
    margin: int
    holds: bool
    horizon: Horizon
    asserted: bool = True

    def as_dict(self) -> dict:
        return {
            "word_id": self.word_id,
            "theorem_id": self.theorem_id,
            "n": self.n,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "holds": self.holds,
            "horizon": self.horizon.as_dict(),
            "asserted": self.asserted,
        }


def _fault_offsets() -> dict[str, int]:
    """Test hook: LIEWORD_FAULT="L+1" (comma-separated col±k) skews values
    so the failure path of the verifier can be exercised end to end."""
    spec = os.environ.get("LIEWORD_FAULT", "").strip()
    offsets: dict[str, int] = {}
    if not spec:
        return offsets
    for part in spec.split(","):
        part = part.strip()
        for sign in ("+", "-"):
            if sign in part:
                col, amount = part.split(sign, 1)
                offsets[col] = int(sign + amount)
                break
    return offsets


def check_theorems(
    spec: WordSpec,
    n_max: int,
    floor: int = DEFAULT_FLOOR,
    multiplier: int = DEFAULT_MULTIPLIER,
    cap: int = rauzy.DEFAULT_CIRCUIT_CAP,
    word_id: str | None = None,
) -> list[TheoremReport]:
    """One report per (theorem, applicable n <= n_max), deterministic order."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    word_id = word_id or format_word_spec(spec)
    rows = lie.complexity_table(spec, n_max + 2, floor, multiplier, cap)
    fault = _fault_offsets()
    C = {r.n: r.C for r in rows}
    L = {r.n: r.L + fault.get("L", 0) for r in rows}
    eL = {r.n: r.eL + fault.get("eL", 0) for r in rows}
    p = {r.n: r.p for r in rows}
    Qs = {r.n: r.Qs for r in rows}
    dpL = {r.n: r.dpL for r in rows}
    alph = C[1]
    horizon = rows[0].horizon

    def report(tid, n, lhs, rhs, asserted=True):
        return TheoremReport(
            word_id, tid, n, lhs, rhs, rhs - lhs, rhs - lhs >= 0, horizon, asserted
        )

    out = []
    for n in range(1, n_max + 1):
        growth = C[n] - C[n - 1] + 1
        out.append(report("T1.1", n, L[n], growth))
        out.append(report("T-eL", n, eL[n], growth))
        out.append(report("T1.2", n, Qs[n], C[n + 1] - C[n] + 1))
        out.append(report("T1.3", n, L[n] + L[n + 1], growth + alph + p[n + 1]))
        out.append(
            report(
                "T1.4",
                n,
                L[n] + L[n + 1] + L[n + 2],
                growth + 3 * alph + alph * alph + p[n + 1] + p[n + 2],
                asserted=n >= 6,
            )
        )
    for i in range(n_max + 1):
        # both bounds of 0 <= dpL <= 1 folded into one report: lhs is the
        # difference, margin measures the upper bound
        out.append(
            TheoremReport(
                word_id, "T-prefix", i, dpL[i], 1, 1 - dpL[i],
                0 <= dpL[i] <= 1, horizon,
            )
        )
    return out


def all_asserted_hold(reports: list[TheoremReport]) -> bool:
    return all(r.holds for r in reports if r.asserted)


def reports_to_json(reports: list[TheoremReport]) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=2) + "\n"


@dataclass(frozen=True)
class LemmaSizeReport:
    """Exhaustive power-class cardinality check over a whole alphabet."""

    alphabet_size: int
    max_length: int
    classes_checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_lemma_size(alphabet_size: int, max_length: int) -> LemmaSizeReport:
    """For every primitive p up to max_length and every n in [|p|-1, 2|p|]:
    the power class [p]_n has exactly |p| members, and two equal-length
    primitive classes share a power set only when conjugate."""
    if not 1 <= max_length <= 12:
        raise ValueError("exhaustive check is limited to max_length <= 12")
    alphabet = "abcdefghij"[:alphabet_size]
    failures: list[str] = []
    checked = 0
    for length in range(1, max_length + 1):
        classes: set[str] = set()
        for tup in product(alphabet, repeat=length):
            word = "".join(tup)
            if is_primitive(word):
                classes.add(canonical_rotation(word))
        checked += len(classes)
        # power classes are defined for positive n, so |p| = 1 starts at n = 1
        for n in range(max(1, length - 1), 2 * length + 1):
            buckets: dict[frozenset, list[str]] = {}
            for rep in classes:
                ps = class_power_set(rep, n)
                if len(ps) != length:
                    failures.append(f"power class of {rep} at n={n} has {len(ps)} members")
                buckets.setdefault(ps, []).append(rep)
            for ps, reps in buckets.items():
                if len(reps) > 1:
                    failures.append(
                        f"non-conjugate classes share a power set at n={n}: {reps}"
                    )
    return LemmaSizeReport(alphabet_size, max_length, checked, tuple(failures))


@dataclass(frozen=True)
class DivisorBijectionReport:
    """Circuits with proper-divisor roots persist two and three levels down."""

    word_id: str
    n_max: int
    cases_checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_divisor_bijections(
    spec: WordSpec,
    n_max: int,
    floor: int = DEFAULT_FLOOR,
    multiplier: int = DEFAULT_MULTIPLIER,
    cap: int = rauzy.DEFAULT_CIRCUIT_CAP,
    word_id: str | None = None,
) -> DivisorBijectionReport:
    """If a circuit at level n-1 has a primitive root of length properly
    dividing n, the same class must appear among the circuits at level n-2
    (for n >= 4) and n-3 (for n >= 6); checked by direct circuit lookup."""
    if n_max < 6:
        raise ValueError("n_max must be >= 6")
    word_id = word_id or format_word_spec(spec)
    rank = symbol_rank(spec)
    horizon = choose_horizon(spec, n_max + 1, floor, multiplier)
    roots_at: dict[int, set[str]] = {}

    def roots(level: int) -> set[str]:
        if level not in roots_at:
            g = rauzy.build_rauzy_graph(spec, level, horizon, floor, multiplier)
            roots_at[level] = {c.root for c in rauzy.elementary_circuits(g, cap, rank)}
        return roots_at[level]

    failures: list[str] = []
    checked = 0
    for n in range(4, n_max + 1):
        for root in roots(n - 1):
            if n % len(root) != 0 or len(root) == n:
                continue
            checked += 1
            if root not in roots(n - 2):
                failures.append(f"C({root},{n - 2}) missing though C({root},{n - 1}) exists")
            if n >= 6 and root not in roots(n - 3):
                failures.append(f"C({root},{n - 3}) missing though C({root},{n - 1}) exists")
    return DivisorBijectionReport(word_id, n_max, checked, tuple(failures))


def random_finite_words(
    seed: int, count: int, max_len: int, alphabet_sizes: tuple[int, ...] = (2, 3)
) -> list[tuple[str, Finite]]:
    """Seeded random finite words over small alphabets, reproducible."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        alphabet = "abc"[: rng.choice(alphabet_sizes)]
        length = rng.randint(1, max_len)
        word = "".join(rng.choice(alphabet) for _ in range(length))
        out.append((f"random_{i:04d}", Finite(word)))
    return out


def default_corpus(
    seed: int = DEFAULT_SEED, random_count: int = 200, max_random_len: int = 64
) -> list[tuple[str, WordSpec]]:
    """The standing test corpus: the classic words plus seeded random ones."""
    named: list[tuple[str, WordSpec]] = [
        ("thue_morse", Morphic({"0": "01", "1": "10"}, "0")),
        ("fibonacci", Morphic({"0": "01", "1": "0"}, "0")),
        ("period_doubling", Morphic({"0": "01", "1": "00"}, "0")),
        ("power_aba", PowerOmega("aba")),
        ("power_ab", PowerOmega("ab")),
        ("power_abaaabaaaaba", PowerOmega("abaaabaaaaba")),
    ]
    named.extend(random_finite_words(seed, random_count, max_random_len))
    return named
