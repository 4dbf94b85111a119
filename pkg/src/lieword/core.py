"""Factors, conjugacy, primitivity and fractional powers of finite words.

Rotation classes are keyed by their lexicographically least member.  An
optional ``rank`` mapping (symbol -> position in the declared alphabet
order) overrides the natural character order; counts never depend on it,
only the choice of canonical representative does.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel
from .errors import EmptyRoot, EmptyWord, LengthExceedsPrefix
from .words import EXACT, Horizon


def rotations(u: str) -> frozenset[str]:
    """All distinct cyclic shifts of u (the empty word rotates to itself)."""
    if not u:
        return frozenset(("",))
    return frozenset(u[i:] + u[:i] for i in range(len(u)))


def canonical_rotation(u: str, rank: dict[str, int] | None = None) -> str:
    """Lexicographically least rotation of a nonempty word, in O(|u|).

    Booth-style two-candidate scan over u+u; ``rank`` supplies the symbol
    order when the natural one is not wanted.
    """
    if not u:
        raise EmptyWord("the empty word has no rotations to canonicalize")
    key = ord if rank is None else rank.__getitem__
    s = u + u
    n = len(u)
    i, j, k = 0, 1, 0
    while j + k < 2 * n and k < n:
        a = key(s[i + k])
        b = key(s[j + k])
        if a == b:
            k += 1
        elif a > b:
            # rotations starting in [i, i+k] all lose to their shift-by-(j-i)
            i = max(i + k + 1, j)
            if i == j:
                j += 1
            k = 0
        else:
            j = j + k + 1
            k = 0
    return s[i : i + n]


@dataclass(frozen=True)
class ConjugacyClass:
    """A rotation class: canonical member plus the number of distinct rotations."""

    canonical: str
    size: int

    @property
    def rotations(self) -> frozenset[str]:
        return rotations(self.canonical)


def conjugacy_class(u: str, rank: dict[str, int] | None = None) -> ConjugacyClass:
    """The rotation class of u; the empty word's class is {ε}."""
    if not u:
        return ConjugacyClass("", 1)
    rots = rotations(u)
    return ConjugacyClass(canonical_rotation(u, rank), len(rots))


def is_primitive(u: str) -> bool:
    """True iff u is not an integer power of a strictly shorter word."""
    if not u:
        raise EmptyWord("primitivity is undefined for the empty word")
    n = len(u)
    border = kernel.border_array(kernel.encode_symbols(u))[-1]
    period = n - border
    return period == n or n % period != 0


def primitive_root(u: str) -> str:
    """Shortest word whose integer power equals u."""
    if not u:
        raise EmptyWord("the empty word has no primitive root")
    n = len(u)
    border = kernel.border_array(kernel.encode_symbols(u))[-1]
    period = n - border
    return u[:period] if n % period == 0 else u


def power_to_length(u: str, n: int) -> str:
    """The length-n fractional power of u: whole copies then a prefix of u."""
    if not u:
        raise EmptyRoot("cannot take powers of the empty word")
    if n < 0:
        raise ValueError("target length must be >= 0")
    reps = -(-n // len(u))
    return (u * reps)[:n]


def class_power_set(u: str, n: int) -> frozenset[str]:
    """Length-n fractional powers of every rotation of u, duplicates collapsed.

    For primitive u and n >= |u|-1 the set has exactly |u| members.
    """
    if not u:
        raise EmptyRoot("cannot take powers of the empty word")
    return frozenset(power_to_length(v, n) for v in rotations(u))


@dataclass(frozen=True)
class FactorSet:
    """The distinct length-n factors of a prefix, with its provenance."""

    n: int
    members: frozenset[str]
    horizon: Horizon

    def __contains__(self, word: str) -> bool:
        return word in self.members

    def sorted_members(self, rank: dict[str, int] | None = None) -> list[str]:
        if rank is None:
            return sorted(self.members)
        return sorted(self.members, key=lambda w: [rank[c] for c in w])

    def to_text(self, rank: dict[str, int] | None = None) -> str:
        return "\n".join(self.sorted_members(rank)) + "\n"


def factor_set(prefix: str, n: int, horizon: Horizon | None = None) -> FactorSet:
    """All distinct length-n blocks of the prefix; n = 0 gives {ε}."""
    if n < 0:
        raise ValueError("factor length must be >= 0")
    if n > len(prefix):
        raise LengthExceedsPrefix(
            f"length-{n} factors requested from a {len(prefix)}-symbol prefix"
        )
    if horizon is None:
        horizon = Horizon(max(1, len(prefix)), EXACT)
    if n == 0:
        members = frozenset(("",))
    else:
        starts = kernel.unique_window_starts(kernel.encode_symbols(prefix), n)
        members = frozenset(prefix[i : i + n] for i in starts)
    return FactorSet(n, members, horizon)


def class_contained(u: str, n: int, factors: FactorSet) -> bool:
    """True iff every length-n fractional power of u's rotations is a factor."""
    if factors.n != n:
        raise ValueError(f"factor set holds length-{factors.n} words, not {n}")
    return class_power_set(u, n) <= factors.members
