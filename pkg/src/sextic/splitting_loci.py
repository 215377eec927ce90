"""Splitting types of line bundles on trigonal and hyperelliptic curves.

A trigonal base is recorded by its own scrollar invariants ``(e1, e2)``; its
genus is ``e1 + e2 - 2``. Splitting types are nondecreasing triples
``(a1, a2, a3)``, the degrees of the summands of the pushforward to the line.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .scrollar import ScrollarError, TupleLike, as_sextic, in_P3

__all__ = [
    "EmptyLocus",
    "GapTooLarge",
    "HyperellipticSplit",
    "NotInP3",
    "SplittingType",
    "TrigonalBase",
    "bad_type_sum",
    "delta",
    "dim_splitting_locus",
    "dimension_case",
    "enumerate_bad_types",
    "is_nonempty",
    "mu",
    "semireduced_degree",
    "target_dim",
    "target_type",
]


class EmptyLocus(ScrollarError):
    pass


class NotInP3(ScrollarError):
    pass


class GapTooLarge(ScrollarError):
    pass


@dataclass(frozen=True)
class TrigonalBase:
    e1: int
    e2: int

    def __post_init__(self):
        if not 1 <= self.e1 <= self.e2 <= 2 * self.e1:
            raise ScrollarError(
                f"({self.e1},{self.e2}) is not the Maroni data of a trigonal curve"
            )

    @property
    def genus(self) -> int:
        return self.e1 + self.e2 - 2


@dataclass(frozen=True, order=True)
class SplittingType:
    a1: int
    a2: int
    a3: int

    def __post_init__(self):
        if not self.a1 <= self.a2 <= self.a3:
            raise ScrollarError(f"splitting type must be nondecreasing: {tuple(self)}")

    def __iter__(self):
        return iter((self.a1, self.a2, self.a3))

    def __str__(self):
        return f"({self.a1},{self.a2},{self.a3})"


@dataclass(frozen=True)
class HyperellipticSplit:
    a: int
    b: int
    g_X: int

    def __post_init__(self):
        if self.a > self.b or self.g_X < 0:
            raise ScrollarError(f"need a <= b and g_X >= 0, got {self}")


def mu(t: SplittingType) -> int:
    return sum(max(0, y - x - 1) for x, y in combinations(tuple(t), 2))


def is_nonempty(base: TrigonalBase, t: SplittingType) -> bool:
    return t.a2 <= t.a1 + base.e1 and t.a3 <= t.a2 + base.e1 and t.a3 <= t.a1 + base.e2


def dimension_case(base: TrigonalBase, t: SplittingType) -> int:
    """Which of the three dimension formulas applies (1, 2 or 3).

    The first matching case wins: when ``e1 == e2`` a type with
    ``a3 - a1 == e1`` is handled by case 1.
    """
    spread = t.a3 - t.a1
    if spread <= base.e1:
        return 1
    if spread < base.e2:
        return 2
    return 3


def dim_splitting_locus(base: TrigonalBase, t: SplittingType) -> int:
    if not is_nonempty(base, t):
        raise EmptyLocus(f"no line bundle of type {t} on a trigonal curve with {base}")
    case = dimension_case(base, t)
    if case == 1:
        return base.genus - mu(t)
    if case == 2:
        return base.e2 - (t.a3 - t.a1)
    return 0


def semireduced_degree(h: HyperellipticSplit) -> int:
    """Degree of the semireduced divisor ``D`` with ``L = tau^* O(b) (x) O(D)``."""
    gap = h.b - h.a
    if gap > h.g_X + 1:
        raise GapTooLarge(f"type ({h.a},{h.b}) needs gap <= g_X + 1 = {h.g_X + 1}")
    return h.g_X + 1 - gap


def delta(e: TupleLike) -> int:
    """Degree of a line bundle of type ``(-e5,-e4,-e3)`` on the trigonal base ``(e1,e2)``."""
    e = as_sextic(e)
    g_X = e[1] + e[2] - 2
    return g_X + 2 - e[3] - e[4] - e[5]


def target_type(e: TupleLike) -> SplittingType:
    e = as_sextic(e)
    return SplittingType(-e[5], -e[4], -e[3])


def _base_in_P3(e: TupleLike):
    e = as_sextic(e)
    if not in_P3(e):
        raise NotInP3(f"{e} is not in P3")
    return e, TrigonalBase(e[1], e[2])


def target_dim(e: TupleLike) -> int:
    e, base = _base_in_P3(e)
    return dim_splitting_locus(base, target_type(e))


def bad_type_sum(e: TupleLike) -> int:
    """Required ``a1 + a2 + a3`` for types of degree ``-2*delta``."""
    e = as_sextic(e)
    g_X = e[1] + e[2] - 2
    s = -2 * delta(e) - g_X - 2
    closed = 2 * (e[3] + e[4] + e[5]) - 3 * (e[1] + e[2])
    assert s == closed, (s, closed)
    return s


def enumerate_bad_types(e: TupleLike) -> list[SplittingType]:
    """Nonempty types of degree ``-2*delta`` with a negative summand, sorted."""
    e, base = _base_in_P3(e)
    s = bad_type_sum(e)
    out = []
    # a1 >= ceil((s - e1 - e2) / 3) because a2 <= a1 + e1 and a3 <= a1 + e2.
    lo = -((-(s - base.e1 - base.e2)) // 3)
    for a1 in range(lo, 0):
        for a2 in range(a1, a1 + base.e1 + 1):
            a3 = s - a1 - a2
            if a3 < a2:
                continue
            t = SplittingType(a1, a2, a3)
            if is_nonempty(base, t):
                out.append(t)
    return out
