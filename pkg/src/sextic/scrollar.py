"""Scrollar invariants of covers of the projective line and the degree-6 regions.

A degree-``d`` cover has ``d - 1`` scrollar invariants ``1 <= e1 <= ... <= e_{d-1}``.
For ``d = 6`` the relevant polyhedral regions are P2, P3, Q and P6; all
indices below are 1-based to match the usual ``e1..e5`` naming.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

__all__ = [
    "BadParameters",
    "NotInP2",
    "OrientedPartition",
    "RegionLabel",
    "ScrollarError",
    "ScrollarTuple",
    "UnsupportedDegree",
    "WrongDegree",
    "CANDIDATE_PARTITIONS",
    "as_scrollar",
    "as_sextic",
    "classify_region",
    "expected_codim",
    "find_admissible_partitions",
    "genus",
    "in_P2",
    "in_P3",
    "in_P6",
    "in_Q",
    "is_admissible",
    "realizable",
    "semistable_gap_bound",
]


class ScrollarError(ValueError):
    pass


class WrongDegree(ScrollarError):
    pass


class UnsupportedDegree(ScrollarError):
    pass


class NotInP2(ScrollarError):
    pass


class BadParameters(ScrollarError):
    pass


@dataclass(frozen=True)
class ScrollarTuple:
    """Scrollar invariants ``(e1, ..., e_{d-1})`` of a degree ``d`` cover."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        for x in entries:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ScrollarError(f"scrollar invariants must be integers, got {x!r}")
        if not entries:
            raise ScrollarError("need at least one invariant (degree >= 2)")
        if entries[0] < 1:
            raise ScrollarError(f"e1 must be >= 1, got {entries[0]}")
        if any(a > b for a, b in zip(entries, entries[1:])):
            raise ScrollarError(f"invariants must be nondecreasing: {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def degree(self) -> int:
        return len(self.entries) + 1

    def __getitem__(self, i: int) -> int:
        """1-based access: ``e[1]`` is e1."""
        if not 1 <= i <= len(self.entries):
            raise IndexError(f"e{i} is not defined for degree {self.degree}")
        return self.entries[i - 1]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


TupleLike = Union[ScrollarTuple, Sequence[int]]


def as_scrollar(e: TupleLike) -> ScrollarTuple:
    return e if isinstance(e, ScrollarTuple) else ScrollarTuple(tuple(e))


def as_sextic(e: TupleLike) -> ScrollarTuple:
    e = as_scrollar(e)
    if e.degree != 6:
        raise WrongDegree(f"expected 5 invariants (degree 6), got degree {e.degree}")
    return e


def in_P2(e: TupleLike) -> bool:
    e = as_sextic(e)
    return (
        e[5] <= e[1] + e[4]
        and e[5] <= e[2] + e[3]
        and e[3] <= e[1] + e[2]
        and e[4] <= 2 * e[2]
    )


def in_P3(e: TupleLike) -> bool:
    e = as_sextic(e)
    return (
        e[5] <= e[1] + e[4]
        and e[5] <= e[2] + e[3]
        and e[2] <= 2 * e[1]
        and e[4] <= e[1] + e[3]
    )


def in_P6(e: TupleLike) -> bool:
    """``e_{i+j} <= e_i + e_j`` for every ``i + j <= 5``."""
    e = as_sextic(e)
    return all(
        e[i + j] <= e[i] + e[j] for i in range(1, 5) for j in range(i, 5) if i + j <= 5
    )


@dataclass(frozen=True, order=True)
class OrientedPartition:
    """A split ``{i,j} | {k,l}`` of ``{2,3,4,5}``; ``{i,j}`` is the light pair.

    Within each pair the smaller index comes first, which for a nondecreasing
    tuple also orders the values.
    """

    i: int
    j: int
    k: int
    l: int  # noqa: E741

    def __post_init__(self):
        if sorted((self.i, self.j, self.k, self.l)) != [2, 3, 4, 5]:
            raise ScrollarError(f"not a partition of {{2,3,4,5}}: {self}")
        if self.i > self.j or self.k > self.l:
            raise ScrollarError(f"pairs must be listed in increasing index order: {self}")

    @classmethod
    def of(cls, light: Iterable[int], heavy: Iterable[int]) -> "OrientedPartition":
        i, j = sorted(light)
        k, l = sorted(heavy)  # noqa: E741
        return cls(i, j, k, l)

    @property
    def light(self) -> tuple[int, int]:
        return (self.i, self.j)

    @property
    def heavy(self) -> tuple[int, int]:
        return (self.k, self.l)

    def __str__(self):
        return f"{{{self.i},{self.j}}}|{{{self.k},{self.l}}}"


def _candidates() -> tuple[OrientedPartition, ...]:
    out = []
    for light in combinations((2, 3, 4, 5), 2):
        heavy = tuple(x for x in (2, 3, 4, 5) if x not in light)
        out.append(OrientedPartition.of(light, heavy))
    return tuple(sorted(out))


# All six oriented partitions in lexicographic (i, j, k, l) order.
CANDIDATE_PARTITIONS = _candidates()


def is_admissible(e: TupleLike, p: OrientedPartition) -> bool:
    e = as_sextic(e)
    if not in_P2(e):
        raise NotInP2(f"{e} is not in P2")
    ei, ej, ek, el = e[p.i], e[p.j], e[p.k], e[p.l]
    return (
        ei + ej <= ek + el
        and ei <= ej <= ei + e[1]
        and ek <= el <= ek + e[1]
        and ek + el + e[1] <= 2 * ei + 2 * ej
    )


def find_admissible_partitions(e: TupleLike) -> list[OrientedPartition]:
    """Admissible oriented partitions for ``e``, in lexicographic order."""
    e = as_sextic(e)
    if not in_P2(e):
        raise NotInP2(f"{e} is not in P2")
    return [p for p in CANDIDATE_PARTITIONS if is_admissible(e, p)]


def in_Q(e: TupleLike) -> bool:
    e = as_sextic(e)
    return in_P2(e) and not in_P3(e) and bool(find_admissible_partitions(e))


def realizable(e: TupleLike) -> bool:
    """Whether ``e`` occurs as the scrollar invariants of a smooth cover (degrees 2, 3, 6)."""
    e = as_scrollar(e)
    d = e.degree
    if d == 2:
        return True
    if d == 3:
        return e[2] <= 2 * e[1]
    if d == 6:
        return in_Q(e) or in_P3(e)
    raise UnsupportedDegree(f"realizability is only decided for d in {{2, 3, 6}}, got d={d}")


def genus(e: TupleLike) -> int:
    e = as_scrollar(e)
    return sum(e) - e.degree + 1


def expected_codim(e: TupleLike) -> int:
    e = as_sextic(e)
    return sum(max(0, b - a - 1) for a, b in combinations(e.entries, 2))


def semistable_gap_bound(d: int, g: int) -> Fraction:
    """Upper bound ``2(g + d - 1)/d`` on the spread of a semistable pushforward."""
    if d < 2 or g < 0:
        raise BadParameters(f"need d >= 2 and g >= 0, got d={d}, g={g}")
    return Fraction(2 * (g + d - 1), d)


class RegionLabel(str, Enum):
    OUTSIDE = "Outside"
    P3_ONLY = "P3Only"
    BOTH = "Both"
    Q_ONLY = "QOnly"
    P2_NOT_Q = "P2NotQ"

    @property
    def realizable(self) -> bool:
        return self in (RegionLabel.P3_ONLY, RegionLabel.BOTH, RegionLabel.Q_ONLY)


def classify_region(e: TupleLike) -> RegionLabel:
    e = as_sextic(e)
    p2, p3 = in_P2(e), in_P3(e)
    if p2 and p3:
        return RegionLabel.BOTH
    if p3:
        return RegionLabel.P3_ONLY
    if not p2:
        return RegionLabel.OUTSIDE
    return RegionLabel.Q_ONLY if find_admissible_partitions(e) else RegionLabel.P2_NOT_Q
