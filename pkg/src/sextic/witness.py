"""Degree-level construction witnesses for realizable sextic scrollar invariants.

Two pipelines: a double cover of a trigonal curve (for tuples in P3) and a
triple cover of a hyperelliptic curve (for tuples in Q). A plan records the
integers each construction needs and checks the inequalities that make the
construction go through. It says nothing about explicit equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .scrollar import (
    OrientedPartition,
    ScrollarError,
    TupleLike,
    as_sextic,
    find_admissible_partitions,
    genus,
    in_P3,
    in_Q,
    is_admissible,
)
from .splitting_loci import (
    HyperellipticSplit,
    NotInP3,
    SplittingType,
    TrigonalBase,
    delta,
    dim_splitting_locus,
    enumerate_bad_types,
    is_nonempty,
    semireduced_degree,
    target_type,
)

__all__ = [
    "DoubleOverTriplePlan",
    "InternalContradiction",
    "NotAdmissible",
    "NotInP3",
    "NotInQ",
    "TripleOverDoublePlan",
    "Unrealizable",
    "plan_double_over_triple",
    "plan_triple_over_double",
    "realization_witness",
]


class NotInQ(ScrollarError):
    pass


class NotAdmissible(ScrollarError):
    pass


class Unrealizable(ScrollarError):
    pass


class InternalContradiction(AssertionError):
    """A plan invariant failed for a legal input. This is a bug, never a verdict."""


def _require(cond: bool, what: str, e) -> None:
    if not cond:
        raise InternalContradiction(f"{what} fails for e={e}")


@dataclass(frozen=True)
class DoubleOverTriplePlan:
    e: tuple[int, ...]
    base: TrigonalBase
    g_X: int
    delta: int
    target: SplittingType
    target_dim: int
    bad_types: tuple[tuple[SplittingType, int], ...]
    total_genus: int

    kind = "double_over_triple"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "e": list(self.e),
            "base": [self.base.e1, self.base.e2],
            "g_X": self.g_X,
            "delta": self.delta,
            "target_type": list(self.target),
            "target_dim": self.target_dim,
            "bad_types": [{"type": list(t), "dim": d} for t, d in self.bad_types],
            "total_genus": self.total_genus,
        }


def plan_double_over_triple(e: TupleLike) -> DoubleOverTriplePlan:
    e = as_sextic(e)
    if not in_P3(e):
        raise NotInP3(f"{e} is not in P3")
    base = TrigonalBase(e[1], e[2])
    target = target_type(e)
    _require(is_nonempty(base, target), "nonemptiness of the target splitting locus", e)
    tdim = dim_splitting_locus(base, target)
    bad = tuple((t, dim_splitting_locus(base, t)) for t in enumerate_bad_types(e))
    for t, d in bad:
        _require(tdim > d, f"target dimension {tdim} > dim {d} of bad type {t}", e)
    d = delta(e)
    # chi(O_C) = chi(O_X) + chi(L) for the double cover with pushforward O_X + L, deg L = delta
    total = 2 * base.genus - 1 - d
    _require(total == genus(e), "genus bookkeeping", e)
    return DoubleOverTriplePlan(
        e=e.entries,
        base=base,
        g_X=base.genus,
        delta=d,
        target=target,
        target_dim=tdim,
        bad_types=bad,
        total_genus=total,
    )


@dataclass(frozen=True)
class TripleOverDoublePlan:
    e: tuple[int, ...]
    g_X: int
    partition: OrientedPartition
    type1: tuple[int, int]
    type2: tuple[int, int]
    degD1: int
    degD2: int
    shift: int
    degD1_prime: int
    degD2_prime: int
    delta_coefficient: int
    deg_delta: int
    deg_L1: int
    deg_L2: int
    deg_L1_L2_minus2: int
    total_genus: int

    kind = "triple_over_double"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "e": list(self.e),
            "g_X": self.g_X,
            "partition": str(self.partition),
            "type1": list(self.type1),
            "type2": list(self.type2),
            "degD1": self.degD1,
            "degD2": self.degD2,
            "m": self.shift,
            "degD1_prime": self.degD1_prime,
            "degD2_prime": self.degD2_prime,
            "delta_coefficient": self.delta_coefficient,
            "deg_delta": self.deg_delta,
            "deg_L1": self.deg_L1,
            "deg_L2": self.deg_L2,
            "deg_L1_L2_minus2": self.deg_L1_L2_minus2,
            "total_genus": self.total_genus,
        }


def plan_triple_over_double(
    e: TupleLike, p: Optional[OrientedPartition] = None
) -> TripleOverDoublePlan:
    e = as_sextic(e)
    if not in_Q(e):
        raise NotInQ(f"{e} is not in Q")
    if p is None:
        p = find_admissible_partitions(e)[0]
    elif not is_admissible(e, p):
        raise NotAdmissible(f"{p} is not admissible for {e}")
    ei, ej, ek, el = e[p.i], e[p.j], e[p.k], e[p.l]
    g_X = e[1] - 1

    # L1, L2 have splitting types (-e_j, -e_i) and (-e_l, -e_k) on the hyperelliptic curve
    split1 = HyperellipticSplit(-ej, -ei, g_X)
    split2 = HyperellipticSplit(-el, -ek, g_X)
    d1 = semireduced_degree(split1)
    d2 = semireduced_degree(split2)
    _require(d1 == e[1] - (ej - ei) >= 0, "degD1 = e1 - (e_j - e_i) >= 0", e)
    _require(d2 == e[1] - (el - ek) >= 0, "degD2 = e1 - (e_l - e_k) >= 0", e)

    # move the common multiple of a non-Weierstrass point out of both divisors
    shift = min(d1, d2 // 2)
    d1p, d2p = d1 - shift, d2 - 2 * shift
    h_coeff = 2 * ei - ek - d1p
    deg_delta = 2 * h_coeff + d2p
    _require(deg_delta >= 0, "deg(Delta) >= 0", e)
    _require(deg_delta == 2 * (ei + ej) - ek - el - e[1], "closed form of deg(Delta)", e)
    if d1p == 0:
        _require(2 * ei - ek >= 0, "2 e_i - e_k >= 0 when D1' = 0", e)
    else:
        _require(0 <= d2p <= 1, "0 <= deg D2' <= 1 when D1' != 0", e)
    _require(h_coeff >= 0, "Delta is effective (nonnegative H coefficient)", e)

    # deg L = 2b + deg D for type (a, b); compare with deg(pushforward) + g_X + 1
    deg_l1 = 2 * split1.b + d1
    deg_l2 = 2 * split2.b + d2
    _require(deg_l1 == -(ei + ej) + g_X + 1 == e[1] - ei - ej, "deg L1 two ways", e)
    _require(deg_l2 == -(ek + el) + g_X + 1 == e[1] - ek - el, "deg L2 two ways", e)

    twist = deg_l1 - 2 * deg_l2
    _require(twist == 2 * (ek + el) - (ei + ej) - e[1], "closed form of deg(L1 - 2 L2)", e)
    _require(twist >= g_X + 1, "deg(L1 (x) L2^-2) >= g_X + 1", e)

    total = 3 * g_X - 2 - deg_l1 - deg_l2
    _require(total == genus(e), "genus bookkeeping", e)
    return TripleOverDoublePlan(
        e=e.entries,
        g_X=g_X,
        partition=p,
        type1=(split1.a, split1.b),
        type2=(split2.a, split2.b),
        degD1=d1,
        degD2=d2,
        shift=shift,
        degD1_prime=d1p,
        degD2_prime=d2p,
        delta_coefficient=h_coeff,
        deg_delta=deg_delta,
        deg_L1=deg_l1,
        deg_L2=deg_l2,
        deg_L1_L2_minus2=twist,
        total_genus=total,
    )


Plan = Union[DoubleOverTriplePlan, TripleOverDoublePlan]


def realization_witness(e: TupleLike) -> Plan:
    e = as_sextic(e)
    if in_P3(e):
        return plan_double_over_triple(e)
    if in_Q(e):
        return plan_triple_over_double(e)
    raise Unrealizable(f"{e} is in neither Q nor P3")
