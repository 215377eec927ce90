"""Exact LP verification that target splitting loci outgrow every bad locus.

For ``e`` in P3 the quantity ``target_dim(e) - dim U^a`` is piecewise linear
in ``(e, a)``. Fixing, on each side, which dimension formula applies and, for
the first formula, whether each pairwise gap is zero or at least one makes
it linear. Each such choice is a :class:`CaseSpec`; its LP minimizes the
difference over the rational relaxation with strict integer inequalities
tightened by one. A strictly positive minimum (or infeasibility) in every
case proves the claim on integer points.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Iterable, Optional

from .exact_lp import Constraint, LPInstance, LPOutcome, Status, check_certificate, solve
from .lp_format import write_lp, write_mps
from .scrollar import in_P3
from .splitting_loci import (
    SplittingType,
    TrigonalBase,
    dim_splitting_locus,
    enumerate_bad_types,
    target_dim,
)

__all__ = [
    "ALL_CASES",
    "BruteForceReport",
    "CaseRecord",
    "CaseSpec",
    "MalformedCase",
    "SolverFailure",
    "VARIABLES",
    "Verdict",
    "VerificationReport",
    "brute_force_check",
    "build_case_lp",
    "case_of_point",
    "export_cases",
    "p3_tuples",
    "run_verification",
]

VARIABLES = ("e1", "e2", "e3", "e4", "e5", "a1", "a2", "a3")

# Index pairs (1,2), (1,3), (2,3) of a splitting type, in this order in every branch.
PAIRS = ((0, 1), (0, 2), (1, 2))


class MalformedCase(ValueError):
    pass


class SolverFailure(RuntimeError):
    pass


Branch = tuple[bool, bool, bool]


def _check_side(case, branch, label):
    if case not in (1, 2, 3):
        raise MalformedCase(f"{label} case must be 1, 2 or 3, got {case!r}")
    if case == 1:
        if branch is None or len(branch) != 3 or not all(isinstance(b, bool) for b in branch):
            raise MalformedCase(f"{label} case 1 needs a branch of three booleans")
    elif branch is not None:
        raise MalformedCase(f"{label} case {case} takes no gap branch")


def _branch_code(case: int, branch: Optional[Branch]) -> str:
    if branch is None:
        return "none"
    return "".join("1" if b else "0" for b in branch)


@dataclass(frozen=True)
class CaseSpec:
    """One linear piece.

    ``*_branch[p]`` is ``True`` when pair ``p`` has gap at least one (its
    correction term is ``gap - 1``) and ``False`` when the gap is zero.
    Branches exist only for dimension case 1.
    """

    target_case: int
    target_branch: Optional[Branch]
    bad_case: int
    bad_branch: Optional[Branch]

    def __post_init__(self):
        _check_side(self.target_case, self.target_branch, "target")
        _check_side(self.bad_case, self.bad_branch, "bad")
        if self.target_branch is not None:
            object.__setattr__(self, "target_branch", tuple(self.target_branch))
        if self.bad_branch is not None:
            object.__setattr__(self, "bad_branch", tuple(self.bad_branch))

    @property
    def label(self) -> str:
        return (
            f"case_T{self.target_case}_{_branch_code(self.target_case, self.target_branch)}"
            f"_B{self.bad_case}_{_branch_code(self.bad_case, self.bad_branch)}"
        )

    @property
    def filename(self) -> str:
        return self.label + ".lp"


def _side_options():
    out = [(1, b) for b in product((False, True), repeat=3)]
    out += [(2, None), (3, None)]
    return out


ALL_CASES: tuple[CaseSpec, ...] = tuple(
    CaseSpec(tc, tb, bc, bb) for (tc, tb), (bc, bb) in product(_side_options(), repeat=2)
)


def _lin(*terms, const=0):
    """Sum of ``(coeff, var)`` terms into a coefficient map plus constant."""
    out: dict[str, Fraction] = {}
    for coeff, var in terms:
        out[var] = out.get(var, Fraction(0)) + coeff
    return out, Fraction(const)


def _cons(name, terms, rel, rhs):
    coeffs, _ = _lin(*terms)
    return Constraint(coeffs, rel, Fraction(rhs), name)


def _side_spec(prefix: str, entries, case: int, branch: Optional[Branch]):
    """Case constraints and the dimension expression for one splitting type.

    ``entries`` lists the three summand degrees as lists of (coeff, var) terms.
    """
    first, last = entries[0], entries[2]
    spread = last + [(-c, v) for c, v in first]
    e1 = [(1, "e1")]
    e2 = [(1, "e2")]
    neg = lambda ts: [(-c, v) for c, v in ts]  # noqa: E731
    cons = []
    if case == 1:
        cons.append(_cons(f"{prefix}_case1", spread + neg(e1), "<=", 0))
        dim_terms = [(1, "e1"), (1, "e2")]
        dim_const = -2
        for (x, y), gap_pos in zip(PAIRS, branch):
            gap = entries[y] + neg(entries[x])
            tag = f"{prefix}_gap{x + 1}{y + 1}"
            if gap_pos:
                cons.append(_cons(tag + "_pos", gap, ">=", 1))
                dim_terms += neg(gap)
                dim_const += 1
            else:
                cons.append(_cons(tag + "_zero", gap, "=", 0))
    elif case == 2:
        cons.append(_cons(f"{prefix}_case2_lo", spread + neg(e1), ">=", 1))
        cons.append(_cons(f"{prefix}_case2_hi", spread + neg(e2), "<=", -1))
        dim_terms = e2 + neg(spread)
        dim_const = 0
    else:
        cons.append(_cons(f"{prefix}_case3", spread + neg(e2), "=", 0))
        cons.append(_cons(f"{prefix}_case3_not1", spread + neg(e1), ">=", 1))
        dim_terms = []
        dim_const = 0
    return cons, dim_terms, dim_const


def _base_constraints(require_negative: bool) -> list[Constraint]:
    c = [_cons("e1_pos", [(1, "e1")], ">=", 1)]
    for k in range(1, 5):
        c.append(_cons(f"e_order_{k}{k + 1}", [(1, f"e{k + 1}"), (-1, f"e{k}")], ">=", 0))
    c += [
        _cons("p3_e5_e1e4", [(1, "e5"), (-1, "e1"), (-1, "e4")], "<=", 0),
        _cons("p3_e5_e2e3", [(1, "e5"), (-1, "e2"), (-1, "e3")], "<=", 0),
        _cons("p3_e2_2e1", [(1, "e2"), (-2, "e1")], "<=", 0),
        _cons("p3_e4_e1e3", [(1, "e4"), (-1, "e1"), (-1, "e3")], "<=", 0),
        _cons("a_order_12", [(1, "a2"), (-1, "a1")], ">=", 0),
        _cons("a_order_23", [(1, "a3"), (-1, "a2")], ">=", 0),
        _cons("nonempty_a2", [(1, "a2"), (-1, "a1"), (-1, "e1")], "<=", 0),
        _cons("nonempty_a3_a2", [(1, "a3"), (-1, "a2"), (-1, "e1")], "<=", 0),
        _cons("nonempty_a3_a1", [(1, "a3"), (-1, "a1"), (-1, "e2")], "<=", 0),
    ]
    if require_negative:
        c.append(_cons("bad_negative", [(1, "a1")], "<=", -1))
    c.append(
        _cons(
            "degree_sum",
            [(1, "a1"), (1, "a2"), (1, "a3"), (-2, "e3"), (-2, "e4"), (-2, "e5"), (3, "e1"), (3, "e2")],
            "=",
            0,
        )
    )
    return c


TARGET_ENTRIES = ([(-1, "e5")], [(-1, "e4")], [(-1, "e3")])
BAD_ENTRIES = ([(1, "a1")], [(1, "a2")], [(1, "a3")])


def build_case_lp(c: CaseSpec, *, require_negative: bool = True) -> LPInstance:
    """The LP minimizing ``target dim - bad dim`` over one linear piece.

    ``require_negative=False`` drops ``a1 <= -1``; that mutation must break the claim.
    """
    if not isinstance(c, CaseSpec):
        raise MalformedCase(f"expected a CaseSpec, got {type(c).__name__}")
    t_cons, t_terms, t_const = _side_spec("target", TARGET_ENTRIES, c.target_case, c.target_branch)
    b_cons, b_terms, b_const = _side_spec("bad", BAD_ENTRIES, c.bad_case, c.bad_branch)
    objective, _ = _lin(*(t_terms + [(-k, v) for k, v in b_terms]))
    return LPInstance(
        variables=VARIABLES,
        objective=objective,
        objective_constant=Fraction(t_const - b_const),
        constraints=tuple(_base_constraints(require_negative) + t_cons + b_cons),
        name=c.label,
    )


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class CaseRecord:
    case: CaseSpec
    outcome: LPOutcome
    certified: bool

    @property
    def verdict(self) -> Verdict:
        o = self.outcome
        if not self.certified or o.status is Status.UNBOUNDED:
            return Verdict.FAIL
        if o.status is Status.INFEASIBLE:
            return Verdict.PASS
        if o.value <= 0:
            return Verdict.FAIL
        if o.value < 1:
            return Verdict.INCONCLUSIVE
        return Verdict.PASS

    def to_dict(self) -> dict:
        return {
            "case": self.case.label,
            "status": self.outcome.status.value,
            "value": None if self.outcome.value is None else str(self.outcome.value),
            "certified": self.certified,
            "verdict": self.verdict.value,
        }


@dataclass(frozen=True)
class VerificationReport:
    records: tuple[CaseRecord, ...]
    require_negative: bool = True

    @property
    def verdict(self) -> Verdict:
        verdicts = {r.verdict for r in self.records}
        if Verdict.FAIL in verdicts:
            return Verdict.FAIL
        if Verdict.INCONCLUSIVE in verdicts:
            return Verdict.INCONCLUSIVE
        return Verdict.PASS

    @property
    def failing(self) -> tuple[CaseRecord, ...]:
        return tuple(r for r in self.records if r.verdict is not Verdict.PASS)

    @property
    def all_certified(self) -> bool:
        return all(r.certified for r in self.records)

    def counts(self) -> dict[str, int]:
        out = {s.value: 0 for s in Status}
        for r in self.records:
            out[r.outcome.status.value] += 1
        return out

    def to_dict(self) -> dict:
        optimal = [r.outcome.value for r in self.records if r.outcome.status is Status.OPTIMAL]
        return {
            "verdict": self.verdict.value,
            "cases": len(self.records),
            "status_counts": self.counts(),
            "min_optimal_value": str(min(optimal)) if optimal else None,
            "all_certified": self.all_certified,
            "require_negative": self.require_negative,
            "failing": [
                dict(r.to_dict(), witness=r.outcome.to_dict()) for r in self.failing
            ],
            "records": [r.to_dict() for r in self.records],
        }


def run_verification(
    cases: Optional[Iterable[CaseSpec]] = None, *, require_negative: bool = True
) -> VerificationReport:
    """Solve every case LP exactly and re-check each certificate."""
    cases = ALL_CASES if cases is None else tuple(cases)
    records = []
    for c in cases:
        instance = build_case_lp(c, require_negative=require_negative)
        try:
            outcome = solve(instance)
        except Exception as exc:  # pragma: no cover - solver bugs only
            raise SolverFailure(f"{c.label}: {exc}") from exc
        records.append(CaseRecord(c, outcome, check_certificate(instance, outcome)))
    return VerificationReport(tuple(records), require_negative)


def case_of_point(e, a: SplittingType) -> list[CaseSpec]:
    """Every case whose LP is satisfied by the integer point ``(e, a)``."""
    point = {f"e{k + 1}": Fraction(x) for k, x in enumerate(e)}
    point.update(a1=Fraction(a.a1), a2=Fraction(a.a2), a3=Fraction(a.a3))
    return [c for c in ALL_CASES if build_case_lp(c).is_feasible(point)]


def p3_tuples(e_max: int):
    """All ``e`` in P3 with ``e5 <= e_max``, lexicographically."""
    for e1 in range(1, e_max + 1):
        for e2 in range(e1, min(2 * e1, e_max) + 1):
            for e3 in range(e2, e_max + 1):
                for e4 in range(e3, min(e1 + e3, e_max) + 1):
                    for e5 in range(e4, min(e1 + e4, e2 + e3, e_max) + 1):
                        yield (e1, e2, e3, e4, e5)


@dataclass(frozen=True)
class BruteForceReport:
    e_max: int
    tuples_checked: int
    bad_types_checked: int
    violations: tuple[tuple[tuple[int, ...], SplittingType, int, int], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "e_max": self.e_max,
            "tuples_checked": self.tuples_checked,
            "bad_types_checked": self.bad_types_checked,
            "passed": self.passed,
            "violations": [
                {"e": list(e), "bad_type": list(t), "target_dim": td, "bad_dim": bd}
                for e, t, td, bd in self.violations
            ],
        }


def brute_force_check(e_max: int) -> BruteForceReport:
    """Integer scan: ``target_dim(e) > dim U^a`` for every bad type ``a``."""
    n = nbad = 0
    violations = []
    for e in p3_tuples(e_max):
        assert in_P3(e)
        n += 1
        base = TrigonalBase(e[0], e[1])
        td = target_dim(e)
        for t in enumerate_bad_types(e):
            nbad += 1
            bd = dim_splitting_locus(base, t)
            if td <= bd:
                violations.append((e, t, td, bd))
    return BruteForceReport(e_max, n, nbad, tuple(violations))


def export_cases(
    directory, cases: Optional[Iterable[CaseSpec]] = None, *, mps: bool = False
) -> list[str]:
    """Write one ``.lp`` file per case (and ``.mps`` twins when asked); returns file names."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    if not os.access(directory, os.W_OK):
        raise PermissionError(f"cannot write to {directory}")
    names = []
    for c in ALL_CASES if cases is None else cases:
        instance = build_case_lp(c)
        (directory / c.filename).write_text(write_lp(instance))
        names.append(c.filename)
        if mps:
            (directory / (c.label + ".mps")).write_text(write_mps(instance))
            names.append(c.label + ".mps")
    return names
