"""Exact rational linear programming with checkable certificates.

Every number in the solve path is an ``int`` or a ``fractions.Fraction``.
The solver is a two-phase tableau simplex using Bland's least-index rule,
so it terminates on degenerate problems and its output is deterministic.

Certificates use one sign convention throughout. Each inequality is read in
``>=`` orientation (a ``<=`` row is negated first) and receives a
nonnegative multiplier; equality rows receive a free multiplier. Variable
bounds get separate nonnegative multipliers for the lower (``x >= l``) and
upper (``-x >= -u``) sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Mapping, Optional, Sequence

__all__ = [
    "Constraint",
    "LPError",
    "LPInstance",
    "LPOutcome",
    "MalformedInstance",
    "Multipliers",
    "ShapeMismatch",
    "Status",
    "as_fraction",
    "check_certificate",
    "same_program",
    "solve",
]

RELATIONS = ("<=", "=", ">=")


class LPError(Exception):
    pass


class MalformedInstance(LPError, ValueError):
    pass


class ShapeMismatch(LPError, ValueError):
    pass


def as_fraction(value) -> Fraction:
    """Coerce ``int``/``Fraction``/``str`` to an exact ``Fraction``. Floats are refused."""
    if isinstance(value, bool):
        raise TypeError("bool is not a number here")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}: {value!r}")


def _coeff_map(coeffs: Mapping[str, object]) -> dict[str, Fraction]:
    out = {}
    for name, value in coeffs.items():
        q = as_fraction(value)
        if q != 0:
            out[name] = out.get(name, Fraction(0)) + q
    return {k: v for k, v in out.items() if v != 0}


@dataclass(frozen=True)
class Constraint:
    coeffs: Mapping[str, Fraction]
    relation: str
    rhs: Fraction
    name: Optional[str] = None

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise MalformedInstance(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "coeffs", _coeff_map(self.coeffs))
        object.__setattr__(self, "rhs", as_fraction(self.rhs))

    def lhs(self, point: Mapping[str, Fraction]) -> Fraction:
        return sum((c * point[v] for v, c in self.coeffs.items()), Fraction(0))

    def holds(self, point: Mapping[str, Fraction]) -> bool:
        lhs = self.lhs(point)
        if self.relation == "<=":
            return lhs <= self.rhs
        if self.relation == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LPInstance:
    """``minimize objective . x + objective_constant`` subject to constraints and bounds.

    Variables without an entry in ``lower``/``upper`` are unbounded on that
    side. When ``variables`` is empty it is inferred from first appearance in
    the objective, constraints and bounds.
    """

    variables: tuple[str, ...] = ()
    objective: Mapping[str, Fraction] = field(default_factory=dict)
    constraints: tuple[Constraint, ...] = ()
    objective_constant: Fraction = Fraction(0)
    lower: Mapping[str, Fraction] = field(default_factory=dict)
    upper: Mapping[str, Fraction] = field(default_factory=dict)
    name: Optional[str] = None

    def __post_init__(self):
        constraints = tuple(
            c if isinstance(c, Constraint) else Constraint(*c) for c in self.constraints
        )
        objective = _coeff_map(self.objective)
        lower = {v: as_fraction(b) for v, b in self.lower.items()}
        upper = {v: as_fraction(b) for v, b in self.upper.items()}
        variables = tuple(self.variables)
        if not variables:
            seen: dict[str, None] = {}
            for v in objective:
                seen.setdefault(v)
            for c in constraints:
                for v in c.coeffs:
                    seen.setdefault(v)
            for v in list(lower) + list(upper):
                seen.setdefault(v)
            variables = tuple(seen)
        if len(set(variables)) != len(variables):
            raise MalformedInstance("duplicate variable names")
        declared = set(variables)
        for where, names in [("objective", objective), ("lower bounds", lower), ("upper bounds", upper)]:
            for v in names:
                if v not in declared:
                    raise MalformedInstance(f"undeclared variable {v!r} in {where}")
        names_seen = set()
        for i, c in enumerate(constraints):
            for v in c.coeffs:
                if v not in declared:
                    raise MalformedInstance(f"undeclared variable {v!r} in constraint {c.name or i}")
            if c.name is not None:
                if c.name in names_seen:
                    raise MalformedInstance(f"duplicate constraint name {c.name!r}")
                names_seen.add(c.name)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "objective", objective)
        object.__setattr__(self, "constraints", constraints)
        object.__setattr__(self, "objective_constant", as_fraction(self.objective_constant))
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    def objective_value(self, point: Mapping[str, Fraction]) -> Fraction:
        return self.objective_constant + sum(
            (c * point[v] for v, c in self.objective.items()), Fraction(0)
        )

    def is_feasible(self, point: Mapping[str, Fraction]) -> bool:
        for v in self.variables:
            x = point[v]
            if v in self.lower and x < self.lower[v]:
                return False
            if v in self.upper and x > self.upper[v]:
                return False
        return all(c.holds(point) for c in self.constraints)

    def replace(self, **changes) -> "LPInstance":
        fields = dict(
            variables=self.variables,
            objective=self.objective,
            constraints=self.constraints,
            objective_constant=self.objective_constant,
            lower=self.lower,
            upper=self.upper,
            name=self.name,
        )
        fields.update(changes)
        return LPInstance(**fields)


def same_program(a: LPInstance, b: LPInstance) -> bool:
    """Semantic equality: same variable set, objective, bounds and constraint multiset.

    Constraint order and instance names are ignored; constraint names are compared.
    """
    if set(a.variables) != set(b.variables) or len(a.variables) != len(b.variables):
        return False
    if a.objective != b.objective or a.objective_constant != b.objective_constant:
        return False
    if a.lower != b.lower or a.upper != b.upper:
        return False

    def key(c: Constraint):
        return (c.name or "", c.relation, c.rhs, tuple(sorted(c.coeffs.items())))

    return sorted(map(key, a.constraints)) == sorted(map(key, b.constraints))


class Status(str, Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"


@dataclass(frozen=True)
class Multipliers:
    """Multipliers for constraint rows (>= orientation) and for bound rows."""

    rows: tuple[Fraction, ...]
    lower: Mapping[str, Fraction] = field(default_factory=dict)
    upper: Mapping[str, Fraction] = field(default_factory=dict)


@dataclass(frozen=True)
class LPOutcome:
    status: Status
    value: Optional[Fraction] = None
    point: Optional[Mapping[str, Fraction]] = None
    duals: Optional[Multipliers] = None
    farkas: Optional[Multipliers] = None
    ray: Optional[Mapping[str, Fraction]] = None

    def to_dict(self) -> dict:
        def q(x):
            return str(x)

        def mult(m: Multipliers):
            return {
                "rows": [q(x) for x in m.rows],
                "lower": {k: q(v) for k, v in m.lower.items()},
                "upper": {k: q(v) for k, v in m.upper.items()},
            }

        out: dict = {"status": self.status.value}
        if self.value is not None:
            out["value"] = q(self.value)
        if self.point is not None:
            out["point"] = {k: q(v) for k, v in self.point.items()}
        if self.duals is not None:
            out["duals"] = mult(self.duals)
        if self.farkas is not None:
            out["farkas"] = mult(self.farkas)
        if self.ray is not None:
            out["ray"] = {k: q(v) for k, v in self.ray.items()}
        return out


# --------------------------------------------------------------------------
# Certificate checking. Deliberately independent of the tableau code below.


def _sigma(c: Constraint) -> int:
    return -1 if c.relation == "<=" else 1


def _combine(instance: LPInstance, m: Multipliers):
    """Return (sign_ok, combined coefficient vector, combined rhs) for a multiplier set."""
    if len(m.rows) != len(instance.constraints):
        raise ShapeMismatch(
            f"{len(m.rows)} row multipliers for {len(instance.constraints)} constraints"
        )
    declared = set(instance.variables)
    for side in (m.lower, m.upper):
        for v in side:
            if v not in declared:
                raise ShapeMismatch(f"bound multiplier for unknown variable {v!r}")
    ok = True
    vec = {v: Fraction(0) for v in instance.variables}
    rhs = Fraction(0)
    for y, c in zip(m.rows, instance.constraints):
        y = as_fraction(y)
        if c.relation != "=" and y < 0:
            ok = False
        s = _sigma(c)
        for v, a in c.coeffs.items():
            vec[v] += y * s * a
        rhs += y * s * c.rhs
    for v, z in m.lower.items():
        if z < 0 or (z != 0 and v not in instance.lower):
            ok = False
        elif z != 0:
            vec[v] += z
            rhs += z * instance.lower[v]
    for v, z in m.upper.items():
        if z < 0 or (z != 0 and v not in instance.upper):
            ok = False
        elif z != 0:
            vec[v] -= z
            rhs -= z * instance.upper[v]
    return ok, vec, rhs


def _check_point_shape(instance: LPInstance, point: Mapping[str, Fraction], what: str):
    if set(point) != set(instance.variables):
        raise ShapeMismatch(f"{what} does not assign exactly the declared variables")


def check_certificate(instance: LPInstance, outcome: LPOutcome) -> bool:
    """Verify the certificate carried by ``outcome`` against ``instance`` in exact arithmetic."""
    if outcome.status is Status.OPTIMAL:
        if outcome.point is None or outcome.duals is None or outcome.value is None:
            raise ShapeMismatch("optimal outcome needs point, duals and value")
        _check_point_shape(instance, outcome.point, "primal point")
        if not instance.is_feasible(outcome.point):
            return False
        primal = instance.objective_value(outcome.point)
        if primal != outcome.value:
            return False
        ok, vec, rhs = _combine(instance, outcome.duals)
        if not ok:
            return False
        if any(vec[v] != instance.objective.get(v, 0) for v in instance.variables):
            return False
        return rhs + instance.objective_constant == primal

    if outcome.status is Status.INFEASIBLE:
        if outcome.farkas is None:
            raise ShapeMismatch("infeasible outcome needs Farkas multipliers")
        ok, vec, rhs = _combine(instance, outcome.farkas)
        return ok and all(x == 0 for x in vec.values()) and rhs > 0

    if outcome.status is Status.UNBOUNDED:
        if outcome.point is None or outcome.ray is None:
            raise ShapeMismatch("unbounded outcome needs a point and a ray")
        _check_point_shape(instance, outcome.point, "feasible point")
        _check_point_shape(instance, outcome.ray, "ray")
        if not instance.is_feasible(outcome.point):
            return False
        r = outcome.ray
        for v in instance.variables:
            if v in instance.lower and r[v] < 0:
                return False
            if v in instance.upper and r[v] > 0:
                return False
        for c in instance.constraints:
            d = c.lhs(r)
            if (c.relation == "=" and d != 0) or (c.relation == ">=" and d < 0) or (
                c.relation == "<=" and d > 0
            ):
                return False
        slope = sum((a * r[v] for v, a in instance.objective.items()), Fraction(0))
        return slope < 0

    raise ShapeMismatch(f"unknown status {outcome.status!r}")


# --------------------------------------------------------------------------
# Tableau simplex. Rows are integer lists with a positive row denominator,
# so a row's true entries are ``ints[j] / den``; this keeps pivots on plain
# ints with a gcd reduction instead of per-entry Fraction arithmetic.


def _int_row(values: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for x in values:
        d = x.denominator
        den = den * d // gcd(den, d)
    return [int(x * den) for x in values], den


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows: list[list[int]] = []
        self.dens: list[int] = []
        for r in rows:
            ints, den = _int_row(r)
            self.rows.append(ints)
            self.dens.append(den)
        self.basis = basis
        self.obj: list[int] = []
        self.obj_den = 1

    def set_objective(self, costs: list[Fraction]):
        """Reduced-cost row for ``costs`` (length ncols, rhs slot excluded) on the current basis."""
        red = list(costs) + [Fraction(0)]
        for r, b in enumerate(self.basis):
            cb = costs[b]
            if cb:
                row, den = self.rows[r], self.dens[r]
                for j, x in enumerate(row):
                    if x:
                        red[j] -= cb * Fraction(x, den)
        self.obj, self.obj_den = _int_row(red)

    def value(self, r: int) -> Fraction:
        return Fraction(self.rows[r][-1], self.dens[r])

    def reduced_cost(self, j: int) -> Fraction:
        return Fraction(self.obj[j], self.obj_den)

    def pivot(self, r: int, c: int):
        prow = self.rows[r]
        p = prow[c]
        if p < 0:
            prow = [-x for x in prow]
            p = -p
        g = gcd(*prow)
        if g > 1:
            prow = [x // g for x in prow]
            p //= g
        self.rows[r], self.dens[r] = prow, p
        for s, row in enumerate(self.rows):
            if s != r and row[c]:
                self.rows[s], self.dens[s] = self._eliminate(row, self.dens[s], prow, p, c)
        if self.obj[c]:
            self.obj, self.obj_den = self._eliminate(self.obj, self.obj_den, prow, p, c)
        self.basis[r] = c

    @staticmethod
    def _eliminate(row, den, prow, p, c):
        q = row[c]
        new = [p * x - q * y for x, y in zip(row, prow)]
        d = den * p
        g = gcd(gcd(*new), d)
        if g > 1:
            new = [x // g for x in new]
            d //= g
        return new, d

    def entering(self, allowed: int) -> Optional[int]:
        obj = self.obj
        for j in range(allowed):
            if obj[j] < 0:
                return j
        return None

    def leaving(self, c: int) -> Optional[int]:
        best = None
        best_ratio = None
        for r, row in enumerate(self.rows):
            a = row[c]
            if a > 0:
                ratio = Fraction(row[-1], a)
                if (
                    best is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and self.basis[r] < self.basis[best])
                ):
                    best, best_ratio = r, ratio
        return best

    def run(self, allowed: int) -> Optional[int]:
        """Pivot to optimality over columns ``< allowed``. Returns an unbounded column, if any."""
        while True:
            c = self.entering(allowed)
            if c is None:
                return None
            r = self.leaving(c)
            if r is None:
                return c
            self.pivot(r, c)


def solve(instance: LPInstance) -> LPOutcome:
    """Minimize ``instance`` exactly and return the status with its certificate."""
    variables = instance.variables
    nv = len(variables)
    vindex = {v: k for k, v in enumerate(variables)}

    # Every constraint and bound becomes a row  g . x (>= or =) h  over free x.
    # origin: ("row", i, sigma) | ("lower", v) | ("upper", v)
    g_rows: list[tuple[dict[str, Fraction], bool, Fraction, tuple]] = []
    for i, c in enumerate(instance.constraints):
        s = _sigma(c)
        g_rows.append(
            ({v: s * a for v, a in c.coeffs.items()}, c.relation == "=", s * c.rhs, ("row", i, s))
        )
    for v in variables:
        if v in instance.lower:
            g_rows.append(({v: Fraction(1)}, False, instance.lower[v], ("lower", v)))
        if v in instance.upper:
            g_rows.append(({v: Fraction(-1)}, False, -instance.upper[v], ("upper", v)))

    m = len(g_rows)
    ineq = [k for k, (_, eq, _, _) in enumerate(g_rows) if not eq]
    slack_col = {k: 2 * nv + t for t, k in enumerate(ineq)}
    n_struct = 2 * nv + len(ineq)
    ncols = n_struct + m

    rows: list[list[Fraction]] = []
    flips: list[int] = []
    for k, (coeffs, eq, rhs, _) in enumerate(g_rows):
        row = [Fraction(0)] * (ncols + 1)
        for v, a in coeffs.items():
            row[2 * vindex[v]] = a
            row[2 * vindex[v] + 1] = -a
        if not eq:
            row[slack_col[k]] = Fraction(-1)
        row[-1] = rhs
        tau = 1
        if rhs < 0:
            tau = -1
            row = [-x for x in row]
        row[n_struct + k] = Fraction(1)
        rows.append(row)
        flips.append(tau)

    tab = _Tableau(rows, [n_struct + k for k in range(m)])

    def multipliers(y: list[Fraction]) -> Multipliers:
        lam = [tau * yk for tau, yk in zip(flips, y)]
        row_m = [Fraction(0)] * len(instance.constraints)
        lower: dict[str, Fraction] = {}
        upper: dict[str, Fraction] = {}
        for k, (_, _, _, origin) in enumerate(g_rows):
            if origin[0] == "row":
                row_m[origin[1]] = lam[k]
            elif lam[k]:
                (lower if origin[0] == "lower" else upper)[origin[1]] = lam[k]
        return Multipliers(tuple(row_m), lower, upper)

    # Phase 1: minimize the sum of artificials.
    tab.set_objective([Fraction(0)] * n_struct + [Fraction(1)] * m)
    tab.run(n_struct)
    infeasibility = -Fraction(tab.obj[-1], tab.obj_den)
    if infeasibility > 0:
        y = [1 - tab.reduced_cost(n_struct + k) for k in range(m)]
        return LPOutcome(Status.INFEASIBLE, farkas=multipliers(y))

    # Drive zero-level artificials out of the basis where the row allows it.
    for r in range(m):
        if tab.basis[r] >= n_struct:
            row = tab.rows[r]
            for j in range(n_struct):
                if row[j]:
                    tab.pivot(r, j)
                    break

    costs = [Fraction(0)] * ncols
    for v, a in instance.objective.items():
        costs[2 * vindex[v]] = a
        costs[2 * vindex[v] + 1] = -a
    tab.set_objective(costs)
    unbounded_col = tab.run(n_struct)

    col_values = [Fraction(0)] * ncols
    for r, b in enumerate(tab.basis):
        col_values[b] = tab.value(r)
    point = {v: col_values[2 * k] - col_values[2 * k + 1] for k, v in enumerate(variables)}

    if unbounded_col is not None:
        d = [Fraction(0)] * ncols
        d[unbounded_col] = Fraction(1)
        for r, b in enumerate(tab.basis):
            d[b] = -Fraction(tab.rows[r][unbounded_col], tab.dens[r])
        ray = {v: d[2 * k] - d[2 * k + 1] for k, v in enumerate(variables)}
        return LPOutcome(Status.UNBOUNDED, point=point, ray=ray)

    y = [-tab.reduced_cost(n_struct + k) for k in range(m)]
    return LPOutcome(
        Status.OPTIMAL,
        value=instance.objective_value(point),
        point=point,
        duals=multipliers(y),
    )
