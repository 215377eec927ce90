from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import vertex_oracle
from sextic.exact_lp import (
    Constraint,
    LPInstance,
    LPOutcome,
    MalformedInstance,
    Multipliers,
    ShapeMismatch,
    Status,
    as_fraction,
    check_certificate,
    same_program,
    solve,
)

F = Fraction


def single_bound():
    return LPInstance(objective={"x": 1}, constraints=[Constraint({"x": 1}, ">=", 3)])


def contradictory():
    return LPInstance(
        variables=("x",),
        constraints=[Constraint({"x": 1}, "<=", -1), Constraint({"x": 1}, ">=", 0)],
    )


def test_single_tight_bound():
    out = solve(single_bound())
    assert out.status is Status.OPTIMAL
    assert out.value == 3 and out.point == {"x": 3}
    assert out.duals.rows == (1,)
    assert check_certificate(single_bound(), out)


def test_contradictory_pair_has_farkas_certificate():
    out = solve(contradictory())
    assert out.status is Status.INFEASIBLE
    assert check_certificate(contradictory(), out)
    assert out.farkas.rows == (1, 1)


def test_unbounded_ray_along_x():
    inst = LPInstance(objective={"x": -1}, constraints=[Constraint({"x": 1}, ">=", 0)])
    out = solve(inst)
    assert out.status is Status.UNBOUNDED
    assert out.ray["x"] > 0
    assert check_certificate(inst, out)


def test_fractional_optimum():
    inst = LPInstance(
        objective={"x": 1, "y": 1},
        constraints=[
            Constraint({"x": 1, "y": 1}, ">=", F(1, 3)),
            Constraint({"x": 1}, ">=", 0),
            Constraint({"y": 1}, ">=", 0),
        ],
    )
    out = solve(inst)
    assert out.status is Status.OPTIMAL and out.value == F(1, 3)
    assert check_certificate(inst, out)


def test_checker_accepts_dual_one_and_rejects_false_value():
    inst = single_bound()
    good = LPOutcome(Status.OPTIMAL, F(3), {"x": F(3)}, Multipliers((F(1),)))
    assert check_certificate(inst, good)
    lie = LPOutcome(Status.OPTIMAL, F(2), {"x": F(2)}, Multipliers((F(1),)))
    assert not check_certificate(inst, lie)


def test_checker_farkas_one_one():
    out = LPOutcome(Status.INFEASIBLE, farkas=Multipliers((F(1), F(1))))
    assert check_certificate(contradictory(), out)
    assert not check_certificate(contradictory(), LPOutcome(Status.INFEASIBLE, farkas=Multipliers((F(1), F(0)))))


def test_checker_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        check_certificate(contradictory(), LPOutcome(Status.INFEASIBLE, farkas=Multipliers((F(1),))))
    with pytest.raises(ShapeMismatch):
        check_certificate(
            single_bound(), LPOutcome(Status.OPTIMAL, F(3), {"x": F(3), "z": F(0)}, Multipliers((F(1),)))
        )


def test_undeclared_variable_is_malformed():
    with pytest.raises(MalformedInstance):
        LPInstance(variables=("x",), objective={"y": 1})


def test_contradictory_bound_pair_is_infeasible_not_error():
    inst = LPInstance(variables=("x",), lower={"x": 2}, upper={"x": 1})
    out = solve(inst)
    assert out.status is Status.INFEASIBLE and check_certificate(inst, out)


def test_floats_refused():
    with pytest.raises(TypeError):
        as_fraction(0.1)
    assert as_fraction("0.1") == F(1, 10)


def test_empty_constraints_box_minimum():
    inst = LPInstance(objective={"x": 2, "y": -1}, lower={"x": -1, "y": 0}, upper={"y": 5}, objective_constant=1)
    out = solve(inst)
    assert out.status is Status.OPTIMAL and out.value == -6
    free = LPInstance(variables=("x",), objective={"x": 1})
    assert solve(free).status is Status.UNBOUNDED


def test_no_variables():
    ok = LPInstance(objective_constant=4)
    assert solve(ok).value == 4
    bad = LPInstance(constraints=[Constraint({}, ">=", 1)])
    out = solve(bad)
    assert out.status is Status.INFEASIBLE and check_certificate(bad, out)


def test_degenerate_cycling_example_terminates():
    # Beale's classic cycling instance under the textbook rule
    inst = LPInstance(
        objective={"x4": F(-3, 4), "x5": 150, "x6": F(-1, 50), "x7": 6},
        constraints=[
            Constraint({"x4": F(1, 4), "x5": -60, "x6": F(-1, 25), "x7": 9}, "<=", 0),
            Constraint({"x4": F(1, 2), "x5": -90, "x6": F(-1, 50), "x7": 3}, "<=", 0),
            Constraint({"x6": 1}, "<=", 1),
        ],
        lower={v: 0 for v in ("x4", "x5", "x6", "x7")},
    )
    out = solve(inst)
    assert out.status is Status.OPTIMAL and out.value == F(-1, 20)
    assert check_certificate(inst, out)


# ---------------------------------------------------------------- properties

small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def instances(draw, max_vars=4, max_rows=6):
    n = draw(st.integers(1, max_vars))
    names = tuple(f"v{k}" for k in range(n))
    rows = []
    for _ in range(draw(st.integers(0, max_rows))):
        coeffs = {v: draw(small) for v in names if draw(st.booleans())}
        rows.append(Constraint(coeffs, draw(st.sampled_from(["<=", ">=", "="])), draw(small)))
    lower = {v: draw(st.integers(-2, 0)) for v in names if draw(st.booleans())}
    upper = {v: draw(st.integers(0, 3)) for v in names if draw(st.booleans())}
    return LPInstance(
        variables=names,
        objective={v: draw(small) for v in names},
        constraints=tuple(rows),
        lower=lower,
        upper=upper,
        objective_constant=draw(small),
    )


@settings(max_examples=300, deadline=None)
@given(instances())
def test_every_outcome_certifies(inst):
    assert check_certificate(inst, solve(inst))


@settings(max_examples=150, deadline=None)
@given(instances(), st.randoms(use_true_random=False))
def test_constraint_order_irrelevant(inst, rnd):
    rows = list(inst.constraints)
    rnd.shuffle(rows)
    a, b = solve(inst), solve(inst.replace(constraints=tuple(rows)))
    assert a.status is b.status and a.value == b.value


@settings(max_examples=150, deadline=None)
@given(instances(), st.fractions(min_value=F(1, 5), max_value=5, max_denominator=5))
def test_positive_objective_scaling(inst, q):
    scaled = inst.replace(objective={v: q * c for v, c in inst.objective.items()}, objective_constant=0)
    base = inst.replace(objective_constant=0)
    a, b = solve(base), solve(scaled)
    assert a.status is b.status
    if a.status is Status.OPTIMAL:
        assert b.value == q * a.value
        # an argmin of one is an argmin of the other
        assert base.objective_value(b.point) == a.value


@settings(max_examples=300, deadline=None)
@given(instances(max_vars=3, max_rows=6))
def test_matches_vertex_enumeration(inst):
    pointed, best = vertex_oracle(inst)
    out = solve(inst)
    if not pointed:
        return
    if out.status is Status.OPTIMAL:
        assert out.value == best
    elif out.status is Status.INFEASIBLE:
        assert best is None
    else:
        assert best is not None


def test_same_program_ignores_order():
    a = LPInstance(constraints=[Constraint({"x": 1}, ">=", 0, "p"), Constraint({"y": 1}, "<=", 2, "q")])
    b = LPInstance(constraints=[Constraint({"y": 1}, "<=", 2, "q"), Constraint({"x": 1}, ">=", 0, "p")])
    assert same_program(a, b)
    assert not same_program(a, b.replace(objective={"x": 1}))
