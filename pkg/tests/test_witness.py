import pytest

from oracles import sorted_tuples
from sextic.scrollar import OrientedPartition, find_admissible_partitions, genus, in_Q, realizable
from sextic.splitting_loci import NotInP3, SplittingType
from sextic.witness import (
    DoubleOverTriplePlan,
    NotAdmissible,
    NotInQ,
    TripleOverDoublePlan,
    Unrealizable,
    plan_double_over_triple,
    plan_triple_over_double,
    realization_witness,
)

P = OrientedPartition


def test_double_over_triple_3_4_4_4_4():
    plan = plan_double_over_triple((3, 4, 4, 4, 4))
    assert (plan.base.e1, plan.base.e2, plan.g_X, plan.target_dim) == (3, 4, 5, 5)
    assert {d for _, d in plan.bad_types} == {0, 1}
    assert plan.target == SplittingType(-4, -4, -4)
    assert plan.total_genus == genus((3, 4, 4, 4, 4)) == 14


def test_double_over_triple_constant():
    plan = plan_double_over_triple((1, 1, 1, 1, 1))
    assert (plan.base.e1, plan.base.e2, plan.target_dim, plan.bad_types) == (1, 1, 0, ())


def test_double_over_triple_outside_P3():
    with pytest.raises(NotInP3):
        plan_double_over_triple((1, 3, 3, 3, 3))


def _degrees(plan):
    return (plan.g_X, plan.degD1, plan.degD2, plan.shift, plan.degD1_prime, plan.degD2_prime,
            plan.delta_coefficient, plan.deg_delta)


def test_triple_over_double_1_3_3_3_3():
    plan = plan_triple_over_double((1, 3, 3, 3, 3), P(2, 3, 4, 5))
    assert _degrees(plan) == (0, 1, 1, 0, 1, 1, 2, 5)
    assert plan.deg_L1_L2_minus2 == 5 >= plan.g_X + 1


def test_triple_over_double_2_5_5_6_6():
    plan = plan_triple_over_double((2, 5, 5, 6, 6), P(2, 3, 4, 5))
    assert _degrees(plan) == (1, 2, 2, 1, 1, 0, 3, 6)


def test_triple_over_double_default_partition():
    e = (1, 3, 3, 3, 3)
    assert plan_triple_over_double(e).partition == find_admissible_partitions(e)[0]


def test_triple_over_double_errors():
    with pytest.raises(NotInQ):
        plan_triple_over_double((1, 2, 3, 4, 5))
    with pytest.raises(NotAdmissible):
        # (1,3,3,3,4) is in Q, but {4,5}|{2,3} has the heavier pair first
        plan_triple_over_double((1, 3, 3, 3, 4), P(4, 5, 2, 3))


def test_realization_witness_dispatch():
    assert isinstance(realization_witness((1, 2, 3, 4, 5)), DoubleOverTriplePlan)
    assert isinstance(realization_witness((1, 3, 3, 3, 3)), TripleOverDoublePlan)
    with pytest.raises(Unrealizable):
        realization_witness((1, 3, 3, 6, 6))


def test_every_admissible_partition_gives_a_consistent_plan():
    for e in sorted_tuples(10):
        if not in_Q(e):
            continue
        for p in find_admissible_partitions(e):
            plan = plan_triple_over_double(e, p)
            ei, ej, ek, el = (e[k - 1] for k in (p.i, p.j, p.k, p.l))
            assert plan.deg_L1 == e[0] - ei - ej
            assert plan.deg_delta == 2 * plan.delta_coefficient + plan.degD2_prime >= 0
            if plan.degD1_prime == 0:
                assert 2 * ei - ek >= 0
            else:
                assert plan.degD2_prime in (0, 1)
            assert plan.total_genus == genus(e)


def test_plans_serialize():
    for e in [(1, 2, 3, 4, 5), (1, 3, 3, 3, 3)]:
        d = realization_witness(e).to_dict()
        assert d["e"] == list(e) and d["total_genus"] == genus(e)
    assert realization_witness((1, 3, 3, 3, 3)).to_dict()["partition"] == "{2,3}|{4,5}"


def test_totality_small():
    for e in sorted_tuples(7):
        if realizable(e):
            assert realization_witness(e).total_genus == sum(e) - 5
