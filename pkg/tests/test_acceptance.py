"""The ten acceptance criteria, one test each, at their stated tolerances.

Each test records a PASS/FAIL line; the terminal summary lists all of them.
"""

import random
import time
from fractions import Fraction
from itertools import product

from oracles import classify_direct, sorted_tuples, vertex_oracle

from sextic.exact_lp import (
    Constraint,
    LPInstance,
    Status,
    check_certificate,
    same_program,
    solve,
)
from sextic.lp_format import parse_lp, parse_mps
from sextic.scrollar import (
    OrientedPartition,
    ScrollarTuple,
    classify_region,
    in_P2,
    in_P3,
    in_P6,
    in_Q,
    is_admissible,
    realizable,
)
from sextic.verifier import (
    ALL_CASES,
    Verdict,
    brute_force_check,
    build_case_lp,
    export_cases,
    run_verification,
)
from sextic.witness import InternalContradiction, realization_witness


def test_criterion_01_lemma_reproduction(criterion):
    start = time.perf_counter()
    report = run_verification()
    elapsed = time.perf_counter() - start
    values_ok = all(
        r.outcome.status is Status.INFEASIBLE
        or (r.outcome.status is Status.OPTIMAL and r.outcome.value > 0)
        for r in report.records
    )
    ok = (
        report.verdict is Verdict.PASS
        and values_ok
        and report.all_certified
        and len(report.records) == len(ALL_CASES)
        and elapsed < 10
    )
    counts = report.counts()
    assert criterion(
        1,
        ok,
        f"verify-lemma {report.verdict.value}, {counts['Optimal']} optimal / "
        f"{counts['Infeasible']} infeasible, certified={report.all_certified}, {elapsed:.2f}s",
    )


def test_criterion_02_brute_force_oracle(criterion):
    start = time.perf_counter()
    rep = brute_force_check(8)
    elapsed = time.perf_counter() - start
    ok = rep.passed and rep.tuples_checked > 0 and elapsed < 60
    assert criterion(
        2,
        ok,
        f"{rep.tuples_checked} tuples, {rep.bad_types_checked} bad types, "
        f"{len(rep.violations)} violations, {elapsed:.2f}s",
    )


def test_criterion_03_mutation_sensitivity(criterion):
    report = run_verification(require_negative=False)
    zero = []
    for r in report.failing:
        o = r.outcome
        if o.status is Status.OPTIMAL and o.value == 0 and r.certified:
            lp = build_case_lp(r.case, require_negative=False)
            if lp.is_feasible(o.point) and lp.objective_value(o.point) == 0:
                zero.append(r)
    ok = report.verdict is Verdict.FAIL and bool(zero)
    example = ""
    if zero:
        p = zero[0].outcome.point
        example = (
            f", e.g. {zero[0].case.label} at e=({','.join(str(p[f'e{k}']) for k in range(1, 6))}) "
            f"a=({p['a1']},{p['a2']},{p['a3']})"
        )
    assert criterion(
        3, ok, f"without a1 <= -1: {report.verdict.value}, {len(zero)} zero-valued witnesses{example}"
    )


def test_criterion_04_trigonal_classification(criterion):
    bad = [
        (e1, e2)
        for e2 in range(1, 41)
        for e1 in range(1, e2 + 1)
        if realizable(ScrollarTuple((e1, e2))) != (e2 <= 2 * e1)
    ]
    ok = not bad and not realizable((1, 3))
    assert criterion(4, ok, f"{len(bad)} disagreements for e2 <= 40; (1,3) unrealizable")


def test_criterion_05_sextic_classification_oracle(criterion):
    n = 0
    bad = []
    for e in sorted_tuples(12):
        n += 1
        if classify_region(e).value != classify_direct(e):
            bad.append(e)
    assert criterion(5, not bad, f"{n} tuples with e5 <= 12, {len(bad)} disagreements")


def test_criterion_06_short_top_gap_lies_in_q(criterion):
    split = OrientedPartition(2, 3, 4, 5)
    n = 0
    bad = []
    for e in sorted_tuples(12):
        if in_P2(e) and not in_P3(e) and e[4] <= e[0] + e[1]:
            n += 1
            if not (is_admissible(e, split) and in_Q(e)):
                bad.append(e)
    assert criterion(6, n > 0 and not bad, f"{n} tuples in P2 minus P3 with e5 <= e1+e2, {len(bad)} failures")


def test_criterion_07_witness_totality(criterion):
    n = 0
    failures = []
    for e in sorted_tuples(10):
        if not realizable(e):
            continue
        n += 1
        try:
            plan = realization_witness(e)
        except InternalContradiction as exc:
            failures.append((e, str(exc)))
            continue
        if plan.total_genus != sum(e) - 5:
            failures.append((e, "genus"))
    assert criterion(7, n > 0 and not failures, f"{n} realizable tuples with e5 <= 10, {len(failures)} failures")


def test_criterion_08_p6_containment(criterion):
    n = 0
    bad = []
    for e in sorted_tuples(12):
        if in_P6(e):
            n += 1
            if not (in_P2(e) and in_P3(e)):
                bad.append(e)
    assert criterion(8, n > 0 and not bad, f"{n} tuples in P6 with e5 <= 12, {len(bad)} outside P2 and P3")


def _random_instance(rng: random.Random) -> LPInstance:
    nvar = rng.randint(1, 6)
    names = [f"x{k}" for k in range(nvar)]

    def q():
        return Fraction(rng.randint(-5, 5), rng.choice((1, 1, 1, 2, 3)))

    constraints = []
    for _ in range(rng.randint(0, 10)):
        coeffs = {v: q() for v in names if rng.random() < 0.7}
        constraints.append(Constraint(coeffs, rng.choice(("<=", ">=", "=", "<=", ">=")), q()))
    lower, upper = {}, {}
    for v in names:
        kind = rng.random()
        if kind < 0.5:
            lower[v] = Fraction(rng.randint(-3, 1))
        if kind > 0.3 and rng.random() < 0.6:
            upper[v] = Fraction(rng.randint(1, 4))
    objective = {v: q() for v in names if rng.random() < 0.8}
    return LPInstance(
        variables=tuple(names),
        objective=objective,
        constraints=tuple(constraints),
        objective_constant=q(),
        lower=lower,
        upper=upper,
    )


def test_criterion_09_solver_soundness(criterion):
    rng = random.Random(20241016)
    statuses = {s: 0 for s in Status}
    cert_failures = 0
    compared = 0
    mismatches = []
    for k in range(1000):
        inst = _random_instance(rng)
        out = solve(inst)
        statuses[out.status] += 1
        if not check_certificate(inst, out):
            cert_failures += 1
        if len(inst.variables) <= 3:
            pointed, best = vertex_oracle(inst)
            if pointed:
                compared += 1
                if out.status is Status.OPTIMAL and best != out.value:
                    mismatches.append(k)
                elif out.status is Status.INFEASIBLE and best is not None:
                    mismatches.append(k)
                elif out.status is Status.UNBOUNDED and best is None:
                    mismatches.append(k)
    ok = cert_failures == 0 and not mismatches and compared > 0
    assert criterion(
        9,
        ok,
        f"1000 instances ({', '.join(f'{v} {s.value}' for s, v in statuses.items())}), "
        f"{cert_failures} certificate failures, {compared} oracle comparisons, {len(mismatches)} mismatches",
    )


PAIRS = [
    (
        "Minimize\n obj: x\nSubject To\n c1: x >= 3\nEnd\n",
        "NAME one\nROWS\n N obj\n G c1\nCOLUMNS\n    x obj 1 c1 1\nRHS\n    RHS c1 3\nENDATA\n",
    ),
    (
        # maximize, fractional and decimal literals, free variable
        "Maximize\n obj: 0.5 x + 1/3 y\nSubject To\n cap: x + y <= 4\n lim: x - y >= -1.25\n"
        "Bounds\n y free\nEnd\n",
        "NAME two\nOBJSENSE\n    MAX\nROWS\n N obj\n L cap\n G lim\nCOLUMNS\n"
        "    x obj 0.5 cap 1\n    x lim 1\n    y obj 1/3 cap 1\n    y lim -1\n"
        "RHS\n    RHS cap 4 lim -1.25\nBOUNDS\n FR BND y\nENDATA\n",
    ),
    (
        # a ranged row expands to a pair of inequalities
        "Minimize\n obj: - a + 2 b\nSubject To\n r_lo: a + b >= 2\n r_hi: a + b <= 5\nBounds\n a <= 3\nEnd\n",
        "NAME three\nROWS\n N obj\n L r\nCOLUMNS\n    a obj -1 r 1\n    b obj 2 r 1\n"
        "RHS\n    RHS r 5\nRANGES\n    RNG r 3\nBOUNDS\n UP BND a 3\nENDATA\n",
    ),
    (
        # equality, fixed and minus-infinity bounds, objective constant
        "Minimize\n obj: u + v + w + 7\nSubject To\n e: u + 2 v - w = 1\n"
        "Bounds\n u = 2\n -inf <= v <= 10\n -1 <= w <= 1\nEnd\n",
        "NAME four\nROWS\n N cost\n E e\nCOLUMNS\n    u cost 1 e 1\n    v cost 1 e 2\n"
        "    w cost 1 e -1\nRHS\n    RHS cost -7\n    RHS e 1\nBOUNDS\n FX BND u 2\n"
        " MI BND v\n UP BND v 10\n LO BND w -1\n UP BND w 1\nENDATA\n",
    ),
    (
        # fixed-column layout, a negative-range equality row, comments
        "\\ ranged equality\nMinimize\n obj: p\nSubject To\n q_lo: p + r >= 1\n q_hi: p + r <= 4\nEnd\n",
        "* fixed-format MPS\nNAME          FIVE\nROWS\n N  OBJ\n E  q\nCOLUMNS\n"
        "    p         OBJ       1.0          q         1.0\n"
        "    r         q         1.0\nRHS\n    RHS       q         4.0\n"
        "RANGES\n    RNG       q         -3.0\nENDATA\n",
    ),
]


def test_criterion_10_format_fidelity(criterion, tmp_path):
    export_cases(tmp_path)
    round_trip = sum(
        same_program(parse_lp((tmp_path / c.filename).read_text()), build_case_lp(c)) for c in ALL_CASES
    )
    paired = sum(same_program(parse_lp(lp), parse_mps(mps)) for lp, mps in PAIRS)
    ok = round_trip == len(ALL_CASES) and paired == len(PAIRS) == 5
    assert criterion(
        10, ok, f"{round_trip}/{len(ALL_CASES)} case files round-trip, {paired}/{len(PAIRS)} LP/MPS pairs agree"
    )
