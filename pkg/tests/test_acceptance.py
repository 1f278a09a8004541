"""
Acceptance criteria.  Each test prints one ``ACCEPTANCE n: PASS|FAIL`` line and
the terminal summary repeats them.  Run directly with

    pytest tests/test_acceptance.py -v -s
"""

import random
import time
from collections import Counter

from realselfdual.bounds import (
    PairingSpec,
    Problem,
    canonical_class,
    lower_bound,
    signature,
    trivial_multiplicity,
)
from realselfdual.characters import (
    CycleGroup,
    char_value,
    character_from_weights,
    dominant_weights_up_to,
    freudenthal_weights,
    schur,
    weyl_dim,
)
from realselfdual.laurent import evaluate_at_one
from realselfdual.lie import RamificationPoint, Weight, make_context, to_bar
from realselfdual.tables import load_golden, reproduce_table

from bruteforce import flip_pairs, so_basis, sp_basis, trace_on_invariants


def _table_mismatches(report):
    bad = []
    for r in report.rows:
        if r.dimension != r.expected_dimension:
            bad.append(f"row {r.row} dim {r.dimension}!={r.expected_dimension}")
        bad.extend(f"row {r.row} c={c.c} {c.bounds}!={c.expected}" for c in r.cells if not c.ok)
    return bad


def test_criterion_1_table1(acceptance):
    start = time.perf_counter()
    report = reproduce_table(1)
    elapsed = time.perf_counter() - start
    bad = _table_mismatches(report)
    blanks = sum(c.expected is None for r in report.rows for c in r.cells)
    ok = len(report.rows) == 15 and not bad and elapsed < 10
    acceptance(1, ok, f"table 1: {len(report.rows)} rows exact, {blanks} blank cells empty, {elapsed:.2f}s (limit 10s)"
               + (f"; mismatches {bad}" if bad else ""))
    assert ok


def test_criterion_2_table2(acceptance):
    start = time.perf_counter()
    report = reproduce_table(2)
    elapsed = time.perf_counter() - start
    bad = _table_mismatches(report)
    biggest = next(r for r in report.rows if r.label == "(0,1,0)^8")
    big_ok = biggest.dimension == 6111 and [c.bounds for c in biggest.cells] == [[69], [59], [113], [311]]
    ok = len(report.rows) == 22 and not bad and big_ok and elapsed < 300
    acceptance(2, ok, f"table 2: {len(report.rows)} rows exact, (0,1,0)^8 -> 6111 / 69,59,113,311, "
                      f"{elapsed:.2f}s (limit 300s)" + (f"; mismatches {bad}" if bad else ""))
    assert ok


def test_criterion_3_transfer(acceptance):
    original = reproduce_table(1)
    moved = reproduce_table(1, transpose=True)
    same = all(
        a.dimension == b.dimension and [c.bounds for c in a.cells] == [c.bounds for c in b.cells]
        for a, b in zip(original.rows, moved.rows)
    )
    ok = same and moved.N == 5 and len(moved.rows) == len(original.rows) == 15 and moved.ok
    acceptance(3, ok, f"so5 -> sp4: {len(moved.rows)} rows with identical dimension and bounds at N=5")
    assert ok


def test_criterion_4_oracles(acceptance):
    start = time.perf_counter()
    checked, failures = 0, []
    for N in (3, 4, 5, 6, 7):
        ctx = make_context(N)
        for w in dominant_weights_up_to(ctx, 4):
            s = schur(ctx, w)
            if s != character_from_weights(ctx, freudenthal_weights(ctx, w)):
                failures.append((N, w, "freudenthal"))
            if evaluate_at_one(s) != weyl_dim(ctx, w):
                failures.append((N, w, "weyl"))
            checked += 1
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30 and checked > 0
    acceptance(4, ok, f"{checked} weights over N=3..7 agree with Freudenthal and Weyl, {elapsed:.2f}s (limit 30s)"
               + (f"; failures {failures[:5]}" if failures else ""))
    assert ok


# -- criterion 5 ----------------------------------------------------------------

WEIGHTS = {
    4: [(0, 0), (1, 0), (0, 1), (0, 2), (1, 1)],
    5: [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)],
    6: [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 2)],
}
CASES = 500
SEED = 20240611


def _random_problem(rnd):
    N = rnd.choice([4, 5, 6])
    n = rnd.randint(1, 6)
    pts = [RamificationPoint(Weight(rnd.choice(WEIGHTS[N])), rnd.randint(0, 1)) for _ in range(n)]
    return Problem.build(N, pts)


def _random_spec(problem, rnd, counts=None):
    pairs = []
    for j, (_, idx) in enumerate(problem.classes()):
        idx = list(idx)
        rnd.shuffle(idx)
        take = rnd.randint(0, len(idx) // 2) if counts is None else counts[j]
        pairs.extend(tuple(sorted(idx[2 * t: 2 * t + 2])) for t in range(take))
    rnd.shuffle(pairs)
    return PairingSpec(tuple(pairs))


def _random_cycles(size, rnd):
    out = []
    while size:
        part = rnd.randint(1, size)
        out.append(part)
        size -= part
    return tuple(out)


def _weight_groups(problem):
    return Counter(p.weight for p in problem.points)


def _check_case(rnd, case):
    problem = _random_problem(rnd)
    ctx = problem.ctx
    dim = trivial_multiplicity(problem)
    assert dim >= 0, "negative dimension"
    assert signature(problem) == dim == signature(problem, PairingSpec()), "c=0 signature is not the dimension"

    spec = _random_spec(problem, rnd)
    a = signature(problem, spec)
    assert (a - dim) % 2 == 0, "parity"
    res = lower_bound(problem, spec)
    assert res.bound == abs(a) <= dim, "bound exceeds dimension"

    counts = canonical_class(problem, spec).pair_counts()
    other = _random_spec(problem, rnd, counts)
    assert signature(problem, other) == a, "pairing-class invariance"

    step = rnd.randint(1, 3)
    shifted = Problem(ctx, tuple(RamificationPoint(p.weight, p.k + step) for p in problem.points))
    assert signature(shifted, spec) == a, "k-independence"

    w1, w2 = rnd.choice(WEIGHTS[ctx.N]), rnd.choice(WEIGHTS[ctx.N])
    assert trivial_multiplicity(Problem.build(ctx.N, [(w1,), (w2,)])) == int(w1 == w2), "two-point delta"

    groups = _weight_groups(problem)
    identity = [CycleGroup(w, (1,) * m) for w, m in groups.items()]
    sigma = [CycleGroup(w, _random_cycles(m, rnd)) for w, m in groups.items()]
    mu = rnd.choice(dominant_weights_up_to(ctx, 2))
    assert abs(char_value(ctx, sigma, mu)) <= char_value(ctx, identity, mu), "character bounded by identity"

    if problem.n <= 3 and case % 3 == 0:
        top = sum(to_bar(ctx, p.weight).parts[0] for p in problem.points)
        total = sum(weyl_dim(ctx, m) * char_value(ctx, identity, m) for m in dominant_weights_up_to(ctx, top))
        expected = 1
        for p in problem.points:
            expected *= weyl_dim(ctx, p.weight)
        assert total == expected, "completeness sum"
        return True
    return False


def test_criterion_5_properties(acceptance):
    rnd = random.Random(SEED)
    start = time.perf_counter()
    failures, completeness = [], 0
    for case in range(CASES):
        try:
            completeness += _check_case(rnd, case)
        except Exception as exc:
            failures.append(f"case {case}: {type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    ok = not failures and completeness > 0
    acceptance(5, ok, f"{CASES} seeded random cases (seed {SEED}), {completeness} completeness sums, "
                      f"{elapsed:.2f}s" + (f"; failures {failures[:5]}" if failures else ""))
    assert ok


def test_criterion_6_scope(acceptance):
    # The geometric statements are out of reach at this scale; what is checked is that the
    # combinatorial signature equals the signed trace of the pairing involution on actual
    # invariant tensors, which is the link the bounds rest on.
    agree = True
    for basis, N in ((so_basis(5)[0], 4), (sp_basis(4)[0], 5)):
        problem = Problem.build(N, [((1, 0), 0, 4)])
        for c in range(3):
            trace, _ = trace_on_invariants(basis, 4, flip_pairs(4, c))
            spec = PairingSpec(tuple((2 * i, 2 * i + 1) for i in range(c)))
            agree &= signature(problem, spec) == round(trace)
    golden = all(load_golden(t)["rows"] for t in (1, 2))
    ok = agree and golden
    acceptance(6, ok, "scope: real-point geometry not reproduced; acceptance rests on the exact "
                      "combinatorial formulas (signature = brute-force signed trace on so5/sp4 checked)")
    assert ok
