"""The fourteen gate criteria, one test and one printed verdict line each.

Every criterion is checked with exact arithmetic against independent
oracles or frozen fixtures from demos/derive_windows.py.  Criterion 8 is
expected to fail and is kept failing on purpose: the two-sided mean-tail
floor it demands is not a theorem (see test_08's docstring for the
three-element counterexample); the scoped variants that are actually
true run green in the verify suites.
"""

import math
import random
import time
from fractions import Fraction

from linext.checks import (
    GRUNBAUM_LOWER,
    check_log_concavity,
    check_pi_bounds,
    run_suite,
    trend_experiment,
)
from linext.families import (
    all_partitions,
    builtin_corpus,
    chain_plus_point,
    random_poset,
    tightness_example_a,
    tripod,
    two_equal_chains,
    young_diagram,
)
from linext.lattice import build_lattice, count_extensions, sorting_probability
from linext.mcmc import estimate_pair_probability, tv_distance_diagnostic
from linext.poset import comparability_profile, max_incomparable_pair
from linext.stats import average_variance, grunbaum_check
from linext.twochain import conditioned_psi, bl2_ratio, make_two_chain, psi_table
from oracles import brute_count


def _line(num: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {num:02d} {'PASS' if ok else 'FAIL'} — {detail}")


def test_01_counts_match_permutation_filtering():
    """2000 random posets, n <= 8: engine count equals brute force, < 5 min."""
    rng = random.Random(505)
    start = time.time()
    checked = 0
    for _ in range(2000):
        n = rng.randint(2, 8)
        prob = rng.choice([0.0, 0.1, 0.25, 0.4, 0.6, 0.8])
        p = random_poset(n, prob, seed=rng.randrange(10**9))
        assert count_extensions(p) == brute_count(p)
        checked += 1
    elapsed = time.time() - start
    ok = checked == 2000 and elapsed < 300
    _line(1, ok, f"{checked}/2000 random posets agree with brute force ({elapsed:.1f}s)")
    assert ok


def test_02_two_chain_closed_forms():
    """|E| = C(m+n, m) and E g(x_i) = i*n/(m+1) for all m, n <= 20, < 1 min."""
    start = time.time()
    cells = 0
    for m in range(1, 21):
        for n in range(1, 21):
            t = make_two_chain(m, n)
            lat = build_lattice(t.poset)
            assert lat.extension_count == math.comb(m + n, m)
            marg = lat.marginals()
            for i in range(1, m + 1):
                probs = marg[t.x_label(i)]
                mean_f = sum((Fraction(k + 1) * q for k, q in enumerate(probs)), Fraction(0))
                assert mean_f - i == Fraction(i * n, m + 1)
                cells += 1
    elapsed = time.time() - start
    ok = elapsed < 60
    _line(2, ok, f"400 cross-free posets, {cells} mean identities, exact ({elapsed:.1f}s)")
    assert ok


def test_03_log_concavity_everywhere():
    """Zero violations over the corpus and all diagrams with <= 10 cells."""
    posets = [p for _, p in builtin_corpus()]
    posets += [
        young_diagram(lam).poset for k in range(1, 11) for lam in all_partitions(k) if sum(lam) == k
    ]
    bad = 0
    positions = 0
    for p in posets:
        for x in p.labels:
            positions += 1
            if not check_log_concavity(p, x).holds:
                bad += 1
    ok = bad == 0
    _line(3, ok, f"{positions} position laws over {len(posets)} posets, {bad} violations")
    assert ok


def test_04_correlation_inequalities():
    """XYZ and conditioned-pair monotonicity: 500 random instances each."""
    xyz = run_suite("xyz", count=500, nmax=8, seed=41)
    gyy = run_suite("gyy", count=500, nmax=8, seed=42)
    bad = [r for r in xyz + gyy if not r.holds]
    ok = not bad and len(xyz) == 500 and len(gyy) == 500
    _line(4, ok, f"500 + 500 instances, {len(bad)} violations")
    assert ok


def test_05_conditioning_localizes():
    """Conditional probability equals the window subposet's, 100 instances."""
    records = run_suite("window", count=100, seed=43)
    kinds = {r.check for r in records}
    bad = [r for r in records if not r.holds]
    ok = (
        len(records) == 100
        and not bad
        and kinds == {"window_psi", "window_psi_psi", "window_psi_phi"}
    )
    _line(5, ok, f"100 identities across {len(kinds)} conditioning shapes, {len(bad)} off")
    assert ok


def test_06_small_index_tail_bound():
    """Free posets m, n <= 15: P(sandwich at (i, j)) <= i/j, and the
    prefix-conditioned value is exactly i/(i+j).

    The quantifier "P < eps whenever i < eps*j" over all rationals eps
    is equivalent to the single exact comparison P <= i/j.
    """
    start = time.time()
    pairs = 0
    for m in range(1, 16):
        for n in range(1, 16):
            t = make_two_chain(m, n)
            table = psi_table(t)
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    assert table[i, j] <= Fraction(i, j)
                    assert conditioned_psi(t, i, j) == Fraction(i, i + j)
                    pairs += 1
    elapsed = time.time() - start
    _line(6, True, f"{pairs} (i, j) cells over 225 cross-free posets ({elapsed:.1f}s)")


def test_07_ratio_closed_form():
    """Adjacent-sandwich ratio equals its closed form for all m, n <= 12."""
    checked = 0
    for m in range(1, 13):
        for n in range(1, 13):
            t = make_two_chain(m, n)
            for i in range(1, m + 1):
                for ell in range(1, n + 1):
                    value = bl2_ratio(t, i, ell)  # asserts both routes agree
                    assert value > 0
                    checked += 1
    _line(7, True, f"{checked} (m, n, i, ell) ratios, closed form exact")


def test_08_two_sided_mean_tail_floor():
    """Both mean tails of every corpus position law must exceed 1/e.

    This criterion is not attainable and the test is left failing by
    design.  Counterexample inside the corpus itself: in the poset made
    of a two-chain plus a floating point, the bottom chain element's
    position law is (2/3, 1/3, 0) with mean 4/3, so the mass at or above
    the mean is 1/3 < 1/e.  No engine change can fix this — the claim
    fails as a statement about discrete position laws (the order
    polytope's centroid bound does not transfer to both tails of f).
    The true scoped forms are checked instead by check_grunbaum_pair and
    check_grunbaum_tails, which run green over this same corpus in
    run_suite("grunbaum", corpus="builtin").
    """
    violations = []
    positions = 0
    for name, p in builtin_corpus():
        for x in p.labels:
            positions += 1
            upper, lower = grunbaum_check(p, x)
            if not (upper > GRUNBAUM_LOWER and lower > GRUNBAUM_LOWER):
                violations.append((name, x, upper, lower))
    ok = not violations
    first = min(violations, default=None, key=lambda v: (len(v[0]), v[0], v[1]))
    _line(8, ok, f"{len(violations)}/{positions} corpus positions violate; e.g. {first}")
    assert ok, (
        f"{len(violations)} corpus positions have a mean tail below 1/e "
        f"(first: {first}); this floor is mathematically unattainable — "
        "see this test's docstring and the scoped green variants."
    )


def test_09_sandwich_concentration():
    """P(A < x < B) >= eps^(w^2) on 100 random decompositions, n <= 7."""
    records = run_suite("cwsig", count=100, nmax=7, seed=44)
    bad = [r for r in records if not r.holds]
    ok = len(records) == 100 and not bad
    _line(9, ok, f"100 random decompositions, {len(bad)} below the floor")
    assert ok


def test_10_incomparability_floors():
    """Convex floor with equality on the two-column family; both floors on
    diagrams with <= 10 cells and on the corner-with-arms ideals."""
    problems = []
    for size in range(4, 21, 2):
        recs = check_pi_bounds(tightness_example_a(size))
        convex = next(r for r in recs if r.check == "pi_floor_convex")
        if not (convex.holds and convex.lhs == convex.rhs):
            problems.append(("two-column", size))
    shapes = [
        young_diagram(lam) for k in range(1, 11) for lam in all_partitions(k) if sum(lam) == k
    ]
    shapes += [tripod(d, ell) for d in (2, 3) for ell in range(1, 7)]
    emitted = 0
    for shape in shapes:
        for rec in check_pi_bounds(shape):
            emitted += 1
            if not rec.holds:
                problems.append((shape, rec.check))
    ok = not problems and emitted > 100
    _line(10, ok, f"9 equality cases, {emitted} floor checks, {len(problems)} failures")
    assert ok


def test_11_onethird_finding_sweep():
    """Balance >= 1/3 over 10^4 random non-chain posets; findings reported,
    never fatal — the sweep itself completing is the criterion."""
    records = run_suite("onethird", count=10_000, nmax=8, seed=45)
    findings = [r for r in records if not r.holds]
    for r in findings:
        print(f"  finding: {r.instance} delta={r.lhs} ({r.note})")
    ok = len(records) == 10_000
    _line(11, ok, f"10000 posets swept, {len(findings)} findings (expected 0)")
    assert ok


def test_12_trend_fixtures():
    """Balance climbs toward 1/2 along the frozen families, each row < 2 min."""
    expected_rect = {
        2: Fraction(0),
        5: Fraction(17, 42),
        10: Fraction(275, 646),
        20: Fraction(62806058, 126233085),
    }
    deltas = []
    for k in (2, 5, 10, 20):
        start = time.time()
        (row,) = trend_experiment("rect2xk", [k])
        elapsed = time.time() - start
        assert elapsed < 120, f"size {k} took {elapsed:.1f}s"
        assert row.delta == expected_rect[k]
        deltas.append(row.delta)
    rect_ok = all(a < b for a, b in zip(deltas, deltas[1:])) and deltas[-1] > Fraction(45, 100)

    expected_point = {4: Fraction(1, 4), 8: Fraction(3, 8), 16: Fraction(7, 16)}
    point = []
    for n in (4, 8, 16):
        start = time.time()
        (row,) = trend_experiment("chainpoint", [n])
        assert time.time() - start < 120
        assert row.delta == expected_point[n]
        point.append(row.delta)
    point_ok = all(a < b for a, b in zip(point, point[1:]))

    ok = rect_ok and point_ok
    _line(
        12,
        ok,
        f"two-column delta {[str(d) for d in deltas]} and floating-point delta "
        f"{[str(d) for d in point]} both strictly increase",
    )
    assert ok


def test_13_monte_carlo_validation():
    """TV < 0.03 at 1e5 samples on 20 corpus posets; 4-stderr coverage >= 95%."""
    members = builtin_corpus()[:20]
    worst_tv = 0.0
    for idx, (name, p) in enumerate(members):
        profile = comparability_profile(p)
        x = max(p.labels, key=lambda lab: (profile.counts[lab], -p.index(lab)))
        tv = tv_distance_diagnostic(p, x, samples=100_000, seed=1000 + idx)
        worst_tv = max(worst_tv, tv)
        assert tv < 0.03, (name, x, tv)

    p = chain_plus_point(6)
    exact = float(sorting_probability(p, "z", "c2"))
    hits = 0
    for seed in range(100):
        est = estimate_pair_probability(p, "z", "c2", samples=20_000, seed=seed)
        if abs(est.estimate - exact) <= 4 * est.stderr:
            hits += 1
    ok = hits >= 95
    _line(13, ok, f"worst TV {worst_tv:.4f} over 20 posets; {hits}/100 runs inside 4*stderr")
    assert ok


def test_14_average_variance_growth():
    """Mean positional variance over a maximal pair's short side grows with n."""
    expected = {4: Fraction(6, 5), 8: Fraction(68, 27), 16: Fraction(88, 17)}
    values = []
    for n in (4, 8, 16):
        p = two_equal_chains(n)
        pair = max_incomparable_pair(p, mode="greedy")
        avg = average_variance(p, pair.a)
        assert avg == expected[n]
        values.append(avg)
    ok = values[0] < values[1] < values[2]
    _line(14, ok, f"averages {[str(v) for v in values]} strictly increase")
    assert ok
