"""Derive every frozen empirical constant used by the checks and tests.

Run me to regenerate the numbers; the test suite asserts against the
frozen copies, so a change here that moves a value means either the
engine changed (a bug) or the corpus did (update the fixtures and say
why in the commit).

    python3 demos/derive_windows.py
"""

import math
import random
from fractions import Fraction

from linext import (
    balance,
    builtin_corpus,
    chain_plus_point,
    count_extensions,
    max_incomparable_pair,
    position_statistics,
    random_poset,
    two_equal_chains,
    young_diagram,
)
from linext.stats import average_variance, grunbaum_check
from linext.twochain import bl2_hypothesis, make_two_chain, psi_table


def free_psi(m: int, n: int, i: int, j: int) -> Fraction:
    """P(exactly j of the y's precede x_i) on the cross-free poset.

    Interleavings of two labelled chains are lattice paths, so the count
    factors into two binomials; used here because the sweep range is far
    past what per-instance lattices need to cover.
    """
    return Fraction(
        math.comb(i - 1 + j, j) * math.comb(m - i + n - j, n - j),
        math.comb(m + n, m),
    )


def main() -> None:
    print("== random_poset(8, 0.3, seed=1) extension count ==")
    fixture = random_poset(8, 0.3, seed=1)
    print("covers:", fixture.covers)
    print("extensions:", count_extensions(fixture))

    print()
    print("== off-fair balance of 2 x k rectangles ==")
    for k in (2, 5, 10, 20):
        p = young_diagram((k, k)).poset
        d = balance(p).off_fair_delta()
        print(f"k={k}: delta_off = {d} = {float(d):.6f}")

    print()
    print("== off-fair balance of chain_plus_point ==")
    for n in (4, 8, 16):
        p = chain_plus_point(n)
        d = balance(p).off_fair_delta()
        print(f"n={n}: delta_off = {d} = {float(d):.6f}")

    print()
    print("== sigma(x) * q(x) window over corpus elements with q <= 1/3 ==")
    lo, hi = None, None
    for name, p in builtin_corpus():
        for x in p.labels:
            st = position_statistics(p, x)
            if st.q > Fraction(1, 3):
                continue
            v = st.stddev * float(st.q)
            if lo is None or v < lo[0]:
                lo = (v, name, x)
            if hi is None or v > hi[0]:
                hi = (v, name, x)
    print("min:", lo)
    print("max:", hi)

    print()
    print("== variance-vs-q ceiling: max sigma^2 * q^2 over all corpus elements ==")
    worst = (Fraction(0), "", "")
    for name, p in builtin_corpus():
        for x in p.labels:
            st = position_statistics(p, x)
            v = st.variance * st.q * st.q
            if v > worst[0]:
                worst = (v, name, x)
    print("max sigma^2 q^2:", worst, float(worst[0]))

    print()
    print("== sigma/q scan over 2000 random posets, n <= 8 ==")
    rng = random.Random(2024)
    rlo, rhi = None, None
    rworst = Fraction(0)
    for trial in range(2000):
        n = rng.randint(3, 8)
        prob = rng.choice([0.0, 0.1, 0.2, 0.3, 0.5, 0.7])
        p = random_poset(n, prob, seed=rng.randrange(10**9))
        for x in p.labels:
            st = position_statistics(p, x)
            sq2 = st.variance * st.q * st.q
            if sq2 > rworst:
                rworst = sq2
            if st.q > Fraction(1, 3):
                continue
            v = st.stddev * float(st.q)
            if rlo is None or v < rlo:
                rlo = v
            if rhi is None or v > rhi:
                rhi = v
    print(f"window over randoms (q <= 1/3): [{rlo:.6f}, {rhi:.6f}]")
    print(f"max sigma^2 q^2 over randoms: {rworst} = {float(rworst):.6f}")

    print()
    print("== balanced-tail ceilings: max P(psi) under the cutoff hypothesis ==")
    # Cross-check the closed form against the lattice engine first.
    for m, n in ((2, 2), (3, 5), (12, 12)):
        table = psi_table(make_two_chain(m, n))
        for (i, j), v in table.items():
            assert free_psi(m, n, i, j) == v, (m, n, i, j)
    print("closed form == engine psi_table on (2,2), (3,5), (12,12)")
    for cutoff, sweep_max in ((5, 30), (10, 40)):
        hits: list[tuple[Fraction, tuple[int, int, int, int]]] = []
        for m in range(1, sweep_max + 1):
            for n in range(1, sweep_max + 1):
                for i in range(1, m + 1):
                    for j in range(1, n):
                        if bl2_hypothesis(m, n, i, j, cutoff):
                            hits.append((free_psi(m, n, i, j), (m, n, i, j)))
        hits.sort(reverse=True)
        print(f"K={cutoff}: {len(hits)} admissible (m,n,i,j); top three:")
        for v, arg in hits[:3]:
            print(f"  P(psi) = {v} = {float(v):.6f} at {arg}")

    print()
    print("== two_equal_chains variances ==")
    for n in (2, 4, 8, 16):
        p = two_equal_chains(n)
        st = position_statistics(p, "x1")
        pair = max_incomparable_pair(p, mode="greedy")
        avg = average_variance(p, pair.a)
        print(
            f"n={n}: var(x1) = {st.variance} = {float(st.variance):.4f}; "
            f"avg var over {len(pair.a)} elements = {avg} = {float(avg):.4f}"
        )

    print()
    print("== chain(9) + point: average variance over the point ==")
    p = chain_plus_point(10)
    pair = max_incomparable_pair(p)
    avg = average_variance(p, pair.a)
    print(f"pair a={pair.a} b has {len(pair.b)} elements; avg var = {avg}")

    print()
    print("== mean-tail 1/e claim: smallest counterexample ==")
    p = chain_plus_point(3)
    up, lo_ = grunbaum_check(p, "c1")
    print(f"2+1 poset, element c1: tails = ({up}, {lo_}); 1/e ~ 0.3679")


if __name__ == "__main__":
    main()
