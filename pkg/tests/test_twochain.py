import math
import random
from fractions import Fraction

import pytest

from linext.errors import DomainError, HypothesisNotSatisfied, IndexOutOfRange
from linext.lattice import count_extensions, event_probability
from linext.twochain import (
    bl1_margin,
    bl2_hypothesis,
    bl2_ratio,
    conditioned_psi,
    expected_g,
    g_distribution,
    g_tails,
    make_two_chain,
    mirrored,
    phi_probability,
    phi_table,
    psi_event,
    psi_probability,
    psi_table,
    random_two_chain,
)
from oracles import brute_event_probability


def test_free_count_is_binomial():
    for m in range(1, 8):
        for n in range(1, 8):
            t = make_two_chain(m, n)
            assert count_extensions(t.poset) == math.comb(m + n, m)


def test_cross_relations_are_closed_upward():
    t = make_two_chain(3, 4, cross=[(2, 2)])
    # x2 < y2 forces x1 < y2 and x2 < y3, y4 in the order itself,
    # while the generating set is stored as given
    p = t.poset
    assert p.less("x1", "y2")
    assert p.less("x2", "y4")
    assert not p.less("x3", "y4")
    assert t.cross == frozenset({(2, 2)})
    assert not t.is_free


def test_cross_indices_are_validated():
    with pytest.raises(IndexOutOfRange):
        make_two_chain(2, 2, cross=[(0, 1)])
    with pytest.raises(IndexOutOfRange):
        make_two_chain(2, 2, cross=[(3, 1)])


def test_psi_table_is_a_partition():
    t = make_two_chain(4, 5, cross=[(1, 3)])
    table = psi_table(t)
    for i in range(1, t.m + 1):
        assert sum(table[i, j] for j in range(t.n + 1)) == 1


def test_psi_probability_matches_event_form():
    rng = random.Random(33)
    for _ in range(25):
        t = random_two_chain(rng, 5, 5, rng.choice([0.0, 0.3]))
        i = rng.randint(1, t.m)
        j = rng.randint(0, t.n)
        assert psi_probability(t, i, j) == event_probability(t.poset, psi_event(t, i, j))


def test_psi_against_permutation_filter():
    t = make_two_chain(3, 3)
    # y1 < x2 < y2: exactly one y precedes x2
    pairs = [("y1", "x2"), ("x2", "y2")]
    assert psi_probability(t, 2, 1) == brute_event_probability(t.poset, pairs)


def test_psi_out_of_range():
    t = make_two_chain(2, 2)
    with pytest.raises(IndexOutOfRange):
        psi_probability(t, 0, 1)
    with pytest.raises(IndexOutOfRange):
        psi_probability(t, 1, 3)


def test_phi_is_psi_of_the_mirror():
    t = make_two_chain(4, 3, cross=[(3, 1)])
    s = mirrored(t)
    for j in range(1, t.n + 1):
        for i in range(t.m + 1):
            assert phi_probability(t, j, i) == psi_probability(s, t.n + 1 - j, t.m - i)


def test_phi_table_matches_pointwise():
    t = make_two_chain(3, 4, cross=[(2, 3)])
    table = phi_table(t)
    for (j, i), value in table.items():
        if j >= 1:
            assert value == phi_probability(t, j, i)


def test_g_shift_identity():
    from linext.lattice import position_distribution

    t = make_two_chain(4, 4, cross=[(2, 2)])
    for i in range(1, 5):
        g = g_distribution(t, i)
        f = position_distribution(t.poset, t.x_label(i))
        for k, prob in enumerate(g.probs):
            assert prob == f.probs[i + k - 1]
        assert g.mean == f.mean - i


def test_free_expected_g_closed_form():
    for m in range(1, 9):
        for n in range(1, 9):
            t = make_two_chain(m, n)
            for i in range(1, m + 1):
                assert expected_g(t, i) == Fraction(i * n, m + 1)


def test_g_tails_sum_exceeds_one():
    t = make_two_chain(3, 5, cross=[(1, 4)])
    upper, lower = g_tails(t, 2)
    assert upper + lower >= 1  # mass at the mean is counted twice


def test_conditioned_psi_free_closed_form():
    for m, n in ((2, 2), (3, 5), (6, 4)):
        t = make_two_chain(m, n)
        for i in range(1, m + 1):
            for j in range(0, n + 1):
                assert conditioned_psi(t, i, j) == Fraction(i, i + j)


def test_conditioned_psi_matches_brute_conditional():
    from oracles import brute_conditional_probability

    t = make_two_chain(3, 3)
    i, j = 2, 1
    ev = [("y1", "x2"), ("x2", "y2")]
    given = [("x2", "y2"), ("y1", "x3")]
    assert conditioned_psi(t, i, j) == brute_conditional_probability(t.poset, ev, given)


def test_bl1_variant_a():
    t = make_two_chain(4, 12)
    holds, value = bl1_margin(t, 1, 8, Fraction(1, 4))
    assert holds and value < Fraction(1, 4)
    with pytest.raises(HypothesisNotSatisfied):
        bl1_margin(t, 3, 3, Fraction(1, 2))  # i < eps*j fails


def test_bl1_variant_b_needs_free():
    t = make_two_chain(1, 10)
    holds, _ = bl1_margin(t, 1, 9, Fraction(1, 4), variant="b")
    assert holds
    crossed = make_two_chain(1, 10, cross=[(1, 5)])
    with pytest.raises(HypothesisNotSatisfied):
        bl1_margin(crossed, 1, 9, Fraction(1, 4), variant="b")


def test_bl1_conditioned_equals_ratio():
    t = make_two_chain(5, 9)
    holds, value = bl1_margin(t, 1, 6, Fraction(1, 3), conditioned=True)
    assert value == Fraction(1, 7)
    assert holds


def test_bl2_hypothesis_band():
    # j and n-j must clear the cutoff
    assert not bl2_hypothesis(10, 12, 5, 6, 6)
    assert bl2_hypothesis(12, 12, 6, 6, 5)
    # arity ratio: k*i*(n-j) < (k+1)*j*(m-i)
    assert not bl2_hypothesis(6, 12, 6, 6, 5)  # i = m makes the rhs zero
    assert bl2_hypothesis(14, 13, 7, 7, 5)


def test_bl2_ratio_closed_form_small():
    t = make_two_chain(2, 2)
    assert bl2_ratio(t, 1, 1) == Fraction(3, 2)


def test_bl2_ratio_trivial_chain():
    t = make_two_chain(1, 6)
    for ell in range(1, 7):
        assert bl2_ratio(t, 1, ell) == 1


def test_bl2_ratio_rejects_crossed_poset():
    t = make_two_chain(3, 3, cross=[(2, 2)])
    with pytest.raises(DomainError):
        bl2_ratio(t, 1, 1)


def test_bl2_ratio_rejects_bad_cut():
    t = make_two_chain(3, 3)
    with pytest.raises(DomainError):
        bl2_ratio(t, 2, 0)


def test_mirror_is_involution():
    t = make_two_chain(3, 5, cross=[(2, 4)])
    back = mirrored(mirrored(t))
    assert back.m == t.m and back.n == t.n and back.cross == t.cross


def test_random_two_chain_is_unidirectional():
    rng = random.Random(9)
    for _ in range(20):
        t = random_two_chain(rng, 6, 6, 0.4)
        for i, j in t.cross:
            assert t.poset.less(t.x_label(i), t.y_label(j))
        assert not any(
            t.poset.less(t.y_label(j), t.x_label(i))
            for i in range(1, t.m + 1)
            for j in range(1, t.n + 1)
        )
