import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linext.errors import CycleDetected, DuplicateLabel, UnknownElement
from linext.poset import (
    Poset,
    comparability_profile,
    disjoint_sum,
    grid_poset,
    is_convex_in_grid,
    max_incomparable_pair,
    transitive_closure,
)
from oracles import brute_width
from conftest import random_posets


def vee() -> Poset:
    return Poset.from_covers(["a", "b", "c"], [("a", "b"), ("a", "c")])


def test_from_covers_closes_transitively():
    p = Poset.from_covers("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    assert p.less("a", "d")
    assert p.covers == (("a", "b"), ("b", "c"), ("c", "d"))


def test_redundant_generators_are_absorbed():
    p = Poset.from_covers("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    # (a, c) is implied, so it is not a cover
    assert p.covers == (("a", "b"), ("b", "c"))


def test_cycle_rejected():
    with pytest.raises(CycleDetected):
        Poset.from_covers("ab", [("a", "b"), ("b", "a")])


def test_duplicate_label_rejected():
    with pytest.raises(DuplicateLabel):
        Poset.from_covers(["x", "x"], [])


def test_unknown_element_rejected():
    with pytest.raises(UnknownElement):
        Poset.from_covers("ab", [("a", "z")])


def test_dict_round_trip():
    p = vee()
    assert Poset.from_dict(p.to_dict()) == p


def test_dual_involution():
    p = vee()
    d = p.dual()
    assert d.less("b", "a") and d.less("c", "a")
    assert d.dual() == p


def test_subposet_keeps_induced_relations():
    p = Poset.from_covers("abcd", [("a", "b"), ("b", "c"), ("a", "d")])
    q = p.subposet(["a", "c", "d"])
    assert q.less("a", "c")  # via the removed b
    assert q.less("a", "d")
    assert not q.comparable("c", "d")


def test_chain_and_antichain_predicates():
    assert Poset.from_covers("abc", [("a", "b"), ("b", "c")]).is_chain()
    assert Poset.from_covers("abc", []).is_antichain()
    assert not vee().is_chain()
    assert not vee().is_antichain()


def test_incomparables_listing():
    p = vee()
    assert p.incomparables("b") == ("c",)
    assert p.incomparables("a") == ()


def test_disjoint_sum_width():
    p = disjoint_sum(vee(), Poset.from_covers("xy", [("x", "y")]))
    assert p.n == 5
    profile = comparability_profile(p)
    assert profile.width == 3  # {b, c} plus one of the new chain


@pytest.mark.parametrize("poset", random_posets(60, nmax=7, seed=101))
def test_width_matches_subset_search(poset):
    assert comparability_profile(poset).width == brute_width(poset)


def test_profile_antichain_is_one():
    for poset in random_posets(40, nmax=7, seed=102):
        profile = comparability_profile(poset)
        chain_free = profile.antichain
        assert len(chain_free) == profile.width
        for u in chain_free:
            for v in chain_free:
                assert u == v or not poset.comparable(u, v)


def test_profile_counts_agree_with_incomparables():
    p = vee()
    profile = comparability_profile(p)
    assert profile.counts == {"a": 0, "b": 1, "c": 1}
    assert profile.max_count == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.data())
def test_closure_is_idempotent(n, data):
    rel = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if data.draw(st.booleans()):
                rel[i, j] = True
    closed = transitive_closure(rel)
    assert (transitive_closure(closed) == closed).all()


# -- max incomparable pairs ------------------------------------------------


def test_pair_exact_on_two_chains():
    from linext.families import two_equal_chains

    pair = max_incomparable_pair(two_equal_chains(3))
    assert pair.product == 9
    assert pair.mu == 1


def test_pair_greedy_reaches_max_pi():
    for poset in random_posets(30, nmax=8, seed=103):
        if poset.is_chain():
            continue
        profile = comparability_profile(poset)
        pair = max_incomparable_pair(poset, mode="greedy")
        assert pair.product >= profile.max_count
        assert len(pair.b) >= len(pair.a)
        for u in pair.a:
            for v in pair.b:
                assert not poset.comparable(u, v)


def test_pair_exact_dominates_greedy():
    for poset in random_posets(25, nmax=7, seed=104):
        if poset.is_chain():
            continue
        exact = max_incomparable_pair(poset, mode="exact")
        greedy = max_incomparable_pair(poset, mode="greedy")
        assert exact.product >= greedy.product
        assert greedy.mu <= 1


def test_pair_on_chain_raises():
    from linext.errors import NotApplicable
    from linext.families import chain

    with pytest.raises(NotApplicable):
        max_incomparable_pair(chain(4))


# -- grid embeddings -------------------------------------------------------


def test_grid_poset_product_order():
    p = grid_poset([(1, 1), (1, 2), (2, 1), (2, 2)])
    assert p.less("1,1", "2,2")
    assert not p.comparable("1,2", "2,1")


def test_convexity_verdicts():
    square = [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert is_convex_in_grid(square).convex
    assert is_convex_in_grid(square).ideal
    # remove the middle of a chain of cells: not convex
    gappy = [(1, 1), (1, 3)]
    assert not is_convex_in_grid(gappy).convex
    # skew shape: convex but not an ideal
    skew = [(1, 2), (2, 1), (2, 2)]
    verdict = is_convex_in_grid(skew)
    assert verdict.convex and not verdict.ideal
