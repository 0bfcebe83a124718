from fractions import Fraction

import pytest

from linext.errors import ComparablePair
from linext.families import antichain, chain, chain_plus_point, random_poset
from linext.lattice import sorting_probability
from linext.mcmc import (
    default_burn_in,
    estimate_pair_probability,
    initial_state,
    mc_step,
    tv_distance_diagnostic,
)


def test_initial_state_is_an_extension():
    for seed in range(5):
        p = random_poset(8, 0.4, seed=seed)
        state = initial_state(p)
        ranks = {i: k for k, i in enumerate(state.order)}
        for u, v in p.covers:
            assert ranks[p.index(u)] < ranks[p.index(v)]


def test_steps_preserve_the_extension_property():
    p = random_poset(7, 0.35, seed=99)
    state = initial_state(p, seed=1, validate=True)  # asserts inside on violation
    for _ in range(4000):
        mc_step(state)
    assert state.steps == 4000


def test_pos_array_stays_inverse_of_order():
    p = chain_plus_point(6)
    state = initial_state(p, seed=2)
    for _ in range(1000):
        mc_step(state)
    for k, x in enumerate(state.order):
        assert state.pos[x] == k


def test_chain_walker_never_moves():
    p = chain(5)
    state = initial_state(p, seed=3)
    start = list(state.order)
    for _ in range(200):
        mc_step(state)
    assert state.order == start


def test_default_burn_in_scales_cubically():
    assert default_burn_in(chain(4)) == 640
    assert default_burn_in(antichain(10)) == 10_000


def test_estimate_is_deterministic_per_seed():
    p = chain_plus_point(4)
    a = estimate_pair_probability(p, "z", "c1", samples=2000, seed=11)
    b = estimate_pair_probability(p, "z", "c1", samples=2000, seed=11)
    assert a == b


def test_estimate_matches_exact_within_four_errors():
    p = chain_plus_point(3)
    exact = sorting_probability(p, "z", "c1")  # 1/3
    est = estimate_pair_probability(p, "z", "c1", samples=20_000, seed=5)
    assert est.samples == 20_000
    assert abs(est.estimate - float(exact)) <= 4 * est.stderr
    assert 0 < est.stderr < 0.05


def test_estimate_rejects_comparable_pairs():
    p = chain(3)
    with pytest.raises(ComparablePair):
        estimate_pair_probability(p, "c1", "c2", samples=10)
    with pytest.raises(ComparablePair):
        estimate_pair_probability(p, "c1", "c1", samples=10)


def test_tv_distance_shrinks_with_samples():
    p = random_poset(6, 0.3, seed=77)
    x = p.labels[0]
    rough = tv_distance_diagnostic(p, x, samples=500, seed=1)
    fine = tv_distance_diagnostic(p, x, samples=50_000, seed=1)
    assert fine < 0.03
    assert fine <= rough + 0.02  # allow noise, forbid regression


def test_tv_distance_zero_on_chain():
    assert tv_distance_diagnostic(chain(4), "c2", samples=100, seed=0) == 0.0
