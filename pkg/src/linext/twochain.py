"""Posets made of two chains with one-directional cross relations.

The ground set is a chain x_1 < ... < x_m and a chain y_1 < ... < y_n;
extra relations only ever point from the x-chain into the y-chain, so
every ideal is a pair of prefixes and the ideal lattice embeds in an
(m+1) x (n+1) grid.  The module exposes the sandwich events
psi(i, j) = "x_i lands between y_j and y_{j+1}" (and the mirror phi),
the count g(x_i) of y-elements before x_i, and exact checks of the tail
bounds those events satisfy.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    ConditionNullEvent,
    DomainError,
    HypothesisNotSatisfied,
    IndexOutOfRange,
)
from .lattice import (
    EventSpec,
    build_lattice,
    event_probability,
)
from .poset import Poset


@dataclass(frozen=True)
class TwoChainPoset:
    """Two chains of sizes m and n with cross relations x_i < y_j."""

    m: int
    n: int
    cross: frozenset[tuple[int, int]]
    poset: Poset

    def x_label(self, i: int) -> str:
        if not 1 <= i <= self.m:
            raise IndexOutOfRange(f"x index {i} outside [1, {self.m}]")
        return f"x{i}"

    def y_label(self, j: int) -> str:
        if not 1 <= j <= self.n:
            raise IndexOutOfRange(f"y index {j} outside [1, {self.n}]")
        return f"y{j}"

    @property
    def is_free(self) -> bool:
        return not self.cross

    def prefix_mask(self, a: int, b: int) -> int:
        """Bitmask of the ideal holding the first a x's and first b y's."""
        return ((1 << a) - 1) | (((1 << b) - 1) << self.m)


def make_two_chain(m: int, n: int, cross=()) -> TwoChainPoset:
    """Build the poset; ``cross`` lists required pairs (i, j) with x_i < y_j.

    The stored matrix is the transitive closure, so x_i < y_j holds exactly
    when some required pair (i0, j0) has i <= i0 and j >= j0.
    """
    if m < 1 or n < 1:
        raise DomainError("both chains need at least one element")
    cross = frozenset((int(i), int(j)) for i, j in cross)
    for i, j in cross:
        if not 1 <= i <= m:
            raise IndexOutOfRange(f"cross x index {i} outside [1, {m}]")
        if not 1 <= j <= n:
            raise IndexOutOfRange(f"cross y index {j} outside [1, {n}]")
    labels = [f"x{i}" for i in range(1, m + 1)] + [f"y{j}" for j in range(1, n + 1)]
    size = m + n
    lt = np.zeros((size, size), dtype=bool)
    for a in range(m):
        for b in range(a + 1, m):
            lt[a, b] = True
    for a in range(n):
        for b in range(a + 1, n):
            lt[m + a, m + b] = True
    reach = 0  # largest i with x_i below y_j, accumulated over increasing j
    best_at = {}
    for i, j in cross:
        best_at[j] = max(best_at.get(j, 0), i)
    for j in range(1, n + 1):
        reach = max(reach, best_at.get(j, 0))
        for i in range(1, reach + 1):
            lt[i - 1, m + j - 1] = True
    return TwoChainPoset(m, n, cross, Poset(labels, lt))


def psi_event(t: TwoChainPoset, i: int, j: int) -> EventSpec:
    """Event that exactly j y-elements precede x_i (j from 0 to n)."""
    if not 1 <= i <= t.m:
        raise IndexOutOfRange(f"x index {i} outside [1, {t.m}]")
    if not 0 <= j <= t.n:
        raise IndexOutOfRange(f"y cut {j} outside [0, {t.n}]")
    pairs = []
    if j >= 1:
        pairs.append((t.y_label(j), t.x_label(i)))
    if j + 1 <= t.n:
        pairs.append((t.x_label(i), t.y_label(j + 1)))
    return EventSpec(tuple(pairs))


def phi_event(t: TwoChainPoset, j: int, i: int) -> EventSpec:
    """Event that exactly i x-elements precede y_j (i from 0 to m)."""
    if not 1 <= j <= t.n:
        raise IndexOutOfRange(f"y index {j} outside [1, {t.n}]")
    if not 0 <= i <= t.m:
        raise IndexOutOfRange(f"x cut {i} outside [0, {t.m}]")
    pairs = []
    if i >= 1:
        pairs.append((t.x_label(i), t.y_label(j)))
    if i + 1 <= t.m:
        pairs.append((t.y_label(j), t.x_label(i + 1)))
    return EventSpec(tuple(pairs))


def psi_probability(t: TwoChainPoset, i: int, j: int, budget: int | None = None) -> Fraction:
    """P(y_j before x_i before y_{j+1}), through the event machinery."""
    return event_probability(t.poset, psi_event(t, i, j), budget)


def phi_probability(t: TwoChainPoset, j: int, i: int, budget: int | None = None) -> Fraction:
    return event_probability(t.poset, phi_event(t, j, i), budget)


def psi_table(t: TwoChainPoset, budget: int | None = None) -> dict[tuple[int, int], Fraction]:
    """All sandwich probabilities at once.

    Exactly j y-elements precede x_i precisely when x_i sits at overall
    position i + j, so the whole table is read off the position marginals
    of one lattice rather than one augmented count per cell.
    """
    lat = build_lattice(t.poset, budget)
    marg = lat.marginals()
    out = {}
    for i in range(1, t.m + 1):
        probs = marg[t.x_label(i)]
        for j in range(0, t.n + 1):
            out[(i, j)] = probs[i + j - 1]
    return out


def phi_table(t: TwoChainPoset, budget: int | None = None) -> dict[tuple[int, int], Fraction]:
    lat = build_lattice(t.poset, budget)
    marg = lat.marginals()
    out = {}
    for j in range(1, t.n + 1):
        probs = marg[t.y_label(j)]
        for i in range(0, t.m + 1):
            out[(j, i)] = probs[j + i - 1]
    return out


@dataclass(frozen=True)
class GStatistic:
    """Law of g(x_i), the number of y-elements preceding x_i."""

    i: int
    probs: tuple[Fraction, ...]  # index k = P(g = k), k in 0..n
    mean: Fraction


def g_distribution(t: TwoChainPoset, i: int, budget: int | None = None) -> GStatistic:
    """Exact law of g(x_i); it is the position law of x_i shifted by i."""
    if not 1 <= i <= t.m:
        raise IndexOutOfRange(f"x index {i} outside [1, {t.m}]")
    lat = build_lattice(t.poset, budget)
    probs = lat.marginals()[t.x_label(i)]
    g_probs = tuple(probs[i + k - 1] for k in range(0, t.n + 1))
    mean = sum((Fraction(k) * p for k, p in enumerate(g_probs)), Fraction(0))
    return GStatistic(i, g_probs, mean)


def expected_g(t: TwoChainPoset, i: int, budget: int | None = None) -> Fraction:
    """Exact E g(x_i); equals i*n/(m+1) when there are no cross relations."""
    return g_distribution(t, i, budget).mean


def g_tails(t: TwoChainPoset, i: int, budget: int | None = None) -> tuple[Fraction, Fraction]:
    """(P(g >= E g), P(g <= E g)) for x_i, exact."""
    dist = g_distribution(t, i, budget)
    upper = sum(
        (p for k, p in enumerate(dist.probs) if Fraction(k) >= dist.mean), Fraction(0)
    )
    lower = sum(
        (p for k, p in enumerate(dist.probs) if Fraction(k) <= dist.mean), Fraction(0)
    )
    return upper, lower


def conditioned_psi(t: TwoChainPoset, i: int, j: int, budget: int | None = None) -> Fraction:
    """P(psi(i, j) | x_i before y_{j+1} and y_j before x_{i+1}).

    Both events pin the lattice path near the prefix ideal (i, j):
    the condition says the path visits it, the sandwich event says the
    path enters it by adding x_i.  The ratio therefore reduces to a
    quotient of two downward path counts.
    """
    if not 1 <= i <= t.m:
        raise IndexOutOfRange(f"x index {i} outside [1, {t.m}]")
    if not 0 <= j <= t.n:
        raise IndexOutOfRange(f"y cut {j} outside [0, {t.n}]")
    lat = build_lattice(t.poset, budget)
    denom = lat.down.get(t.prefix_mask(i, j), 0)
    if denom == 0:
        raise ConditionNullEvent("the conditioning prefix is not reachable")
    num = lat.down.get(t.prefix_mask(i - 1, j), 0)
    return Fraction(num, denom)


def bl1_margin(
    t: TwoChainPoset,
    i: int,
    j: int,
    eps: Fraction,
    variant: str = "a",
    conditioned: bool = False,
    budget: int | None = None,
) -> tuple[bool, Fraction]:
    """Check the small-index tail bound P(psi(i, j)) < eps.

    Variant "a" requires i < eps * j; variant "b" requires a cross-free
    poset with m < eps * n - 1 (then the bound holds for every cell, this
    call checks the requested one).  With ``conditioned`` the probability
    is taken conditional on the prefix event of :func:`conditioned_psi`,
    which on cross-free posets equals i / (i + j) exactly.
    Raises HypothesisNotSatisfied when the arity condition fails.
    """
    eps = Fraction(eps)
    if variant == "a":
        if not Fraction(i) < eps * j:
            raise HypothesisNotSatisfied(f"need i < eps*j, got i={i}, eps*j={eps * j}")
    elif variant == "b":
        if not t.is_free:
            raise HypothesisNotSatisfied("variant b needs a cross-free poset")
        if not Fraction(t.m) < eps * t.n - 1:
            raise HypothesisNotSatisfied(
                f"need m < eps*n - 1, got m={t.m}, eps*n-1={eps * t.n - 1}"
            )
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if conditioned:
        value = conditioned_psi(t, i, j, budget)
    else:
        value = psi_probability(t, i, j, budget)
    return value < eps, value


def bl2_hypothesis(m: int, n: int, i: int, j: int, k: int) -> bool:
    """Arity condition of the balanced-tail bound at cutoff k.

    Requires j > k, n - j > k and (n - j)/(m - i) < (1 + 1/k) * j/i,
    evaluated in exact integer arithmetic.
    """
    if not (1 <= i <= m and 1 <= j <= n and k >= 1):
        return False
    if j <= k or n - j <= k:
        return False
    return k * i * (n - j) < (k + 1) * j * (m - i)


def bl2_ratio(t: TwoChainPoset, i: int, ell: int, budget: int | None = None) -> Fraction:
    """Ratio P(psi(i, ell-1)) / P(psi(i, ell)) on a cross-free poset.

    Evaluates both the closed form
    (1 + (m - i)/(n - ell + 1)) / (1 + (i - 1)/ell)
    and the exact quotient of sandwich probabilities, asserts they agree,
    and returns the value.  DomainError on arguments outside the formula's
    domain or on posets with cross relations.
    """
    if not t.is_free:
        raise DomainError("the ratio closed form needs a cross-free poset")
    if not 1 <= i <= t.m or not 1 <= ell <= t.n:
        raise DomainError(f"need 1 <= i <= {t.m} and 1 <= ell <= {t.n}")
    closed = (1 + Fraction(t.m - i, t.n - ell + 1)) / (1 + Fraction(i - 1, ell))
    hi = psi_probability(t, i, ell - 1, budget)
    lo = psi_probability(t, i, ell, budget)
    if lo == 0:
        raise DomainError("denominator sandwich probability is zero")
    exact = hi / lo
    assert exact == closed, f"ratio mismatch: engine {exact} vs closed form {closed}"
    return exact


def mirrored(t: TwoChainPoset) -> TwoChainPoset:
    """Order dual with the chain roles swapped, again one-directional.

    Extensions reverse, so the sandwich tables trade places:
    P(psi(a, b)) of the mirror equals P(phi(n+1-a, m-b)) of the original.
    """
    cross = frozenset((t.n + 1 - j, t.m + 1 - i) for i, j in t.cross)
    return make_two_chain(t.n, t.m, cross)


def random_two_chain(
    rng: random.Random, max_m: int = 5, max_n: int = 5, cross_prob: float = 0.3
) -> TwoChainPoset:
    """Random one-directional two-chain poset for sweep tests."""
    m = rng.randint(1, max_m)
    n = rng.randint(1, max_n)
    cross = set()
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if rng.random() < cross_prob:
                cross.add((i, j))
    return make_two_chain(m, n, cross)
