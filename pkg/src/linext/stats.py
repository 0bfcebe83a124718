"""Sorting probabilities, balance constants, and position statistics.

All probabilities are exact rationals; floats appear only in convenience
fields derived from them (standard deviations and report output).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, NotApplicable
from .lattice import build_lattice, PositionDistribution, position_distribution
from .poset import Poset


@dataclass(frozen=True)
class BalanceReport:
    """Balance constants of every incomparable pair.

    ``pairs`` maps index-ordered incomparable pairs (x, y) to
    delta(x, y) = min(P(x before y), P(y before x)).  ``per_element`` is
    the best constant each element achieves against any partner
    (comparable partners count as zero), ``delta`` the global maximum and
    ``witness`` the lexicographically first pair achieving it.
    """

    pairs: dict[tuple[str, str], Fraction]
    per_element: dict[str, Fraction]
    delta: Fraction
    witness: tuple[str, str]

    def pair_delta(self, x: str, y: str) -> Fraction:
        key = (x, y) if (x, y) in self.pairs else (y, x)
        return self.pairs.get(key, Fraction(0))

    def off_fair_delta(self) -> Fraction:
        """Largest balance constant strictly below 1/2 (0 when none).

        Families whose best pair is exactly fair still move: this tracks
        the nearest-miss pair, which is the quantity that trends toward
        1/2 as such families grow.
        """
        below = [d for d in self.pairs.values() if d < Fraction(1, 2)]
        return max(below, default=Fraction(0))


def balance(p: Poset, budget: int | None = None) -> BalanceReport:
    """Exact balance constants from one sweep over the ideal lattice.

    Raises NotApplicable on chains (no incomparable pair exists).
    """
    if p.is_chain():
        raise NotApplicable("a chain has no incomparable pair")
    lat = build_lattice(p, budget)
    counts = lat.pair_counts()
    total = lat.extension_count
    comp = p.lt | p.lt.T
    pairs: dict[tuple[str, str], Fraction] = {}
    per_idx = [Fraction(0)] * p.n
    best = Fraction(-1)
    witness = None
    for i in range(p.n):
        for j in range(i + 1, p.n):
            if comp[i, j]:
                continue
            d = Fraction(min(counts[i][j], counts[j][i]), total)
            pairs[(p.labels[i], p.labels[j])] = d
            if d > per_idx[i]:
                per_idx[i] = d
            if d > per_idx[j]:
                per_idx[j] = d
            if d > best:
                best = d
                witness = (p.labels[i], p.labels[j])
    per_element = {p.labels[i]: per_idx[i] for i in range(p.n)}
    return BalanceReport(pairs, per_element, best, witness)


@dataclass(frozen=True)
class PositionStatistics:
    """Moments and mode mass of one element's position law."""

    element: str
    mean: Fraction
    variance: Fraction
    stddev: float
    q: Fraction  # largest single-position probability

    @classmethod
    def from_distribution(cls, dist: PositionDistribution) -> "PositionStatistics":
        var = dist.variance()
        return cls(
            element=dist.element,
            mean=dist.mean,
            variance=var,
            stddev=math.sqrt(var),
            q=max(dist.probs),
        )


def position_statistics(p: Poset, x: str, budget: int | None = None) -> PositionStatistics:
    """Exact mean/variance of the position of ``x`` plus its mode mass q."""
    return PositionStatistics.from_distribution(position_distribution(p, x, budget))


def sigma_q_product(p: Poset, x: str, budget: int | None = None) -> float:
    """sigma(x) * q(x): scale-free pairing of spread against peak mass."""
    s = position_statistics(p, x, budget)
    return s.stddev * float(s.q)


def grunbaum_check(
    p: Poset, x: str, budget: int | None = None
) -> tuple[Fraction, Fraction]:
    """Exact upper and lower tail mass of f(x) about its mean.

    Returns (P(f(x) >= E f(x)), P(f(x) <= E f(x))).  The mean is used as
    the centering point; both components are exact rationals.
    """
    dist = position_distribution(p, x, budget)
    upper = sum(
        (prob for k, prob in enumerate(dist.probs) if Fraction(k + 1) >= dist.mean),
        Fraction(0),
    )
    lower = sum(
        (prob for k, prob in enumerate(dist.probs) if Fraction(k + 1) <= dist.mean),
        Fraction(0),
    )
    return upper, lower


def average_variance(p: Poset, elements, budget: int | None = None) -> Fraction:
    """Exact mean of sigma^2(x) over a nonempty set of elements."""
    elements = list(elements)
    if not elements:
        raise DomainError("need at least one element to average over")
    lat = build_lattice(p, budget)
    marg = lat.marginals()
    total = Fraction(0)
    for x in elements:
        p.index(x)
        dist = PositionDistribution.from_probs(x, marg[x])
        total += dist.variance()
    return total / len(elements)


def fraction_json(value: Fraction) -> list[str]:
    """Serialize an exact rational as a numerator/denominator string pair."""
    return [str(value.numerator), str(value.denominator)]


def balance_report_json(report: BalanceReport) -> dict:
    """JSON-ready balance report with exact rationals kept exact."""
    return {
        "delta": fraction_json(report.delta),
        "delta_float": float(report.delta),
        "witness": list(report.witness),
        "per_element": {k: fraction_json(v) for k, v in report.per_element.items()},
        "pairs": [
            {"x": x, "y": y, "delta": fraction_json(d)}
            for (x, y), d in sorted(report.pairs.items())
        ],
    }
