"""Diagram-shaped posets and the incomparability floors they witness.

Young diagrams under the coordinatewise order, skew shapes, and
higher-dimensional grid ideals all come with exact extension counts.
For convex shapes inside a d-dimensional grid, the largest
incomparable-pair product pi(P) is guaranteed to be at least
(w - 1)^2 / 4 in the worst direction and w^2 / d^d in general; the
two-column rectangle meets the first floor with equality.
"""

from linext import (
    count_extensions,
    grid_ideal,
    max_incomparable_pair,
    skew_diagram,
    tightness_example_a,
    tripod,
    young_diagram,
)
from linext.checks import check_pi_bounds

# Standard Young tableaux of shape (3, 2): the classic count is 5.
shape = young_diagram((3, 2))
print("SYT(3,2) =", count_extensions(shape.poset))

# Skew shape (3,3)/(1,): five cells, still exact.
skew = skew_diagram((3, 3), (1,))
print("skew (3,3)/(1,) extensions =", count_extensions(skew.poset))

# A three-dimensional ideal: the 2x2x2 cube order.
cube = grid_ideal(3, [(2, 2, 2)])
print("2x2x2 grid ideal:", cube.poset.n, "cells,", count_extensions(cube.poset), "extensions")

# pi(P): largest product |A| * |B| over incomparable set pairs.
for builder, label in [
    (young_diagram((4, 4)), "(4,4) rectangle"),
    (tripod(3, 4), "tripod d=3 arms of 4"),
]:
    pair = max_incomparable_pair(builder.poset)
    print(f"{label}: pi = {pair.product} via {pair.a} x {pair.b}")

# The floors themselves, as check records (lhs >= rhs).
for rec in check_pi_bounds(tightness_example_a(12)):
    print(f"{rec.check}: {rec.lhs} >= {rec.rhs}  holds={rec.holds}  ({rec.note})")
for rec in check_pi_bounds(tripod(2, 5)):
    print(f"{rec.check}: {rec.lhs} >= {rec.rhs}  holds={rec.holds}  ({rec.note})")
