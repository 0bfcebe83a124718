"""Sorting probabilities, balance, and how balance moves with size.

The balance constant delta(P) is the best guaranteed information content
of a single comparison: max over incomparable pairs of
min(P(x before y), P(y before x)).  For many natural families it pushes
toward 1/2 as the poset grows; plain delta saturates at exactly 1/2
early, so the trend rows also track the most balanced pair that is NOT
perfectly fair.
"""

from linext import balance, chain_plus_point, sorting_probability
from linext.checks import trend_experiment

p = chain_plus_point(4)
print("P(z before c2) =", sorting_probability(p, "z", "c2"))

report = balance(p)
print("delta =", report.delta, "witnessed by", report.witness)
for label, d in sorted(report.per_element.items()):
    print(f"  best comparison through {label}: {d}")
print("most balanced unfair pair:", report.off_fair_delta())

# 2 x k grid rectangles: the unfair-pair balance climbs toward 1/2.
print()
print("family      size  n   width  delta~          float")
for row in trend_experiment("rect2xk", [2, 3, 5, 8]):
    print(
        f"{row.family:<10}  {row.size:<4}  {row.n:<3} {row.width:<5}  "
        f"{str(row.delta):<14}  {float(row.delta):.5f}"
    )

# Same question for a chain with one floating element.
for row in trend_experiment("chainpoint", [4, 8, 16]):
    print(
        f"{row.family:<10}  {row.size:<4}  {row.n:<3} {row.width:<5}  "
        f"{str(row.delta):<14}  {float(row.delta):.5f}"
    )
