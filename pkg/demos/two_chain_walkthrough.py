"""Sandwich events on two chains with cross relations.

The ground set is a chain x_1 < ... < x_m plus a chain y_1 < ... < y_n,
optionally with cross relations x_i < y_j.  Psi_{i,j} is the event that
x_i lands strictly between y_j and y_{j+1}; Phi_{j,i} swaps the roles.
Everything below is an exact rational.
"""

from fractions import Fraction

from linext import (
    bl1_margin,
    bl2_ratio,
    conditioned_psi,
    expected_g,
    g_distribution,
    make_two_chain,
    mirrored,
    phi_probability,
    psi_probability,
    psi_table,
)

t = make_two_chain(3, 4)  # no cross relations: the free case
print("P(Psi_{i,j}) for the free 3 + 4 poset")
table = psi_table(t)
for i in range(1, 4):
    row = "  ".join(f"{str(table[i, j]):>6}" for j in range(0, 5))
    print(f"  i={i}:  {row}")
print("each row sums to", sum((table[1, j] for j in range(0, 5)), Fraction(0)))

# g(x_i) counts the y's below x_i; in the free case E g(x_i) = i*n/(m+1).
for i in range(1, 4):
    print(f"E g(x_{i}) = {expected_g(t, i)}  law {[str(q) for q in g_distribution(t, i).probs]}")

# Conditioning on the sandwich at (i, j) makes the answer index-only.
print("P(x_2 low | Psi_{2,3}) =", conditioned_psi(t, 2, 3), "(= 2/5 regardless of m, n)")

# A cross relation x_2 < y_2 shifts mass; Psi of the mirrored poset
# reproduces Phi of the original with flipped indices.
s = make_two_chain(3, 4, cross=[(2, 2)])
print("with x2 < y2: P(Psi_{2,1}) =", psi_probability(s, 2, 1))
u = mirrored(s)
print("mirror check:", phi_probability(s, 2, 1) == psi_probability(u, s.n + 1 - 2, s.m - 1))

# Small-index tail bound: if i < eps * j then P(Psi_{i,j}) < eps.
holds, margin = bl1_margin(t, 1, 3, Fraction(1, 2))
print("tail bound at (1,3), eps=1/2:", holds, "with margin", margin)

# Adjacent-row ratio has a closed form (checked internally on every call).
print("ratio at (i=2, ell=2):", bl2_ratio(t, 2, 2))
