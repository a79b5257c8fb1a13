"""
Differential operators and Frobenius levels
===========================================

Operators on F_p[t] that are linear over p^e-th powers are q x q matrices
over F_p[u] with u = t^q.  There are two ways to move d/dt from level 1 to
level 2: the natural inclusion i and the embedding j built from a Frobenius
splitting.  They differ.
"""

from frobend.diffop import (
    FpPoly,
    divided_power,
    multiplication,
    natural_inclusion,
    split_embedding,
    verify_paper_example,
)

d = divided_power(1, 2, 1)
print("d/dt over F_2[t^2]:")
print(d.to_text())

i_d = natural_inclusion(d, 2)
j_d = split_embedding(d, 2)
print("i(d/dt) over F_2[t^4]:")
print(i_d.to_text())
print("j(d/dt) over F_2[t^4]:")
print(j_d.to_text())

for m in range(4):
    t_m = FpPoly.monomial(2, m)
    print(f"t^{m}: i -> {i_d(t_m).format('t')}, j -> {j_d(t_m).format('t')}")

# j(d/dt) is a combination of divided powers.
t = FpPoly.monomial(2, 1)
print("j(d/dt) == D2 + t*D3:", j_d == divided_power(2, 2, 2) + multiplication(t, 2) @ divided_power(3, 2, 2))

# The full report, also for p = 3.
print(verify_paper_example(3).to_text())
