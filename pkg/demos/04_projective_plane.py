"""
Frobenius pushforward on the projective plane
=============================================

F^e_* O on P^2 splits as O + O(-1)^a + O(-2)^b.  The multiplicities come out
of rank and first Chern class, and Hilbert functions confirm them.  The last
part shows why restriction of sections to jets stops being surjective.
"""

from frobend.catalog import hilbert_multiplicities, pn_multiplicities, restriction_defect

for p, e in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]:
    q = p**e
    a, b = pn_multiplicities(p, e)
    print(f"q={q}: F_* O = O + O(-1)^{a} + O(-2)^{b}", hilbert_multiplicities(q) == (1, a, b))

# H^0(P^n, O(m)) -> O_x / m_x^k: compare dimensions.
for n, m in [(1, 3), (2, 1), (2, 4), (3, 2)]:
    src, tgt, ok = restriction_defect(n, m, m + 2)
    print(f"n={n} m={m} k={m + 2}: {src} -> {tgt}, surjective possible: {ok}")
