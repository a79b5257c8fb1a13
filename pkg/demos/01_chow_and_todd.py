"""
Truncated Chow rings and the Todd class
=======================================

Build a graded ring in Chern classes, compute the Todd class exactly and
integrate against a table of intersection numbers.
"""

from frobend.chow import GradedRing, IntersectionTable, integrate, invert
from frobend.classes import adams_inverse, todd_class, todd_universal

# The ring Q[c1, c2, c3] truncated above degree 3 (a threefold).
R = GradedRing.chern(3)
c1, c2, c3 = R.gens()

# Todd components in terms of Chern classes.
for k, td_k in enumerate(todd_universal(4), start=1):
    print(f"td_{k} =", td_k)

# Inverses and Adams operations are exact.
td = todd_class(R)
print("1/td =", invert(td))
print("psi_2^{-1}(td) =", adams_inverse(2, td))

# Integration only needs the top-degree numbers, and only the ones it meets.
# For P^3: c1^3 = 64, c1*c2 = 24, c3 = 4.
table = IntersectionTable(R, {"c1^3": 64, "c1*c2": 24, "c3": 4})
print("chi(O_P3) =", integrate(td, table))
print("euler number =", integrate(c3, table))
