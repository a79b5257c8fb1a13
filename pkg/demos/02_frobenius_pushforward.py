"""
Chern character of a Frobenius pushforward
==========================================

The pushforward formula works for any rational q, so the Euler
characteristic of End(F^e_* O) is a polynomial in q = p^e that can be
recovered by interpolation.
"""

from fractions import Fraction

from frobend.catalog import pn_spec
from frobend.chow import GradedRing
from frobend.classes import todd_abstract
from frobend.frobpush import FrobParams, chi_frob_end, chi_symbolic, frob_end_ch, pushforward_ch

# Pushforward of the structure sheaf on a surface, Todd class written as
# 1 + d1 + d2 with abstract components.
td = todd_abstract(2)
print("ch(F_* O) =", pushforward_ch(td.ring.one(), td, Fraction(3), 2))

# Odd-degree parts cancel in ch(End).
print("ch(End F_* O) at q = 3:", frob_end_ch(td, 3, 2))

# P^3: evaluate at a few (p, e), then read off the polynomial.
spec = pn_spec(3)
for p, e in [(2, 1), (3, 1), (2, 2)]:
    print(f"p={p}, e={e}: chi =", chi_frob_end(spec, FrobParams(p, e)))
poly = chi_symbolic(spec)
print("chi(End F^e_* O_P3) =", poly)

# The polynomial also matches values at q that were not used to build it.
print("at q = 11:", poly(11), "=", chi_frob_end(spec, FrobParams(11, 1)))
