"""
Del Pezzo surfaces and Fano threefolds
======================================

Scan the presets, compare with the closed forms and turn each value into a
verdict on higher self-Ext of F^e_* O.
"""

from frobend.catalog import (
    chi_del_pezzo_closed,
    del_pezzo_spec,
    fano3_spec,
    h0_lower_bound,
    tilting_verdict,
)
from frobend.frobpush import FrobParams, chi_frob_end, chi_symbolic

# Degree d del Pezzo surfaces: the q^4 coefficient changes sign at d = 4.
for d in range(1, 10):
    spec = del_pezzo_spec(d)
    print(f"d={d}: chi =", chi_symbolic(spec))

# Values for p = 2, 3 and the resulting verdict.
for d in (1, 2, 3, 4):
    spec = del_pezzo_spec(d)
    for p in (2, 3):
        fp = FrobParams(p, 1)
        chi = chi_frob_end(spec, fp)
        assert chi == chi_del_pezzo_closed(d, p, 1)
        bound, why = h0_lower_bound(spec, fp)
        print(f"d={d} p={p}: chi={chi:>5}  {tilting_verdict(chi, bound).verdict.value}  (h0 >= {bound}: {why})")

# Fano threefolds: threshold at (-K)^3 = 24.
for vol in (2, 22, 24, 64):
    print(f"vol={vol}:", chi_symbolic(fano3_spec(vol)))
