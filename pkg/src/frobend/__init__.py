"""Exact Riemann-Roch computations for Frobenius pushforwards.

The modules build on each other:

* :mod:`frobend.chow` -- truncated graded rings over Q and integration;
* :mod:`frobend.classes` -- Todd classes, Chern characters, Adams operations;
* :mod:`frobend.frobpush` -- ``ch(F^e_* O_X)`` and ``chi(End F^e_* O_X)``;
* :mod:`frobend.catalog` -- del Pezzo surfaces, Fano threefolds, projective spaces;
* :mod:`frobend.diffop` -- operators on ``F_p[t]`` linear over ``p^e``-th powers.
"""

from .catalog import (
    TiltingVerdict,
    VarietySpec,
    Verdict,
    chi_del_pezzo_closed,
    chi_fano3_closed,
    del_pezzo_spec,
    fano3_spec,
    pn_multiplicities,
    pn_spec,
    restriction_defect,
    tilting_verdict,
)
from .chow import (
    GradedElement,
    GradedRing,
    IntersectionTable,
    MissingIntersectionError,
    NotInvertibleError,
    StructureError,
    add,
    integrate,
    invert,
    multiply,
)
from .classes import (
    adams,
    adams_inverse,
    bernoulli,
    chern_character_line,
    dual,
    end_character,
    todd_abstract,
    todd_class,
    todd_universal,
)
from .frobpush import FrobParams, QPolynomial, chi_frob_end, chi_symbolic, frob_end_ch, pushforward_ch

__version__ = "0.1.0"
