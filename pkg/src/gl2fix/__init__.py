"""Finite fields, polynomials over them, and the GL2(F_q) action on irreducibles."""

__version__ = "0.1.0"

from .action import Mat2, act, is_fixed, pgl_fixed_scan
from .errors import Gl2FixError
from .ff import Field, FqElem, make_field
from .invariant import (
    CountReport,
    Subspace,
    count_homothety_invariant,
    count_translation_invariant,
    subspace_from_generators,
    subspace_polynomial,
)
from .poly import PolyFq, enumerate_irreducibles, is_irreducible, make_poly
from .psubgroup import PSubgroup, closure, count_fixed_by_p_subgroup

__all__ = [
    "CountReport", "Field", "FqElem", "Gl2FixError", "Mat2", "PSubgroup", "PolyFq", "Subspace",
    "act", "closure", "count_fixed_by_p_subgroup", "count_homothety_invariant",
    "count_translation_invariant", "enumerate_irreducibles", "is_fixed", "is_irreducible",
    "make_field", "make_poly", "pgl_fixed_scan", "subspace_from_generators", "subspace_polynomial",
]
