"""Cyclic codes and quaternion orders from third-order linear recurrences."""

from .dcodes import (
    DCyclicCode,
    DecodeTrace,
    DPolynomial,
    build_code,
    build_dpoly,
    check_delta_identity,
    check_family_identity,
    decode,
    encode,
    family_spec,
    min_distance,
    scan_codes,
)
from .gfpoly import FieldElement, Poly, poly_add, poly_divmod, poly_eval, poly_gcd, poly_mul, poly_sub
from .recurrence import ModProfile, SequenceSpec, genfun_coefficients, profile, term, terms, terms_mod

__version__ = "0.1.0"
