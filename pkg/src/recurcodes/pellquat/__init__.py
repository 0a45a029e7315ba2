"""Pell / Pell-Lucas numbers, Q(sqrt 2), generalized quaternions and orders."""

from .order import (
    ClosureReport,
    Membership,
    OrderLattice,
    hermite_normal_form,
    module_closure_check,
    order_closure_check,
    order_membership,
)
from .pellnums import (
    DecompositionReport,
    PellPair,
    binet,
    check_matrix_power,
    check_shift_identity,
    decomposition_sweep,
    gen_pfl,
    matrix_power,
    pell,
    pell_identity,
    pell_matrix_pattern,
    scalar_product_decomposition,
)
from .quadint import ALPHA, BETA, SQRT2, QuadInt
from .quaternion import Quaternion, QuaternionAlgebra, gen_pfl_quaternion, quat_mul
