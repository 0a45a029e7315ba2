import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from recurcodes.errors import PreconditionError
from recurcodes.pellquat.order import (
    OrderLattice,
    hermite_normal_form,
    module_closure_check,
    order_closure_check,
    order_membership,
)
from recurcodes.pellquat.quaternion import (
    Quaternion,
    QuaternionAlgebra,
    gen_pfl_quaternion,
    quat_mul,
)

H11 = QuaternionAlgebra(1, 1)


def table_product(x, y):
    """Oracle: expand the basis multiplication table term by term."""
    al, be = x.algebra.alpha, x.algebra.beta
    # table[i][j] = (scalar, basis index) for e_i * e_j
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (al, 0), (1, 2): (1, 3), (1, 3): (al, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (be, 0), (2, 3): (-be, 1),
        (3, 0): (1, 3), (3, 1): (-al, 2), (3, 2): (be, 1), (3, 3): (-al * be, 0),
    }
    out = [Fraction(0)] * 4
    for i, j in itertools.product(range(4), repeat=2):
        s, k = table[i, j]
        out[k] += s * x.c[i] * y.c[j]
    return Quaternion(x.algebra, tuple(out))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
nonzero = rationals.filter(lambda f: f != 0)


@st.composite
def quad_triples(draw):
    alg = QuaternionAlgebra(draw(nonzero), draw(nonzero))
    qs = [Quaternion(alg, tuple(draw(rationals) for _ in range(4))) for _ in range(3)]
    return qs


def test_basis_products():
    one, e1, e2, e3 = H11.basis()
    assert quat_mul(e1, e2) == e3
    assert quat_mul(e2, e1) == -e3
    alg = QuaternionAlgebra(3, -5)
    _, f1, f2, f3 = alg.basis()
    assert quat_mul(f3, f3) == alg.element(15, 0, 0, 0)
    assert quat_mul(f1, f1) == alg.element(3, 0, 0, 0)
    assert quat_mul(f1, f3) == 3 * f2


def test_mixed_algebra_rejected():
    with pytest.raises(ValueError):
        quat_mul(H11.basis()[1], QuaternionAlgebra(2, 1).basis()[1])
    with pytest.raises(ValueError):
        QuaternionAlgebra(0, 1)


@settings(max_examples=500, deadline=None)
@given(quad_triples())
def test_mul_matches_table_and_is_associative(qs):
    x, y, z = qs
    assert quat_mul(x, y) == table_product(x, y)
    assert quat_mul(quat_mul(x, y), z) == quat_mul(x, quat_mul(y, z))
    assert quat_mul(x, y + z) == quat_mul(x, y) + quat_mul(x, z)


def test_quaternion_json_roundtrip():
    alg = QuaternionAlgebra(Fraction(1, 2), -3)
    x = alg.element(Fraction(1, 3), 2, 0, Fraction(-5, 7))
    obj = x.to_json()
    assert obj == {"alpha": "1/2", "beta": "-3/1", "c": ["1/3", "2/1", "0/1", "-5/7"]}
    assert Quaternion.from_json(obj) == x


def test_gen_pfl_quaternion():
    assert gen_pfl_quaternion(0, 0, 5, H11).is_zero()
    assert gen_pfl_quaternion(1, 0, 2, H11).c == (1, 2, 5, 12)
    assert gen_pfl_quaternion(0, 1, 1, H11).c == (2, 6, 14, 34)
    with pytest.raises(PreconditionError):
        gen_pfl_quaternion(1, 1, 0, H11)


def test_vanishes_only_for_zero_parameters():
    for p in range(-10, 11):
        for q in range(-10, 11):
            for n in range(1, 21):
                assert gen_pfl_quaternion(p, q, n, H11).is_zero() == (p == 0 and q == 0)


def test_module_closure():
    count, failures = module_closure_check(2000, seed=3)
    assert count == 2000 and not failures


def _hnf_checks(rows):
    basis, transform, pivots = hermite_normal_form(rows)
    m = len(rows)
    for b, t in zip(basis, transform):
        combo = [sum(t[i] * rows[i][c] for i in range(m)) for c in range(len(rows[0]))]
        assert combo == b
    for i, (b, col) in enumerate(zip(basis, pivots)):
        assert b[col] > 0
        assert not any(b[:col])
        for above in basis[:i]:
            assert 0 <= above[col] < b[col]
    assert pivots == sorted(pivots)
    return basis, transform, pivots


def test_hnf_small():
    basis, _, pivots = _hnf_checks([[2, 4], [0, 3], [4, 11]])
    assert basis == [[2, 1], [0, 3]]
    assert pivots == [0, 1]
    assert hermite_normal_form([]) == ([], [], [])


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-30, 30), min_size=4, max_size=4), min_size=1, max_size=6))
def test_hnf_properties(rows):
    _hnf_checks(rows)


def test_lattice_structure():
    lat = OrderLattice(H11, 12)
    assert lat.rank == 3
    assert lat.basis == [[1, 0, 0, 0], [0, 8, 0, 8], [0, 0, 8, 16]]
    for g in lat.generators:
        res = lat.membership(g)
        assert res.member and lat.combine(res.coefficients) == g


def lattice_oracle(v):
    # Z*1 + 8*{integer solutions of X_{k+2} = 2 X_{k+1} + X_k}, derived by hand
    v0, v1, v2, v3 = v
    return all(x.denominator == 1 for x in v) and v1 % 8 == 0 and v2 % 8 == 0 and v3 == 2 * v2 + v1


def test_membership_examples():
    lat = OrderLattice(H11, 12)
    x = 8 * gen_pfl_quaternion(2, -1, 3, H11)
    res = order_membership(x, lat)
    assert res.member and lat.combine(res.coefficients) == x
    assert order_membership(H11.element(1, 0, 0, 0), lat).member
    assert not order_membership(H11.element(0, 1, 0, 1), lat).member
    assert not order_membership(H11.element(Fraction(1, 2), 0, 0, 0), lat).member


def test_membership_matches_oracle():
    lat = OrderLattice(H11, 6)
    rng = random.Random(9)
    for _ in range(2000):
        if rng.random() < 0.5:
            coeffs = [rng.randint(-5, 5) for _ in lat.generators]
            v = lat.combine(coeffs).c
            noise = rng.choice([0, 0, 1, 8])
            v = tuple(x + (noise if i == rng.randrange(4) else 0) for i, x in enumerate(v))
        else:
            v = tuple(Fraction(rng.randint(-40, 40)) for _ in range(4))
        res = lat.membership(H11.element(*v))
        assert res.member == lattice_oracle(v)
        if res.member:
            assert lat.combine(res.coefficients).c == v


def test_product_membership_is_decided():
    lat = OrderLattice(QuaternionAlgebra(2, 3), 8)
    x = quat_mul(8 * gen_pfl_quaternion(1, 1, 1, lat.algebra), 8 * gen_pfl_quaternion(1, 1, 2, lat.algebra))
    res = lat.membership(x)
    if res.member:
        assert lat.combine(res.coefficients) == x
    else:
        assert res.reason


def test_closure_check_report():
    rep = order_closure_check(H11, 6, 50)
    assert rep.passed + rep.failed == 50 == len(rep.verdicts)
    for v in rep.verdicts:
        assert isinstance(v["member"], bool)
    assert rep.rank == 3
    assert not rep.rational_parameters
    assert order_closure_check(QuaternionAlgebra(Fraction(1, 2), 1), 4, 5).rational_parameters
    with pytest.raises(ValueError):
        order_closure_check(H11, 3, 5)
