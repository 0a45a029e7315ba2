import itertools
import random

import pytest

from recurcodes.dcodes import (
    DCyclicCode,
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
from recurcodes.errors import DegenerateSequence, NotPurelyPeriodic, PreconditionError
from recurcodes.gfpoly import Poly, cyclic_shift, poly_gcd
from recurcodes.recurrence import SequenceSpec

PELL = SequenceSpec.preset("pell")


def small_primes(limit):
    return [p for p in range(2, limit + 1) if all(p % q for q in range(2, p))]


def error_patterns(n, p, t):
    yield (0,) * n
    for w in range(1, t + 1):
        for pos in itertools.combinations(range(n), w):
            for vals in itertools.product(range(1, p), repeat=w):
                e = [0] * n
                for i, v in zip(pos, vals):
                    e[i] = v
                yield tuple(e)


@pytest.mark.parametrize("spec,p,coeffs", [
    (PELL, 7, [0, 1, 2, 5, 5, 1]),
    (family_spec(3), 11, [0, 1, 3, 10, 0, 10, 8, 1]),
    (family_spec(6), 13, [0, 1, 6, 11, 7, 1]),
])
def test_build_dpoly(spec, p, coeffs):
    dp = build_dpoly(spec, p)
    assert dp.delta == Poly(coeffs, p)
    assert list(dp.delta.coeffs) == list(dp.profile.residues)[:len(dp.delta.coeffs)]


def test_build_dpoly_rejects_preperiodic():
    with pytest.raises(NotPurelyPeriodic):
        build_dpoly(SequenceSpec(1, 1, 7, 3, 0, 1), 7)


def test_delta_identity_examples():
    rep = check_delta_identity(SequenceSpec.preset("fibonacci"), 3, 8)
    assert rep.general_holds and rep.printed_holds
    rep = check_delta_identity(SequenceSpec.preset("lucas"), 5)
    assert rep.general_holds and not rep.printed_holds
    rep = check_delta_identity(PELL, 7, 6)
    assert rep.general_holds and rep.printed_holds
    with pytest.raises(PreconditionError):
        check_delta_identity(PELL, 7, 2)


def test_delta_identity_printed_form_needs_vanishing_D_l():
    rng = random.Random(7)
    for _ in range(200):
        spec = SequenceSpec(*(rng.randint(-5, 5) for _ in range(6)))
        p = rng.choice([3, 5, 7, 11])
        l = rng.randint(3, 30)
        rep = check_delta_identity(spec, p, l)
        assert rep.general_holds
        d_l = spec_term_mod(spec, l, p)
        assert rep.printed_holds == (d_l == 0)


def spec_term_mod(spec, n, p):
    from recurcodes.recurrence import term
    return term(spec, n) % p


@pytest.mark.parametrize("a,p", [(2, 7), (1, 3), (8, 13), (3, 11), (4, 11)])
def test_family_identity(a, p):
    assert check_family_identity(family_spec(a), p)


def test_family_identity_precondition():
    with pytest.raises(PreconditionError):
        check_family_identity(SequenceSpec.preset("lucas"), 5)


@pytest.mark.parametrize("a,p,params,mds", [
    (2, 7, (6, 2, 5), True),
    (5, 7, (6, 2, 5), True),
    (6, 13, (6, 2, 5), True),
    (3, 11, (8, 2, 6), False),
    (8, 13, (12, 2, 8), False),
])
def test_build_code(a, p, params, mds):
    code = build_code(family_spec(a), p)
    assert (code.n, code.k, code.d) == params
    assert code.mds is mds
    assert code.generator * code.check == Poly.x_n_minus_1(code.n, p)
    assert code.check == Poly([-1, a, 1], p)


def test_build_code_generator_coefficients():
    code = build_code(PELL, 7)
    assert code.generator == Poly([1, 2, 5, 5, 1], 7)
    assert code.t == 2
    assert code.size == 49


def test_generator_is_gcd_with_x_l_minus_1():
    for a, p in [(2, 7), (3, 11), (8, 13)]:
        dp = build_dpoly(family_spec(a), p)
        code = build_code(family_spec(a), p)
        assert poly_gcd(dp.delta, Poly.x_n_minus_1(code.n, p)) == code.generator


def test_build_code_rejects():
    with pytest.raises(DegenerateSequence):
        build_code(family_spec(7), 7)
    with pytest.raises(PreconditionError):
        build_code(SequenceSpec.preset("lucas"), 5)


def test_min_distance_against_full_enumeration():
    # independent oracle: scan every word of Z_7^6 for membership in <g>
    code = build_code(PELL, 7)
    best = code.n
    for word in itertools.product(range(7), repeat=6):
        if any(word) and code.is_codeword(word):
            best = min(best, sum(1 for x in word if x))
    assert best == min_distance(code) == 5


def test_min_distance_matches_profile():
    code = build_code(family_spec(8), 13)
    assert min_distance(code) == 8 == code.profile.period - code.profile.zeros


def test_repetition_code_distance():
    n, p = 5, 3
    g = Poly([1] * n, p)
    code = DCyclicCode.from_generator(g, n)
    assert code.k == 1
    assert min_distance(code) == n
    assert code.mds


def test_from_generator_rejects_non_divisor():
    with pytest.raises(PreconditionError):
        DCyclicCode.from_generator(Poly([1, 0, 1], 7), 6)


def test_encode():
    code = build_code(PELL, 7)
    assert encode(code, [0, 3]) == (0, 3, 6, 1, 1, 3)
    assert encode(code, [0, 0]) == (0,) * 6
    assert encode(code, [1, 0]) == (1, 2, 5, 5, 1, 0)
    with pytest.raises(ValueError):
        encode(code, [1, 2, 3])


def test_decode_worked_example():
    code = build_code(PELL, 7)
    tr = decode(code, (0, 5, 6, 1, 1, 6))
    assert tr.syndrome == Poly([1, 1, 6, 4], 7)
    assert tr.shift == 1
    assert tr.shifted_syndrome == Poly([3, 0, 2], 7)
    assert tr.error == (0, 2, 0, 0, 0, 3)
    assert tr.corrected == (0, 3, 6, 1, 1, 3)
    assert tr.status == "corrected"
    assert code.is_codeword(tr.corrected)


def test_decode_clean_word():
    code = build_code(PELL, 7)
    tr = decode(code, (0, 3, 6, 1, 1, 3))
    assert tr.status == "clean"
    assert tr.error == (0,) * 6


def test_decode_rejects_bad_input():
    code = build_code(PELL, 7)
    with pytest.raises(ValueError):
        decode(code, (0, 1, 2))
    with pytest.raises(ValueError):
        decode(code, (0, 1, 2, 3, 4, 9))


def test_decode_reports_failure():
    # five scattered errors exceed t = 3 of the [12, 2, 8] code; a "failure" must
    # leave the word untouched and anything else must land on a codeword
    code = build_code(family_spec(8), 13)
    rng = random.Random(3)
    statuses = set()
    for _ in range(300):
        c = encode(code, [rng.randrange(13), rng.randrange(13)])
        e = [0] * code.n
        for i in rng.sample(range(code.n), 5):
            e[i] = rng.randrange(1, 13)
        r = tuple((x + y) % 13 for x, y in zip(c, e))
        tr = decode(code, r)
        statuses.add(tr.status)
        if tr.status == "failure":
            assert tr.corrected == r
        else:
            assert code.is_codeword(tr.corrected)
    assert "failure" in statuses


@pytest.mark.parametrize("a,p", [(2, 7), (6, 13)])
def test_decoder_exhaustive(a, p):
    code = build_code(family_spec(a), p)
    patterns = list(error_patterns(code.n, p, code.t))
    for m in itertools.product(range(p), repeat=code.k):
        c = encode(code, m)
        for e in patterns:
            r = tuple((x + y) % p for x, y in zip(c, e))
            assert decode(code, r).corrected == c


@pytest.mark.parametrize("a,p", [(2, 7), (3, 11), (8, 13), (4, 11)])
def test_cyclic_and_linear_closure(a, p):
    code = build_code(family_spec(a), p)
    rng = random.Random(a * 100 + p)
    for _ in range(200):
        c = encode(code, [rng.randrange(p), rng.randrange(p)])
        for k in range(code.n):
            assert code.is_codeword(cyclic_shift(c, k))
        c2 = encode(code, [rng.randrange(p), rng.randrange(p)])
        s = rng.randrange(p)
        assert code.is_codeword(tuple((x + s * y) % p for x, y in zip(c, c2)))


def test_scan_rows():
    rows = {(r.a, r.modulus): r for r in scan_codes(range(1, 13), [3, 5, 7, 11, 13])}
    assert (rows[2, 5].period, rows[2, 5].zeros) == (12, 4)
    r = rows[4, 11]
    assert (r.period, r.zeros, r.n, r.k, r.d, r.mds) == (10, 1, 10, 2, 9, True)
    assert (rows[1, 11].period, rows[1, 11].zeros) == (10, 1)
    assert all(a <= p - 1 for a, p in rows)


def test_scan_sorted_and_parallel_equal():
    serial = scan_codes(None, [13, 5, 7])
    assert [(r.modulus, r.a) for r in serial] == sorted((r.modulus, r.a) for r in serial)
    assert scan_codes(None, [13, 5, 7], workers=2) == serial


@pytest.mark.parametrize("p", small_primes(31))
def test_distance_formula_grid(p):
    for r in scan_codes(None, [p]):
        assert r.skipped is None
        assert r.d == r.period - r.zeros, (r.a, p)
        assert r.mds == (r.zeros == 1)
        assert check_family_identity(family_spec(r.a), p)
