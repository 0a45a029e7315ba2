"""Pell and Pell-Lucas numbers and the generalized numbers r_n^{p,q}.

P_n and Q_n satisfy X_n = 2 X_{n-1} + X_{n-2} with seeds (0, 1) and (2, 2).
The generalized Pell-Fibonacci-Lucas number is r_n^{p,q} = p P_{n-1} + q Q_n
for n >= 1.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from ..errors import PreconditionError
from .quadint import ALPHA, BETA, SQRT2, Matrix, QuadInt, identity, mat, matmul


@dataclass(frozen=True)
class PellPair:
    index: int
    P: int
    Q: int


@functools.lru_cache(maxsize=None)
def _pell_table(upto: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    P, Q = [0, 1], [2, 2]
    for _ in range(2, upto + 1):
        P.append(2 * P[-1] + P[-2])
        Q.append(2 * Q[-1] + Q[-2])
    return tuple(P[: upto + 1]), tuple(Q[: upto + 1])


def _tables(upto: int):
    # round up so the cache holds few distinct tables
    size = max(64, 1 << (upto.bit_length()))
    return _pell_table(size)


def pell(n: int) -> PellPair:
    if n < 0:
        raise ValueError("n must be non-negative")
    P, Q = _tables(n)
    return PellPair(n, P[n], Q[n])


def P(n: int) -> int:
    return pell(n).P


def Q(n: int) -> int:
    return pell(n).Q


def binet(n: int) -> tuple[int, int]:
    """(P_n, Q_n) from Binet's formulas, evaluated exactly in Q(sqrt 2)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    an, bn = ALPHA**n, BETA**n
    p = (an - bn) / (2 * SQRT2)
    q = an + bn
    for name, val in (("P", p), ("Q", q)):
        if not val.is_rational() or val.u.denominator != 1:
            raise ArithmeticError(f"Binet {name}_{n} = {val} is not a rational integer")
    return int(p.u), int(q.u)


def pell_matrix_pattern(n: int) -> Matrix:
    """[[Q/2, 0, sqrt2 P], [0, Q/2 + sqrt2 P, 0], [sqrt2 P, 0, Q/2]] at index n."""
    pp = pell(n)
    half = QuadInt(pp.Q) / 2
    s = SQRT2 * pp.P
    z = QuadInt()
    return mat([[half, z, s], [z, half + s, z], [s, z, half]])


def matrix_power(n: int) -> Matrix:
    """A^n by repeated multiplication, A being the index-1 pattern matrix."""
    if n < 0:
        raise ValueError("n must be non-negative")
    base = pell_matrix_pattern(1)
    out = identity(3)
    for _ in range(n):
        out = matmul(out, base)
    return out


def check_matrix_power(n: int) -> bool:
    return matrix_power(n) == pell_matrix_pattern(n)


@dataclass(frozen=True)
class IdentityReport:
    which: str
    n: int
    l: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def pell_identity(which: str, n: int, l: int) -> IdentityReport:
    """Evaluate one of four product identities for P and Q exactly.

    i:   Q_n Q_{n+l} = Q_{2n+l} + (-1)^n Q_l
    ii:  P_n Q_{n+l} = P_{2n+l} + (-1)^{n+1} P_l
    iii: P_{n+l} Q_n = P_{2n+l} + (-1)^n P_l
    iv:  P_n P_{n+l} = (Q_{2n+l} + (-1)^{n+1} Q_l) / 8

    For iv both sides are multiplied by 8 so the comparison stays in Z.
    """
    if n < 0 or l < 0:
        raise ValueError("n and l must be non-negative")
    sgn = -1 if n % 2 else 1
    if which == "i":
        lhs, rhs = Q(n) * Q(n + l), Q(2 * n + l) + sgn * Q(l)
    elif which == "ii":
        lhs, rhs = P(n) * Q(n + l), P(2 * n + l) - sgn * P(l)
    elif which == "iii":
        lhs, rhs = P(n + l) * Q(n), P(2 * n + l) + sgn * P(l)
    elif which == "iv":
        lhs, rhs = 8 * P(n) * P(n + l), Q(2 * n + l) - sgn * Q(l)
    else:
        raise ValueError(f"unknown identity {which!r}; expected i, ii, iii or iv")
    return IdentityReport(which, n, l, lhs, rhs)


def gen_pfl(p: int, q: int, n: int) -> int:
    """r_n^{p,q} = p P_{n-1} + q Q_n."""
    if n < 1:
        raise PreconditionError("r_n^{p,q} is defined for n >= 1 only")
    P_, Q_ = _tables(n)
    return p * P_[n - 1] + q * Q_[n]


def check_shift_identity(p: int, q: int, n: int) -> bool:
    """p P_{n+1} + q Q_n == r_n^{p,q} + r_{n+1}^{2p,0}."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    return p * P(n + 1) + q * Q(n) == gen_pfl(p, q, n) + gen_pfl(2 * p, 0, n + 1)


@dataclass(frozen=True)
class DecompositionReport:
    n: int
    m: int
    params: tuple[int, int, int, int]
    lhs: int
    terms: tuple[int, ...]
    as_printed: bool

    @property
    def total(self) -> int:
        return sum(self.terms)

    @property
    def residual(self) -> int:
        return self.lhs - self.total

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "p": self.params[0],
            "q": self.params[1],
            "pp": self.params[2],
            "qq": self.params[3],
            "lhs": self.lhs,
            "terms": list(self.terms),
            "sum": self.total,
            "residual": self.residual,
            "as_printed": self.as_printed,
        }


def _six_terms(n, m, p, q, pp, qq, as_printed, P_, Q_):
    # r_j^{x,y} = x P_{j-1} + y Q_j, inlined for the grid sweeps
    s = -1 if n % 2 else 1
    mn, mp, d = m + n, m - n, m - n + 1
    t1 = 8 * (8 * p * qq * P_[mn - 1] + 8 * q * qq * Q_[mn])
    q2 = 8 * q * qq if as_printed else 8 * s * q * qq
    t2 = 8 * (8 * s * pp * q * P_[mp - 1] + q2 * Q_[mp])
    t3 = 8 * (8 * s * p * qq * P_[mp - 1] + s * p * pp * Q_[mp])
    t4 = 8 * (16 * s * p * qq * P_[d - 1])
    t5 = 8 * (8 * pp * q * P_[mn - 3] + p * pp * Q_[mn - 2])
    t6 = 8 * (16 * pp * q * P_[mn - 2])
    return t1, t2, t3, t4, t5, t6


def scalar_product_decomposition(n: int, m: int, p: int, q: int, pp: int, qq: int,
                                 as_printed: bool = False) -> DecompositionReport:
    """Expand 8 r_n^{p,q} * 8 r_m^{pp,qq} as a sum of six terms 8 r_j^{x,y}.

    The terms are
    8r_{m+n}^{8pq',8qq'} + 8r_{m-n}^{8s p'q, 8s qq'} + 8r_{m-n}^{8s pq', s pp'}
    + 8r_{m-n+1}^{16s pq', 0} + 8r_{m+n-2}^{8p'q, pp'} + 8r_{m+n-1}^{16p'q, 0}
    with s = (-1)^n.  ``as_printed=True`` drops the sign s from the q-part of
    the second term, which is the form that does *not* balance.
    """
    if not 1 <= n < m:
        raise PreconditionError(f"need 1 <= n < m, got n={n}, m={m}")
    P_, Q_ = _tables(m + n)
    lhs = 64 * gen_pfl(p, q, n) * gen_pfl(pp, qq, m)
    terms = _six_terms(n, m, p, q, pp, qq, as_printed, P_, Q_)
    assert terms[0] == 8 * gen_pfl(8 * p * qq, 8 * q * qq, m + n)
    return DecompositionReport(n, m, (p, q, pp, qq), lhs, terms, as_printed)


def decomposition_sweep(max_index: int = 20, bound: int = 5, as_printed: bool = False):
    """Residuals over 1 <= n < m <= max_index and params in [-bound, bound].

    Returns (number of cases, list of failing reports).
    """
    P_, Q_ = _tables(2 * max_index)
    rng = range(-bound, bound + 1)
    count = 0
    failures = []
    for m in range(2, max_index + 1):
        for n in range(1, m):
            for p in rng:
                rn_p = P_[n - 1] * p
                for q in rng:
                    rn = rn_p + q * Q_[n]
                    for pp in rng:
                        rm_p = P_[m - 1] * pp
                        for qq in rng:
                            count += 1
                            lhs = 64 * rn * (rm_p + qq * Q_[m])
                            if lhs != sum(_six_terms(n, m, p, q, pp, qq, as_printed, P_, Q_)):
                                failures.append(scalar_product_decomposition(n, m, p, q, pp, qq, as_printed))
    return count, failures
