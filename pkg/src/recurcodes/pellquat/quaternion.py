"""Generalized quaternion algebras H_Q(alpha, beta) over the rationals.

Basis {1, e1, e2, e3} with e1^2 = alpha, e2^2 = beta, e3 = e1 e2 = -e2 e1,
hence e3^2 = -alpha beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import PreconditionError
from .pellnums import gen_pfl


def parse_rational(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    return Fraction(str(s).strip())


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class QuaternionAlgebra:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        a, b = Fraction(self.alpha), Fraction(self.beta)
        if a == 0 or b == 0:
            raise ValueError("algebra parameters must be nonzero")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def integral(self) -> bool:
        return self.alpha.denominator == 1 and self.beta.denominator == 1

    def element(self, *coords) -> Quaternion:
        return Quaternion(self, tuple(Fraction(c) for c in coords))

    def basis(self) -> tuple[Quaternion, ...]:
        return tuple(self.element(*(1 if i == j else 0 for j in range(4))) for i in range(4))


@dataclass(frozen=True)
class Quaternion:
    algebra: QuaternionAlgebra
    c: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        if len(self.c) != 4:
            raise ValueError("a quaternion has exactly four coordinates")
        object.__setattr__(self, "c", tuple(Fraction(x) for x in self.c))

    def _same(self, other: Quaternion) -> None:
        if not isinstance(other, Quaternion):
            raise TypeError(f"expected Quaternion, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise ValueError("quaternions from different algebras")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.element(other, 0, 0, 0)
        self._same(other)
        return Quaternion(self.algebra, tuple(x + y for x, y in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(self.algebra, tuple(-x for x in self.c))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.algebra, tuple(x * other for x in self.c))
        return quat_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.algebra, tuple(other * x for x in self.c))
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.c)

    def to_json(self) -> dict:
        return {
            "alpha": format_rational(self.algebra.alpha),
            "beta": format_rational(self.algebra.beta),
            "c": [format_rational(x) for x in self.c],
        }

    @classmethod
    def from_json(cls, obj: dict) -> Quaternion:
        alg = QuaternionAlgebra(parse_rational(obj["alpha"]), parse_rational(obj["beta"]))
        return cls(alg, tuple(parse_rational(x) for x in obj["c"]))

    def __str__(self):
        parts = []
        for x, b in zip(self.c, ("", "e1", "e2", "e3")):
            if x:
                parts.append(f"{x}{'*' + b if b else ''}")
        return " + ".join(parts) if parts else "0"


def quat_mul(x: Quaternion, y: Quaternion) -> Quaternion:
    x._same(y)
    al, be = x.algebra.alpha, x.algebra.beta
    a0, a1, a2, a3 = x.c
    b0, b1, b2, b3 = y.c
    # expanded from e1e2 = e3, e2e1 = -e3, e1e3 = al e2, e3e1 = -al e2,
    # e2e3 = -be e1, e3e2 = be e1, e3^2 = -al be
    return Quaternion(x.algebra, (
        a0 * b0 + al * a1 * b1 + be * a2 * b2 - al * be * a3 * b3,
        a0 * b1 + a1 * b0 - be * a2 * b3 + be * a3 * b2,
        a0 * b2 + a2 * b0 + al * a1 * b3 - al * a3 * b1,
        a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
    ))


def gen_pfl_coords(p: int, q: int, n: int) -> tuple[int, int, int, int]:
    return tuple(gen_pfl(p, q, n + i) for i in range(4))


def gen_pfl_quaternion(p: int, q: int, n: int, algebra: QuaternionAlgebra) -> Quaternion:
    """R_n^{p,q} = r_n + r_{n+1} e1 + r_{n+2} e2 + r_{n+3} e3."""
    if n < 1:
        raise PreconditionError("R_n^{p,q} is defined for n >= 1 only")
    return Quaternion(algebra, gen_pfl_coords(p, q, n))


def quaternion_from_coords(algebra: QuaternionAlgebra, coords: Sequence) -> Quaternion:
    return Quaternion(algebra, tuple(Fraction(c) for c in coords))
