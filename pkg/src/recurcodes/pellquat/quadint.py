"""Exact arithmetic in Q(sqrt 2) and 3x3 matrices over it."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Rational = int | Fraction


class QuadInt:
    """The number u + v*sqrt(2) with rational u, v."""

    __slots__ = ("u", "v")

    def __init__(self, u: Rational = 0, v: Rational = 0):
        self.u = Fraction(u)
        self.v = Fraction(v)

    @staticmethod
    def _lift(x) -> QuadInt:
        if isinstance(x, QuadInt):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadInt(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadInt(self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.u, -self.v)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadInt(self.u - o.u, self.v - o.v)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadInt(self.u * o.u + 2 * self.v * o.v, self.u * o.v + self.v * o.u)

    __rmul__ = __mul__

    def conjugate(self) -> QuadInt:
        return QuadInt(self.u, -self.v)

    def norm(self) -> Fraction:
        return self.u * self.u - 2 * self.v * self.v

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        num = self * o.conjugate()
        return QuadInt(num.u / n, num.v / n)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return QuadInt(1) / (self ** (-e))
        result, base = QuadInt(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_rational(self) -> bool:
        return self.v == 0

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self.u == o.u and self.v == o.v

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        return f"QuadInt({self.u}, {self.v})"

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        if self.u == 0:
            return f"{self.v}*sqrt2"
        sign = "+" if self.v > 0 else "-"
        return f"{self.u}{sign}{abs(self.v)}*sqrt2"


SQRT2 = QuadInt(0, 1)
ALPHA = QuadInt(1, 1)  # 1 + sqrt 2
BETA = QuadInt(1, -1)  # 1 - sqrt 2

Matrix = tuple[tuple[QuadInt, ...], ...]


def mat(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(QuadInt._lift(x) for x in row) for row in rows)


def identity(size: int = 3) -> Matrix:
    return mat([[1 if i == j else 0 for j in range(size)] for i in range(size)])


def matmul(x: Matrix, y: Matrix) -> Matrix:
    m = len(y)
    cols = len(y[0])
    return tuple(
        tuple(sum((row[k] * y[k][j] for k in range(m)), QuadInt()) for j in range(cols))
        for row in x
    )
