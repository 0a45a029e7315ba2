"""Arithmetic in Z_p and in the polynomial ring Z_p[x].

A polynomial c_0 + c_1 x + ... + c_n x^n is stored as the tuple
``(c_0, c_1, ..., c_n)`` of integers in ``range(p)``, so that index i is the
coefficient of x^i (and the i-th position of a code word).  The canonical form
has a nonzero last entry; the zero polynomial is the empty tuple and has
degree ``-inf``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ModulusMismatch, NonPrimeModulus

NEG_INF = -math.inf


@functools.lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise NonPrimeModulus(f"modulus {p!r} is not prime")
    return p


@dataclass(frozen=True)
class FieldElement:
    """An element of Z_p."""

    value: int
    modulus: int

    def __post_init__(self):
        check_prime(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"Z_{self.modulus} vs Z_{other.modulus}")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def _new(self, v: int) -> FieldElement:
        return FieldElement(v, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in Z_{self.modulus}")
        return self._new(pow(self.value, -1, self.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * self._new(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(o) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._new(pow(self.value, e, self.modulus))

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable polynomial over Z_p with ascending coefficients."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Iterable[int | FieldElement] = (), modulus: int = 2):
        check_prime(modulus)
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.modulus != modulus:
                    raise ModulusMismatch(f"coefficient in Z_{c.modulus}, polynomial over Z_{modulus}")
                c = c.value
            vals.append(c % modulus)
        object.__setattr__(self, "coeffs", _strip(vals))
        object.__setattr__(self, "modulus", modulus)

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...], modulus: int) -> Poly:
        # trusted constructor: coeffs already reduced and stripped
        obj = cls.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "modulus", modulus)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, modulus: int) -> Poly:
        return cls((), modulus)

    @classmethod
    def one(cls, modulus: int) -> Poly:
        return cls((1,), modulus)

    @classmethod
    def monomial(cls, degree: int, modulus: int, coeff: int = 1) -> Poly:
        return cls([0] * degree + [coeff], modulus)

    @classmethod
    def x_n_minus_1(cls, n: int, modulus: int) -> Poly:
        return cls([-1] + [0] * (n - 1) + [1], modulus)

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def weight(self) -> int:
        """Hamming weight: number of nonzero coefficients."""
        return sum(1 for c in self.coeffs if c)

    def to_word(self, n: int) -> tuple[int, ...]:
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit a word of length {n}")
        return self.coeffs + (0,) * (n - len(self.coeffs))

    def _check(self, other: Poly) -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"Z_{self.modulus}[x] vs Z_{other.modulus}[x]")

    def _lift(self, other) -> Poly:
        if isinstance(other, int):
            return Poly((other,), self.modulus)
        if isinstance(other, FieldElement):
            return Poly((other,), self.modulus)
        self._check(other)
        return other

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.modulus))

    def __add__(self, other):
        other = self._lift(other)
        p = self.modulus
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return Poly._raw(_strip(out), p)

    __radd__ = __add__

    def __neg__(self):
        p = self.modulus
        return Poly._raw(tuple((-c) % p for c in self.coeffs), p)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        p = self.modulus
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw((), p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly._raw(_strip([c % p for c in out]), p)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = Poly.one(self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> Poly:
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly._raw((0,) * k + self.coeffs, self.modulus)

    def __divmod__(self, other):
        other = self._lift(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        p = self.modulus
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        inv = pow(other.coeffs[-1], -1, p)
        quot = [0] * max(len(rem) - dq, 0)
        g = other.coeffs
        for top in range(len(rem) - 1, dq - 1, -1):
            c = rem[top]
            if c:
                f = c * inv % p
                quot[top - dq] = f
                off = top - dq
                for j in range(dq + 1):
                    rem[off + j] = (rem[off + j] - f * g[j]) % p
        return Poly._raw(_strip(quot), p), Poly._raw(_strip(rem[:dq]), p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        inv = pow(self.coeffs[-1], -1, self.modulus)
        return self * inv

    def __call__(self, at: int | FieldElement) -> FieldElement:
        if isinstance(at, FieldElement):
            if at.modulus != self.modulus:
                raise ModulusMismatch(f"point in Z_{at.modulus}, polynomial over Z_{self.modulus}")
            at = at.value
        p = self.modulus
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * at + c) % p
        return FieldElement(acc, p)

    def __repr__(self):
        return f"Poly({list(self.coeffs)}, modulus={self.modulus})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"coefficients": list(self.coeffs), "modulus": self.modulus}

    @classmethod
    def from_json(cls, obj: dict) -> Poly:
        return cls(obj["coefficients"], obj["modulus"])


def poly_add(p: Poly, q: Poly) -> Poly:
    p._check(q)
    return p + q


def poly_sub(p: Poly, q: Poly) -> Poly:
    p._check(q)
    return p - q


def poly_mul(p: Poly, q: Poly) -> Poly:
    p._check(q)
    return p * q


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    p._check(q)
    return divmod(p, q)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by Euclid's algorithm."""
    p._check(q)
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while q:
        p, q = q, p % q
    return p.monic()


def poly_eval(p: Poly, at: int | FieldElement) -> FieldElement:
    return p(at)


def cyclic_shift(word: Sequence[int], k: int = 1) -> tuple[int, ...]:
    """Right cyclic shift by k positions, i.e. multiplication by x^k mod x^n - 1."""
    n = len(word)
    k %= n
    return tuple(word[-k:]) + tuple(word[:-k]) if k else tuple(word)
