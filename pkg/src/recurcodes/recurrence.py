"""Third-order linear recurrences D_n = a D_{n-1} + b D_{n-2} + c D_{n-3}.

Terms are exact Python integers.  Reduction modulo a prime gives an
eventually periodic sequence; :func:`profile` finds its period, pre-period and
the number of zeros in one period.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from .errors import AllZeroSequence
from .gfpoly import check_prime


@dataclass(frozen=True)
class SequenceSpec:
    """Coefficients (a, b, c) and seeds (x0, x1, x2)."""

    a: int
    b: int
    c: int
    x0: int
    x1: int
    x2: int
    name: str | None = field(default=None, compare=False)

    @classmethod
    def second_order(cls, a: int, b: int = 1, x0: int = 0, x1: int = 1, name=None) -> SequenceSpec:
        """Order-two sequence with the third seed derived from the recurrence."""
        return cls(a, b, 0, x0, x1, a * x1 + b * x0, name)

    @classmethod
    def preset(cls, name: str) -> SequenceSpec:
        try:
            a, b, c, x0, x1, x2 = PRESETS[name.lower()]
        except KeyError:
            raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
        return cls(a, b, c, x0, x1, x2, name.lower())

    @property
    def order(self) -> int:
        if self.c != 0:
            return 3
        if self.b != 0:
            return 2
        return 1

    @property
    def seeds(self) -> tuple[int, int, int]:
        return (self.x0, self.x1, self.x2)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "x0": self.x0, "x1": self.x1, "x2": self.x2}

    @classmethod
    def from_json(cls, obj: dict | str) -> SequenceSpec:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(*(int(obj[k]) for k in ("a", "b", "c", "x0", "x1", "x2")))


PRESETS = {
    "fibonacci": (1, 1, 0, 0, 1, 1),
    "lucas": (1, 1, 0, 2, 1, 3),
    "pell": (2, 1, 0, 0, 1, 2),
    "pell-lucas": (2, 1, 0, 2, 2, 6),
    "fibonacci-narayana": (1, 0, 1, 0, 1, 1),
}


def iter_terms(spec: SequenceSpec, modulus: int | None = None) -> Iterator[int]:
    """Yield D_0, D_1, ... forever, optionally reduced mod ``modulus``."""
    a, b, c = spec.a, spec.b, spec.c
    s0, s1, s2 = spec.seeds
    if modulus is not None:
        a, b, c = a % modulus, b % modulus, c % modulus
        s0, s1, s2 = s0 % modulus, s1 % modulus, s2 % modulus
    yield s0
    yield s1
    while True:
        yield s2
        nxt = a * s2 + b * s1 + c * s0
        if modulus is not None:
            nxt %= modulus
        s0, s1, s2 = s1, s2, nxt


def term(spec: SequenceSpec, n: int) -> int:
    if n < 0:
        raise ValueError("index must be non-negative")
    for i, d in enumerate(iter_terms(spec)):
        if i == n:
            return d


def terms(spec: SequenceSpec, count: int) -> list[int]:
    out = []
    if count <= 0:
        return out
    for d in iter_terms(spec):
        out.append(d)
        if len(out) == count:
            return out


def terms_mod(spec: SequenceSpec, modulus: int, count: int) -> list[int]:
    check_prime(modulus)
    out = []
    if count <= 0:
        return out
    for d in iter_terms(spec, modulus):
        out.append(d)
        if len(out) == count:
            return out


@dataclass(frozen=True)
class ModProfile:
    modulus: int
    period: int
    zeros: int
    preperiod: int
    residues: tuple[int, ...]

    @property
    def purely_periodic(self) -> bool:
        return self.preperiod == 0

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "period": self.period,
            "zeros": self.zeros,
            "preperiod": self.preperiod,
            "residues": list(self.residues),
        }


def profile(spec: SequenceSpec, modulus: int) -> ModProfile:
    """Period, pre-period and zero count of ``spec`` reduced mod ``modulus``.

    The full state (D_i, D_{i+1}, D_{i+2}) is tracked.  For an order-two
    sequence whose third seed is consistent with the recurrence this has the
    same period as the pair (D_i, D_{i+1}); an inconsistent third seed shows
    up as a pre-period.
    """
    p = check_prime(modulus)
    if all(s % p == 0 for s in spec.seeds):
        raise AllZeroSequence(f"all seeds vanish mod {p}")
    a, b, c = spec.a % p, spec.b % p, spec.c % p
    state = tuple(s % p for s in spec.seeds)
    seen = {state: 0}
    history = [state[0]]
    # consistent states live in a set of size p**order; at most 2 extra seed states
    cap = p ** spec.order + 3
    i = 0
    while True:
        s0, s1, s2 = state
        state = (s1, s2, (a * s2 + b * s1 + c * s0) % p)
        i += 1
        if state in seen:
            start = seen[state]
            break
        if i > cap:
            raise RuntimeError(f"no period found within {cap} steps")  # unreachable by pigeonhole
        seen[state] = i
        history.append(state[0])
    residues = tuple(history[start:i])
    return ModProfile(p, i - start, residues.count(0), start, residues)


@dataclass(frozen=True)
class GenFunSpec:
    """Rational generating function numerator / denominator, ascending powers of z."""

    numerator: tuple[int, int, int]
    denominator: tuple[int, int, int, int]

    @classmethod
    def from_spec(cls, spec: SequenceSpec) -> GenFunSpec:
        a, b, c = spec.a, spec.b, spec.c
        d0, d1, d2 = spec.seeds
        return cls((d0, d1 - a * d0, d2 - a * d1 - b * d0), (1, -a, -b, -c))

    def coefficients(self, count: int) -> list[int]:
        """Power-series coefficients of numerator/denominator by long division.

        The denominator has constant term 1, so every step is exact in Z.
        """
        num, den = self.numerator, self.denominator
        if den[0] != 1:
            raise ValueError("denominator must have constant term 1")
        out: list[int] = []
        for n in range(count):
            acc = num[n] if n < len(num) else 0
            for j in range(1, min(n, len(den) - 1) + 1):
                acc -= den[j] * out[n - j]
            out.append(acc)
        return out


def genfun_coefficients(spec: SequenceSpec, count: int) -> list[int]:
    return GenFunSpec.from_spec(spec).coefficients(count)
