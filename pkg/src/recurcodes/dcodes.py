"""Cyclic codes generated by D-polynomials of recurrence sequences mod p.

For the family D_n = a D_{n-1} + D_{n-2}, D_0 = 0, D_1 = 1 of period l mod p,
the D-polynomial delta(x) = sum_{i<l} D_i x^i satisfies
delta(x) (x^2 + a x - 1) = x^{l+1} - x, so g = delta / x divides x^l - 1 and
generates a cyclic [l, 2, d] code.  The expected distance is l minus the
number of zeros in one period; :func:`min_distance` checks it by enumeration.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DegenerateSequence, ModulusMismatch, NotPurelyPeriodic, PreconditionError
from .gfpoly import Poly, check_prime
from .recurrence import ModProfile, SequenceSpec, iter_terms, profile

MAX_ENUMERATION = 2_000_000


@dataclass(frozen=True)
class DPolynomial:
    delta: Poly
    spec: SequenceSpec
    profile: ModProfile


def build_dpoly(spec: SequenceSpec, modulus: int) -> DPolynomial:
    prof = profile(spec, modulus)
    if not prof.purely_periodic:
        raise NotPurelyPeriodic(f"pre-period {prof.preperiod} mod {modulus}")
    return DPolynomial(Poly(prof.residues, modulus), spec, prof)


def _partial_delta(spec: SequenceSpec, modulus: int, length: int) -> tuple[Poly, list[int]]:
    """delta over the first ``length`` terms, plus D_0..D_{length+1} mod p."""
    ds = list(itertools.islice(iter_terms(spec, modulus), length + 2))
    return Poly(ds[:length], modulus), ds


@dataclass(frozen=True)
class DeltaIdentityReport:
    length: int
    lhs: Poly
    general_rhs: Poly
    printed_rhs: Poly
    general_holds: bool
    printed_holds: bool

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "lhs": list(self.lhs.coeffs),
            "general_rhs": list(self.general_rhs.coeffs),
            "printed_rhs": list(self.printed_rhs.coeffs),
            "general_holds": self.general_holds,
            "printed_holds": self.printed_holds,
        }


def check_delta_identity(spec: SequenceSpec, modulus: int, length: int | None = None) -> DeltaIdentityReport:
    """Multiply the truncated D-polynomial by c x^3 + b x^2 + a x - 1 and compare.

    The full right-hand side is
    c D_{l-1} x^{l+2} + (D_{l+1} - a D_l) x^{l+1} + D_l x^l
    + (a D_1 + b D_0 - D_2) x^2 + (a D_0 - D_1) x - D_0.
    The shorter printed form omits the x^l term and uses D_{l+1} alone at
    x^{l+1}; it agrees with the full form exactly when D_l = 0 mod p.
    ``length`` defaults to the period.
    """
    p = check_prime(modulus)
    if length is None:
        length = profile(spec, p).period
    if length < 3:
        raise PreconditionError("length must be at least 3")
    a, b, c = spec.a, spec.b, spec.c
    delta, ds = _partial_delta(spec, p, length)
    l = length
    d0, d1, d2 = ds[0], ds[1], ds[2]
    dl1, dl, dlp1 = ds[l - 1], ds[l], ds[l + 1]
    lhs = delta * Poly([-1, a, b, c], p)

    low = [-d0, a * d0 - d1, a * d1 + b * d0 - d2]
    general = [0] * (l + 3)
    printed = [0] * (l + 3)
    for i, v in enumerate(low):
        general[i] += v
        printed[i] += v
    general[l] += dl
    general[l + 1] += dlp1 - a * dl
    general[l + 2] += c * dl1
    printed[l + 1] += dlp1
    printed[l + 2] += c * dl1
    general_rhs, printed_rhs = Poly(general, p), Poly(printed, p)
    return DeltaIdentityReport(l, lhs, general_rhs, printed_rhs, lhs == general_rhs, lhs == printed_rhs)


def _require_family(spec: SequenceSpec) -> None:
    if (spec.c, spec.b, spec.x0, spec.x1) != (0, 1, 0, 1) or spec.x2 != spec.a:
        raise PreconditionError(
            "expected D_n = a D_{n-1} + D_{n-2} with D_0 = 0, D_1 = 1 "
            f"(got a={spec.a}, b={spec.b}, c={spec.c}, seeds={spec.seeds})"
        )


def check_family_identity(spec: SequenceSpec, modulus: int) -> bool:
    """delta(x) (x^2 + a x - 1) == x^{l+1} - x over Z_p, with l the period."""
    _require_family(spec)
    dp = build_dpoly(spec, modulus)
    p = dp.delta.modulus
    l = dp.profile.period
    rhs = Poly.monomial(l + 1, p) - Poly.monomial(1, p)
    return dp.delta * Poly([-1, spec.a, 1], p) == rhs


def family_spec(a: int) -> SequenceSpec:
    return SequenceSpec.second_order(a, 1, 0, 1)


def _codeword_weights(g: Sequence[int], n: int, k: int, p: int) -> Iterable[int]:
    # yields the weight of m(x) g(x) for every nonzero message m of length k
    rows = [(0,) * i + tuple(g) + (0,) * (n - len(g) - i) for i in range(k)]
    for msg in itertools.product(range(p), repeat=k):
        if not any(msg):
            continue
        w = 0
        for pos in range(n):
            s = 0
            for mi, row in zip(msg, rows):
                if mi:
                    s += mi * row[pos]
            if s % p:
                w += 1
        yield w


@dataclass(frozen=True)
class DCyclicCode:
    """Cyclic code <g> of length n over Z_p."""

    n: int
    modulus: int
    generator: Poly
    check: Poly
    k: int
    d: int
    mds: bool
    t: int
    spec: SequenceSpec | None = field(default=None, compare=False)
    profile: ModProfile | None = field(default=None, compare=False)

    @classmethod
    def from_generator(cls, g: Poly, n: int, spec=None, prof=None) -> DCyclicCode:
        p = g.modulus
        g = g.monic()
        h, r = divmod(Poly.x_n_minus_1(n, p), g)
        if r:
            raise PreconditionError(f"{g} does not divide x^{n} - 1")
        k = n - g.degree
        if p**k > MAX_ENUMERATION:
            raise PreconditionError(f"p^k = {p**k} codewords is too many to enumerate")
        d = min(_codeword_weights(g.coeffs, n, k, p))
        return cls(n, p, g, h.monic(), k, d, k + d == n + 1, (d - 1) // 2, spec, prof)

    @property
    def size(self) -> int:
        return self.modulus**self.k

    @property
    def predicted_distance(self) -> int | None:
        """Period minus zero count, when built from a sequence profile."""
        if self.profile is None:
            return None
        return self.profile.period - self.profile.zeros

    def is_codeword(self, word: Sequence[int]) -> bool:
        return not (Poly(word, self.modulus) % self.generator)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "mds": self.mds,
            "modulus": self.modulus,
            "generator": list(self.generator.coeffs),
            "check": list(self.check.coeffs),
        }


def build_code(spec: SequenceSpec, modulus: int) -> DCyclicCode:
    _require_family(spec)
    p = check_prime(modulus)
    if spec.a % p == 0:
        raise DegenerateSequence(f"a = {spec.a} vanishes mod {p}")
    dp = build_dpoly(spec, p)
    if dp.profile.period < 3:
        raise DegenerateSequence(f"period {dp.profile.period} < 3")
    g, r = divmod(dp.delta, Poly.monomial(1, p))
    if r:
        raise PreconditionError("D_0 must vanish")
    code = DCyclicCode.from_generator(g, dp.profile.period, spec, dp.profile)
    # x^2 + a x - 1 is already monic
    assert code.check == Poly([-1, spec.a, 1], p), code.check
    return code


def min_distance(code: DCyclicCode) -> int:
    """Minimum weight over all nonzero codewords m(x) g(x), by enumeration."""
    return min(_codeword_weights(code.generator.coeffs, code.n, code.k, code.modulus))


def encode(code: DCyclicCode, message: Sequence[int]) -> tuple[int, ...]:
    if len(message) != code.k:
        raise ValueError(f"message length {len(message)} != k = {code.k}")
    return (Poly(message, code.modulus) * code.generator).to_word(code.n)


@dataclass(frozen=True)
class DecodeTrace:
    received: tuple[int, ...]
    syndrome: Poly
    shift: int | None
    shifted_syndrome: Poly | None
    error: tuple[int, ...]
    corrected: tuple[int, ...]
    status: str  # "clean" | "corrected" | "failure"

    def to_json(self) -> dict:
        return {
            "received": list(self.received),
            "syndrome": list(self.syndrome.coeffs),
            "shift": self.shift,
            "shifted_syndrome": None if self.shifted_syndrome is None else list(self.shifted_syndrome.coeffs),
            "error": list(self.error),
            "corrected": list(self.corrected),
            "status": self.status,
        }


def _times_x_mod(s: list[int], g: tuple[int, ...], p: int) -> list[int]:
    # x * s mod g for deg s < deg g, g monic; s given as a dense list of length deg g
    top = s[-1]
    out = [0] + s[:-1]
    if top:
        for j in range(len(out)):
            out[j] = (out[j] - top * g[j]) % p
    return out


def decode(code: DCyclicCode, received: Sequence[int]) -> DecodeTrace:
    """Error-trapping decoder.

    Shift the syndrome s_i = x^i s mod g until its weight is at most t, then
    the error is x^{n-i} s_i mod x^n - 1.
    """
    p, n = code.modulus, code.n
    if len(received) != n:
        raise ValueError(f"word length {len(received)} != n = {n}")
    for v in received:
        if not isinstance(v, int) or not 0 <= v < p:
            raise ModulusMismatch(f"symbol {v!r} not in Z_{p}")
    received = tuple(received)
    g = code.generator.coeffs
    r = len(g) - 1
    syndrome = Poly(received, p) % code.generator
    if not syndrome:
        return DecodeTrace(received, syndrome, None, None, (0,) * n, received, "clean")

    s = list(syndrome.coeffs) + [0] * (r - len(syndrome.coeffs))
    for i in range(n):
        if sum(1 for c in s if c) <= code.t:
            padded = s + [0] * (n - r)
            # x^{n-i} mod x^n - 1 is a cyclic right shift by n - i
            k = (n - i) % n
            error = tuple(padded[-k:] + padded[:-k]) if k else tuple(padded)
            corrected = tuple((x - e) % p for x, e in zip(received, error))
            return DecodeTrace(received, syndrome, i, Poly(s, p), error, corrected, "corrected")
        s = _times_x_mod(s, g, p)
    return DecodeTrace(received, syndrome, None, None, (0,) * n, received, "failure")


@dataclass(frozen=True)
class ScanRow:
    a: int
    modulus: int
    period: int | None
    zeros: int | None
    n: int | None = None
    k: int | None = None
    d: int | None = None
    mds: bool | None = None
    predicted_d: int | None = None
    skipped: str | None = None

    @property
    def distance_ok(self) -> bool | None:
        if self.d is None:
            return None
        return self.d == self.predicted_d

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "modulus": self.modulus,
            "l": self.period,
            "beta": self.zeros,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "mds": self.mds,
            "predicted_d": self.predicted_d,
            "skipped": self.skipped,
        }


def scan_row(a: int, modulus: int) -> ScanRow:
    spec = family_spec(a)
    prof = profile(spec, modulus)
    try:
        code = build_code(spec, modulus)
    except (DegenerateSequence, NotPurelyPeriodic) as exc:
        return ScanRow(a, modulus, prof.period, prof.zeros, skipped=str(exc))
    return ScanRow(
        a, modulus, prof.period, prof.zeros, code.n, code.k, code.d, code.mds,
        code.predicted_distance,
    )


def _scan_task(args):
    return scan_row(*args)


def scan_codes(a_values: Iterable[int] | None, primes: Iterable[int], workers: int = 1) -> list[ScanRow]:
    """One row per (a, p) with 1 <= a <= p - 1; ``a_values=None`` means all such a.

    Rows are sorted by (p, a) whatever the evaluation order.
    """
    tasks = []
    a_list = None if a_values is None else sorted(set(a_values))
    for p in sorted(set(primes)):
        check_prime(p)
        cand = range(1, p) if a_list is None else [a for a in a_list if 1 <= a <= p - 1]
        tasks.extend((a, p) for a in cand)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_task, tasks, chunksize=8))
    else:
        rows = [scan_row(a, p) for a, p in tasks]
    return sorted(rows, key=lambda r: (r.modulus, r.a))
