"""Z-lattices spanned by generalized Pell-Fibonacci-Lucas quaternions.

The candidate order is the Z-span of 1 and of 8 R_k^{1,0}, 8 R_k^{0,1} for
1 <= k <= depth.  Membership is decided exactly: generator coordinates are
cleared of denominators, reduced to Hermite normal form while tracking the
unimodular transform, and a target is written back in terms of the original
generators.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .pellnums import gen_pfl
from .quaternion import Quaternion, QuaternionAlgebra, gen_pfl_quaternion, quat_mul


def hermite_normal_form(rows: Sequence[Sequence[int]]):
    """Row-style HNF of an integer matrix.

    Returns (basis, transform, pivots): ``basis`` are the nonzero HNF rows,
    ``transform[i]`` expresses basis row i as an integer combination of the
    input rows, and ``pivots[i]`` is the pivot column of basis row i.
    """
    m = len(rows)
    if m == 0:
        return [], [], []
    ncols = len(rows[0])
    work = [list(r) + [1 if i == j else 0 for j in range(m)] for i, r in enumerate(rows)]
    r = 0
    pivots = []
    for col in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if work[i][col]]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(work[i][col]))
            work[r], work[i_min] = work[i_min], work[r]
            piv = work[r][col]
            done = True
            for i in range(r + 1, m):
                f = work[i][col] // piv
                if f:
                    work[i] = [a - f * b for a, b in zip(work[i], work[r])]
                if work[i][col]:
                    done = False
            if done:
                break
        if not work[r][col]:
            continue
        if work[r][col] < 0:
            work[r] = [-a for a in work[r]]
        piv = work[r][col]
        for i in range(r):
            f = work[i][col] // piv
            if f:
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
    basis = [row[:ncols] for row in work[:r]]
    transform = [row[ncols:] for row in work[:r]]
    return basis, transform, pivots


@dataclass(frozen=True)
class Membership:
    member: bool
    coefficients: tuple[int, ...] | None = None
    reason: str | None = None


@dataclass
class OrderLattice:
    algebra: QuaternionAlgebra
    depth: int
    generators: list[Quaternion] = field(init=False)
    labels: list[str] = field(init=False)
    denominator: int = field(init=False)
    basis: list[list[int]] = field(init=False)
    transform: list[list[int]] = field(init=False)
    pivots: list[int] = field(init=False)

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        gens = [self.algebra.element(1, 0, 0, 0)]
        labels = ["1"]
        for k in range(1, self.depth + 1):
            for p, q in ((1, 0), (0, 1)):
                gens.append(8 * gen_pfl_quaternion(p, q, k, self.algebra))
                labels.append(f"8R_{k}^{{{p},{q}}}")
        self.generators = gens
        self.labels = labels
        dens = [x.denominator for g in gens for x in g.c]
        self.denominator = math.lcm(*dens)
        rows = [[int(x * self.denominator) for x in g.c] for g in gens]
        self.basis, self.transform, self.pivots = hermite_normal_form(rows)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def combine(self, coefficients: Sequence[int]) -> Quaternion:
        total = self.algebra.element(0, 0, 0, 0)
        for c, g in zip(coefficients, self.generators):
            if c:
                total = total + c * g
        return total

    def membership(self, x: Quaternion) -> Membership:
        if x.algebra != self.algebra:
            raise ValueError("quaternion from a different algebra")
        scaled = [v * self.denominator for v in x.c]
        if any(v.denominator != 1 for v in scaled):
            return Membership(False, reason="non-integral coordinates")
        resid = [int(v) for v in scaled]
        coeffs = [0] * len(self.generators)
        for row, tr, col in zip(self.basis, self.transform, self.pivots):
            if any(resid[:col]):
                break
            f, rem = divmod(resid[col], row[col])
            if rem:
                return Membership(False, reason=f"coordinate {col} not divisible by pivot {row[col]}")
            if f:
                resid = [a - f * b for a, b in zip(resid, row)]
                coeffs = [a + f * b for a, b in zip(coeffs, tr)]
        if any(resid):
            return Membership(False, reason="outside the rational span of the generators")
        coeffs = tuple(coeffs)
        if self.combine(coeffs) != x:
            raise AssertionError("membership certificate failed re-substitution")
        return Membership(True, coeffs)


def order_membership(x: Quaternion, lattice: OrderLattice) -> Membership:
    return lattice.membership(x)


@dataclass
class ClosureReport:
    alpha: Fraction
    beta: Fraction
    depth: int
    rank: int
    samples: int
    passed: int = 0
    failed: int = 0
    verdicts: list[dict] = field(default_factory=list)
    rational_parameters: bool = False

    @property
    def closed(self) -> bool:
        return self.failed == 0

    def counterexamples(self) -> list[dict]:
        return [v for v in self.verdicts if not v["member"]]

    def to_json(self) -> dict:
        return {
            "alpha": f"{self.alpha.numerator}/{self.alpha.denominator}",
            "beta": f"{self.beta.numerator}/{self.beta.denominator}",
            "depth": self.depth,
            "rank": self.rank,
            "samples": self.samples,
            "passed": self.passed,
            "failed": self.failed,
            "closed": self.closed,
            "rational_parameters": self.rational_parameters,
            "verdicts": self.verdicts,
        }


def order_closure_check(algebra: QuaternionAlgebra, depth: int = 12, samples: int = 500,
                        seed: int = 0) -> ClosureReport:
    """Multiply random pairs of generators and test each product for membership."""
    if depth < 4:
        raise ValueError("depth must be >= 4")
    lat = OrderLattice(algebra, depth)
    rng = random.Random(seed)
    report = ClosureReport(algebra.alpha, algebra.beta, depth, lat.rank, samples,
                           rational_parameters=not algebra.integral)
    for _ in range(samples):
        i = rng.randrange(len(lat.generators))
        j = rng.randrange(len(lat.generators))
        prod = quat_mul(lat.generators[i], lat.generators[j])
        res = lat.membership(prod)
        verdict = {
            "left": lat.labels[i],
            "right": lat.labels[j],
            "product": prod.to_json()["c"],
            "member": res.member,
        }
        if res.member:
            report.passed += 1
            verdict["certificate"] = list(res.coefficients)
        else:
            report.failed += 1
            verdict["reason"] = res.reason
        report.verdicts.append(verdict)
    return report


def module_closure_check(samples: int = 10_000, seed: int = 0, bound: int = 50,
                         max_index: int = 30) -> tuple[int, list[tuple]]:
    """a R_n^{p,q} + b R_m^{p',q'} == R_n^{ap,aq} + R_m^{bp',bq'} on random samples.

    Returns (number of samples, failing parameter tuples).
    """
    alg = QuaternionAlgebra(1, 1)
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        a, b, p, q, pp, qq = (rng.randint(-bound, bound) for _ in range(6))
        n, m = rng.randint(1, max_index), rng.randint(1, max_index)
        lhs = a * gen_pfl_quaternion(p, q, n, alg) + b * gen_pfl_quaternion(pp, qq, m, alg)
        rhs = gen_pfl_quaternion(a * p, a * q, n, alg) + gen_pfl_quaternion(b * pp, b * qq, m, alg)
        if lhs != rhs:
            failures.append((a, b, p, q, pp, qq, n, m))
    return samples, failures
