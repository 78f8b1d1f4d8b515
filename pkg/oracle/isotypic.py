"""
Singular vectors and isotypic components of tensor powers of the natural q(n)-module.

The isotypic component of V(lam) in V^{(x) r} is generated from its weight-lam
singular vectors by the simple lowering operators, one weight space at a time.
Singular vectors of weight lam form copies of the highest-weight Clifford module,
of total dimension 2^ceil(len(lam)/2), so

    copies d_lam = dim Sing_lam / 2^ceil(len(lam)/2)
    dim Hom(V(mu), M) = dim Sing_mu(M) * 2^p(mu) / 2^ceil(len(mu)/2).
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import accumulate, product
from typing import Dict, List, Tuple

from sympy.utilities.iterables import multiset_permutations

from algebra.errors import CliffordCountError, RankTooSmall
from algebra.partitions import StrictPartition, count_standard_shifted, enumerate_strict
from oracle.finite_rank import FiniteRankAlgebra, TensorAction
from oracle.linalg import Vector, combine, left_kernel, rank, span_basis

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]


def clifford_dim(lam: StrictPartition) -> int:
    return 1 << ((lam.length + 1) // 2)


def padded(lam: StrictPartition, n: int) -> Weight:
    if lam.length > n:
        raise RankTooSmall(f"{lam} has more than {n} parts")
    return lam.parts + (0,) * (n - lam.length)


def compositions(total: int, n: int) -> List[Weight]:
    if n == 0:
        return [()] if total == 0 else []
    return [(first,) + rest for first in range(total, -1, -1) for rest in compositions(total - first, n - 1)]


class TensorPowerModel:
    """V_n^{(x) power} with its weight space decomposition."""

    def __init__(self, n: int, power: int):
        self.n = n
        self.power = power
        self.algebra = FiniteRankAlgebra(n)
        self.action = TensorAction(self.algebra, power)

    def weight_basis(self, weight: Weight) -> List[Tuple[int, ...]]:
        if sum(weight) != self.power or any(x < 0 for x in weight):
            return []
        if self.power == 0:
            return [()]
        letters = [j for j, count in enumerate(weight) for _ in range(count)]
        out = []
        for arrangement in multiset_permutations(letters):
            for parities in product((0, self.n), repeat=self.power):
                out.append(tuple(a + s for a, s in zip(arrangement, parities)))
        return out

    def singular_in(self, basis: List[Vector]) -> List[Vector]:
        """Vectors in the span of `basis` killed by every raising operator."""
        if not basis:
            return []
        raising = self.algebra.raising()
        images = []
        for v in basis:
            row = {}
            for k, op in enumerate(raising):
                for w, c in self.action.apply(op, v).items():
                    row[(k, w)] = c
            images.append(row)
        return [combine(c, basis) for c in left_kernel(images)]

    def singular_count_in(self, basis: List[Vector]) -> int:
        if not basis:
            return 0
        raising = self.algebra.raising()
        images = []
        for v in basis:
            row = {}
            for k, op in enumerate(raising):
                for w, c in self.action.apply(op, v).items():
                    row[(k, w)] = c
            images.append(row)
        return len(basis) - rank(images)

    def singular_space(self, weight: Weight) -> List[Vector]:
        return self.singular_in([{u: 1} for u in self.weight_basis(weight)])


class IsotypicComponent:
    """Weight spaces of the V(lam)-isotypic component of V_n^{(x) |lam|}, built lazily."""

    def __init__(self, n: int, lam: StrictPartition):
        self.n = n
        self.lam = lam
        self.model = TensorPowerModel(n, lam.size)
        self.top = padded(lam, n)
        self._bound = list(accumulate(self.top))
        self._spaces: Dict[Weight, List[Vector]] = {}
        self.singular = self.model.singular_space(self.top)
        self._spaces[self.top] = self.singular
        width = clifford_dim(lam)
        if len(self.singular) % width:
            raise CliffordCountError(f"dim Sing_{lam} = {len(self.singular)} is not a multiple of {width}")
        self.copies = len(self.singular) // width

    def _dominated(self, weight: Weight) -> bool:
        return all(x <= y for x, y in zip(accumulate(weight), self._bound))

    def space(self, weight: Weight) -> List[Vector]:
        if weight in self._spaces:
            return self._spaces[weight]
        if sum(weight) != self.lam.size or not self._dominated(weight):
            return []
        lowering = self.model.algebra.lowering()
        spanning = []
        for i in range(self.n - 1):
            if weight[i + 1] == 0:
                continue
            source = list(weight)
            source[i] += 1
            source[i + 1] -= 1
            for v in self.space(tuple(source)):
                for op in lowering[2 * i:2 * i + 2]:
                    image = self.model.action.apply(op, v)
                    if image:
                        spanning.append(image)
        basis = span_basis(spanning)
        self._spaces[weight] = basis
        return basis

    def total_dim(self) -> int:
        return sum(len(self.space(w)) for w in compositions(self.lam.size, self.n))


@lru_cache(maxsize=None)
def isotypic_component(n: int, lam: StrictPartition) -> IsotypicComponent:
    logger.info(f"Building the V{lam}-isotypic component at rank {n}")
    return IsotypicComponent(n, lam)


def _tensor(x: Vector, y: Vector) -> Vector:
    return {u + v: a * b for u, a in x.items() for v, b in y.items()}


def singular_mult(lam: StrictPartition, nu: StrictPartition, mu: StrictPartition, n: int) -> int:
    """
    Total dimension of Hom(V(mu), V(lam) x V(nu)) measured at rank n.

    Raises:
        RankTooSmall: if n < |lam| + |nu|
    """
    degree = lam.size + nu.size
    if n < max(degree, 1):
        raise RankTooSmall(f"rank {n} is below the stable range {degree} for {lam} x {nu}")
    if mu.size != degree:
        return 0

    left, right = isotypic_component(n, lam), isotypic_component(n, nu)
    target = padded(mu, n)
    basis = []
    for alpha in compositions(lam.size, n):
        beta = tuple(m - a for m, a in zip(target, alpha))
        if any(b < 0 for b in beta):
            continue
        for x in left.space(alpha):
            for y in right.space(beta):
                basis.append(_tensor(x, y))

    model = TensorPowerModel(n, degree)
    count = model.singular_count_in(basis)
    numerator = count << mu.parity
    denominator = clifford_dim(mu) * left.copies * right.copies
    if numerator % denominator:
        raise CliffordCountError(
            f"singular count {count} for {mu} in {lam} x {nu} at rank {n} does not split into Clifford modules"
        )
    return numerator // denominator


@dataclass
class SergeevRow:
    lam: StrictPartition
    singular_dim: int
    copies: int
    isotypic_dim: int
    dim_v: int
    dim_s: int
    expected_dim_s: int
    integral: bool


@dataclass
class SergeevReport:
    r: int
    n: int
    rows: List[SergeevRow] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def sergeev_dim_check(r: int, n: int) -> SergeevReport:
    """
    Check (2n)^r = sum over strict lam of r of 2^-p(lam) dim V_n(lam) dim S(lam),
    with dim V_n(lam) measured from the isotypic component and dim S(lam) = 2^p(lam) d_lam.
    """
    if n < r:
        raise RankTooSmall(f"rank {n} is below {r}")
    report = SergeevReport(r=r, n=n)
    balance = 0
    for lam in enumerate_strict(r):
        component = isotypic_component(n, lam)
        iso = component.total_dim()
        integral = iso % component.copies == 0
        dim_v = iso // component.copies if integral else 0
        dim_s = component.copies << lam.parity
        expected = count_standard_shifted(lam) << (r - lam.length // 2)
        report.rows.append(SergeevRow(lam, len(component.singular), component.copies, iso, dim_v, dim_s, expected, integral))
        if not integral:
            report.failures.append(f"{lam}: isotypic dimension {iso} is not a multiple of {component.copies}")
        if dim_s != expected:
            report.failures.append(f"{lam}: dim S = {dim_s}, expected {expected}")
        balance += iso
    if balance != (2 * n) ** r:
        report.failures.append(f"isotypic dimensions sum to {balance}, not (2n)^r = {(2 * n) ** r}")
    return report
