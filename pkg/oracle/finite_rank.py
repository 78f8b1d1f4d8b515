"""
Matrix model of q(n) acting on its natural module V_n and on tensor powers of V_n.

V_n has basis e_1..e_n (indices 0..n-1, even) and ebar_1..ebar_n (indices n..2n-1, odd).
E(i,j) maps e_j -> e_i and ebar_j -> ebar_i; the odd generator Ebar(i,j) maps
e_j -> ebar_i and ebar_j -> e_i. Together they span q(n), of dimension 2n^2.
"""

import logging
import random
from typing import Dict, List, Tuple

from sympy import Matrix, zeros

from algebra.errors import RankTooSmall

logger = logging.getLogger(__name__)

Vector = Dict[Tuple[int, ...], int]


class Operator:
    """Homogeneous endomorphism of V_n stored by columns: index -> [(row, coeff)]."""

    def __init__(self, name: str, parity: int, n: int, columns: Dict[int, List[Tuple[int, int]]]):
        self.name = name
        self.parity = parity
        self.n = n
        self.columns = columns

    @classmethod
    def even(cls, i: int, j: int, n: int) -> "Operator":
        return cls(f"E({i},{j})", 0, n, {j - 1: [(i - 1, 1)], n + j - 1: [(n + i - 1, 1)]})

    @classmethod
    def odd(cls, i: int, j: int, n: int) -> "Operator":
        return cls(f"Ebar({i},{j})", 1, n, {j - 1: [(n + i - 1, 1)], n + j - 1: [(i - 1, 1)]})

    @classmethod
    def from_matrix(cls, name: str, parity: int, n: int, m: Matrix) -> "Operator":
        columns = {}
        for col in range(2 * n):
            entries = [(row, int(m[row, col])) for row in range(2 * n) if m[row, col] != 0]
            if entries:
                columns[col] = entries
        return cls(name, parity, n, columns)

    def to_matrix(self) -> Matrix:
        m = zeros(2 * self.n, 2 * self.n)
        for col, entries in self.columns.items():
            for row, c in entries:
                m[row, col] = c
        return m

    def __repr__(self) -> str:
        return self.name


def supercommutator(x: Operator, y: Operator) -> Operator:
    mx, my = x.to_matrix(), y.to_matrix()
    sign = -1 if x.parity and y.parity else 1
    bracket = mx * my - sign * (my * mx)
    return Operator.from_matrix(f"[{x.name},{y.name}]", (x.parity + y.parity) % 2, x.n, bracket)


def in_span_of_q(m: Matrix, n: int) -> bool:
    """q(n) consists of the block matrices [[A, B], [B, A]]."""
    return m[:n, :n] == m[n:, n:] and m[:n, n:] == m[n:, :n]


class FiniteRankAlgebra:
    def __init__(self, n: int):
        if n < 1:
            raise RankTooSmall(f"rank must be positive, got {n}")
        self.n = n
        self.basis_ops: List[Operator] = [
            make(i, j, n) for make in (Operator.even, Operator.odd)
            for i in range(1, n + 1) for j in range(1, n + 1)
        ]

    def dimension(self) -> int:
        return len(self.basis_ops)

    def raising(self) -> List[Operator]:
        """Simple root vectors of the upper-triangular Borel; they generate its nilradical."""
        n = self.n
        return [make(i, i + 1, n) for i in range(1, n) for make in (Operator.even, Operator.odd)]

    def lowering(self) -> List[Operator]:
        n = self.n
        return [make(i + 1, i, n) for i in range(1, n) for make in (Operator.even, Operator.odd)]

    def check_closure(self, samples: int = 20, seed: int = 0) -> bool:
        rng = random.Random(seed)
        for _ in range(samples):
            x, y = rng.choice(self.basis_ops), rng.choice(self.basis_ops)
            if not in_span_of_q(supercommutator(x, y).to_matrix(), self.n):
                logger.warning(f"supercommutator [{x.name},{y.name}] leaves q({self.n})")
                return False
        return True


class TensorAction:
    """Action of q(n) on V_n^{(x) power} with Koszul signs."""

    def __init__(self, algebra: FiniteRankAlgebra, power: int):
        self.algebra = algebra
        self.power = power
        self.n = algebra.n

    def apply_to_basis(self, op: Operator, u: Tuple[int, ...]) -> Vector:
        out: Vector = {}
        sign = 1
        for k, x in enumerate(u):
            for row, c in op.columns.get(x, ()):
                image = u[:k] + (row,) + u[k + 1:]
                out[image] = out.get(image, 0) + sign * c
            if op.parity and x >= self.n:
                sign = -sign
        return {w: c for w, c in out.items() if c != 0}

    def apply(self, op: Operator, vector: Vector) -> Vector:
        out: Vector = {}
        for u, c in vector.items():
            for w, d in self.apply_to_basis(op, u).items():
                out[w] = out.get(w, 0) + c * d
        return {w: c for w, c in out.items() if c != 0}

    def check_lift(self, samples: int = 10, seed: int = 0) -> bool:
        """Spot check that the lifted bracket equals the lift of the bracket on random basis tensors."""
        rng = random.Random(seed)
        for _ in range(samples):
            x, y = rng.choice(self.algebra.basis_ops), rng.choice(self.algebra.basis_ops)
            u = tuple(rng.randrange(2 * self.n) for _ in range(self.power))
            z = supercommutator(x, y)
            sign = -1 if x.parity and y.parity else 1
            lhs = _combine(self.apply(x, self.apply(y, {u: 1})),
                           self.apply(y, self.apply(x, {u: 1})), -sign)
            if lhs != self.apply(z, {u: 1}):
                logger.warning(f"lift of [{x.name},{y.name}] disagrees on {u}")
                return False
        return True


def _combine(a: Vector, b: Vector, scale: int) -> Vector:
    out = dict(a)
    for w, c in b.items():
        out[w] = out.get(w, 0) + scale * c
    return {w: c for w, c in out.items() if c != 0}
