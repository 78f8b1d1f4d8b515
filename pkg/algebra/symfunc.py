"""
Schur P- and Q-functions in finitely many variables, with exact integer coefficients.

Polynomials are sympy sparse ring elements over ZZ with lexicographic order
x1 > x2 > ... > xN, so the leading monomial of a symmetric polynomial is a
partition and the leading monomial of Q_mu is x^mu.
"""

import logging
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterator, List, Tuple

from sympy import symbols
from sympy.polys.domains import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from algebra.errors import BasisSolveFailure
from algebra.partitions import StrictPartition

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def poly_ring(num_vars: int) -> PolyRing:
    if num_vars < 1:
        raise ValueError(f"a polynomial ring needs at least one variable, got {num_vars}")
    return PolyRing(symbols(f"x1:{num_vars + 1}"), ZZ, lex)


class SymPoly:
    """Immutable wrapper of a sparse integer polynomial in num_vars variables."""

    __slots__ = ("num_vars", "poly")

    def __init__(self, num_vars: int, poly: PolyElement):
        self.num_vars = num_vars
        self.poly = poly

    @classmethod
    def from_terms(cls, num_vars: int, terms: Dict[Tuple[int, ...], int]) -> "SymPoly":
        return cls(num_vars, poly_ring(num_vars).from_dict(terms))

    @classmethod
    def constant(cls, num_vars: int, c: int) -> "SymPoly":
        return cls(num_vars, poly_ring(num_vars)(c))

    @property
    def terms(self) -> Dict[Tuple[int, ...], int]:
        return {monom: int(coeff) for monom, coeff in self.poly.items()}

    def is_zero(self) -> bool:
        return not self.poly

    def leading_term(self) -> Tuple[Tuple[int, ...], int]:
        monom, coeff = self.poly.LT
        return monom, int(coeff)

    def is_symmetric(self) -> bool:
        terms = self.terms
        for monom, coeff in terms.items():
            for image in set(permutations(monom)):
                if terms.get(image) != coeff:
                    return False
        return True

    def exact_div(self, d: int) -> "SymPoly":
        for coeff in self.poly.values():
            if coeff % d:
                raise ArithmeticError(f"coefficient {coeff} is not divisible by {d}")
        return SymPoly(self.num_vars, self.poly.quo_ground(d))

    def _check(self, other: "SymPoly"):
        if self.num_vars != other.num_vars:
            raise ValueError(f"cannot combine polynomials in {self.num_vars} and {other.num_vars} variables")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        return SymPoly(self.num_vars, self.poly + other.poly)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        return SymPoly(self.num_vars, self.poly - other.poly)

    def __mul__(self, other) -> "SymPoly":
        if isinstance(other, int):
            return SymPoly(self.num_vars, self.poly * other)
        self._check(other)
        return SymPoly(self.num_vars, self.poly * other.poly)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"SymPoly({self.num_vars}, {self.poly.as_expr()})"


@lru_cache(maxsize=None)
def _one_row_series(num_vars: int, degree: int) -> Tuple[PolyElement, ...]:
    # coefficients of t^0..t^degree in prod_i (1 + x_i t) / (1 - x_i t)
    R = poly_ring(num_vars)
    series = [R.one] + [R.zero] * degree
    for x in R.gens:
        factor = [R.one] + [2 * x ** k for k in range(1, degree + 1)]
        series = [sum((series[j] * factor[k - j] for j in range(k + 1)), R.zero) for k in range(degree + 1)]
    return tuple(series)


def one_row_q(r: int, num_vars: int) -> SymPoly:
    """q_r = sum over compositions alpha of r of 2^#supp(alpha) x^alpha."""
    if r < 0:
        return SymPoly.constant(num_vars, 0)
    return SymPoly(num_vars, _one_row_series(num_vars, r)[r])


def two_row_q(a: int, b: int, num_vars: int) -> SymPoly:
    """Q_(a,b) = q_a q_b + 2 sum_{i=1}^{b} (-1)^i q_{a+i} q_{b-i}."""
    out = one_row_q(a, num_vars) * one_row_q(b, num_vars)
    for i in range(1, b + 1):
        out = out + (2 * (-1) ** i) * (one_row_q(a + i, num_vars) * one_row_q(b - i, num_vars))
    return out


@lru_cache(maxsize=None)
def _pfaffian(parts: Tuple[int, ...], num_vars: int) -> SymPoly:
    if not parts:
        return SymPoly.constant(num_vars, 1)
    out = SymPoly.constant(num_vars, 0)
    first, rest = parts[0], parts[1:]
    for j, other in enumerate(rest):
        minor = rest[:j] + rest[j + 1:]
        sign = 1 if j % 2 == 0 else -1
        out = out + sign * (two_row_q(first, other, num_vars) * _pfaffian(minor, num_vars))
    return out


@lru_cache(maxsize=None)
def schur_q(lam: StrictPartition, num_vars: int) -> SymPoly:
    """
    Schur Q-function Q_lam(x_1..x_N) by Pfaffian expansion over two-row Q's.

    With fewer variables than parts the result is the zero polynomial.
    """
    if num_vars < lam.length:
        logger.warning(f"Q_{lam} requested in {num_vars} variables; it vanishes there")
    parts = lam.parts
    if len(parts) % 2 == 1:
        parts = parts + (0,)
    return _pfaffian(parts, num_vars)


@lru_cache(maxsize=None)
def schur_p(lam: StrictPartition, num_vars: int) -> SymPoly:
    """P_lam = Q_lam / 2^len(lam)."""
    return schur_q(lam, num_vars).exact_div(1 << lam.length)


def _marked_shifted_fillings(lam: StrictPartition, num_vars: int, primed_diagonal: bool) -> Iterator[List[int]]:
    # letters 1' < 1 < 2' < 2 < ... encoded as 1, 2, 3, 4, ...; odd means primed
    cells = [(i, j) for i, part in enumerate(lam.parts) for j in range(i, i + part)]
    index = {cell: k for k, cell in enumerate(cells)}
    filling = [0] * len(cells)

    def place(k: int) -> Iterator[List[int]]:
        if k == len(cells):
            yield list(filling)
            return
        i, j = cells[k]
        left = filling[index[(i, j - 1)]] if (i, j - 1) in index else 0
        above = filling[index[(i - 1, j)]] if (i - 1, j) in index else 0
        for v in range(max(left, above, 1), 2 * num_vars + 1):
            primed = v % 2 == 1
            if primed and v == left:
                continue
            if not primed and v == above:
                continue
            if primed and i == j and not primed_diagonal:
                continue
            filling[k] = v
            yield from place(k + 1)

    yield from place(0)


def tableau_q(lam: StrictPartition, num_vars: int, primed_diagonal: bool = True) -> SymPoly:
    """Generating sum over marked shifted tableaux of shape lam (Q_lam, or P_lam without primed diagonal)."""
    terms: Dict[Tuple[int, ...], int] = {}
    for filling in _marked_shifted_fillings(lam, num_vars, primed_diagonal):
        monom = [0] * num_vars
        for v in filling:
            monom[(v - 1) // 2] += 1
        key = tuple(monom)
        terms[key] = terms.get(key, 0) + 1
    return SymPoly.from_terms(num_vars, terms)


def tableau_p(lam: StrictPartition, num_vars: int) -> SymPoly:
    return tableau_q(lam, num_vars, primed_diagonal=False)


def expand_in_q_basis(poly: SymPoly) -> Dict[StrictPartition, int]:
    """
    Coefficients of a homogeneous symmetric polynomial in the Q_mu basis.

    Peels off leading monomials in lexicographic order, which refines dominance.

    Raises:
        BasisSolveFailure: if a leading monomial is not a strict partition with a coefficient divisible by 2^len(mu)
    """
    residual = poly
    out: Dict[StrictPartition, int] = {}
    while not residual.is_zero():
        monom, coeff = residual.leading_term()
        parts = tuple(x for x in monom if x > 0)
        if list(monom) != sorted(monom, reverse=True) or len(set(parts)) != len(parts):
            raise BasisSolveFailure(f"leading monomial {monom} is not a strict partition")
        mu = StrictPartition(parts)
        lead = 1 << mu.length
        if coeff % lead:
            raise BasisSolveFailure(f"coefficient {coeff} of x^{monom} is not divisible by {lead}")
        b = coeff // lead
        out[mu] = b
        residual = residual - b * schur_q(mu, poly.num_vars)
    return out


@lru_cache(maxsize=None)
def _q_structure_constants(lam: StrictPartition, nu: StrictPartition) -> Tuple[Tuple[StrictPartition, int], ...]:
    num_vars = max(lam.size + nu.size, 1)
    logger.info(f"Expanding Q_{lam} * Q_{nu} in {num_vars} variables")
    product = schur_q(lam, num_vars) * schur_q(nu, num_vars)
    coefficients = expand_in_q_basis(product)
    for mu, b in coefficients.items():
        if b < 0:
            raise BasisSolveFailure(f"negative structure constant b^{mu}_{lam},{nu} = {b}")
    return tuple(sorted(coefficients.items(), reverse=True))


def q_structure_constants(lam: StrictPartition, nu: StrictPartition) -> Dict[StrictPartition, int]:
    """b^mu_{lam,nu} with Q_lam Q_nu = sum_mu b^mu_{lam,nu} Q_mu; zero entries are omitted."""
    return dict(_q_structure_constants(lam, nu))


def p_structure_constants(lam: StrictPartition, nu: StrictPartition) -> Dict[StrictPartition, int]:
    """g^mu_{lam,nu} with P_lam P_nu = sum_mu g^mu_{lam,nu} P_mu."""
    out = {}
    for mu, b in q_structure_constants(lam, nu).items():
        defect = lam.length + nu.length - mu.length
        if defect < 0 or b % (1 << defect):
            raise BasisSolveFailure(f"b^{mu}_{lam},{nu} = {b} is not a multiple of 2^{defect}")
        out[mu] = b >> defect
    return out

