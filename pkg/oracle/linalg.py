"""
Exact linear algebra over QQ on sparse vectors keyed by arbitrary hashable coordinates.

Vectors are dicts {coordinate: coefficient}; stacking them gives a sympy
DomainMatrix in sparse (dict-of-dicts) format.
"""

from typing import Dict, Hashable, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

Vector = Dict[Hashable, object]


def _coordinates(vectors: Sequence[Vector]) -> Tuple[List[Hashable], Dict[Hashable, int]]:
    coords = list(dict.fromkeys(c for v in vectors for c in v))
    return coords, {c: i for i, c in enumerate(coords)}


def stack(vectors: Sequence[Vector], index: Dict[Hashable, int], identity: bool = False) -> DomainMatrix:
    """Rows are the vectors; with identity=True an identity block is appended on the right."""
    width = len(index)
    rows = {}
    for i, v in enumerate(vectors):
        row = {index[c]: QQ.convert(x) for c, x in v.items() if x != 0}
        if identity:
            row[width + i] = QQ.one
        if row:
            rows[i] = row
    return DomainMatrix(rows, (len(vectors), width + (len(vectors) if identity else 0)), QQ)


def rank(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    coords, index = _coordinates(vectors)
    if not coords:
        return 0
    return stack(vectors, index).rank()


def span_basis(vectors: Sequence[Vector]) -> List[Vector]:
    """A basis of the span, read off the reduced row echelon form."""
    if not vectors:
        return []
    coords, index = _coordinates(vectors)
    if not coords:
        return []
    reduced, pivots = stack(vectors, index).rref()
    rows = reduced.to_list()
    return [
        {coords[j]: x for j, x in enumerate(rows[i]) if x}
        for i in range(len(pivots))
    ]


def left_kernel(rows: Sequence[Vector]) -> List[List[object]]:
    """
    All coefficient vectors c with sum_k c_k * rows[k] = 0, as a basis.

    Row reduces [M | I]; rows whose M-part vanishes carry the relations.
    """
    d = len(rows)
    if d == 0:
        return []
    coords, index = _coordinates(rows)
    width = len(coords)
    reduced, pivots = stack(rows, index, identity=True).rref()
    table = reduced.to_list()
    return [table[i][width:] for i, col in enumerate(pivots) if col >= width]


def combine(coefficients: Sequence[object], basis: Sequence[Vector]) -> Vector:
    out: Vector = {}
    for c, v in zip(coefficients, basis):
        if not c:
            continue
        for key, x in v.items():
            out[key] = out.get(key, 0) + c * x
    return {k: x for k, x in out.items() if x}
