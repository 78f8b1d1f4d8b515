"""
Marked diagrams: the basis D(p,q,r) of C(p,q,r) = Hom(T^{p,q}, T^{p-r,q-r}).

Top row nodes: whites 1..p, blacks p+1..p+q. Bottom row nodes: whites 1..p-r,
blacks p-r+1..p+q-2r. A diagram pairs r white top nodes with r black top nodes
and joins every bottom node k to an unpaired top node s(k) of the same colour.
Every edge carries a mark bit.

concat(d1, d2) stacks d2 below d1 (d1 is applied first). A product-ordered
factor list x_1 ... x_m means x_m is applied first, so it is realized by
concatenating the factors from right to left.

Text syntax: "p q r | pairs: (w,b)* ... | through: k->s* ..." where "*" marks
an edge and "-" stands for an empty list.
"""

import logging
import re
from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from algebra.errors import ShapeMismatch
from algebra.parity_ring import ZERO, GradedInt, theta_pow

logger = logging.getLogger(__name__)

Pair = Tuple[int, int, int]       # (white top node, black top node, mark)
Strand = Tuple[int, int]          # (top node, mark), indexed by bottom node


@dataclass(frozen=True, order=True)
class Diagram:
    p: int
    q: int
    r: int
    pairs: Tuple[Pair, ...]
    through: Tuple[Strand, ...]

    def __post_init__(self):
        p, q, r = self.p, self.q, self.r
        if r < 0 or r > min(p, q):
            raise ShapeMismatch(f"D({p},{q},{r}) is empty: need 0 <= r <= min(p, q)")
        if len(self.pairs) != r:
            raise ShapeMismatch(f"a diagram in D({p},{q},{r}) has {r} top pairs, got {len(self.pairs)}")
        if len(self.through) != p + q - 2 * r:
            raise ShapeMismatch(f"a diagram in D({p},{q},{r}) has {p + q - 2 * r} through strands")
        seen = []
        for w, b, mark in self.pairs:
            if not (1 <= w <= p < b <= p + q):
                raise ShapeMismatch(f"pair ({w},{b}) must join a white and a black top node")
            seen += [w, b]
        for k, (s, mark) in enumerate(self.through, start=1):
            if self.bottom_is_white(k) != (1 <= s <= p):
                raise ShapeMismatch(f"through strand {k}->{s} joins nodes of different colours")
            seen.append(s)
        if sorted(seen) != list(range(1, p + q + 1)):
            raise ShapeMismatch(f"every top node must be used exactly once, got {sorted(seen)}")
        if any(m not in (0, 1) for *_, m in self.pairs) or any(m not in (0, 1) for _, m in self.through):
            raise ShapeMismatch("marks are 0 or 1")

    @property
    def bottom_p(self) -> int:
        return self.p - self.r

    @property
    def bottom_q(self) -> int:
        return self.q - self.r

    def bottom_is_white(self, k: int) -> bool:
        return k <= self.p - self.r

    def __str__(self) -> str:
        return format_diagram(self)


@dataclass(frozen=True)
class ElementaryDiagram:
    kind: str
    p: int
    q: int
    i: Optional[int] = None

    def __post_init__(self):
        if self.kind == "S":
            if self.i is None or not (1 <= self.i < self.p + self.q) or self.i == self.p:
                raise ShapeMismatch(f"s({self.p},{self.q},{self.i}) needs 1 <= i < p+q and i != p")
        elif self.kind == "O":
            if self.i is None or not (1 <= self.i <= self.p + self.q):
                raise ShapeMismatch(f"o({self.p},{self.q},{self.i}) needs 1 <= i <= p+q")
        elif self.kind == "T":
            if self.p < 1 or self.q < 1:
                raise ShapeMismatch(f"t({self.p},{self.q}) needs p, q >= 1")
        else:
            raise ValueError(f"unknown elementary diagram kind '{self.kind}'")

    def diagram(self) -> Diagram:
        p, q = self.p, self.q
        if self.kind == "T":
            through = tuple((k, 0) for k in range(1, p)) + tuple((k + 2, 0) for k in range(p, p + q - 1))
            return Diagram(p, q, 1, ((p, p + 1, 0),), through)
        strands = [[k, 0] for k in range(1, p + q + 1)]
        if self.kind == "S":
            strands[self.i - 1][0], strands[self.i][0] = self.i + 1, self.i
        else:
            strands[self.i - 1][1] = 1
        return Diagram(p, q, 0, (), tuple(tuple(s) for s in strands))

    def __str__(self) -> str:
        if self.kind == "T":
            return f"t({self.p},{self.q})"
        return f"{self.kind.lower()}({self.p},{self.q},{self.i})"


def identity_diagram(p: int, q: int) -> Diagram:
    return Diagram(p, q, 0, (), tuple((k, 0) for k in range(1, p + q + 1)))


def elementary(kind: str, p: int, q: int, i: Optional[int] = None) -> Diagram:
    return ElementaryDiagram(kind, p, q, i).diagram()


def enumerate_diagrams(p: int, q: int, r: int) -> List[Diagram]:
    """All of D(p,q,r), in a deterministic order."""
    if r < 0 or r > min(p, q):
        return []
    whites = range(1, p + 1)
    blacks = range(p + 1, p + q + 1)
    out = []
    for paired_w in combinations(whites, r):
        for paired_b in permutations(blacks, r):
            free_w = [w for w in whites if w not in paired_w]
            free_b = [b for b in blacks if b not in paired_b]
            for image_w in permutations(free_w):
                for image_b in permutations(free_b):
                    targets = image_w + image_b
                    for pair_marks in product((0, 1), repeat=r):
                        pairs = tuple(zip(paired_w, paired_b, pair_marks))
                        for marks in product((0, 1), repeat=len(targets)):
                            out.append(Diagram(p, q, r, pairs, tuple(zip(targets, marks))))
    return out


def dim_c(p: int, q: int, r: int) -> GradedInt:
    """c(p,q,r) = p! q! theta^(p+q-r) / r!, zero outside 0 <= r <= min(p,q)."""
    if p < 0 or q < 0 or r < 0 or r > min(p, q):
        return ZERO
    return theta_pow(p + q - r) * (factorial(p) * factorial(q) // factorial(r))


def dim_hom_T(p: int, q: int, p2: int, q2: int) -> GradedInt:
    """dim Hom(T^{p,q}, T^{p2,q2}): nonzero only when p - p2 = q - q2 >= 0."""
    r = p - p2
    if r != q - q2 or r < 0:
        return ZERO
    return dim_c(p, q, r)


def graded_dim_A(k: int, r: int) -> GradedInt:
    """Sum of c(p,q,r) over p + q <= k."""
    total = ZERO
    for p in range(k + 1):
        for q in range(k + 1 - p):
            total = total + dim_c(p, q, r)
    return total


def concat(d1: Diagram, d2: Diagram) -> Diagram:
    """d2 stacked below d1; an edge is marked iff its path crosses an odd number of marks."""
    if (d2.p, d2.q) != (d1.bottom_p, d1.bottom_q):
        raise ShapeMismatch(
            f"cannot stack D({d2.p},{d2.q},{d2.r}) below a diagram with bottom row ({d1.bottom_p},{d1.bottom_q})"
        )
    pairs = list(d1.pairs)
    for w, b, mark in d2.pairs:
        (tw, mw), (tb, mb) = d1.through[w - 1], d1.through[b - 1]
        pairs.append((tw, tb, (mark + mw + mb) % 2))
    through = []
    for middle, mark in d2.through:
        top, m1 = d1.through[middle - 1]
        through.append((top, (mark + m1) % 2))
    return Diagram(d1.p, d1.q, d1.r + d2.r, tuple(sorted(pairs)), tuple(through))


def compose_elementary(factors: Sequence[ElementaryDiagram], p: int, q: int) -> Diagram:
    """Realize a product-ordered factor list as a diagram with top row (p, q)."""
    current = identity_diagram(p, q)
    for factor in reversed(factors):
        current = concat(current, factor.diagram())
    return current


def _adjacent_swaps(target: List[int]) -> List[int]:
    # bubble sort; returns the swap positions (1-based) applied in order
    row = list(target)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(row) - 1):
            if row[i] > row[i + 1]:
                row[i], row[i + 1] = row[i + 1], row[i]
                swaps.append(i + 1)
                changed = True
    return swaps


def canonical_decomposition(d: Diagram) -> List[ElementaryDiagram]:
    """
    Product-ordered factors t ... t o ... o s ... s whose concatenation is d.

    The s-block realizes a permutation that moves the j-th pair (by white node)
    to positions p-r+j and p+r-j+1, which the t-chain then contracts from the
    inside out. Pair marks sit on the white end.
    """
    p, q, r = d.p, d.q, d.r
    position: Dict[int, int] = {}
    marks = []
    for j, (w, b, mark) in enumerate(sorted(d.pairs), start=1):
        position[w] = p - r + j
        position[b] = p + r - j + 1
        if mark:
            marks.append(p - r + j)
    for k, (top, mark) in enumerate(d.through, start=1):
        pos = k if d.bottom_is_white(k) else k + 2 * r
        position[top] = pos
        if mark:
            marks.append(pos)

    target = [0] * (p + q)
    for top, pos in position.items():
        target[pos - 1] = top

    factors = [ElementaryDiagram("T", p - r + j, q - r + j) for j in range(1, r + 1)]
    factors += [ElementaryDiagram("O", p, q, i) for i in sorted(marks)]
    factors += [ElementaryDiagram("S", p, q, i) for i in _adjacent_swaps(target)]
    return factors


_PAIR_RE = re.compile(r"\((\d+),(\d+)\)(\*?)")
_STRAND_RE = re.compile(r"(\d+)->(\d+)(\*?)")


def format_diagram(d: Diagram) -> str:
    pairs = " ".join(f"({w},{b}){'*' if m else ''}" for w, b, m in d.pairs) or "-"
    through = " ".join(f"{k}->{s}{'*' if m else ''}" for k, (s, m) in enumerate(d.through, start=1)) or "-"
    return f"{d.p} {d.q} {d.r} | pairs: {pairs} | through: {through}"


def parse_diagram(text: str) -> Diagram:
    try:
        head, pairs_part, through_part = (x.strip() for x in text.split("|"))
        p, q, r = (int(x) for x in head.split())
        pairs_text = pairs_part.split(":", 1)[1].strip()
        through_text = through_part.split(":", 1)[1].strip()
    except (ValueError, IndexError):
        raise ShapeMismatch(f"cannot parse diagram '{text}'")
    pairs = tuple(sorted((int(w), int(b), int(bool(m))) for w, b, m in _PAIR_RE.findall(pairs_text)))
    strands = sorted((int(k), int(s), int(bool(m))) for k, s, m in _STRAND_RE.findall(through_text))
    if [k for k, _, _ in strands] != list(range(1, len(strands) + 1)):
        raise ShapeMismatch(f"through strands must list bottom nodes 1..{len(strands)} once each: '{text}'")
    return Diagram(p, q, r, pairs, tuple((s, m) for _, s, m in strands))


# Finite-rank realization. V_n has basis e_1..e_n (indices 0..n-1, even) and
# ebar_1..ebar_n (indices n..2n-1, odd); W_n has the dual basis f, fbar laid out
# the same way. A basis tensor is a tuple of such indices, V-factors first.

BasisTensor = Tuple[int, ...]
Monomial = Optional[Tuple[int, BasisTensor]]


def _parity(index: int, n: int) -> int:
    return 1 if index >= n else 0


def _apply_elementary(e: ElementaryDiagram, sign: int, u: BasisTensor, n: int) -> Monomial:
    if e.kind == "S":
        i = e.i - 1
        a, b = u[i], u[i + 1]
        if _parity(a, n) and _parity(b, n):
            sign = -sign
        return sign, u[:i] + (b, a) + u[i + 2:]
    if e.kind == "O":
        i = e.i - 1
        if sum(_parity(x, n) for x in u[:i]) % 2:
            sign = -sign
        x = u[i]
        if x < n:
            image = x + n
        else:
            image = x - n
            if i < e.p:
                sign = -sign      # P(ebar_j) = -e_j on V, P(fbar_j) = f_j on W
        return sign, u[:i] + (image,) + u[i + 1:]
    # t(p,q): contract positions p and p+1 with (u_{p+1}, u_p)
    i = e.p - 1
    a, b = u[i], u[i + 1]
    if a != b:
        return None
    if _parity(a, n):
        sign = -sign
    return sign, u[:i] + u[i + 2:]


def gamma_apply(factors: Sequence[ElementaryDiagram], u: BasisTensor, n: int) -> Monomial:
    """Image of one basis tensor under the product-ordered factors (rightmost first)."""
    sign, current = 1, u
    for factor in reversed(factors):
        image = _apply_elementary(factor, sign, current, n)
        if image is None:
            return None
        sign, current = image
    return sign, current


def basis_tensors(length: int, n: int) -> Iterator[BasisTensor]:
    return product(range(2 * n), repeat=length)


def gamma_eval(d: Diagram, n: int) -> Dict[BasisTensor, Tuple[int, BasisTensor]]:
    """
    Matrix of gamma(d) on T^{p,q}_n as a map basis tensor -> (sign, image tensor).

    gamma(d) is the composite of the elementary operators of its canonical
    decomposition, so every column has at most one nonzero entry.
    """
    if n < 1:
        raise ValueError(f"rank must be positive, got {n}")
    factors = canonical_decomposition(d)
    out = {}
    for u in basis_tensors(d.p + d.q, n):
        image = gamma_apply(factors, u, n)
        if image is not None:
            out[u] = image
    return out


def compose_matrices(first: Dict[BasisTensor, Tuple[int, BasisTensor]],
                     second: Dict[BasisTensor, Tuple[int, BasisTensor]]) -> Dict[BasisTensor, Tuple[int, BasisTensor]]:
    """The map `second` after `first`."""
    out = {}
    for u, (s1, v) in first.items():
        if v in second:
            s2, w = second[v]
            out[u] = (s1 * s2, w)
    return out


def gamma_compose(d1: Diagram, d2: Diagram, n: int) -> Dict[BasisTensor, Tuple[int, BasisTensor]]:
    """gamma(d2) after gamma(d1), for d2 stacked below d1."""
    return compose_matrices(gamma_eval(d1, n), gamma_eval(d2, n))


def functoriality_sign(d1: Diagram, d2: Diagram, n: int) -> Optional[int]:
    """
    The sign c in gamma(concat(d1, d2)) = c * gamma(d2) after gamma(d1), or None
    if no single sign works.
    """
    lhs = gamma_eval(concat(d1, d2), n)
    rhs = gamma_compose(d1, d2, n)
    if lhs.keys() != rhs.keys():
        return None
    signs = set()
    for u, (s, v) in lhs.items():
        s2, v2 = rhs[u]
        if v != v2:
            return None
        signs.add(s * s2)
    if len(signs) > 1:
        return None
    return signs.pop() if signs else 1
