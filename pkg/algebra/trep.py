"""
Category-level numerics for Trep q(inf): Hom spaces between indecomposable
injectives Z(lam, mu), their socle layers, Ext between simples, blocks,
tensor products and the Koszul grading check.

Sums with theta-power denominators are assembled over a common denominator and
divided once; a result that went through a division keeps only its total
dimension and is flagged parity_ambiguous.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple, Union

from algebra.lr import f_coeff, structure_constants
from algebra.parity_ring import ONE, THETA, ZERO, GradedInt, theta_div_total, theta_pow
from algebra.partitions import (
    Bipartition, StrictPartition, add_box, enumerate_bipartitions, enumerate_strict, remove_box,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomEntry:
    total: int
    graded: Optional[GradedInt]
    parity_ambiguous: bool

    @classmethod
    def exact(cls, value: GradedInt) -> "HomEntry":
        return cls(value.eval_plus(), value, False)


NO_HOM = HomEntry(0, ZERO, False)

TableKey = Tuple[Bipartition, Bipartition, int]


class HomTable:
    """Nonzero multiplicities keyed by (source label, target label, layer)."""

    def __init__(self, entries: Optional[Dict[TableKey, HomEntry]] = None):
        self.entries: Dict[TableKey, HomEntry] = dict(entries or {})

    def set(self, src: Bipartition, dst: Bipartition, layer: int, entry: HomEntry):
        if entry.total:
            self.entries[(src, dst, layer)] = entry

    def get(self, src: Bipartition, dst: Bipartition, layer: int) -> HomEntry:
        return self.entries.get((src, dst, layer), NO_HOM)

    def items(self) -> List[Tuple[TableKey, HomEntry]]:
        return sorted(self.entries.items(), key=lambda kv: kv[0])

    def __len__(self) -> int:
        return len(self.entries)


def _assemble(terms: Iterable[Tuple[int, GradedInt]], base: int) -> HomEntry:
    """
    Evaluate sum_t value_t / theta^(base + odd_t) for terms (odd_t, value_t), odd_t in {0, 1}.

    The common denominator is theta^base, times theta when some odd term contributes.
    """
    terms = [(odd, value) for odd, value in terms if value]
    if not terms:
        return NO_HOM
    extra = 1 if any(odd for odd, _ in terms) else 0
    denominator = base + extra
    numerator = ZERO
    for odd, value in terms:
        numerator = numerator + theta_pow(extra - odd) * value
    if denominator == 0:
        return HomEntry.exact(numerator)
    return HomEntry(theta_div_total(numerator, denominator), None, True)


def _layer_terms(src: Bipartition, dst: Bipartition, r: int) -> List[Tuple[int, GradedInt]]:
    lam, mu = src.lam, src.mu
    lam2, mu2 = dst.lam, dst.mu
    terms = []
    for gamma in enumerate_strict(r):
        value = f_coeff(lam2, gamma, lam) * f_coeff(mu2, gamma, mu)
        terms.append((gamma.parity, value))
    return terms


def _layer_of(src: Bipartition, dst: Bipartition) -> Optional[int]:
    r = src.lam.size - dst.lam.size
    if r < 0 or src.mu.size - dst.mu.size != r:
        return None
    return r


def hom_dim_Z(src: Bipartition, dst: Bipartition) -> HomEntry:
    """dim Hom(Z(src), Z(dst)); zero unless |lam| - |lam'| = |mu| - |mu'| >= 0."""
    r = _layer_of(src, dst)
    if r is None:
        return NO_HOM
    base = src.lam.parity * src.mu.parity + dst.lam.parity * dst.mu.parity
    return _assemble(_layer_terms(src, dst, r), base)


def socle_exponent(src: Bipartition, dst: Bipartition) -> int:
    """Extra theta-power of the socle multiplicity: p p' + p + p' read modulo 2."""
    p, p2 = src.parity, dst.parity
    return (p * p2 + p + p2) % 2


def socle_mult(src: Bipartition, dst: Bipartition, r: int) -> HomEntry:
    """[soc_r Z(src) : V(dst)], the multiplicity of V(dst) in the r-th socle layer."""
    if _layer_of(src, dst) != r:
        return NO_HOM
    base = src.lam.parity * src.mu.parity + dst.lam.parity * dst.mu.parity + socle_exponent(src, dst)
    return _assemble(_layer_terms(src, dst, r), base)


def socle_layers(bp: Bipartition, depth: Optional[int] = None) -> Dict[int, Dict[Bipartition, HomEntry]]:
    """All nonzero layers soc_0 .. soc_{depth-1} of Z(bp) (all of them by default)."""
    top = bp.degree if depth is None else min(depth - 1, bp.degree)
    layers = {}
    for r in range(top + 1):
        layer = {}
        for lam2 in enumerate_strict(bp.lam.size - r):
            for mu2 in enumerate_strict(bp.mu.size - r):
                entry = socle_mult(bp, Bipartition(lam2, mu2), r)
                if entry.total:
                    layer[Bipartition(lam2, mu2)] = entry
        if layer:
            layers[r] = layer
    return layers


def ext_dim(i: int, src: Bipartition, dst: Bipartition) -> HomEntry:
    """dim ext^i(V(src), V(dst)), read as the i-th socle layer of Z(dst)."""
    return socle_mult(dst, src, i)


@dataclass(frozen=True)
class Ext1Info:
    nonzero: bool
    case: Optional[str] = None
    expected_total: int = 0

    def __bool__(self) -> bool:
        return self.nonzero


# total of ext^1(V(src), V(dst)) per case; first letter is the type of V(src)
_EXT1_TOTALS = {"MM-same": 2, "MM-mixed": 1, "QM": 1, "MQ": 1, "QQ-same": 2, "QQ-mixed": 1}


def ext1_nonzero(src: Bipartition, dst: Bipartition) -> Ext1Info:
    """ext^1(V(src), V(dst)) != 0 iff dst.lam is src.lam plus a box and dst.mu is src.mu plus a box."""
    if dst.lam not in add_box(src.lam) or dst.mu not in add_box(src.mu):
        return Ext1Info(False)
    types = ("Q" if src.parity else "M") + ("Q" if dst.parity else "M")
    if types in ("MM", "QQ"):
        same = (src.lam.parity, src.mu.parity) == (dst.lam.parity, dst.mu.parity)
        case = f"{types}-{'same' if same else 'mixed'}"
    else:
        case = types
    return Ext1Info(True, case, _EXT1_TOTALS[case])


def block_of(bp: Bipartition) -> int:
    return bp.block


def block_components(bound: int, margin: int = 1) -> List[List[Bipartition]]:
    """
    Connected components of the Ext^1 graph on labels with |lam|, |mu| <= bound.

    The graph is built on the truncation enlarged by `margin`; fibers with
    |m| = bound are only connected through labels one size up.
    """
    labels = enumerate_bipartitions(bound + margin)
    label_set = set(labels)
    parent = {bp: bp for bp in labels}

    def find(x: Bipartition) -> Bipartition:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for bp in labels:
        for lam2 in add_box(bp.lam):
            for mu2 in add_box(bp.mu):
                other = Bipartition(lam2, mu2)
                if other in label_set:
                    parent[find(other)] = find(bp)

    groups: Dict[Bipartition, List[Bipartition]] = {}
    for bp in labels:
        if bp.lam.size <= bound and bp.mu.size <= bound:
            groups.setdefault(find(bp), []).append(bp)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: (g[0].block, g[0]))


def u_factor(alpha2: StrictPartition, alpha: StrictPartition, beta: StrictPartition) -> GradedInt:
    """u = 1 if p(alpha, beta) = 0 and p(alpha2, beta) = 1, theta otherwise."""
    if (alpha.parity + beta.parity) % 2 == 0 and (alpha2.parity + beta.parity) % 2 == 1:
        return ONE
    return THETA


def tensor_ZZ(a: Bipartition, b: Bipartition) -> Dict[Bipartition, HomEntry]:
    """Multiplicities of Z(lam'', mu'') in Z(a) x Z(b)."""
    out = {}
    lams = sorted(structure_constants(a.lam, b.lam))
    mus = sorted(structure_constants(a.mu, b.mu))
    for lam3 in lams:
        for mu3 in mus:
            value = theta_pow(lam3.parity * mu3.parity) * f_coeff(a.lam, b.lam, lam3) * f_coeff(a.mu, b.mu, mu3)
            base = (a.lam.parity * a.mu.parity + b.lam.parity * b.mu.parity
                    + lam3.parity + mu3.parity)
            entry = _assemble([(0, value)], base)
            if entry.total:
                out[Bipartition(lam3, mu3)] = entry
    return out


def tensor_Z_V(bp: Bipartition) -> Dict[Bipartition, HomEntry]:
    """Z(lam, mu) x V = sum over lam' in lam + box of Z(lam', mu)^u(lam', lam, mu)."""
    return {
        Bipartition(lam2, bp.mu): HomEntry.exact(u_factor(lam2, bp.lam, bp.mu))
        for lam2 in add_box(bp.lam)
    }


def tensor_Z_W(bp: Bipartition) -> Dict[Bipartition, HomEntry]:
    return {
        Bipartition(bp.lam, mu2): HomEntry.exact(u_factor(mu2, bp.mu, bp.lam))
        for mu2 in add_box(bp.mu)
    }


@dataclass
class TranslationSocle:
    soc: Dict[Bipartition, GradedInt]
    soc2: Dict[Bipartition, GradedInt]


def translation_socle(bp: Bipartition, direction: str) -> TranslationSocle:
    """The two socle layers of V(lam, mu) x V (direction "V") or V(lam, mu) x W ("W")."""
    lam, mu = bp.lam, bp.mu
    if direction == "V":
        soc = {Bipartition(l2, mu): u_factor(l2, lam, mu) for l2 in add_box(lam)}
        soc2 = {Bipartition(lam, m2): u_factor(mu, m2, lam) for m2 in remove_box(mu)}
    elif direction == "W":
        soc = {Bipartition(lam, m2): u_factor(m2, mu, lam) for m2 in add_box(mu)}
        soc2 = {Bipartition(l2, mu): u_factor(lam, l2, mu) for l2 in remove_box(lam)}
    else:
        raise ValueError(f"direction must be 'V' or 'W', got '{direction}'")
    return TranslationSocle(soc, soc2)


def build_socle_table(bound: int, num_threads: int = 1) -> HomTable:
    """socle_mult for every pair of labels within the bound and every layer up to min(|lam|, |mu|) + 1."""
    labels = enumerate_bipartitions(bound)
    logger.info(f"Filling socle table for {len(labels)} labels with {num_threads} thread(s)")

    def row(src: Bipartition) -> List[Tuple[TableKey, HomEntry]]:
        out = []
        for dst in labels:
            for r in range(src.degree + 2):
                entry = socle_mult(src, dst, r)
                if entry.total:
                    out.append(((src, dst, r), entry))
        return out

    table = HomTable()
    with ThreadPoolExecutor(max_workers=num_threads) as pool:
        for cells in pool.map(row, labels):
            for (src, dst, r), entry in cells:
                table.set(src, dst, r, entry)
    return table


@dataclass
class KoszulReport:
    passed: bool
    checked: int
    counterexamples: List[Tuple[Bipartition, Bipartition, int, str]] = field(default_factory=list)


def koszul_check(truncation: Union[int, HomTable], num_threads: int = 1) -> KoszulReport:
    """
    Every nonzero layer r of Z(lam, mu) containing V(lam', mu') must satisfy
    |lam| - |lam'| = |mu| - |mu'| = r, d(lam, mu) - d(lam', mu') = r and
    r <= min(|lam|, |mu|).
    """
    table = truncation if isinstance(truncation, HomTable) else build_socle_table(truncation, num_threads)
    bad = []
    for (src, dst, r), entry in table.items():
        if not entry.total:
            continue
        if src.lam.size - dst.lam.size != r or src.mu.size - dst.mu.size != r:
            bad.append((src, dst, r, "layer does not match the size drop"))
        elif src.degree - dst.degree != r:
            bad.append((src, dst, r, "Koszul degree does not drop by the layer index"))
        elif r > src.degree:
            bad.append((src, dst, r, "layer beyond min(|lam|, |mu|)"))
    return KoszulReport(passed=not bad, checked=len(table), counterexamples=bad)


def totals(product: Dict[Bipartition, HomEntry]) -> Dict[Bipartition, int]:
    """Forget gradings; compares decompositions computed with and without theta-division."""
    return {bp: e.total for bp, e in product.items() if e.total}
