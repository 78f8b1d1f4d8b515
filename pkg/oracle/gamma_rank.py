"""Linear independence of the realized diagram basis gamma(D(p,q,r)) at finite rank."""

import logging

from algebra.diagrams import enumerate_diagrams, gamma_eval
from algebra.errors import RankTooSmall
from oracle.linalg import rank

logger = logging.getLogger(__name__)


def gamma_rank(p: int, q: int, r: int, n: int) -> int:
    """Rank over QQ of the matrices gamma(d, n), d in D(p,q,r)."""
    if n < p + q:
        raise RankTooSmall(f"rank {n} is below p + q = {p + q}")
    vectors = []
    for d in enumerate_diagrams(p, q, r):
        matrix = gamma_eval(d, n)
        vectors.append({(u, v): sign for u, (sign, v) in matrix.items()})
    logger.info(f"Ranking {len(vectors)} realized diagrams of D({p},{q},{r}) at rank {n}")
    return rank(vectors)


def gamma_rank_check(p: int, q: int, r: int, n: int) -> bool:
    return gamma_rank(p, q, r, n) == len(enumerate_diagrams(p, q, r))
