"""
Strict partitions and bipartitions: the labels of simple objects V(lambda, mu).

Text syntax: "3,1" is (3,1), "-" (or an empty string) is the empty partition,
and a bipartition is written "3,1|2".
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import accumulate
from typing import List, Tuple

from algebra.errors import InvalidPartition, SizeMismatch


@dataclass(frozen=True, order=True)
class StrictPartition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(x, int) or x <= 0 for x in parts):
            raise InvalidPartition(f"parts must be positive integers: {parts}")
        if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartition(f"parts must be strictly decreasing: {parts}")

    @classmethod
    def of(cls, *parts: int) -> "StrictPartition":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def parity(self) -> int:
        return len(self.parts) % 2

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = StrictPartition()
BOX = StrictPartition((1,))


class SimpleType(str, Enum):
    """Endomorphism type of a simple object: C (M) or C[xi]/(xi^2-1) (Q)."""
    M = "M"
    Q = "Q"


@dataclass(frozen=True, order=True)
class Bipartition:
    lam: StrictPartition = EMPTY
    mu: StrictPartition = EMPTY

    @property
    def parity(self) -> int:
        return (self.lam.parity + self.mu.parity) % 2

    @property
    def degree(self) -> int:
        """Koszul degree d(lambda, mu) = min(|lambda|, |mu|)."""
        return min(self.lam.size, self.mu.size)

    @property
    def block(self) -> int:
        return self.lam.size - self.mu.size

    def __str__(self) -> str:
        return format_bipartition(self)


def enumerate_strict(n: int) -> List[StrictPartition]:
    """All strict partitions of n in reverse lexicographic order."""
    if n < 0:
        raise ValueError(f"cannot enumerate partitions of a negative number: {n}")
    return [StrictPartition(p) for p in _strict_parts(n, n)]


@lru_cache(maxsize=None)
def _strict_parts(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _strict_parts(n - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_bipartitions(bound: int) -> List[Bipartition]:
    """All (lambda, mu) with |lambda|, |mu| <= bound, sorted."""
    labels = [lam for n in range(bound + 1) for lam in enumerate_strict(n)]
    return sorted(Bipartition(lam, mu) for lam in labels for mu in labels)


def add_box(lam: StrictPartition) -> List[StrictPartition]:
    parts = lam.parts
    out = []
    for i, x in enumerate(parts):
        if i == 0 or parts[i - 1] > x + 1:
            out.append(StrictPartition(parts[:i] + (x + 1,) + parts[i + 1:]))
    if not parts or parts[-1] > 1:
        out.append(StrictPartition(parts + (1,)))
    return sorted(out, reverse=True)


def remove_box(lam: StrictPartition) -> List[StrictPartition]:
    parts = lam.parts
    out = []
    for i, x in enumerate(parts):
        last = i == len(parts) - 1
        if last and x == 1:
            out.append(StrictPartition(parts[:-1]))
        elif last or parts[i + 1] < x - 1:
            out.append(StrictPartition(parts[:i] + (x - 1,) + parts[i + 1:]))
    return sorted(out, reverse=True)


def dominance_leq(lam: StrictPartition, nu: StrictPartition) -> bool:
    if lam.size != nu.size:
        raise SizeMismatch(f"dominance needs equal sizes, got |{lam}| = {lam.size} and |{nu}| = {nu.size}")
    width = max(lam.length, nu.length)
    left = accumulate(lam.parts + (0,) * (width - lam.length))
    right = accumulate(nu.parts + (0,) * (width - nu.length))
    return all(x <= y for x, y in zip(left, right))


def simple_type(bp: Bipartition) -> SimpleType:
    return SimpleType.Q if bp.parity == 1 else SimpleType.M


@lru_cache(maxsize=None)
def count_standard_shifted(lam: StrictPartition) -> int:
    """Number of standard shifted Young tableaux of shape lam."""
    if lam.size == 0:
        return 1
    return sum(count_standard_shifted(smaller) for smaller in remove_box(lam))


def parse_partition(text: str) -> StrictPartition:
    text = text.strip()
    if text in ("", "-", "0"):
        return EMPTY
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InvalidPartition(f"cannot parse partition '{text}'")
    return StrictPartition(parts)


def parse_bipartition(text: str) -> Bipartition:
    if text.count("|") != 1:
        raise InvalidPartition(f"a bipartition is written 'lambda|mu', got '{text}'")
    left, right = text.split("|")
    return Bipartition(parse_partition(left), parse_partition(right))


def format_partition(lam: StrictPartition) -> str:
    return ",".join(str(x) for x in lam.parts) if lam.parts else "-"


def format_bipartition(bp: Bipartition) -> str:
    return f"{format_partition(bp.lam)}|{format_partition(bp.mu)}"

