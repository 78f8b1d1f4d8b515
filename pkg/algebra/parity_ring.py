"""
Exact arithmetic in the parity ring Z[eps]/(eps^2 - 1).

Multiplicities and dimensions in Trep q(inf) live here: eps records a parity
shift and theta = 1 + eps is the graded dimension of a rank one Clifford module.
"""

from dataclasses import dataclass
from typing import Dict, Union

from algebra.errors import NotThetaDivisible


@dataclass(frozen=True, order=True)
class GradedInt:
    """The element a + b*eps."""
    a: int = 0
    b: int = 0

    def __add__(self, other: Union["GradedInt", int]) -> "GradedInt":
        other = _coerce(other)
        return GradedInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "GradedInt":
        return GradedInt(-self.a, -self.b)

    def __sub__(self, other: Union["GradedInt", int]) -> "GradedInt":
        return self + (-_coerce(other))

    def __mul__(self, other: Union["GradedInt", int]) -> "GradedInt":
        other = _coerce(other)
        return GradedInt(self.a * other.a + self.b * other.b, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def eval_plus(self) -> int:
        return self.a + self.b

    def eval_minus(self) -> int:
        return self.a - self.b

    def is_theta_multiple(self) -> bool:
        return self.eval_minus() == 0

    def to_json(self) -> Dict[str, int]:
        return {"one": self.a, "eps": self.b}

    @classmethod
    def from_json(cls, data: Dict[str, int]) -> "GradedInt":
        return cls(int(data["one"]), int(data["eps"]))

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}e"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}e"


def _coerce(x: Union[GradedInt, int]) -> GradedInt:
    if isinstance(x, GradedInt):
        return x
    if isinstance(x, int):
        return GradedInt(x, 0)
    raise TypeError(f"cannot combine GradedInt with {type(x).__name__}")


ZERO = GradedInt(0, 0)
ONE = GradedInt(1, 0)
EPS = GradedInt(0, 1)
THETA = GradedInt(1, 1)


def add(x: GradedInt, y: GradedInt) -> GradedInt:
    return x + y


def mul(x: GradedInt, y: GradedInt) -> GradedInt:
    return x * y


def theta_pow(k: int) -> GradedInt:
    """(1+eps)^k, which equals 2^(k-1) * (1+eps) for k >= 1."""
    if k < 0:
        raise ValueError(f"theta_pow needs a nonnegative exponent, got {k}")
    if k == 0:
        return ONE
    c = 1 << (k - 1)
    return GradedInt(c, c)


def eval_plus(x: GradedInt) -> int:
    return x.eval_plus()


def eval_minus(x: GradedInt) -> int:
    return x.eval_minus()


def is_theta_multiple(x: GradedInt) -> bool:
    return x.is_theta_multiple()


def theta_div_total(x: GradedInt, k: int) -> int:
    """
    Total dimension of any xi with theta^k * xi = x.

    Division by theta forgets the eps -> -1 component, so only eval_plus survives.

    Raises:
        NotThetaDivisible: if x is not a theta multiple (k >= 1) or 2^k does not divide eval_plus(x)
    """
    if k < 0:
        raise ValueError(f"theta_div_total needs a nonnegative exponent, got {k}")
    if k == 0:
        return x.eval_plus()
    if x.eval_minus() != 0:
        raise NotThetaDivisible(f"{x} is not a multiple of theta (eval_minus = {x.eval_minus()})")
    total = x.eval_plus()
    if total % (1 << k) != 0:
        raise NotThetaDivisible(f"{x} is not divisible by theta^{k} (eval_plus = {total})")
    return total >> k
