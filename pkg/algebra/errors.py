"""
Error types raised by the qtrep engine.

Every error carries the mathematical statement a hard failure would contradict,
so the command line can report it alongside the message.
"""

from typing import Optional


class QtrepError(Exception):
    statement: str = "internal consistency of the qtrep engine"

    def __init__(self, message: str, statement: Optional[str] = None):
        super().__init__(message)
        if statement is not None:
            self.statement = statement


class NotThetaDivisible(QtrepError, ArithmeticError):
    statement = "multiplicities assembled over a theta-power denominator are theta-divisible"


class SizeMismatch(QtrepError, ValueError):
    statement = "dominance order compares partitions of equal size"


class InvalidPartition(QtrepError, ValueError):
    statement = "labels of simple objects are strict partitions"


class BasisSolveFailure(QtrepError):
    statement = "Schur Q-functions of degree d span the symmetric polynomials they generate in d variables"


class ExponentUncalibrated(QtrepError):
    statement = "the theta-exponent of an LR coefficient is known for its parity class"


class ShapeMismatch(QtrepError, ValueError):
    statement = "concatenated diagrams share their middle row"


class RankTooSmall(QtrepError, ValueError):
    statement = "finite-rank computations stay inside the stable range"


class CacheFormatError(QtrepError):
    statement = "the structure-constant cache has a known format version"


class BlockMismatch(QtrepError):
    statement = "the blocks of the category are exactly the fibers of |lam| - |mu|"


class CliffordCountError(QtrepError):
    statement = "singular vectors of weight mu form copies of the highest-weight Clifford module"
