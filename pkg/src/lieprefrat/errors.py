"""Exception hierarchy.

Everything raised on purpose by this package derives from LiePrefratError, so
callers (and the CLI) can distinguish "your input is bad" from genuine bugs.
"""

from __future__ import annotations


class LiePrefratError(Exception):
    """Base class for all errors raised by lieprefrat."""


class UnsupportedPrime(LiePrefratError):
    """The characteristic is not one of the supported primes 2..13."""


class DimensionMismatch(LiePrefratError):
    """Vectors or subspaces from incompatible ambient spaces were mixed."""


class InvalidStructure(LiePrefratError):
    """A structure-constant table violates the Lie axioms.

    Carries the first witness found: ("antisymmetry", i, j) or
    ("jacobi", i, j, k) together with the offending value.
    """

    def __init__(self, kind: str, indices: tuple, value: tuple):
        self.kind = kind
        self.indices = indices
        self.value = value
        super().__init__(f"{kind} fails at basis indices {indices}: residue {value}")


class NotASubalgebra(LiePrefratError):
    """A subspace required to be bracket-closed is not.

    Witness: a pair of basis rows of the subspace whose bracket escapes it.
    """

    def __init__(self, a: tuple, b: tuple, product: tuple):
        self.witness = (a, b, product)
        super().__init__(
            f"subspace is not bracket-closed: [{a}, {b}] = {product} lies outside"
        )


class NotAnIdeal(LiePrefratError):
    """A subspace required to be an ideal is not."""


class NotExponentiable(LiePrefratError):
    """exp(ad x) was requested but (ad x)^p != 0, so the series does not truncate."""


class HypothesisNotMet(LiePrefratError):
    """A theorem's hypothesis fails, so the check is skipped rather than run."""


class BudgetExceeded(LiePrefratError):
    """An enumeration exceeded its configured node or group-order budget."""


class FileFormatError(LiePrefratError):
    """An algebra file is malformed; message includes the offending field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
