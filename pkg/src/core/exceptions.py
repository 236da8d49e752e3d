"""
Exception hierarchy for the forger.

Every error raised on purpose by the library derives from LowBitsError and
also from the closest builtin, so callers may catch either.
"""
from typing import Optional


class LowBitsError(Exception):
    """Base class for all library errors."""


class MathDomainError(LowBitsError, ValueError):
    """An arithmetic precondition was violated (bad modulus, bit count, ...)."""


class ConfigurationError(LowBitsError, ValueError):
    """Invalid key size, transform width or settings value."""


class MalformedSignatureError(LowBitsError, ValueError):
    """Signature integer is not below the modulus of the verifying key."""


class WrongCaseError(LowBitsError, ValueError):
    """Encoded message parity does not match the requested construction."""


class BoundError(LowBitsError, ValueError):
    """Compared-bit count is outside the range the forger accepts."""


class InvariantError(LowBitsError, RuntimeError):
    """A property that must hold by construction did not. Always a bug."""


class ForgeryAssertionError(InvariantError):
    """A forged signature broke a guarantee of its construction."""


class KeyInvariantError(InvariantError):
    """A generated keypair failed its self-test."""


class OracleCapacityError(LowBitsError, ValueError):
    """Brute-force enumeration requested above the oracle ceiling."""


class OracleDivergenceError(LowBitsError, RuntimeError):
    """The forger's cube root is not in the brute-force root set."""

    def __init__(self, b: int, target: int, root: int, roots: Optional[frozenset] = None):
        self.b = b
        self.target = target
        self.root = root
        self.roots = roots or frozenset()
        super().__init__(
            f"Oracle divergence at b={b}: root {root} of target {target} "
            f"not in brute-force set {sorted(self.roots)[:8]}"
        )


class KeyFileError(LowBitsError, ValueError):
    """Key file is missing fields, has unknown fields or bad hex."""


class MalformedContainerError(LowBitsError, ValueError):
    """Signed container bytes do not follow the LBF1 layout."""
