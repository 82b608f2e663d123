"""Exception types shared across the package."""


class MatMonoidError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidParams(MatMonoidError, ValueError):
    """Parameter validation failed (e.g. nonpositive u/v, composite modulus)."""


class NotInMonoid(MatMonoidError, ValueError):
    """A matrix is not a product of the L/R generators."""


class IndexOutOfRange(MatMonoidError, IndexError):
    """A tree cell index is outside 1..2^depth."""


class LimitExceeded(MatMonoidError):
    """A brute-force enumeration would exceed the configured cap."""


class WitnessMismatch(MatMonoidError):
    """A constructed extremal witness failed its runtime check.

    This should never happen; it signals an index-convention bug in the
    witness word construction and must not be silenced.
    """
