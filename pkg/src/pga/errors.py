"""Exception types shared across the package."""


class PgaError(Exception):
    """Base class for all package-specific errors."""


class ZeroBeta(PgaError):
    """A ladder coefficient beta_i was zero."""


class WrongLength(PgaError):
    """A coefficient sequence has the wrong length."""


class RangeError(PgaError):
    """An index fell outside the representable range [0, p]."""


class UnsupportedRoot(PgaError):
    """Operation requires the principal root of unity (root_index = 1)."""


class UnsupportedSymbol(PgaError):
    """The symbolic engine only rewrites words in theta / tbar generators."""


class DimensionCap(PgaError):
    """Requested construction exceeds the configured size cap."""


class TooLarge(PgaError):
    """Exhaustive enumeration would exceed the configured cap."""


class BadNormalization(PgaError):
    """Integration constants do not multiply to the required factorial."""


class ZeroParameter(PgaError):
    """A representation parameter that must be invertible was zero."""
