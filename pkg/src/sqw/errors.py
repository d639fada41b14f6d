"""Exception types shared across the package."""


class SQWError(Exception):
    """Base class for all errors raised by this package."""


class NotInvertible(SQWError, ZeroDivisionError):
    """A series with zero constant term was inverted."""


class PrecisionError(SQWError):
    """A coefficient beyond the known precision was requested."""


class DivergentProduct(SQWError):
    """An infinite q-product was requested with q not topologically nilpotent."""


class NotSymmetric(SQWError):
    """A polynomial expected to be symmetric is not."""


class BadSignature(SQWError):
    """A composition with incompatible signs was passed to a weight."""


class SingularDenominator(SQWError, ZeroDivisionError):
    """A parameter choice made a denominator vanish."""


class PrefixTooShort(SQWError):
    """A parameter sequence does not define enough entries."""


class DepthTooShallow(SQWError):
    """A grid lookup went past the stored depth."""


class NotInterlacing(SQWError):
    """Two partitions were expected to interlace but do not."""


class SingularSystem(SQWError, ZeroDivisionError):
    """A linear system turned out to be singular."""


class ConfigError(SQWError):
    """Invalid command line or configuration input."""


class OutOfRange(SQWError, IndexError):
    """A grid operation was asked for a row or shift outside the table."""
