"""Exception hierarchy shared by all greenring modules."""


class GreenRingError(Exception):
    """Base class for every error raised by this package."""


class ContextMismatchError(GreenRingError, ValueError):
    """Two elements from different ring contexts were combined."""


class IndexRangeError(GreenRingError, ValueError):
    """A basis index or generator level is outside its legal range."""


class SupportError(GreenRingError, ValueError):
    """An element has support outside the subring required by an operation."""


class DivisibilityError(GreenRingError, ValueError):
    """An Adams exponent divisible by p was requested where p must not divide it."""


class InvalidModuleError(GreenRingError, ValueError):
    """A matrix does not define a module for the cyclic group of the context."""


class OracleCapacityError(GreenRingError, ValueError):
    """An induced-space construction exceeds the configured oracle cap."""


class ParseError(GreenRingError, ValueError):
    """An element literal does not match the accepted grammar."""
