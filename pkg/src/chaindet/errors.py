"""Exception hierarchy shared across the package."""


class ChainDetError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimeError(ChainDetError):
    """A value that must be prime is composite (or < 2)."""


class NotPrimePowerError(ChainDetError):
    """A value that must be a prime power is not one."""


class TooLargeError(ChainDetError):
    """A requested construction or enumeration exceeds the configured cap."""


class UnsupportedCombinationError(ChainDetError):
    """Ring family parameters that the family does not admit."""


class RingMismatchError(ChainDetError):
    """Operands belong to different rings."""


class SizeMismatchError(ChainDetError):
    """Operands have incompatible dimensions."""


class NotAUnitError(ChainDetError):
    """Inversion was requested for a non-unit."""


class NotCoprimeError(ChainDetError):
    """Arguments that must be coprime share a factor."""


class NoRootError(ChainDetError):
    """The ring contains no root of unity of the requested order."""


class BadRootError(ChainDetError):
    """The supplied element is not a primitive root of unity of the right order."""


class BadIndexError(ChainDetError):
    """An index is outside its valid range."""


class NotInvertibleError(ChainDetError):
    """A matrix that must be invertible is not; signals an internal bug
    when raised with preconditions satisfied."""


class ConsistencyError(ChainDetError):
    """Two internal computation routes disagreed; always a bug."""


class RingSpecError(ChainDetError):
    """A ring specification string failed to parse.

    Carries ``position`` (0-based offset into the input) and ``expected``
    (description of the tokens that would have been accepted there).
    """

    def __init__(self, message, position, expected):
        super().__init__(f"{message} at position {position}: expected {expected}")
        self.position = position
        self.expected = expected
