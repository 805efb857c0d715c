"""Exception types raised by ginimre."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class UnsupportedDimensionError(DomainError):
    """The operation is only defined for a particular number of attributes."""
