"""Exception types shared across the package."""


class HybridSetError(Exception):
    """Base class for all package errors."""


class NotInvertibleError(HybridSetError, ArithmeticError):
    """A value had to be inverted (negative multiplicity, series constant term) but is not a unit."""


class NotRepresentableError(HybridSetError, ValueError):
    """A substitution would leave the ring (e.g. a square root of a non-square)."""


class NotAMemberError(HybridSetError, ValueError):
    """Removal of an element whose multiplicity is zero."""


class UnsupportedInputError(HybridSetError, ValueError):
    """The operation is not defined for this kind of input."""


class UnsupportedRegionError(UnsupportedInputError):
    """The requested (n, k) lies in a region where the family is not defined."""


class ParseError(HybridSetError, ValueError):
    """Syntax error in a text form; ``pos`` is the 0-based offending offset."""

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}" + (f": {text!r}" if text else ""))
