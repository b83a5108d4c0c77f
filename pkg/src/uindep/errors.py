"""Exception hierarchy shared across the package."""


class UIndepError(Exception):
    """Base class for all errors raised by uindep."""


class DiagramError(UIndepError, ValueError):
    """A knot diagram could not be parsed or failed validation."""


class PDParseError(DiagramError):
    pass


class LabelMultiplicity(DiagramError):
    pass


class MultiComponent(DiagramError):
    pass


class InvalidSpec(DiagramError):
    pass


class IndexOutOfRange(UIndepError, IndexError):
    pass


class UnknownName(UIndepError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown name"


class CapExceeded(UIndepError):
    pass


class CoefficientOverflow(UIndepError, OverflowError):
    pass


class UndefinedForUnknot(UIndepError):
    """Raised for quantities that have no meaning on an unknotted diagram."""
