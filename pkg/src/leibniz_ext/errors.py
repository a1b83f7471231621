"""Exception types raised across the package."""

from __future__ import annotations


class LeibnizError(Exception):
    """Base class for all errors raised by leibniz_ext."""


class DimensionMismatch(LeibnizError, ValueError):
    pass


class SingularMatrixError(LeibnizError, ValueError):
    pass


class NotContainedError(LeibnizError, ValueError):
    """A subspace (or vector) was required to lie inside another one."""


class NotLeibnizError(LeibnizError):
    """An operation that presumes the Leibniz identity got a table violating it."""


class NotAnIdealError(LeibnizError):
    pass


class NotNilpotentError(LeibnizError):
    pass


class BasisNotAdaptedError(LeibnizError):
    pass


class PresentationError(LeibnizError):
    """A word presentation is invalid; ``defects`` lists every problem found."""

    def __init__(self, defects):
        self.defects = list(defects)
        super().__init__("; ".join(self.defects) or "invalid presentation")


class ExtensionError(LeibnizError):
    """The solvable extension could not be built consistently."""


class ComponentError(LeibnizError):
    pass


class CatalogError(LeibnizError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class FormatError(LeibnizError, ValueError):
    """Malformed input file; ``where`` names the offending position."""

    def __init__(self, message, where=None):
        self.where = where or None
        text = f"{where}: {message}" if where else message
        super().__init__(text)


class ParameterError(LeibnizError, ValueError):
    """Catalog parameters missing, unknown or outside the family's domain."""
