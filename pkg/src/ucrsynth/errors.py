"""Exception types shared across the package.

The CLI maps these onto its exit-code contract, so command handlers only
ever need to catch three things.
"""


class UcrsynthError(Exception):
    """Base class for all package errors."""


class ParseError(UcrsynthError):
    """A state or circuit file could not be parsed or validated."""


class DimensionError(UcrsynthError):
    """Two objects that must share a qubit count do not."""


class ExportError(UcrsynthError):
    """A circuit cannot be represented in the requested output format."""
