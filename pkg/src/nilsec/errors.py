"""Exception hierarchy shared by every module."""

from __future__ import annotations


class NilsecError(Exception):
    """Base class for all errors raised by the package."""


class InvalidTypeError(NilsecError, ValueError):
    """A Lie type with an unknown series or a rank outside the supported bounds."""


class InvalidMarksError(NilsecError, ValueError):
    """A marks vector with the wrong length or an entry outside {0, 1, 2}."""


class DegeneracyError(NilsecError, ValueError):
    """Linearly dependent input where independence is required."""


class PartitionSizeError(NilsecError, ValueError):
    """Partition total does not match the natural representation."""


class ParseError(NilsecError, ValueError):
    """Malformed textual orbit, partition or algebra name."""


class UnsupportedOperationError(NilsecError):
    """The operation is not defined for the given input."""


class UndefinedClassError(NilsecError, ValueError):
    """The orbit does not belong to any rank/sphericity class (zero orbit)."""


class DataIntegrityError(NilsecError):
    """Two independent computations disagree. The message names the identity."""


class DataLoadError(NilsecError):
    """A bundled data file is missing, malformed or fails validation."""
