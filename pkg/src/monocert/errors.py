"""Exception hierarchy shared across the package."""

from __future__ import annotations


class MonocertError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(MonocertError, ValueError):
    """An index, point, or set does not fit the ambient dimension."""


class KindError(MonocertError, TypeError):
    """A boolean-only operation received a real-valued function, or vice versa."""


class ContractError(MonocertError, ValueError):
    """A documented precondition was violated by the caller."""


class CapacityError(MonocertError, ValueError):
    """The request exceeds a hard size limit of an exhaustive routine."""


class BudgetError(MonocertError, RuntimeError):
    """A counting oracle refused a query that would exceed its budget."""


class SearchError(MonocertError, RuntimeError):
    """The certifier's inner search was invoked outside its contract."""


class ExhaustionError(MonocertError, RuntimeError):
    """An exhaustive scan finished without finding what it was asked for."""


class VerificationError(MonocertError, RuntimeError):
    """A requested post-hoc check of an algorithm's output failed."""


class FormatError(MonocertError, ValueError):
    """A function file or serialized payload is malformed."""
