"""Exception types shared across the package."""


class QTensorError(Exception):
    """Base class for all package errors."""


class InvalidGroup(QTensorError):
    pass


class OrderLimit(QTensorError):
    """A group (or closure) exceeded the configured order cap."""


class NotNormal(QTensorError):
    pass


class NotAbelian(QTensorError):
    pass


class InvalidAmalgam(QTensorError):
    pass


class EnumerationLimit(QTensorError):
    """Coset enumeration did not finish within ``max_cosets``."""


class InternalInconsistency(QTensorError):
    """A computed object failed a consistency check; never valid data."""


class HypothesisNotMet(QTensorError):
    pass


class SearchCap(QTensorError):
    """An exhaustive search would exceed its configured cap."""
