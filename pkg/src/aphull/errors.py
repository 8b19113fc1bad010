"""Exception types shared across the toolkit."""


class ApHullError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatchError(ApHullError):
    """Phase vector length does not match the number of spec terms."""


class UnsupportedClassError(ApHullError):
    """Operation not defined for this frequency class (e.g. mixed specs)."""


class HypothesisViolationError(ApHullError):
    """Inputs violate a mathematical hypothesis of the requested operation."""


class ConfigError(ApHullError):
    """Invalid experiment configuration."""


class NumericalError(ApHullError):
    """A numerical routine failed to meet its accuracy contract."""
