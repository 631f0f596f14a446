"""Exception hierarchy shared across the package."""


class HLClusterError(Exception):
    """Base class for all package errors."""


class StepError(HLClusterError, ValueError):
    """Consecutive height-function values differ by something other than 1."""


class RankMismatch(HLClusterError, ValueError):
    pass


class NotDivisible(HLClusterError, ArithmeticError):
    pass


class ZeroPolynomial(HLClusterError, ValueError):
    pass


class FrozenVertex(HLClusterError, ValueError):
    pass


class Unsupported(HLClusterError, ValueError):
    pass


class EngineBug(HLClusterError, RuntimeError):
    """An invariant that the construction guarantees was violated."""


class BoundExceeded(HLClusterError, RuntimeError):
    pass


class DomainError(HLClusterError, ValueError):
    pass


class IncompleteCase(HLClusterError, RuntimeError):
    pass


class EmptyElement(HLClusterError, ValueError):
    pass


class NotPrime(HLClusterError, ValueError):
    pass


class NotStandard(HLClusterError, ValueError):
    pass


class NotNormalizable(HLClusterError, ValueError):
    pass


class Unhandled(HLClusterError, RuntimeError):
    pass
