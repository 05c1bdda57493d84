"""Exception types raised across the package."""


class MadelungError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(MadelungError, ZeroDivisionError):
    """A function was evaluated at one of its poles."""


class DomainError(MadelungError, ValueError):
    """An argument lies outside the domain an operation supports."""


class BoundsError(MadelungError, IndexError):
    """A request exceeds a table order or an enumeration budget."""


class ConvergenceError(MadelungError, ArithmeticError):
    """A series did not reach its remainder target within the allowed terms."""
