"""Exception types shared across the package."""


class QECError(Exception):
    """Base class for all errors raised by :mod:`sixqubit`."""


class DimensionError(QECError, ValueError):
    """Operands have incompatible qubit counts or an index is out of range."""


class UsageError(QECError, ValueError):
    """A caller supplied arguments outside an operation's domain."""


class StructureError(QECError):
    """An object lacks the algebraic structure an operation needs."""


class IndependenceError(StructureError):
    """Generators that were required to be independent are not."""


class CapacityError(QECError):
    """A request exceeds a hard size limit (state-vector or search guard)."""
