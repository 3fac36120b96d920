"""Exception hierarchy shared by all modules.

Every error raised on purpose by the library derives from :class:`DelPezzoError`.
Input problems derive from :class:`InvalidInput`, violated preconditions from
:class:`PreconditionFailed`; the CLI maps these onto exit codes 2 and 3.
"""


class DelPezzoError(Exception):
    pass


class InvalidInput(DelPezzoError, ValueError):
    pass


class PreconditionFailed(DelPezzoError):
    pass


class InternalInconsistency(DelPezzoError, AssertionError):
    """A cross-check between two independent computations failed."""


# lattice
class MismatchedLattice(InvalidInput):
    pass


class InvalidR(InvalidInput):
    pass


# curves
class NotARoot(InvalidInput):
    pass


class NotADE(InvalidInput):
    pass


# surface
class InvalidModel(InvalidInput):
    pass


class NotPseudoEffective(PreconditionFailed):
    pass


class NotNef(PreconditionFailed):
    pass


class NotDelPezzo(PreconditionFailed):
    pass


class DecompositionFailed(PreconditionFailed):
    pass


# adjoint
class NotBig(PreconditionFailed):
    pass


class InvalidChar(InvalidInput):
    pass


# manin
class InvalidDegree(InvalidInput):
    pass


class HodgeViolation(InvalidInput):
    pass


class DegreeTooSmall(PreconditionFailed):
    pass


# ffcover
class FieldMismatch(InvalidInput):
    pass


class WrongDegree(InvalidInput):
    pass


class NotOnCurve(InvalidInput):
    pass


class SingularPoint(PreconditionFailed):
    pass


class Undefined(PreconditionFailed):
    """A quotient whose denominator vanishes at the requested point."""
