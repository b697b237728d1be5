"""Exception types raised by the library.

Every error derives from LinkImmError so callers can catch the whole
family at once.  Errors fall into two camps: malformed input (bad label
parameters, non-symmetric matrices, schema violations) and mathematical
rejection (degenerate intersection forms, parity failures).  The CLI maps
the first camp to exit code 2 and the second to exit code 3.
"""


class LinkImmError(Exception):
    """Base class for all library errors."""


class InvalidParameter(LinkImmError, ValueError):
    """A Dynkin label (or similar enumerated input) is out of range."""


class InvalidGraph(LinkImmError, ValueError):
    """A plumbing graph violates its structural invariants."""


class NotSymmetric(LinkImmError, ValueError):
    """An operation requiring a symmetric matrix received A != A^T."""


class NotRationalHomologySphere(LinkImmError):
    """The intersection form is degenerate (det = 0), so H_1 has free rank.

    Carries the offending free rank for diagnostics.
    """

    def __init__(self, free_rank, message=None):
        self.free_rank = free_rank
        super().__init__(message or f"degenerate form: H_1 has free rank {free_rank}")


class FreeRankUnsupported(LinkImmError):
    """Torsion-only computation requested on a group with free rank > 0."""


class NotACocycle(LinkImmError, ValueError):
    """A mod-2 vector was not in the mod-2 kernel of the given matrix."""


class NotTwoTorsion(LinkImmError, ValueError):
    """A cohomology class required to satisfy 2C = 0 does not."""


class NoPreimageFound(LinkImmError):
    """Exhaustive search found no mod-2 preimage for a 2-torsion class.

    Unreachable for nondegenerate forms; signals input outside the
    supported hypotheses rather than being silently accepted.
    """


class NotUnit(LinkImmError, ValueError):
    """A quaternion expected to have norm 1 does not."""


class NotDivisibleBy4(LinkImmError, ValueError):
    """Seifert data fed to the R^4 Smale formula has inconsistent parity."""


class HalfIntegerResult(LinkImmError):
    """An invariant that must be an integer came out half-integral.

    The exact rational value is kept on the exception for diagnostics.
    """

    def __init__(self, value, message=None):
        self.value = value
        super().__init__(message or f"non-integral result {value}")


class ConsistencyViolation(LinkImmError):
    """Two independently derived values that must agree do not."""


class IncomparableManifolds(LinkImmError, ValueError):
    """Regular-homotopy comparison across structurally different H^2 groups."""
