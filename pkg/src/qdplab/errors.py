"""Exception types raised across the package."""


class QDPError(Exception):
    """Base class for all errors raised by qdplab."""


class DimensionMismatch(QDPError, ValueError):
    pass


class NotHermitian(QDPError, ValueError):
    pass


class NotUnitary(QDPError, ValueError):
    pass


class NotDiagonalInBasis(QDPError, ValueError):
    pass


class InvalidState(QDPError, ValueError):
    """A matrix failed one or more density-matrix invariants.

    ``failures`` lists the names of the invariants that did not hold.
    """

    def __init__(self, failures, detail=""):
        self.failures = list(failures)
        msg = "invalid state: " + ", ".join(self.failures)
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ParseError(QDPError, ValueError):
    pass


class NotPureMarginal(QDPError, ValueError):
    pass


class FactorizationResidual(QDPError, ValueError):
    pass


class EmptyFamily(QDPError, ValueError):
    pass


class PreconditionViolated(QDPError, ValueError):
    pass


class WitnessNotFound(QDPError, RuntimeError):
    pass


class NotInjective(QDPError, ValueError):
    """Two members share a system marginal but differ as joint states."""


class Underdetermined(QDPError, ValueError):
    """Marginals do not span the full operator space of the system."""


class InconsistentImages(QDPError, ValueError):
    pass


class NotCP(QDPError, ValueError):
    pass


class ConstructionFailed(QDPError, RuntimeError):
    pass
