"""Exception hierarchy shared by every module."""


class ArrangementError(ValueError):
    """Base class for all errors raised by this package."""


class ParseError(ArrangementError):
    pass


class TruncatedLatticeError(ArrangementError):
    """A query needs the full lattice but only a truncation was built."""


class LatticeTooLarge(ArrangementError):
    pass


class NotModularError(ArrangementError):
    pass


class WrongRankError(ArrangementError):
    pass


class NotProperError(ArrangementError):
    pass


class NotClosedError(ArrangementError):
    pass


class PreconditionError(ArrangementError):
    pass


class ConsistencyError(ArrangementError):
    """An invariant guaranteed by theory failed on actual data."""


class DegreeExceeded(ArrangementError):
    pass


class SizeMismatch(ArrangementError):
    pass


class NotHypersolvable(ArrangementError):
    pass


class DeformationFailed(ArrangementError):
    def __init__(self, message, failing_check=None):
        super().__init__(message)
        self.failing_check = failing_check
