"""Exception hierarchy shared by all smdt modules."""


class SmdtError(Exception):
    """Base class for smdt errors."""


class InvalidPattern(SmdtError, ValueError):
    pass


class AlphabetUnsupported(SmdtError, ValueError):
    """Raised by the algebraic pipeline for alphabets other than {0, 1}."""


class PatternNotBifixFree(SmdtError, ValueError):
    pass


class NotABifix(SmdtError, ValueError):
    pass


class PreconditionViolated(SmdtError, ValueError):
    pass


class InstanceTooLarge(SmdtError, ValueError):
    """Raised when an exhaustive computation exceeds its configured cap."""


class RootFindingFailed(SmdtError, ArithmeticError):
    pass
