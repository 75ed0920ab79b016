"""Exception hierarchy."""


class HilbextError(Exception):
    pass


class MalformedTableError(HilbextError, ValueError):
    """A table has the wrong shape or an entry outside ``0..n-1``."""


class AxiomViolation(HilbextError):
    """Raised when an algebra fails the axioms of the class an operation requires."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class PreconditionError(HilbextError, ValueError):
    pass


class GuardExceeded(HilbextError):
    """A search space is larger than the configured guard."""

    def __init__(self, what, size, bound):
        super().__init__(f"{what}: search space {size} exceeds guard {bound}")
        self.size = size
        self.bound = bound


class SoundnessError(HilbextError, AssertionError):
    """A result that the theory guarantees did not materialize.

    Seeing one of these means the implementation is wrong, not the input.
    """
