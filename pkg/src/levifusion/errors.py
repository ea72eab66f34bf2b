"""Exception hierarchy shared across the package."""


class LeviFusionError(Exception):
    """Base class for all package errors."""


class InputError(LeviFusionError, ValueError):
    """Invalid user input: bad rank, overlapping labels, malformed JSON, ..."""


class UnsupportedFamilyError(LeviFusionError):
    """Operation called on a diagram family outside its domain."""


class CapabilityError(LeviFusionError):
    """Request exceeds a configured size guard."""


class DetectionGapError(LeviFusionError):
    """No local pattern matched a two-sign E-type component.

    Carries the offending component so the failure can be reported and
    re-tried with the relaxed pattern variant.
    """

    def __init__(self, message, labeled=None):
        super().__init__(message)
        self.labeled = labeled


class StabilityError(LeviFusionError):
    """A fold-back was attempted on a set that is not a union of orbits."""


class InternalConsistencyError(LeviFusionError):
    """A cross-check that must always hold has failed.

    Raised instead of returning silently wrong data; firing one of these
    falsifies an assumption the implementation relies on.
    """
