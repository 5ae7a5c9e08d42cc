"""Exception types shared across the package."""


class ComputationError(Exception):
    """Base class for failures of algebraic preconditions or resource caps."""


class SizeLimitError(ComputationError):
    """An enumeration or table size cap was exceeded."""


class DomainError(ComputationError):
    """An operation was applied outside its domain of definition."""


class NonInvertibleError(ComputationError):
    """Attempt to invert a series whose constant term is zero."""


class TruncationOverflowError(ComputationError):
    """An Adams operation would push terms beyond the weight cap.

    Adams operations scale weights, so silently truncating them would corrupt
    downstream identities; they fail loudly instead.
    """
