"""Exception hierarchy shared by all taublab modules."""


class TaubLabError(Exception):
    """Base class for all taublab errors."""


class DomainError(TaubLabError, ValueError):
    """An argument violates a documented precondition.

    Raised for thresholds outside (0, 1), empty sets where a nonempty set
    is required, dimension mismatches, malformed systems, and similar
    semantic violations.  The CLI maps this class to exit code 3.
    """


class InputFormatError(TaubLabError, ValueError):
    """A file or string could not be parsed into the expected shape.

    The CLI maps this class to exit code 2.
    """
