"""Exception hierarchy shared by all critlevel modules."""


class CritLevelError(Exception):
    """Base class for all library-specific errors."""


class DomainError(CritLevelError):
    """A mathematical precondition is violated (wrong level, root kind, ...)."""


class ResourceCapError(CritLevelError):
    """A configured resource cap (window size, weight-space dimension) was hit."""


class IntegrityError(CritLevelError):
    """An internal consistency check failed; this signals a bug, not bad input."""
