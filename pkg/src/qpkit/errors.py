"""Exception types shared across the toolkit."""


class QPKitError(Exception):
    """Base class for every error raised by qpkit."""


class MalformedToken(QPKitError, ValueError):
    pass


class IndexOutOfRange(QPKitError, ValueError):
    pass


class GroupMismatch(QPKitError, ValueError):
    """Two braid objects live in braid groups with different strand counts."""


class RankMismatch(QPKitError, ValueError):
    pass


class NotNegativeDefinite(QPKitError, ValueError):
    pass


class ZeroClass(QPKitError, ValueError):
    """The adjunction inequality only applies to nonzero homology classes."""


class EmptyRelator(QPKitError, ValueError):
    pass


class NotStein(QPKitError, ValueError):
    """A handle diagram fails the framing = tb - 1 condition."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)
