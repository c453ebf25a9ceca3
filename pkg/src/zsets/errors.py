"""Exception hierarchy shared by every module of the package."""


class ZSetError(Exception):
    """Base class for all package errors."""


class DomainError(ZSetError, ValueError):
    """An operation was called outside its precondition."""


class ModulusMismatch(DomainError):
    """Two sets (or a set and a permutation) live in different ambient groups."""


class InvariantError(ZSetError, AssertionError):
    """A construction produced output violating a checked invariant.

    This indicates a bug, never bad input.
    """
