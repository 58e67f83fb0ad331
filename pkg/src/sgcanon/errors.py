"""Exception hierarchy shared by every sgcanon module."""


class SgcanonError(Exception):
    """Base class for all errors raised by sgcanon."""


class ValidationError(SgcanonError, ValueError):
    """An input graph breaks one of its model's invariants."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


class DisconnectedError(ValidationError):
    """The underlying undirected graph is not connected."""


class SizeMismatchError(SgcanonError, ValueError):
    """Two graphs (or a graph and a permutation) disagree on vertex count."""


class PermutationError(SgcanonError, ValueError):
    """A vertex mapping is not a bijection on 1..n."""


class NotInImageError(SgcanonError, ValueError):
    """A coloured graph cannot be the encoding of any site graph."""


class OracleLimitError(SgcanonError):
    """A brute-force oracle was asked to handle a graph above its size cap."""


class EnumeratorExhausted(SgcanonError):
    """A lazy enumerator was stepped after it already finished."""


class Cancelled(SgcanonError):
    """A labelling run was cancelled by its caller."""
