"""Exception types shared by the solvers."""

from __future__ import annotations


class GraphError(ValueError):
    """Malformed graph input (bad endpoint, self-loop, parse error)."""


class PreconditionError(ValueError):
    """An algorithm was called on a graph outside its domain.

    ``obstruction`` carries the certificate that the input violates the
    precondition when one is available.
    """

    def __init__(self, message: str, obstruction=None):
        super().__init__(message)
        self.obstruction = obstruction


class SizeLimitError(ValueError):
    """An exhaustive routine was called on an input above its size guard."""


class FamilyParameterError(ValueError):
    """A family parameterization violates one of the family's defining clauses."""
