"""Shared exception types."""


class UnsupportedShapeError(ValueError):
    """The graph is outside the shapes this routine can handle exactly."""


class SizeCapError(UnsupportedShapeError):
    """A brute-force routine was asked to exceed its size cap."""


class InternalContradictionError(RuntimeError):
    """Two routes that must agree did not.

    Raised instead of guessing: hitting this means an implementation bug
    (or a genuine counterexample to a proven statement), never a user error.
    """


class WitnessSearchError(RuntimeError):
    """A randomized witness search exhausted its budget."""
