"""Shared exception types."""


class InternalInconsistencyError(RuntimeError):
    """A decision and its backing computation disagree.

    Raised when two routes that must agree (e.g. a non-preservation verdict
    and the witness construction behind it, or the two disjoint clause
    families of the decision table) contradict each other.  This always
    indicates a bug in this package, never a property of the inputs.
    """
