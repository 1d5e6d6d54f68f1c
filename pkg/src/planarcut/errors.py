"""Exception hierarchy shared by all modules."""


class PlanarCutError(Exception):
    """Base class for every error raised by this package."""


class InputError(PlanarCutError):
    """Malformed input (exit code 2 on the command line)."""


class PreconditionError(PlanarCutError):
    """Well-formed input that violates an algorithmic precondition (exit 3)."""


class NonPlanarRotation(InputError):
    """The rotation system does not satisfy Euler's formula."""


class MalformedRotation(InputError):
    """A rotation list is not a permutation of the darts leaving its vertex."""


class NegativeWeight(InputError):
    """A dart carries a negative or NaN length."""


class InvalidEdge(InputError):
    """An edge references a missing vertex or is a self-loop."""


class NotTriangulated(PreconditionError):
    """A face with more than three sides was found where triangles are required."""


class NotStronglyConnected(PreconditionError):
    """The finite-weight darts do not form a strongly connected graph."""


class NonSimplePath(PreconditionError):
    """A path that must be vertex-simple repeats a vertex."""


class NotACycle(PreconditionError):
    """A dart sequence that should be closed is not."""


class DegenerateCut(PreconditionError):
    """A cut side would be empty."""


class BoundsUnachievable(PreconditionError):
    """An r-division meeting the requested bounds could not be produced."""


class NotBoundary(PreconditionError):
    """A dense-distance-graph query named a non-boundary vertex."""


class Unreachable(PreconditionError):
    """A path was requested to a vertex at infinite distance."""


class NonSimpleCycle(PreconditionError):
    """A cycle that must be simple in the skeleton repeats a vertex."""


class TooLarge(PreconditionError):
    """An exhaustive oracle was asked to enumerate too many cases."""
