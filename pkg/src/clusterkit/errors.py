"""Exception types shared across the engine."""


class ClusterKitError(Exception):
    """Base class for all engine errors."""


class NotGeneralizedCartan(ClusterKitError):
    """Matrix violates the generalized-Cartan shape (diagonal 2, sign pattern)."""


class NotSymmetrizable(ClusterKitError):
    """No positive diagonal symmetrizer exists."""


class NotSkewSymmetrizable(ClusterKitError):
    """Matrix is not skew-symmetrizable."""


class NotBipartite(ClusterKitError):
    """Underlying graph has an odd cycle."""


class NotAlmostPositive(ClusterKitError):
    """Vector is neither positive nor the negative of a simple root."""


class InfiniteTypeError(ClusterKitError):
    """Operation requires a finite-type Cartan matrix."""


class ReductionDidNotTerminate(ClusterKitError):
    """Compatibility-degree reduction exceeded its iteration bound."""


class NotSinkOrSource(ClusterKitError):
    """Orientation reflection requested at an interior vertex."""


class CyclicOrientation(ClusterKitError):
    """Orientation contains an oriented cycle."""


class NotDivisible(ClusterKitError):
    """Exact polynomial division left a remainder (kept for diagnostics)."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ZeroNumerator(ClusterKitError):
    """Fraction construction from a zero numerator."""


class LaurentViolation(ClusterKitError):
    """An exchange-relation division failed; the seed or a convention is broken."""


class WindowInconsistent(ClusterKitError):
    """A Coxeter-window denominator disagrees with its reflection orbit vector."""


class BoundExceeded(ClusterKitError):
    """Exchange-graph exploration hit its seed bound; carries the partial result."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class PathInvalid(ClusterKitError):
    """A mutation path contains an out-of-range direction."""


class CalibrationError(ClusterKitError):
    """Pairing calibration found no (or ambiguous) fitting convention."""


class QuiverInputError(ClusterKitError):
    """Malformed quiver input record."""
