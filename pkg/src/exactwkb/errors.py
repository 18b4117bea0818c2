"""Exception types shared across the toolkit."""


class ExactWKBError(Exception):
    """Base class for all toolkit errors."""


class SeriesError(ExactWKBError):
    """Malformed or incompatible truncated series operation."""


class LatticeError(SeriesError):
    """Exponent leaves the admissible rational-exponent lattice."""


class LogObstruction(SeriesError):
    """Antiderivative of a z^-1 term requested; a logarithm would appear."""


class NotSimpleTurningPoint(ExactWKBError):
    """Potential does not vanish to exactly first order with unit slope at 0."""


class ContourFailure(ExactWKBError):
    """Contour quadrature failed to converge to the requested tolerance."""


class PoleOnRay(ExactWKBError):
    """Pade denominator has a pole too close to the Laplace integration ray."""


class DomainExit(ExactWKBError):
    """Integration path leaves the convergence domain of the kernel."""


class TraceEscape(ExactWKBError):
    """Stokes-curve trace left the declared analyticity region."""
