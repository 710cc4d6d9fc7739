class VortexPairError(Exception):
    """Base class for every error raised by the package."""


class DegenerateGeometryError(VortexPairError):
    """Boundary map lost injectivity, a tangent vanished, or the patches collide."""


class ConstraintError(VortexPairError):
    """The velocity cannot be recovered from the first-mode constraint."""


class ConvergenceError(VortexPairError):
    """Newton iteration ran out of iterations or step halvings."""

    def __init__(self, message, residual_history=()):
        super().__init__(message)
        self.residual_history = list(residual_history)


class BallExitError(ConvergenceError):
    """An iterate left the unit ball of the profile space."""


class DegenerateJacobianError(ConvergenceError):
    """The reduced Jacobian is singular to working precision."""
