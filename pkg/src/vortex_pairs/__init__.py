"""Vortex-patch pairs (corotating and counter-rotating) for Euler and gSQG.

The boundary of the first patch is the image of the unit circle under
``eps * (w + amp * f(w))`` with ``f(w) = sum_n a_n w**(-n)``; the second patch
is its point reflection through ``(d, 0)``.
"""

from .errors import (
    VortexPairError,
    DegenerateGeometryError,
    ConstraintError,
    ConvergenceError,
    BallExitError,
    DegenerateJacobianError,
)
from .functionals import ProblemSpec, Velocity, assemble_G, residual_coefficients, velocity_from_constraint
from .solver import PairSolution, Branch, newton_solve, continue_branch
from .validation import ValidationReport, validate_solution

__version__ = "0.1.0"

__all__ = [
    "VortexPairError",
    "DegenerateGeometryError",
    "ConstraintError",
    "ConvergenceError",
    "BallExitError",
    "DegenerateJacobianError",
    "ProblemSpec",
    "Velocity",
    "assemble_G",
    "residual_coefficients",
    "velocity_from_constraint",
    "PairSolution",
    "Branch",
    "newton_solve",
    "continue_branch",
    "ValidationReport",
    "validate_solution",
]
