"""Damped Newton at fixed eps and natural continuation in eps."""

import logging
from fractions import Fraction
from dataclasses import dataclass, field, replace

import numpy as np

from .boundary import eval_f
from .errors import (
    BallExitError,
    ConvergenceError,
    DegenerateJacobianError,
    VortexPairError,
)
from .functionals import Velocity, _pad, reduced_residual
from .linearization import numeric_jacobian

log = logging.getLogger(__name__)


@dataclass
class PairSolution:
    spec: object
    coeffs: np.ndarray
    vel: Velocity
    residual_inf: float
    newton_iters: int
    diagnostics: dict = field(default_factory=dict)
    report: object = None


@dataclass
class Branch:
    solutions: list
    max_step: float
    failure: str = None
    failure_kind: str = None  # "convergence" or "validation"

    @property
    def eps(self):
        return np.array([s.spec.epsilon for s in self.solutions])

    @property
    def eps_reached(self):
        return self.solutions[-1].spec.epsilon if self.solutions else 0.0

    def __len__(self):
        return len(self.solutions)

    def __getitem__(self, i):
        return self.solutions[i]


def ball_norm(spec, a):
    """sup|f| + sup|f'| on the grid: a lower bound for the C^1 norm of f."""
    w = spec.grid.nodes
    return float(np.max(np.abs(eval_f(a, w))) + np.max(np.abs(eval_f(a, w, 1))))


def newton_solve(spec, initial=None, tol=1e-10, max_iters=30, fd_step=1e-6):
    if not (1e-14 <= tol <= 1e-6):
        raise ValueError("tol must lie in [1e-14, 1e-6]")
    a = _pad(spec, np.zeros(spec.N) if initial is None else initial)
    if ball_norm(spec, a) > 1:
        raise BallExitError("initial guess lies outside the unit ball")
    r, v, alias = reduced_residual(spec, a)
    res = float(np.max(np.abs(r)))
    history = [res]
    it = 0
    while res > tol:
        if it >= max_iters:
            raise ConvergenceError(f"no convergence after {max_iters} iterations", history)
        J = numeric_jacobian(spec, a, fd_step)
        if np.linalg.cond(J) > 1e13:
            raise DegenerateJacobianError("reduced Jacobian is numerically singular", history)
        delta = -np.linalg.solve(J, r)
        t = 1.0
        for _ in range(9):
            trial = a + t * delta
            if ball_norm(spec, trial) > 1:
                raise BallExitError("Newton iterate left the unit ball", history)
            try:
                r_new, v_new, alias_new = reduced_residual(spec, trial)
            except VortexPairError:
                r_new = None
            if r_new is not None and np.max(np.abs(r_new)) < res:
                break
            t /= 2
        else:
            raise ConvergenceError("residual did not decrease after 8 step halvings", history)
        a, r, v, alias = trial, r_new, v_new, alias_new
        res = float(np.max(np.abs(r)))
        history.append(res)
        it += 1
        log.debug("eps=%g iter=%d residual=%.3e", spec.epsilon, it, res)

    # re-check on a doubled grid so aliasing cannot hide a residual
    r2, _, _ = reduced_residual(replace(spec, M=2 * spec.M), a)
    diag = {
        "aliasing": alias,
        "residual_inf_doubled_grid": float(np.max(np.abs(r2))),
        "ball_norm": ball_norm(spec, a),
    }
    diag["doubled_grid_ok"] = float(diag["residual_inf_doubled_grid"] < 10 * max(res, tol))
    return PairSolution(spec, a, Velocity(spec.velocity_kind, v), res, it, diag)


def continue_branch(spec_template, eps_max, steps, tol=1e-10, max_halvings=10,
                    validate=None, max_iters=30):
    """March eps from 0 to eps_max (either sign) using the previous shape as predictor.

    ``validate`` is an optional callable returning a report with a ``passed``
    attribute; a failing report stops the branch.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if not abs(eps_max) < 0.5:
        raise ValueError("|eps_max| must be below 1/2")
    h0 = eps_max / steps
    # positions are integers in units of h0 / 2**max_halvings; eps is formed
    # with rationals so that e.g. 0.1 * 3/4 comes out as 0.075
    unit = 2 ** max_halvings
    end = steps * unit
    eps_frac = Fraction(repr(float(eps_max)))
    sol = newton_solve(spec_template.with_epsilon(0.0), None, tol, max_iters)
    branch = Branch([sol], max_step=abs(h0))
    if validate is not None:
        sol.report = validate(sol)
    p, s = 0, unit
    while p < end:
        # never step past the next nominal point, so a recovered step rejoins the grid
        q = min(p + s, (p // unit + 1) * unit)
        eps = float(eps_frac * q / end)
        try:
            new = newton_solve(spec_template.with_epsilon(eps), branch.solutions[-1].coeffs,
                               tol, max_iters)
        except VortexPairError as exc:
            if s == 1:
                branch.failure = f"step underflow at eps={eps!r}: {exc}"
                branch.failure_kind = "convergence"
                return branch
            s //= 2
            log.info("halving continuation step at eps=%g (%s)", eps, exc)
            continue
        if validate is not None:
            new.report = validate(new)
            if not new.report.passed:
                branch.solutions.append(new)
                branch.failure = f"validation failed at eps={eps!r}: " + "; ".join(new.report.notes)
                branch.failure_kind = "validation"
                return branch
        branch.solutions.append(new)
        p = q
        s = min(2 * s, unit)
    return branch
