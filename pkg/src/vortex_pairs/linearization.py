"""Linearized operator at the point-vortex state and numeric Jacobians."""

import numpy as np

from .errors import VortexPairError
from .functionals import reduced_residual
from .special_fn import MultiplierTable


def analytic_multipliers(spec, nmax=None):
    """Diagonal multipliers a_n -> coefficient of e_{n+1} at eps = 0, f = 0."""
    nmax = nmax or spec.N
    if spec.model == "euler":
        return MultiplierTable.build("euler_linearization", 0.0, nmax)
    table = MultiplierTable.build("gsqg_linearization", spec.alpha, nmax)
    if spec.pair == "counter":
        table = MultiplierTable(table.alpha, tuple(-v for v in table.values), table.kind)
    return table


def numeric_jacobian(spec, a, step=1e-6):
    """Central-difference Jacobian of the reduced residual (velocity re-eliminated per probe).

    Entry (m, n) is d b_{m+2} / d a_{n+1} in zero-based indexing.
    """
    if not (1e-8 <= step <= 1e-3):
        raise ValueError("step must lie in [1e-8, 1e-3]")
    a = np.array(a, dtype=float)
    if a.size < spec.N:
        a = np.concatenate([a, np.zeros(spec.N - a.size)])
    J = np.empty((spec.N, spec.N))
    for n in range(spec.N):
        ap, am = a.copy(), a.copy()
        ap[n] += step
        am[n] -= step
        J[:, n] = (reduced_residual(spec, ap)[0] - reduced_residual(spec, am)[0]) / (2 * step)
    if not np.all(np.isfinite(J)):
        raise VortexPairError("numeric Jacobian has non-finite entries")
    return J
