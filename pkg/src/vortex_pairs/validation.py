"""Checks on computed pairs that do not go through the assembled residual.

The tangency check rebuilds the velocity in physical coordinates from both
patch boundaries separately and measures the normal velocity in the moving
frame at nodes that are not on the solve grid.
"""

from dataclasses import dataclass, field, replace

import numpy as np
from scipy.special import roots_jacobi

from .boundary import curvature, eval_f, eval_map
from .functionals import assemble_G, reduced_residual
from .special_fn import c_alpha

TANGENCY_TOL = 1e-6
SYMMETRY_TOL = 1e-8
HOLDER_SOFT_BOUND = 1.1


@dataclass
class ValidationReport:
    tangency_inf: float
    min_curvature: float
    symmetry_defect: float
    holder_seminorm: float
    passed: bool
    notes: list = field(default_factory=list)

    def to_dict(self):
        return {"tangency_inf": self.tangency_inf, "min_curvature": self.min_curvature,
                "symmetry_defect": self.symmetry_defect, "holder_seminorm": self.holder_seminorm,
                "pass": self.passed, "notes": list(self.notes)}

    @classmethod
    def from_dict(cls, d):
        return cls(d["tangency_inf"], d["min_curvature"], d["symmetry_defect"],
                   d["holder_seminorm"], d["pass"], list(d.get("notes", [])))


# ---------------------------------------------------------------- tangency

def _offgrid(n):
    return np.exp(1j * np.pi * (2 * np.arange(n) + 1) / n)


def _patches(a, rule, d, tau):
    """Both physical boundaries at parameters tau as (center, offset, d offset/dtau).

    Points are center + offset.  Keeping the two parts apart lets differences
    between points of the same patch be formed without cancellation.
    """
    eps = rule.epsilon
    x = eps * eval_map(a, rule, tau)
    dx = eps * eval_map(a, rule, tau, 1)
    return (0.0, x, dx), (2.0 * d, -x, -dx)


def _diff(src, tgt):
    """xi - z for every target (rows) and source (columns)."""
    return (src[0] - tgt[0]) + (src[1][None, :] - tgt[1][:, None])


def _trap(values, tau):
    return values @ tau / tau.size


def _green_integral(tgt, src, tau):
    """mean((conj(xi) - conj(z)) / (xi - z) dxi) for each target z."""
    dz = _diff(src, tgt)
    return _trap(np.conj(dz) / dz * src[2][None, :], tau)


def _riesz_far(tgt, src, tau, alpha):
    """mean(dxi / |z - xi|**alpha) for targets away from the source curve."""
    return _trap(src[2][None, :] / np.abs(_diff(src, tgt)) ** alpha, tau)


def _riesz_on_curve(a, rule, wt, alpha, n=64):
    """mean(phi'(tau) dtau / |phi(wt) - phi(tau)|**alpha) for targets on the unit-scale curve.

    With tau = wt e^{is}, the integrand is a smooth function times
    (s (2 pi - s))**-alpha, integrated by Gauss-Jacobi in s.
    """
    x, wts = roots_jacobi(n, -alpha, -alpha)
    s = np.pi * (1 + x)
    tau = wt[:, None] * np.exp(1j * s)[None, :]
    dist = np.abs(eval_map(a, rule, wt)[:, None] - eval_map(a, rule, tau))
    g = eval_map(a, rule, tau, 1) * tau * (dist / (s * (2 * np.pi - s))) ** (-alpha)
    return np.pi ** (-2 * alpha) / 2 * (g @ wts)


def boundary_defects(sol, offgrid_M=None):
    """Signed normal-velocity defects on both boundaries at off-grid nodes."""
    spec = sol.spec
    eps, d, v = spec.epsilon, spec.d, sol.vel.value
    n = offgrid_M or 3 * spec.M
    rule = spec.rule
    a = sol.coeffs
    wt = _offgrid(n)
    tau = np.exp(2j * np.pi * np.arange(n) / n)
    src = _patches(a, rule, d, tau)
    tgt = _patches(a, rule, d, wt)
    sign2 = 1.0 if spec.pair == "corotating" else -1.0
    out = []
    for k, T in enumerate(tgt):
        z = T[0] + T[1]
        # d/dtheta = i tau d/dtau; positively oriented on both boundaries
        t = 1j * wt * T[2]
        t /= np.abs(t)
        if spec.model == "euler":
            I = (_green_integral(T, src[0], tau) + sign2 * _green_integral(T, src[1], tau)) / eps ** 2
            frame = 2 * v * (np.conj(T[1]) + (T[0] - d)) if spec.pair == "corotating" else 2 * v
            out.append(np.real((frame + I) * t))
            continue
        alpha = spec.alpha
        near = eps * abs(eps) ** (-alpha) * _riesz_on_curve(a, rule, wt, alpha)
        if k == 0:
            J1, J2 = near, _riesz_far(T, src[1], tau, alpha)
        else:
            J1, J2 = _riesz_far(T, src[0], tau, alpha), -near
        vel = 1j * c_alpha(alpha) / eps ** 2 * (J1 + sign2 * J2)
        frame = v * (T[1] + (T[0] - d)) if spec.pair == "corotating" else v
        out.append(np.real((frame + 1j * vel) * np.conj(t)))
    return out[0], out[1]


def boundary_mismatch(sol, offgrid_M=None):
    """Largest difference between the two boundaries' defects at mirrored nodes.

    The defect is equal on both boundaries for a corotating pair and opposite
    for a counter-rotating one, where the tangent flips but the frame does not.
    """
    d1, d2 = boundary_defects(sol, offgrid_M)
    s = 1.0 if sol.spec.pair == "corotating" else -1.0
    return float(np.max(np.abs(d2 - s * d1)))


def tangency_residual(sol, offgrid_M=None):
    """Largest normal-velocity defect over both boundaries."""
    if sol.spec.epsilon == 0:
        return _point_vortex_defect(sol, offgrid_M)
    d1, d2 = boundary_defects(sol, offgrid_M)
    return float(max(np.max(np.abs(d1)), np.max(np.abs(d2))))


def _point_vortex_defect(sol, offgrid_M):
    # The physical patches have collapsed; fall back to the extended residual
    # sampled on a finer grid.
    spec = replace(sol.spec, M=offgrid_M or 3 * sol.spec.M)
    G = assemble_G(spec, sol.coeffs, sol.vel)
    dphi = np.abs(eval_map(sol.coeffs, spec.rule, spec.grid.nodes, 1))
    return float(np.max(np.abs(G) / dphi))


# ---------------------------------------------------------------- geometry

def convexity_check(sol, nodes=None):
    """(min curvature on 4M nodes, analytic lower bound (1 - a/(1-a)) / max|phi'|)."""
    spec = sol.spec
    n = nodes or 4 * spec.M
    w = np.exp(2j * np.pi * np.arange(n) / n)
    kappa = curvature(sol.coeffs, spec.rule, w)
    amp = abs(spec.rule.amplitude)
    bound = (1 - amp / (1 - amp)) / np.max(np.abs(eval_map(sol.coeffs, spec.rule, w, 1)))
    return float(kappa.min()), float(bound)


def mirrored(a):
    """Coefficients of f(-w)."""
    a = np.asarray(a, dtype=float)
    return a * (-1.0) ** np.arange(1, a.size + 1)


def symmetry_check(branch_pos, branch_neg):
    """max |a_n(-eps) - (-1)^n a_n(eps)| over members matched by |eps|."""
    neg = {round(abs(s.spec.epsilon), 14): s for s in branch_neg.solutions}
    worst = 0.0
    matched = 0
    for s in branch_pos.solutions:
        t = neg.get(round(abs(s.spec.epsilon), 14))
        if t is None:
            continue
        if (t.spec.N, t.spec.M) != (s.spec.N, s.spec.M):
            raise ValueError("branches were computed on different grids")
        worst = max(worst, float(np.max(np.abs(t.coeffs - mirrored(s.coeffs)))))
        matched += 1
    if not matched:
        raise ValueError("no members with matching |eps|")
    return worst


def mirror_defect(sol):
    """Reduced residual of the mirrored shape at -eps; zero when the problem is odd in eps."""
    spec = sol.spec.with_epsilon(-sol.spec.epsilon)
    r, _, _ = reduced_residual(spec, mirrored(sol.coeffs))
    return float(max(np.max(np.abs(r)) - sol.residual_inf, 0.0))


def holder_seminorm(a, exponent, derivative_order=0, nodes=1024):
    """Discrete Holder quotient of f^(k) over dyadic node separations.

    Only a lower bound of the true seminorm.
    """
    if not (0 < exponent <= 1):
        raise ValueError("exponent must lie in (0, 1]")
    w = np.exp(2j * np.pi * np.arange(nodes) / nodes)
    g = eval_f(a, w, derivative_order)
    best = 0.0
    s = 1
    while s <= nodes // 2:
        q = np.abs(np.roll(g, -s) - g) / np.abs(np.roll(w, -s) - w) ** exponent
        best = max(best, float(q.max()))
        s *= 2
    return best


def ball_holder_norm(sol):
    """sup|f| + sup|f'| + [f']_beta with beta = 1 - alpha (gSQG) or 1/2 (Euler)."""
    beta = 1 - sol.spec.alpha if sol.spec.model == "gsqg" else 0.5
    w = np.exp(2j * np.pi * np.arange(1024) / 1024)
    a = sol.coeffs
    return (float(np.max(np.abs(eval_f(a, w))) + np.max(np.abs(eval_f(a, w, 1))))
            + holder_seminorm(a, beta, 1))


def validate_solution(sol, offgrid_M=None):
    notes = []
    tang = tangency_residual(sol, offgrid_M)
    if sol.spec.epsilon == 0:
        notes.append("point-vortex state: tangency taken from the extended residual")
    kmin, bound = convexity_check(sol)
    sym = mirror_defect(sol)
    hold = ball_holder_norm(sol)
    ok = True
    if not tang < TANGENCY_TOL:
        ok = False
        notes.append(f"tangency defect {tang:.3e} exceeds {TANGENCY_TOL:g}")
    if not kmin > 0:
        ok = False
        notes.append(f"boundary not convex (min curvature {kmin:.3e})")
    if not sym < SYMMETRY_TOL:
        ok = False
        notes.append(f"mirror defect {sym:.3e} exceeds {SYMMETRY_TOL:g}")
    if hold > HOLDER_SOFT_BOUND:
        notes.append(f"warning: discrete Holder norm {hold:.3f} above {HOLDER_SOFT_BOUND}")
    if kmin < bound - 1e-8:
        notes.append("warning: curvature below the analytic lower bound")
    return ValidationReport(tang, kmin, sym, hold, ok, notes)


__all__ = ["ValidationReport", "tangency_residual", "boundary_defects", "convexity_check",
           "symmetry_check", "boundary_mismatch", "holder_seminorm", "validate_solution", "mirrored"]
