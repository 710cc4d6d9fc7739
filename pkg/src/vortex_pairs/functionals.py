"""Steady-state residual G for the four model/pair combinations.

G is real on the grid and odd under w -> conj(w); it is expanded in
e_n = Im(w**n).  G is affine in the velocity, so every assembly returns a
velocity-free part and the coefficient of the velocity separately.
"""

from dataclasses import dataclass, replace

import numpy as np

from .boundary import AmplitudeRule, CircleGrid, analyze_sine, as_coeffs, eval_f
from .errors import ConstraintError
from .singular_integrals import euler_self_term, interaction_term, riesz_self_term
from .special_fn import c_alpha, hat_c_alpha

MODELS = ("euler", "gsqg")
PAIRS = ("corotating", "counter")


@dataclass(frozen=True)
class ProblemSpec:
    model: str
    pair: str
    d: float
    epsilon: float
    alpha: float = 0.0
    N: int = 32
    M: int = 256

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}")
        if self.pair not in PAIRS:
            raise ValueError(f"pair must be one of {PAIRS}")
        if self.model == "euler" and self.alpha != 0.0:
            raise ValueError("the Euler model takes alpha = 0")
        if self.model == "gsqg" and not (0.0 < self.alpha < 1.0):
            raise ValueError("gSQG needs 0 < alpha < 1")
        if not self.d > 2:
            raise ValueError("d must exceed 2")
        if not abs(self.epsilon) < 0.5:
            raise ValueError("|epsilon| must be below 1/2")
        if self.N < 1:
            raise ValueError("need at least one mode")
        self.grid.check_modes(self.N)

    @property
    def grid(self):
        return CircleGrid(self.M)

    @property
    def rule(self):
        return AmplitudeRule(self.model, self.epsilon, self.alpha)

    @property
    def velocity_kind(self):
        return "angular" if self.pair == "corotating" else "translational"

    def with_epsilon(self, eps):
        return replace(self, epsilon=eps)

    def to_dict(self):
        return {"model": self.model, "alpha": self.alpha, "pair": self.pair, "d": self.d,
                "epsilon": self.epsilon, "N": self.N, "M": self.M}


@dataclass(frozen=True)
class Velocity:
    kind: str
    value: float

    def __post_init__(self):
        if self.kind not in ("angular", "translational"):
            raise ValueError(f"unknown velocity kind {self.kind!r}")


def singular_speed(spec):
    """Speed of the point-vortex pair (eps = 0)."""
    d = spec.d
    if spec.model == "euler":
        return 1 / (4 * d * d) if spec.pair == "corotating" else 1 / (4 * d)
    ca = spec.alpha * c_alpha(spec.alpha)
    if spec.pair == "corotating":
        return ca / (2 * d) ** (2 + spec.alpha)
    return ca / (2 * (2 * d) ** (1 + spec.alpha))


def assemble_parts(spec, a):
    """(base, slope) on the grid with G = base + velocity * slope."""
    a = _pad(spec, a)
    grid = spec.grid
    w = grid.nodes
    eps, d = spec.epsilon, spec.d
    amp = spec.rule.amplitude
    f = eval_f(a, w)
    fp = eval_f(a, w, 1)
    phi = w + amp * f
    if spec.model == "euler":
        L = w * (1 + eps * fp)
        self_term = euler_self_term(a, eps, grid)
        inter = interaction_term(a, "euler", 0.0, eps, d, grid)
        sign = -1.0 if spec.pair == "corotating" else 1.0
        base = np.imag(-fp + (self_term + sign * inter) * L)
        if spec.pair == "corotating":
            slope = np.imag(2 * (eps * np.conj(phi) - d) * L)
        else:
            slope = np.imag(2 * L)
        return base, slope

    alpha = spec.alpha
    L = np.conj(w * (1 + amp * fp))
    G1 = np.imag(riesz_self_term(a, alpha, eps, grid) * L) - hat_c_alpha(alpha) * fp.imag
    G2 = np.imag(interaction_term(a, "gsqg", alpha, eps, d, grid) * L)
    if spec.pair == "corotating":
        return G2 - G1, np.imag((eps * phi - d) * L)
    return G1 + G2, -L.imag


def _pad(spec, a):
    a = as_coeffs(a)
    if a.size > spec.N:
        raise ValueError(f"got {a.size} coefficients for {spec.N} modes")
    if a.size < spec.N:
        a = np.concatenate([a, np.zeros(spec.N - a.size)])
    return a


def _value(vel):
    return vel.value if isinstance(vel, Velocity) else float(vel)


def assemble_G(spec, a, vel):
    base, slope = assemble_parts(spec, a)
    return base + _value(vel) * slope


def residual_coefficients(spec, a, vel):
    """Sine coefficients b_1..b_{N+1} of G and the largest higher mode (aliasing check)."""
    b = analyze_sine(assemble_G(spec, a, vel), spec.grid)
    return b[:spec.N + 1], float(np.max(np.abs(b[spec.N + 1:]), initial=0.0))


def _constrained(spec, base, slope):
    b0 = analyze_sine(base)
    b1 = analyze_sine(slope)
    if abs(b1[0]) < 1e-10:
        raise ConstraintError("first-mode constraint does not determine the velocity")
    v = -b0[0] / b1[0]
    b = b0 + v * b1
    b[0] = 0.0
    return v, b


def velocity_from_constraint(spec, a):
    base, slope = assemble_parts(spec, a)
    v, _ = _constrained(spec, base, slope)
    return Velocity(spec.velocity_kind, float(v))


def reduced_residual(spec, a):
    """Modes 2..N+1 of G at the constrained velocity, the velocity, and the aliasing level."""
    base, slope = assemble_parts(spec, a)
    v, b = _constrained(spec, base, slope)
    alias = float(np.max(np.abs(b[spec.N + 1:]), initial=0.0))
    return b[1:spec.N + 1], float(v), alias
