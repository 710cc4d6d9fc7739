"""Conformal boundary phi(w) = w + amp * f(w) with f(w) = sum_n a_n w**(-n).

Coefficients ``a`` are real numpy vectors, ``a[n-1]`` multiplying ``w**(-n)``.
Everything here works on arrays of unit-circle points.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DegenerateGeometryError


@dataclass(frozen=True)
class AmplitudeRule:
    model: str
    epsilon: float
    alpha: float = 0.0

    def __post_init__(self):
        if self.model not in ("euler", "gsqg"):
            raise ValueError(f"unknown model {self.model!r}")

    @property
    def amplitude(self):
        e = self.epsilon
        if self.model == "euler":
            return e
        # odd extension of eps**(1+alpha) to negative eps
        return e * abs(e) ** self.alpha


@dataclass(frozen=True)
class CircleGrid:
    M: int

    def __post_init__(self):
        if self.M < 4 or self.M % 2:
            raise ValueError("grid size must be even and >= 4")

    @cached_property
    def nodes(self):
        return np.exp(2j * np.pi * np.arange(self.M) / self.M)

    @cached_property
    def theta(self):
        return 2 * np.pi * np.arange(self.M) / self.M

    def check_modes(self, N):
        if self.M < 4 * N + 4:
            raise ValueError(f"grid size {self.M} too small for {N} modes (need >= {4 * N + 4})")


def as_coeffs(a):
    a = np.asarray(a, dtype=float).ravel()
    if not np.all(np.isfinite(a)):
        raise ValueError("coefficients must be finite")
    return a


def eval_f(a, w, order=0):
    """f, f' or f'' at points w (|w| = 1)."""
    a = as_coeffs(a)
    w = np.asarray(w, dtype=complex)
    wb = 1.0 / w
    out = np.zeros(w.shape, dtype=complex)
    # Horner-free but vectorized: accumulate powers of 1/w
    p = wb ** (order + 1) if order else wb.copy()
    for n, an in enumerate(a, start=1):
        if an != 0.0:
            if order == 0:
                out += an * p
            elif order == 1:
                out += -n * an * p
            else:
                out += n * (n + 1) * an * p
        p = p * wb
    return out


def eval_map(a, rule, w, order=0):
    """phi(w), phi'(w) or phi''(w) for phi = w + amp * f."""
    amp = rule.amplitude
    w = np.asarray(w, dtype=complex)
    f = eval_f(a, w, order)
    if order == 0:
        return w + amp * f
    if order == 1:
        return 1.0 + amp * f
    return amp * f


def curvature(a, rule, w):
    """Curvature of the unit-scale curve phi(T); the physical boundary has this over eps."""
    d1 = eval_map(a, rule, w, 1)
    d2 = eval_map(a, rule, w, 2)
    ad1 = np.abs(d1)
    if np.any(ad1 < 1e-12):
        raise DegenerateGeometryError("boundary map has a vanishing tangent")
    return np.real(1.0 + np.asarray(w) * d2 / d1) / ad1


def analyze_sine(values, grid=None):
    """Coefficients b_n of sum b_n Im(w**n), n = 1..M/2-1."""
    values = np.asarray(values, dtype=float)
    if grid is not None and values.shape != (grid.M,):
        raise ValueError(f"expected {grid.M} samples, got {values.shape}")
    M = values.shape[-1]
    X = np.fft.fft(values, axis=-1)
    return -2.0 / M * X[..., 1:M // 2].imag


def synthesize_sine(b, grid):
    """Inverse of analyze_sine: samples of sum b_n Im(w**n) on the grid."""
    b = np.asarray(b, dtype=float)
    n = np.arange(1, b.size + 1)
    return np.sin(np.outer(grid.theta, n)) @ b


def scale_to_physical(a, rule, grid, d):
    """Sampled boundaries of the first patch and of its reflection through (d, 0)."""
    z1 = rule.epsilon * eval_map(a, rule, grid.nodes)
    return z1, 2 * d - z1


def signed_area(z):
    """Shoelace area of a closed polyline given as complex samples."""
    zn = np.roll(z, -1)
    return 0.5 * np.sum(z.real * zn.imag - zn.real * z.imag)
