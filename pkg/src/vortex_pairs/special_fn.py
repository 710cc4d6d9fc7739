"""Gamma-derived constants, Pochhammer symbols and Riesz-kernel moments.

Contour means are normalized as ``(1/(2 pi i)) * integral over the unit circle``,
so ``mean(dtau / tau) = 1``.
"""

import math
from dataclasses import dataclass

import numpy as np


def _check_alpha(alpha):
    if not (0.0 < alpha < 1.0):
        raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")


def gamma(x):
    return math.gamma(x)


def pochhammer(x, n):
    """Rising factorial x (x+1) ... (x+n-1), evaluated as a plain product."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = 1.0
    for j in range(n):
        p *= x + j
    return p


def c_alpha(alpha):
    """Normalization of the gSQG kernel ``C / (2 pi |x|**alpha)``."""
    _check_alpha(alpha)
    return math.gamma(alpha / 2) / (2.0 ** (1 - alpha) * math.gamma(1 - alpha / 2))


def moment_scale(alpha):
    """Gamma(1-alpha) / Gamma(1-alpha/2)**2, the zeroth circle moment."""
    return math.gamma(1 - alpha) / math.gamma(1 - alpha / 2) ** 2


def hat_c_prefactor(alpha):
    """mean(dtau / |tau - w|**alpha) / w."""
    return alpha / (2 - alpha) * moment_scale(alpha)


def hat_c_alpha(alpha):
    _check_alpha(alpha)
    return hat_c_prefactor(alpha) * c_alpha(alpha)


def moment_ratios(alpha, jmax):
    """r_j = (alpha/2)_j / (1-alpha/2)_j for j = 0..jmax, as running products."""
    r = np.empty(jmax + 1)
    r[0] = 1.0
    a, b = alpha / 2, 1 - alpha / 2
    for j in range(jmax):
        r[j + 1] = r[j] * (a + j) / (b + j)
    return r


def singular_moment(alpha, k):
    """M_k with mean(conj(tau)**k / |tau - w|**alpha dtau) = M_k conj(w)**(k-1)."""
    _check_alpha(alpha)
    if k < 1:
        raise ValueError("k must be >= 1")
    return moment_scale(alpha) * moment_ratios(alpha, k - 1)[k - 1]


def power_moments(alpha, powers):
    """m_p with mean(tau**p / |tau - w|**alpha dtau) = m_p w**(p+1), any integer p.

    Rotating tau = w s reduces this to a cosine moment of |2 sin(t/2)|**-alpha,
    which depends only on |p+1|; so m_p = M_{p+2} for p >= -1 and
    m_{-k} = M_k for k >= 1.
    """
    powers = np.asarray(powers)
    j = np.abs(powers + 1)
    r = moment_ratios(alpha, int(j.max()))
    return moment_scale(alpha) * r[j]


def gsqg_multiplier(alpha, n):
    _check_alpha(alpha)
    if n < 1:
        raise ValueError("n must be >= 1")
    return float(gsqg_multipliers(alpha, n)[n - 1])


def gsqg_multipliers(alpha, nmax):
    """gamma_n for n = 1..nmax (diagonal of the gSQG linearized operator)."""
    _check_alpha(alpha)
    pre = alpha * c_alpha(alpha) * moment_scale(alpha) / 4
    a, b = 1 + alpha / 2, 1 - alpha / 2
    # R[n] = (a)_n / (b)_n
    R = np.empty(nmax + 2)
    R[0] = 1.0
    for j in range(nmax + 1):
        R[j + 1] = R[j] * (a + j) / (b + j)
    n = np.arange(1, nmax + 1)
    return pre * (2 * (1 + n) / b - R[1:nmax + 1] - R[2:nmax + 2])


@dataclass(frozen=True)
class MultiplierTable:
    alpha: float
    values: tuple
    kind: str

    def __getitem__(self, n):
        return self.values[n - 1]

    @classmethod
    def build(cls, kind, alpha, nmax):
        if kind == "euler_linearization":
            vals = tuple(-float(n) for n in range(1, nmax + 1))
        elif kind == "gsqg_linearization":
            vals = tuple(float(v) for v in gsqg_multipliers(alpha, nmax))
        elif kind == "singular_moment":
            vals = tuple(float(v) for v in moment_scale(alpha) * moment_ratios(alpha, nmax - 1))
        else:
            raise ValueError(f"unknown table kind {kind!r}")
        return cls(alpha, vals, kind)
