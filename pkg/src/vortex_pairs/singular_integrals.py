"""Contour integrals over the unit circle.

All matrices here are indexed ``[i, j]`` with the target node ``w_i`` on rows
and the integration node ``tau_j`` on columns.  The mean-value integral
``(1/(2 pi i)) * integral g(tau) dtau`` is approximated by the trapezoid rule
``(1/M) * sum_j g(tau_j) tau_j``.
"""

import numpy as np

from .boundary import eval_f
from .errors import DegenerateGeometryError
from .special_fn import c_alpha, power_moments


def contour_mean(density, grid):
    """Trapezoid mean of density sampled on the grid (last axis = tau)."""
    return np.asarray(density) @ grid.nodes / grid.M


def pow_ratio(u, p):
    """((1 + u)**p - 1) / u, continuous at u = 0."""
    u = np.asarray(u, dtype=float)
    zero = u == 0.0
    us = np.where(zero, 1.0, u)
    return np.where(zero, p, np.expm1(p * np.log1p(us)) / us)


def divided_difference(a, grid):
    """P[i, j] = (f(tau_j) - f(w_i)) / (tau_j - w_i), with f'(w_i) on the diagonal."""
    w = grid.nodes
    fw = eval_f(a, w)
    dz = w[None, :] - w[:, None]
    np.fill_diagonal(dz, 1.0)
    P = (fw[None, :] - fw[:, None]) / dz
    np.fill_diagonal(P, eval_f(a, w, 1))
    return P


def euler_kernels(a, eps, tau, w):
    """Both self-interaction kernels evaluated literally at tau != w.

    Used as the reference when checking the diagonal limits.
    """
    A = tau - w
    B = eval_f(a, tau) - eval_f(a, w)
    K1 = (np.conj(A) + eps * np.conj(B)) / (A + eps * B)
    K2 = (A * np.conj(B) - np.conj(A) * B) / (A * (A + eps * B))
    return K1, K2


def euler_kernel_limits(a, eps, w):
    """Values of the two kernels of euler_kernels as tau -> w."""
    w = np.asarray(w, dtype=complex)
    fp = eval_f(a, w, 1)
    fpc = np.conj(fp)
    den = w * w * (1 + eps * fp)
    return -(1 + eps * fpc) / den, -(fpc - fp) / den


def euler_self_term(a, eps, grid):
    """mean(K1 f'(tau) dtau) + mean(K2 dtau) at every node.

    With Q = conj(P) the kernels reduce to
    K1 = -(1 + eps Q) / (tau w (1 + eps P)) and K2 = -(Q - P) / (tau w (1 + eps P)),
    which are smooth in tau, so the plain trapezoid rule is spectrally accurate.
    """
    w = grid.nodes
    P = divided_difference(a, grid)
    den = 1 + eps * P
    if np.min(np.abs(den)) < 0.25:
        raise DegenerateGeometryError("self-interaction denominator nearly vanishes")
    Q = np.conj(P)
    fp = eval_f(a, w, 1)
    num = (1 + eps * Q) * fp[None, :] + (Q - P)
    # the tau_j measure factor cancels the 1/tau_j of the kernels
    return -np.sum(num / den, axis=1) / (grid.M * w)


def riesz_product_integral(H, grid, alpha):
    """mean(H[i, :](tau) / |tau - w_i|**alpha dtau) for a smooth density per row.

    Each row is expanded in Fourier modes tau**k and the exact moments
    mean(tau**k / |tau - w|**alpha dtau) = m_k w**(k+1) are applied.
    """
    M = grid.M
    c = np.fft.fft(H, axis=1) / M
    k = np.fft.fftfreq(M, 1.0 / M).astype(int)
    m = power_moments(alpha, k)
    i = np.arange(M)
    wp = grid.nodes[np.outer(i, k + 1) % M]
    out = (c * wp) @ m
    # split the Nyquist mode evenly between +-M/2
    h = M // 2
    wp_up = grid.nodes[(i * (h + 1)) % M]
    m_up = power_moments(alpha, [h])[0]
    out += 0.5 * c[:, h] * (wp_up * m_up - wp[:, h] * m[h])
    return out


def riesz_self_term(a, alpha, eps, grid):
    """Regular part of the gSQG self-interaction at every node.

    The singular piece C_hat * w / amp is removed.  With
    |phi(w) - phi(tau)| = |tau - w| |1 + amp P|, the density against
    |tau - w|**-alpha is f'(tau) |1 + amp P|**-alpha + (|1 + amp P|**-alpha - 1) / amp.
    """
    amp = eps * abs(eps) ** alpha
    P = divided_difference(a, grid)
    ratio = np.abs(1 + amp * P)
    if ratio.min() < 0.25 or ratio.max() > 4.0:
        raise DegenerateGeometryError("boundary map lost its bi-Lipschitz bound")
    rp = P.real
    v_over_amp = 2 * rp + amp * (P.real ** 2 + P.imag ** 2)
    v = amp * v_over_amp
    S_pow = (1 + v) ** (-alpha / 2)
    S = pow_ratio(v, -alpha / 2) * v_over_amp
    fp = eval_f(a, grid.nodes, 1)
    H = fp[None, :] * S_pow + S
    return c_alpha(alpha) * riesz_product_integral(H, grid, alpha)


def _check_separation(phi, eps, d):
    if 2 * d - 2 * abs(eps) * np.max(np.abs(phi)) <= 1.0:
        raise DegenerateGeometryError("patches are too close for the interaction integral")


def interaction_term(a, model, alpha, eps, d, grid):
    """Interaction of the first patch with the reflected one, at every node.

    Euler: mean(conj(phi(tau)) phi'(tau) / (eps (phi(tau) + phi(w)) - 2d) dtau).
    gSQG: C mean(phi'(tau) (|eps Phi - 2d|**-alpha - (2d)**-alpha) / eps dtau)
    with Phi = phi(tau) + phi(w); subtracting the constant is free because
    mean(phi' dtau) = 0, and the quotient extends continuously to eps = 0.
    """
    w = grid.nodes
    amp = eps if model == "euler" else eps * abs(eps) ** alpha
    phi = w + amp * eval_f(a, w)
    dphi = 1 + amp * eval_f(a, w, 1)
    _check_separation(phi, eps, d)
    Phi = phi[None, :] + phi[:, None]
    if model == "euler":
        dens = np.conj(phi)[None, :] * dphi[None, :] / (eps * Phi - 2 * d)
        return contour_mean(dens, grid)
    u_over_eps = (-4 * d * Phi.real + eps * (Phi.real ** 2 + Phi.imag ** 2)) / (4 * d * d)
    E = (2 * d) ** (-alpha) * pow_ratio(eps * u_over_eps, -alpha / 2) * u_over_eps
    return c_alpha(alpha) * contour_mean(E * dphi[None, :], grid)
