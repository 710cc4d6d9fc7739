from __future__ import annotations

import numpy as np
import pytest
from scipy.integrate import quad

ACCEPTANCE_LINES: list[str] = []


def circle_moment_oracle(alpha: float, p: int) -> float:
    """mean(tau**p / |tau - 1|**alpha dtau) by adaptive quadrature.

    In the angle variable this is (1/2pi) int cos((p+1)t) |2 sin(t/2)|**-alpha dt;
    the endpoint singularities are handled by the algebraic weight of QAWS.
    """

    def smooth(t):
        ratio = 2 * np.sin(t / 2) / (t * (2 * np.pi - t)) if 0 < t < 2 * np.pi else 1 / (2 * np.pi)
        return np.cos((p + 1) * t) * ratio ** (-alpha)

    val, _ = quad(smooth, 0, 2 * np.pi, weight="alg", wvar=(-alpha, -alpha),
                  epsabs=1e-14, epsrel=1e-12, limit=200)
    return val / (2 * np.pi)


@pytest.fixture
def moment_oracle():
    return circle_moment_oracle


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
