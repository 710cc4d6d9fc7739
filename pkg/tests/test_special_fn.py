from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from vortex_pairs.special_fn import (
    MultiplierTable,
    c_alpha,
    gamma,
    gsqg_multiplier,
    gsqg_multipliers,
    hat_c_alpha,
    hat_c_prefactor,
    moment_scale,
    pochhammer,
    power_moments,
    singular_moment,
)

# 20-digit values of Gamma(x)
GAMMA_TABLE = [
    (0.001, "999.423772484595466115"),
    (0.125, "7.5339415987976119047"),
    (0.25, "3.62560990822190831193"),
    (0.375, "2.37043618441660090865"),
    (0.5, "1.7724538509055160273"),
    (0.625, "1.43451884809055677564"),
    (0.75, "1.22541670246517764513"),
    (0.875, "1.08965235742289695125"),
    (1, "1.0"),
    (1.125, "0.941742699849701488087"),
    (1.5, "0.886226925452758013649"),
    (1.75, "0.919062526848883233847"),
    (2, "1.0"),
    (2.5, "1.32934038817913702047"),
    (2.875, "1.78771089889694031065"),
    (3, "2.0"),
]

ALPHAS = [0.25, 0.5, 0.75]


@pytest.mark.parametrize("x,ref", GAMMA_TABLE)
def test_gamma_reference_table(x, ref):
    assert gamma(x) == pytest.approx(float(ref), rel=1e-12)


def test_pochhammer_examples():
    assert pochhammer(7.3, 0) == 1
    assert pochhammer(1.25, 2) == 2.8125
    assert pochhammer(-0.25, 3) == pytest.approx(-0.328125, abs=1e-16)
    with pytest.raises(ValueError):
        pochhammer(1.0, -1)


@given(st.floats(-5, 5), st.integers(0, 64))
def test_pochhammer_recurrence(x, n):
    lhs = pochhammer(x, n + 1)
    rhs = pochhammer(x, n) * (x + n)
    assert lhs == pytest.approx(rhs, rel=1e-13, abs=1e-300)


def test_c_alpha_values():
    # Gamma(1/4) / (sqrt 2 Gamma(3/4)), 30-digit value from mpmath
    assert c_alpha(0.5) == pytest.approx(2.09209924010620329790, rel=1e-14)
    assert c_alpha(1 - 1e-9) == pytest.approx(1.0, rel=1e-8)
    for a in (1e-6, 1e-5):
        assert a * c_alpha(a) == pytest.approx(1.0, rel=1e-4)


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.1, 1.5])
def test_constants_reject_alpha(bad):
    with pytest.raises(ValueError):
        c_alpha(bad)
    with pytest.raises(ValueError):
        hat_c_alpha(bad)
    with pytest.raises(ValueError):
        gsqg_multiplier(bad, 1)


def test_hat_c(moment_oracle):
    # prefactor is mean(dtau/|tau - w|^alpha) / w
    assert hat_c_prefactor(0.5) == pytest.approx(moment_oracle(0.5, 0), rel=1e-10)
    assert hat_c_prefactor(0.5) == pytest.approx(0.39345, abs=1e-5)
    assert hat_c_prefactor(1e-8) < 1e-8
    assert hat_c_alpha(0.5) == pytest.approx(hat_c_prefactor(0.5) * c_alpha(0.5), rel=1e-15)
    assert hat_c_alpha(0.5) == pytest.approx(0.8232, abs=1e-4)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("k", range(1, 9))
def test_singular_moment_against_quadrature(moment_oracle, alpha, k):
    # mean(conj(tau)^k / |tau - 1|^alpha dtau)
    assert singular_moment(alpha, k) == pytest.approx(moment_oracle(alpha, -k), rel=1e-10)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("p", [0, 1, 2, 5, 8])
def test_positive_power_moments(moment_oracle, alpha, p):
    assert power_moments(alpha, [p])[0] == pytest.approx(moment_oracle(alpha, p), rel=1e-10)
    assert power_moments(alpha, [p])[0] == singular_moment(alpha, p + 2)


def test_singular_moment_examples():
    assert singular_moment(0.5, 1) == pytest.approx(math.gamma(0.5) / math.gamma(0.75) ** 2, rel=1e-15)
    assert singular_moment(0.5, 1) == pytest.approx(1.18034, abs=1e-5)
    assert singular_moment(0.5, 3) == pytest.approx(0.28103, abs=1e-5)
    for a in ALPHAS:
        assert a / (2 - a) * singular_moment(a, 1) == pytest.approx(hat_c_prefactor(a), rel=1e-15)
    with pytest.raises(ValueError):
        singular_moment(0.5, 0)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_singular_moment_decreasing(alpha):
    m = [singular_moment(alpha, k) for k in range(1, 65)]
    assert all(0 < b < a for a, b in zip(m, m[1:]))
    assert m[0] == moment_scale(alpha)


def test_gsqg_multiplier_values():
    assert gsqg_multiplier(0.5, 1) == pytest.approx(0.4704, abs=1e-4)
    # gamma_n / n approaches its limit only like n**(alpha - 1)
    limit = hat_c_alpha(0.5)
    errs = [abs(gsqg_multipliers(0.5, n)[-1] / n - limit) for n in (10_000, 40_000)]
    assert errs[0] < 1.5e-2 * limit
    assert errs[1] == pytest.approx(errs[0] / 2, rel=0.05)
    with pytest.raises(ValueError):
        gsqg_multiplier(0.5, 0)


def test_gsqg_multiplier_matches_pochhammer_formula():
    a = 0.3
    pre = a * c_alpha(a) * math.gamma(1 - a) / (4 * math.gamma(1 - a / 2) ** 2)
    for n in (1, 2, 7):
        lit = pre * (2 * (1 + n) / (1 - a / 2)
                     - pochhammer(1 + a / 2, n) / pochhammer(1 - a / 2, n)
                     - pochhammer(1 + a / 2, n + 1) / pochhammer(1 - a / 2, n + 1))
        assert gsqg_multiplier(a, n) == pytest.approx(lit, rel=1e-13)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_gsqg_multiplier_linear_growth(alpha):
    g = gsqg_multipliers(alpha, 512)
    ratio = g / np.arange(1, 513)
    assert np.all(g > 0)
    assert np.all(np.diff(g) > 0)
    assert ratio.min() > 0.3 * ratio.max()


def test_multiplier_tables():
    e = MultiplierTable.build("euler_linearization", 0.0, 5)
    assert e.values == (-1.0, -2.0, -3.0, -4.0, -5.0)
    assert e[3] == -3.0
    g = MultiplierTable.build("gsqg_linearization", 0.5, 4)
    assert g[1] == gsqg_multiplier(0.5, 1)
    s = MultiplierTable.build("singular_moment", 0.5, 3)
    assert s[3] == pytest.approx(singular_moment(0.5, 3), rel=1e-15)
    with pytest.raises(ValueError):
        MultiplierTable.build("nope", 0.5, 3)
