from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from vortex_pairs.boundary import (
    AmplitudeRule,
    CircleGrid,
    analyze_sine,
    curvature,
    eval_map,
    scale_to_physical,
    signed_area,
    synthesize_sine,
)
from vortex_pairs.errors import DegenerateGeometryError

small_coeffs = arrays(np.float64, st.integers(1, 12), elements=st.floats(-0.5, 0.5))


def test_amplitude_rule():
    assert AmplitudeRule("euler", -0.2).amplitude == -0.2
    assert AmplitudeRule("gsqg", 0.04, 0.5).amplitude == pytest.approx(0.008)
    assert AmplitudeRule("gsqg", -0.04, 0.5).amplitude == pytest.approx(-0.008)
    with pytest.raises(ValueError):
        AmplitudeRule("navier", 0.1)


def test_grid():
    g = CircleGrid(8)
    assert g.nodes[2] == pytest.approx(1j)
    g.check_modes(1)
    with pytest.raises(ValueError):
        g.check_modes(2)
    with pytest.raises(ValueError):
        CircleGrid(7)


def test_eval_map_examples():
    rule = AmplitudeRule("euler", 0.3)
    assert eval_map([0.0], rule, 1j) == pytest.approx(1j)
    assert eval_map([1.0], rule, 1j) == pytest.approx(1j * (1 - 0.3))
    assert eval_map([0.0, 1.0], rule, 1.0, 1) == pytest.approx(1 - 0.6)
    # f = w^-2: f'' = 6 w^-4
    assert eval_map([0.0, 1.0], rule, 1j, 2) == pytest.approx(0.3 * 6)


@settings(max_examples=50)
@given(small_coeffs, st.floats(0, 2 * np.pi))
def test_reflection_symmetry(a, t):
    rule = AmplitudeRule("gsqg", 0.2, 0.4)
    w = np.exp(1j * t)
    for order in (0, 1, 2):
        assert eval_map(a, rule, np.conj(w), order) == pytest.approx(np.conj(eval_map(a, rule, w, order)), abs=1e-12)


def test_curvature_circle_and_degenerate():
    rule = AmplitudeRule("euler", 0.1)
    w = CircleGrid(16).nodes
    assert np.allclose(curvature([0.0], rule, w), 1.0)
    # physical circle of radius eps has curvature 1/eps
    assert np.allclose(curvature([0.0], rule, w) / rule.epsilon, 10.0)
    # phi'(w) = 1 - w^-2 vanishes at w = 1
    with pytest.raises(DegenerateGeometryError):
        curvature([1.0], AmplitudeRule("euler", 1.0), np.array([1.0 + 0j]))


def test_curvature_against_turning_angle():
    a = [0.05, -0.03, 0.02]
    rule = AmplitudeRule("euler", 0.3)
    t = np.linspace(0.1, 6.0, 25)
    h = 1e-3
    z = [eval_map(a, rule, np.exp(1j * (t + k * h))) for k in (-2, -1, 0, 1, 2)]
    d1 = (z[0] - 8 * z[1] + 8 * z[3] - z[4]) / (12 * h)
    d2 = (-z[0] + 16 * z[1] - 30 * z[2] + 16 * z[3] - z[4]) / (12 * h * h)
    kappa_fd = np.imag(np.conj(d1) * d2) / np.abs(d1) ** 3
    assert np.allclose(curvature(a, rule, np.exp(1j * t)), kappa_fd, atol=1e-6)


def test_analyze_sine_examples():
    g = CircleGrid(32)
    w = g.nodes
    b = analyze_sine(np.imag(w ** 2), g)
    assert b.shape == (15,)
    assert b[1] == pytest.approx(1, abs=1e-14)
    assert np.max(np.abs(np.delete(b, 1))) < 1e-14
    b = analyze_sine(3 * np.imag(w) - 0.5 * np.imag(w ** 4), g)
    assert b[0] == pytest.approx(3, abs=1e-14)
    assert b[3] == pytest.approx(-0.5, abs=1e-14)
    with pytest.raises(ValueError):
        analyze_sine(np.zeros(10), g)


@given(arrays(np.float64, 10, elements=st.floats(-10, 10)))
def test_sine_round_trip(b):
    g = CircleGrid(22)
    assert np.allclose(analyze_sine(synthesize_sine(b, g), g)[:10], b, atol=1e-12)


def test_scale_to_physical():
    g = CircleGrid(64)
    rule = AmplitudeRule("euler", 0.1)
    z1, z2 = scale_to_physical([0.0, 0.0], rule, g, 3.0)
    assert np.allclose(np.abs(z1), 0.1)
    assert np.allclose(np.abs(z2 - 6.0), 0.1)
    assert np.array_equal(z2, 6.0 - z1)
    assert signed_area(z1) > 0
    assert signed_area(z2) > 0
