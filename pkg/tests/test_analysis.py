import numpy as np
import pytest

from giantsim.analysis import (BadWindowError, NonUniformSpacingError,
                               RankDeficientError, evaluate_polynomial,
                               fit_polynomial, savitzky_golay,
                               write_trajectory_csv)


def window_regression_oracle(ts, values, window, polyorder):
    """Independent per-window least-squares solve via the normal equations."""
    n = len(values)
    half = window // 2
    powers = np.arange(polyorder + 1)
    out = np.empty(n)
    for i in range(n):
        if i < half:
            start, offset = 0, i - half
        elif i >= n - half:
            start, offset = n - window, i - (n - window + half)
        else:
            start, offset = i - half, 0
        x = np.arange(window) - half
        y = values[start:start + window]
        design = x[:, None] ** powers
        coeffs = np.linalg.solve(design.T @ design, design.T @ y)
        out[i] = float(offset ** powers @ coeffs)
    return out


def test_reproduces_cubic_exactly():
    ts = np.arange(40, dtype=float)
    values = ts**3
    result = savitzky_golay(np.column_stack([ts, values]), 7, 3)
    assert np.allclose(result[:, 1], values, atol=1e-9)
    assert np.array_equal(result[:, 0], ts)


def test_constant_signal_unchanged():
    ts = np.linspace(0.0, 1.0, 25)
    result = savitzky_golay(np.column_stack([ts, np.full(25, 5.0)]), 9, 2)
    assert np.allclose(result[:, 1], 5.0, atol=1e-12)


def test_matches_per_window_regression_oracle():
    rng = np.random.default_rng(11)
    ts = np.linspace(0.0, 4.0, 60)
    values = ts**3 - 2 * ts + rng.normal(0.0, 0.3, 60)
    result = savitzky_golay(np.column_stack([ts, values]), 11, 3)
    expected = window_regression_oracle(ts, values, 11, 3)
    assert np.allclose(result[:, 1], expected, atol=1e-9)


def test_filter_is_linear():
    rng = np.random.default_rng(12)
    ts = np.arange(50, dtype=float)
    u = rng.normal(size=50)
    v = rng.normal(size=50)
    a, b = 2.5, -1.25
    fu = savitzky_golay(np.column_stack([ts, u]), 9, 2)[:, 1]
    fv = savitzky_golay(np.column_stack([ts, v]), 9, 2)[:, 1]
    fuv = savitzky_golay(np.column_stack([ts, a * u + b * v]), 9, 2)[:, 1]
    assert np.allclose(fuv, a * fu + b * fv, atol=1e-9)


@pytest.mark.parametrize("window,polyorder", [(8, 2), (3, 3), (99, 2)])
def test_bad_window_rejected(window, polyorder):
    samples = np.column_stack([np.arange(20.0), np.zeros(20)])
    with pytest.raises(BadWindowError):
        savitzky_golay(samples, window, polyorder)


def test_nonuniform_spacing_rejected():
    ts = np.arange(20, dtype=float)
    ts[10] += 0.01
    with pytest.raises(NonUniformSpacingError):
        savitzky_golay(np.column_stack([ts, np.zeros(20)]), 5, 2)


def test_recovers_lift_quartic(profile):
    ts = np.linspace(0.0, profile.period, 200)
    values = np.array([profile.raw_height(t) for t in ts])
    coeffs = fit_polynomial(np.column_stack([ts, values]), 4)
    for got, expected in zip(coeffs, profile.coefficients):
        assert got == pytest.approx(expected, rel=1e-6)


def test_two_points_give_exact_line():
    coeffs = fit_polynomial([(0.0, 1.0), (2.0, 5.0)], 1)
    assert coeffs == pytest.approx([1.0, 2.0], abs=1e-12)


def test_matches_normal_equations_oracle():
    rng = np.random.default_rng(13)
    ts = rng.uniform(-2.0, 2.0, 100)
    values = rng.normal(size=100)
    coeffs = fit_polynomial(np.column_stack([ts, values]), 3)
    design = ts[:, None] ** np.arange(4)
    expected = np.linalg.solve(design.T @ design, design.T @ values)
    assert np.allclose(coeffs, expected, atol=1e-8)


def test_least_squares_optimality():
    rng = np.random.default_rng(14)
    ts = rng.uniform(0.0, 3.0, 60)
    values = np.sin(ts) + rng.normal(0.0, 0.1, 60)
    samples = np.column_stack([ts, values])
    coeffs = fit_polynomial(samples, 3)
    best = np.sum((evaluate_polynomial(coeffs, ts) - values) ** 2)
    for _ in range(20):
        rival = coeffs + rng.normal(0.0, 1e-3, coeffs.shape)
        rss = np.sum((evaluate_polynomial(rival, ts) - values) ** 2)
        assert best <= rss + 1e-12


def test_rank_deficient_rejected():
    samples = [(1.0, 2.0), (1.0, 2.1), (1.0, 1.9), (1.0, 2.0)]
    with pytest.raises(RankDeficientError):
        fit_polynomial(samples, 2)


def test_too_few_samples_rejected():
    with pytest.raises(ValueError):
        fit_polynomial([(0.0, 1.0)], 1)


def test_csv_export_format(tmp_path):
    path = tmp_path / "out.csv"
    write_trajectory_csv(path, [(0.0, 1.5, 27.66182), (0.1, -2.0, 3.25)])
    raw = path.read_bytes()
    assert raw == b"t,x_mm,y_mm\n0.0,1.5,27.66182\n0.1,-2.0,3.25\n"
