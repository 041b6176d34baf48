import math

import numpy as np
import pytest

import rotns


def test_cos3x1_norms():
    g = rotns.Grid(32)
    coeffs = np.zeros((1, 32, 32, 32), dtype=complex)
    coeffs[0, 3, 0, 0] = 0.5
    coeffs[0, -3, 0, 0] = 0.5
    f = rotns.SpectralField.from_coefficients(g, coeffs)
    assert rotns.lp_norm(f, 2.0) == pytest.approx(1 / math.sqrt(2), rel=1e-12)
    assert rotns.lp_norm(f, 4.0) == pytest.approx(0.78254, abs=1e-3)
    assert rotns.hybrid_norm(f, 0.5, -0.25, 4.0, 1.0) == pytest.approx(0.65804, abs=1e-3)
    values = f.physical()
    x = np.arange(32) * 2 * math.pi / 32
    np.testing.assert_allclose(values[0, :, 0, 0], np.cos(3 * x), atol=1e-14)


def test_semigroup_single_mode():
    g = rotns.Grid(8)
    coeffs = np.zeros((3, 8, 8, 8), dtype=complex)
    coeffs[0, 0, 0, 1] = 1.0
    coeffs[0, 0, 0, -1] = 1.0
    u = rotns.apply_semigroup(rotns.SpectralField.from_coefficients(g, coeffs), math.pi / 2,
                              rotns.FlowParams(nu=1.0, omega=2.0))
    assert u.coefficients()[0, 0, 0, 1].real == pytest.approx(-0.20788, abs=1e-5)


def test_random_field_and_projection():
    g = rotns.Grid(16)
    u = rotns.random_solenoidal(3, -11 / 6, 0, 1, g)
    assert u.is_solenoidal()
    assert rotns.lp_norm(rotns.leray_project(u) - u, 2.0) < 1e-14
    n = rotns.nonlinear_term(u)
    assert n.divergence_residual() < 1e-12
    assert rotns.lp_norm(2.0 * u, 2.0) == pytest.approx(2 * rotns.lp_norm(u, 2.0))


def test_picard_small_data_converges():
    g = rotns.Grid(16)
    u0 = rotns.random_solenoidal(1, -11 / 6, 0, 1, g)
    u0 = (0.05 / rotns.lp_norm(u0, 2.0)) * u0
    params = rotns.FlowParams(nu=1.0, omega=1.0)
    tg = rotns.TimeGrid(0.25, 16)
    final, report = rotns.picard_solve(u0, tg, params, p=2.0, tol=1e-10, max_iter=30)
    assert report.converged
    assert report.residual < 1e-9
    stepped = rotns.if_step_final(u0, tg, params)
    assert rotns.lp_norm(final - stepped, 2.0) < 1e-6 * rotns.lp_norm(u0, 2.0)


def test_weights_and_probe():
    e, w = rotns.omega_weights(0, 1.0, math.log(2.0))
    assert e == pytest.approx(0.5)
    assert w == pytest.approx(0.66291, abs=1e-5)
    eta = rotns.bilinear_bound_probe(rotns.Grid(16), rotns.TimeGrid(0.25, 8), rotns.FlowParams())
    assert math.isfinite(eta) and eta > 0


def test_snapshot_round_trip(tmp_path):
    g = rotns.Grid(8)
    u = rotns.random_solenoidal(5, -11 / 6, 0, 1, g)
    path = str(tmp_path / "u.cbsv")
    rotns.write_snapshot(path, u, rotns.FlowParams(nu=0.1, omega=2.0))
    v, params = rotns.read_snapshot(path)
    assert v == u
    assert params.nu == 0.1 and params.omega == 2.0


def test_partition_suite_passes():
    assert "partition" in rotns.suite_names()
    checks = rotns.run_suite("partition")
    assert checks and all(c.passed for c in checks)
    with pytest.raises(ValueError):
        rotns.run_suite("nope")


def test_invalid_grid():
    with pytest.raises(ValueError, match="power of two"):
        rotns.Grid(12)
