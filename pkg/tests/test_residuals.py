import math

import pytest

from wavemodel import (EQUATION_IDS, OrderUndefinedError,
                       UnknownEquationError, WrongKindError, build_grid,
                       residual, with_omega_scaled)
from wavemodel import residuals

TRUNC_D2 = (4.0 * math.pi / 64.0) ** 2 / 12.0  # doubled-wavenumber, 2nd der.
TRUNC_D1 = (4.0 * math.pi / 64.0) ** 2 / 6.0   # doubled-wavenumber, 1st der.
TRUNC_PSI = (2.0 * math.pi / 64.0) ** 2 / 12.0


def test_unknown_equation_id(electron, grid64, natural):
    with pytest.raises(UnknownEquationError):
        residual("wave_eq_q", electron, grid64, natural)


def test_all_equations_evaluate(electron, grid64, natural):
    for eq_id in EQUATION_IDS:
        report = residual(eq_id, electron, grid64, natural)
        assert report.equation_id == eq_id
        assert report.residual_linf >= 0.0
        assert report.scale > 0.0


@pytest.mark.parametrize("eq_id,expected", [
    ("wave_eq_psi", TRUNC_PSI),
    ("wave_eq_rho", TRUNC_D2),
    ("wave_eq_p", TRUNC_D2),
    ("continuity", TRUNC_D1),
    ("lorentz_condition", TRUNC_D1),
    ("vector_potential_evolution", TRUNC_D1),
    ("schrodinger_free", TRUNC_PSI),
])
def test_truncation_floor_matches_stencil_analysis(
        eq_id, expected, electron, grid64, natural):
    # the density-family fields oscillate at 2k, so their residuals floor
    # at the doubled-wavenumber truncation estimates
    report = residual(eq_id, electron, grid64, natural)
    assert report.normalized_linf == pytest.approx(expected, rel=0.05)


@pytest.mark.parametrize("eq_id", ["faraday", "div_B"])
def test_stencil_identities_vanish(eq_id, electron, grid64, natural):
    # curl(grad .) and div(curl .) cancel exactly with shared stencils
    report = residual(eq_id, electron, grid64, natural)
    assert report.normalized_linf < 1e-12


def test_photon_residuals(photon, natural):
    grid = build_grid(photon, 64, c0=natural.c0)
    for eq_id in ("wave_eq_psi", "wave_eq_rho", "continuity", "faraday",
                  "ampere_modified", "div_B", "div_D"):
        report = residual(eq_id, photon, grid, natural)
        assert report.normalized_linf < 1e-2


def test_schrodinger_requires_electron(photon, natural):
    grid = build_grid(photon, 64, c0=natural.c0)
    with pytest.raises(WrongKindError):
        residual("schrodinger_free", photon, grid, natural)


def test_non_solution_flagged(electron, grid64, natural):
    bad = with_omega_scaled(electron, 2.0)
    for eq_id in ("wave_eq_psi", "wave_eq_rho", "continuity"):
        report = residual(eq_id, bad, grid64, natural)
        assert report.normalized_linf > 0.3, eq_id


def test_convergence_order_near_two(electron, natural):
    base = build_grid(electron, 32, c0=natural.c0)
    for eq_id in ("wave_eq_psi", "wave_eq_rho", "continuity"):
        order = residuals.convergence_order(eq_id, electron, base, natural)
        assert order == pytest.approx(2.0, abs=0.2), eq_id


def test_convergence_order_flat_for_non_solution(electron, natural):
    bad = with_omega_scaled(electron, 2.0)
    base = build_grid(bad, 32, c0=natural.c0)
    order = residuals.convergence_order("wave_eq_rho", bad, base, natural)
    assert abs(order) < 0.2


def test_order_undefined_at_roundoff_floor(electron, natural):
    base = build_grid(electron, 32, c0=natural.c0)
    with pytest.raises(OrderUndefinedError):
        residuals.convergence_order("div_B", electron, base, natural)


def test_longitudinal_fields_vanish(electron, grid64, natural):
    report = residuals.longitudinal_vanishing(electron, grid64, natural)
    # truncation-level only: first-derivative floor at doubled wavenumber
    assert report.normalized_linf == pytest.approx(TRUNC_D1, rel=0.05)


def test_longitudinal_fields_survive_detuning(electron, grid64, natural):
    detuned = with_omega_scaled(electron, 1.1)
    report = residuals.longitudinal_vanishing(detuned, grid64, natural)
    assert report.normalized_linf > 0.05


def test_report_csv_row(electron, grid64, natural):
    report = residual("wave_eq_rho", electron, grid64, natural)
    row = report.csv_row(64)
    cols = row.split(",")
    assert cols[0] == "wave_eq_rho"
    assert cols[1] == "64"
    assert float(cols[5]) == report.normalized_linf
