import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavemodel import (UnsupportedSuperpositionError, WaveMode,
                       electron_model, photon_model, with_omega_scaled)
from wavemodel import fields

TWENTY_PI = 20.0 * math.pi


def test_canonical_electron_oracle(electron):
    # frozen values for speed 0.1 in natural units
    mode = electron.mode
    assert mode.k_norm == pytest.approx(0.1, rel=1e-15)
    assert mode.omega == pytest.approx(0.01, rel=1e-15)
    assert mode.wavelength == pytest.approx(TWENTY_PI, rel=1e-15)
    assert electron.volume == pytest.approx(TWENTY_PI, rel=1e-15)
    assert electron.rho0 == pytest.approx(1.0 / (10.0 * math.pi), rel=1e-15)
    assert electron.rho_bar == pytest.approx(1.0 / TWENTY_PI, rel=1e-15)
    assert electron.phi0 == pytest.approx(1.0 / (1000.0 * math.pi), rel=1e-15)


def test_electron_dispersion_by_construction(natural):
    for speed in (0.01, 0.1, 0.5, 0.9):
        model = electron_model(natural, speed)
        mode = model.mode
        assert mode.omega == pytest.approx(speed * mode.k_norm, rel=1e-15)


def test_density_integrates_to_mass(natural):
    # volume integral of rho0*sin^2 over the whole-wavelength volume is m
    model = electron_model(natural, 0.1, wavelengths=3)
    lam = model.mode.wavelength
    n = 3 * 128
    xs = (np.arange(n) + 0.5) * (3 * lam / n)
    r = np.zeros((n, 3))
    r[:, 0] = xs
    rho = fields.mass_density(model, r, 0.0)
    mass = float(np.sum(rho)) * (3 * lam / n) * 1.0
    assert mass == pytest.approx(natural.m_e, rel=1e-12)


def test_photon_vacuum_dispersion(natural, photon):
    assert photon.speed == natural.c0
    assert photon.mode.omega == pytest.approx(
        natural.c0 * photon.mode.k_norm, rel=1e-15)


def test_constancy_of_total_energy_density(electron):
    # rho*u^2 + phi == rho0*u^2 at every sampled phase
    rng = np.random.default_rng(7)
    r = rng.uniform(-100.0, 100.0, size=(256, 3))
    t = rng.uniform(0.0, 1000.0)
    rho = fields.mass_density(electron, r, t)
    phi = fields.intrinsic_potential(electron, r, t)
    total = rho * electron.speed ** 2 + phi
    assert np.allclose(total, electron.phi0, rtol=1e-12, atol=1e-18)


def test_momentum_is_density_times_velocity(electron):
    r = np.zeros((64, 3))
    r[:, 0] = np.linspace(0.0, 40.0, 64)
    p = fields.momentum_field(electron, r, 0.25)
    rho = fields.mass_density(electron, r, 0.25)
    assert np.allclose(p[:, 0], rho * electron.speed, rtol=1e-12)
    assert np.all(p[:, 1:] == 0.0)


def test_em_fields_transversal_and_equal_magnitude(photon):
    r = np.zeros((32, 3))
    r[:, 0] = np.linspace(0.0, 6.0, 32)
    e_field, b_field = fields.em_fields(photon, r, 0.1)
    assert np.allclose(np.sum(e_field * b_field, axis=-1), 0.0, atol=1e-15)
    assert np.allclose(np.linalg.norm(e_field, axis=-1),
                       np.linalg.norm(b_field, axis=-1), rtol=1e-12)
    # E along e_trans, B along e_prop x e_trans
    assert np.allclose(e_field[:, 0], 0.0, atol=1e-15)
    assert np.allclose(b_field[:, :2], 0.0, atol=1e-15)


def test_em_energy_density_matches_intrinsic_potential(photon):
    # (E^2+B^2)/8pi with amplitude v*sqrt(4 pi rho0) equals rho0*v^2*cos^2
    r = np.zeros((32, 3))
    r[:, 0] = np.linspace(0.0, 6.0, 32)
    w_em = fields.em_energy_density(photon, r, 0.3)
    phi = fields.intrinsic_potential(photon, r, 0.3)
    assert np.allclose(w_em, phi, rtol=1e-12)


def test_vector_potential_antiparallel_to_momentum(natural, electron):
    r = np.zeros((16, 3))
    r[:, 0] = np.linspace(0.0, 60.0, 16)
    a = fields.vector_potential(natural, electron, r, 0.0)
    p = fields.momentum_field(electron, r, 0.0)
    assert np.allclose(a, -natural.c0 * p, rtol=1e-15)


def test_multi_mode_density_raises(natural):
    base = photon_model(natural, 1.0)
    double = fields.ParticleModel(
        "photon", natural.c0, base.rho0, base.volume,
        base.modes + photon_model(natural, 2.0).modes)
    with pytest.raises(UnsupportedSuperpositionError):
        fields.mass_density(double, np.zeros(3), 0.0)
    # momentum and potential remain defined as per-mode sums
    p = fields.momentum_field(double, np.zeros(3), 0.0)
    assert p.shape == (3,)


def test_with_omega_scaled_breaks_dispersion(electron):
    bad = with_omega_scaled(electron, 2.0)
    assert fields.dispersion_mismatch(electron) < 1e-15
    assert fields.dispersion_mismatch(bad) == pytest.approx(0.5, rel=1e-12)


def test_mode_validation():
    with pytest.raises(ValueError):
        WaveMode(1.0, [0.0, 0.0, 0.0], 1.0)
    with pytest.raises(ValueError):
        WaveMode(1.0, [1.0, 0.0, 0.0], -1.0)
    with pytest.raises(ValueError):
        WaveMode(1.0, [1.0, 0.0, 0.0], 1.0,
                 e_prop=[1.0, 0.0, 0.0], e_trans=[1.0, 0.0, 0.0])


@settings(max_examples=50, deadline=None)
@given(speed=st.floats(min_value=1e-3, max_value=0.99),
       phase_shift=st.floats(min_value=0.0, max_value=1000.0))
def test_density_bounds_property(speed, phase_shift):
    from wavemodel import make_units
    model = electron_model(make_units("natural"), speed)
    r = np.zeros((64, 3))
    r[:, 0] = np.linspace(0.0, 4.0 * model.mode.wavelength, 64)
    rho = fields.mass_density(model, r, phase_shift)
    assert np.all(rho >= 0.0)
    assert np.all(rho <= model.rho0 * (1.0 + 1e-12))


def test_dump_round_trip(tmp_path, electron):
    r = np.zeros((8, 3))
    r[:, 0] = np.arange(8.0)
    values = fields.mass_density(electron, r, 0.0)
    out = tmp_path / "rho.csv"
    n = fields.dump_scalar_field(out, r, 0.0, values)
    assert n == 8
    lines = out.read_text().strip().split("\n")
    assert lines[0] == "x,y,z,t,value"
    parsed = np.array([[float(c) for c in ln.split(",")] for ln in lines[1:]])
    assert np.allclose(parsed[:, 4], values, rtol=0.0, atol=0.0)
