import json

import pytest

from wavemodel import OutOfDomainError
from wavemodel import interaction


def _scenario(**kw):
    defaults = dict(rho_el0=1.0, sigma_el0=1.0, phi_value=0.25,
                    xdot_sq_initial=0.0, xdot_sq_final=0.04)
    defaults.update(kw)
    return interaction.constant_potential_scenario(**defaults)


def test_hamiltonian_is_velocity_independent():
    moving = _scenario(xdot_sq_final=0.04)
    still = _scenario(xdot_sq_final=0.0)
    assert interaction.hamiltonian(moving) == interaction.hamiltonian(still)
    assert interaction.hamiltonian(moving) == pytest.approx(0.25, rel=1e-15)


def test_energy_balance_is_exact():
    s = _scenario()
    report = interaction.emission_balance(s)
    gain = s.rho_el0 * (s.xdot_sq_final - s.xdot_sq_initial)
    assert report.rho_ph0_emitted * s.c0 ** 2 == gain
    assert report.v_em == pytest.approx(2.0 * gain, rel=1e-15)


def test_signed_hamiltonian_term():
    report = interaction.emission_balance(_scenario())
    assert report.h_w == pytest.approx(-0.04, rel=1e-12)
    assert report.rho_ph0_emitted == pytest.approx(0.04, rel=1e-12)


def test_lagrangian_density_terms():
    s = _scenario()
    # rho_el0*xdot^2 + rho_ph0*c0^2 - sigma_el0*phi
    expected = 1.0 * 0.04 + 0.04 * 1.0 - 1.0 * 0.25
    assert interaction.lagrangian_density(s, 0.0) == pytest.approx(
        expected, rel=1e-12)


def test_interpolated_potential_profile():
    s = interaction.InteractionScenario(
        1.0, 1.0, [0.0, 1.0, 2.0], [0.0, 1.0, 0.0], 0.0, 0.0)
    assert s.phi_at(0.5) == pytest.approx(0.5, rel=1e-12)
    assert s.phi_at(1.5) == pytest.approx(0.5, rel=1e-12)
    with pytest.raises(OutOfDomainError):
        s.phi_at(3.0)


def test_scenario_validation():
    with pytest.raises(ValueError):
        interaction.InteractionScenario(-1.0, 1.0, [0.0, 1.0], [0.0, 0.0],
                                        0.0, 0.0)
    with pytest.raises(ValueError):
        interaction.InteractionScenario(1.0, 1.0, [0.0, 1.0], [0.0, 0.0],
                                        -0.1, 0.0)


def test_report_json_is_deterministic():
    report = interaction.emission_balance(_scenario())
    text = report.to_json()
    payload = json.loads(text)
    assert list(payload) == sorted(payload)
    assert text == interaction.emission_balance(_scenario()).to_json()


def test_no_gain_means_no_emission():
    report = interaction.emission_balance(_scenario(xdot_sq_final=0.0))
    assert report.rho_ph0_emitted == 0.0
    assert report.v_em == 0.0
