import pytest

from wavemodel import spin


def test_photon_spin_solution(natural, photon):
    sol = spin.solve_spin("photon", natural, photon)
    assert sol.g_factor == 1.0
    assert sol.spin == pytest.approx(natural.hbar, rel=1e-15)
    assert sol.product_gs == pytest.approx(natural.hbar, rel=1e-12)
    assert sol.w_quantum == pytest.approx(
        natural.hbar * photon.mode.omega, rel=1e-15)


def test_electron_spin_solution(natural, electron):
    sol = spin.solve_spin("electron", natural, electron)
    assert sol.g_factor == 2.0
    assert sol.spin == pytest.approx(natural.hbar / 2.0, rel=1e-15)
    assert sol.product_gs == pytest.approx(natural.hbar, rel=1e-12)
    assert sol.w_quantum == pytest.approx(
        natural.hbar * electron.mode.omega / 2.0, rel=1e-15)


@pytest.mark.parametrize("kind", ["photon", "electron"])
def test_field_energy_matches_quantum(kind, natural, electron, photon):
    model = photon if kind == "photon" else electron
    sol = spin.solve_spin(kind, natural, model)
    assert sol.w_field == pytest.approx(sol.w_quantum, rel=1e-12)


def test_rotation_field_factor_of_two(natural, electron, photon):
    b_ph = spin.rotation_b_field("photon", natural, photon)
    b_el = spin.rotation_b_field("electron", natural, electron)
    omega_ph = photon.mode.omega
    omega_el = electron.mode.omega
    assert b_ph == pytest.approx(2.0 * omega_ph, rel=1e-15)
    assert b_el == pytest.approx(omega_el, rel=1e-15)


def test_si_products_match_hbar(si, natural, electron, photon):
    for kind, model in (("photon", photon), ("electron", electron)):
        sol = spin.solve_spin(kind, si, model)
        assert sol.product_gs == pytest.approx(si.hbar, rel=1e-12)


def test_magnetic_moment_sign_conventions(natural):
    assert spin.magnetic_moment(natural, 2.0, 0.5) == pytest.approx(
        0.5, rel=1e-15)
    with pytest.raises(ValueError):
        spin.magnetic_moment(natural, 2.0, -0.5)


def test_unknown_kind_rejected(natural, electron):
    with pytest.raises(ValueError):
        spin.solve_spin("muon", natural, electron)


def test_csv_row_shape(natural, photon):
    sol = spin.solve_spin("photon", natural, photon)
    row = sol.csv_row(photon.mode.omega)
    assert len(row.split(",")) == len(spin.CSV_HEADER.split(","))
    assert row.endswith(",true")
