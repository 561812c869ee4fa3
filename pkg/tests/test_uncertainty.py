import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavemodel import WrongKindError, electron_model, make_units
from wavemodel import uncertainty


@pytest.mark.parametrize("speed", [0.01, 0.1, 0.5])
def test_product_lands_on_half_h(natural, speed):
    model = electron_model(natural, speed)
    rep = uncertainty.uncertainty_floor(natural, model)
    assert rep.product_xp == pytest.approx(math.pi, rel=1e-12)
    assert rep.floor == pytest.approx(math.pi, rel=1e-15)


def test_delta_k_equals_k_for_canonical_potential(natural, electron):
    rep = uncertainty.uncertainty_floor(natural, electron)
    assert rep.delta_k == pytest.approx(electron.mode.k_norm, rel=1e-12)
    assert rep.delta_x == pytest.approx(
        electron.mode.wavelength / 2.0, rel=1e-15)


def test_product_grows_with_potential_uncertainty(natural, electron):
    base = uncertainty.uncertainty_floor(natural, electron)
    doubled = uncertainty.uncertainty_floor(
        natural, electron, delta_v=2.0 * base.delta_v)
    assert doubled.product_xp == pytest.approx(
        2.0 * base.product_xp, rel=1e-12)


def test_photon_rejected(natural, photon):
    with pytest.raises(WrongKindError):
        uncertainty.uncertainty_floor(natural, photon)


def test_canonical_floor_ratio_is_two_pi(natural, si):
    for units in (natural, si):
        half_h, half_hbar, ratio = uncertainty.canonical_floor(units)
        assert ratio == pytest.approx(2.0 * math.pi, rel=1e-15)
        assert half_h == pytest.approx(math.pi * units.hbar, rel=1e-15)
        assert half_hbar == units.hbar / 2.0


def test_resolution_requirement_always_violates_floor(natural, electron):
    rep = uncertainty.bell_resolution_check(electron)
    assert rep.violates
    assert rep.required_dx == pytest.approx(
        electron.mode.wavelength / 2.0, rel=1e-15)


@settings(max_examples=50, deadline=None)
@given(speed=st.floats(min_value=1e-3, max_value=0.99))
def test_floor_is_speed_independent_property(speed):
    units = make_units("natural")
    model = electron_model(units, speed)
    rep = uncertainty.uncertainty_floor(units, model)
    # the minimum product is h/2 for every canonical speed
    assert rep.product_xp == pytest.approx(units.h / 2.0, rel=1e-9)


def test_csv_row_flags_floor(natural, electron):
    rep = uncertainty.uncertainty_floor(natural, electron)
    row = rep.csv_row(0.1, electron.mode.k_norm, electron.mode.wavelength)
    assert row.endswith(",true")
    assert len(row.split(",")) == len(uncertainty.CSV_HEADER.split(","))
