import pytest

from wavemodel import build_grid, electron_model, make_units, photon_model


@pytest.fixture(scope="session")
def natural():
    return make_units("natural")


@pytest.fixture(scope="session")
def si():
    return make_units("si")


@pytest.fixture
def electron(natural):
    """Canonical electron: speed 0.1, k = 0.1, omega = 0.01, lambda = 20 pi."""
    return electron_model(natural, 0.1)


@pytest.fixture
def photon(natural):
    """Canonical photon: omega = 1, k = 1, lambda = 2 pi."""
    return photon_model(natural, 1.0)


@pytest.fixture
def grid64(electron, natural):
    return build_grid(electron, 64, c0=natural.c0)
