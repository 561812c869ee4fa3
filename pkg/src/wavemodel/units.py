"""Unit schemes, physical constants, and the charge/mass density bridge.

Two schemes are supported: ``natural`` (all constants 1, the default for
verification work) and ``si`` (CODATA values, used for the Compton
wavelength in metres). There is no general unit-algebra engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import ConfigError

# CODATA 2018 (SI exact where fixed by definition)
HBAR_SI = 1.054571817e-34       # J s
C0_SI = 2.99792458e8            # m / s
M_ELECTRON_SI = 9.1093837015e-31  # kg
E_CHARGE_SI = 1.602176634e-19   # C

_SCHEMES = ("natural", "si")


@dataclass(frozen=True)
class Units:
    """Physical constants of one unit scheme.

    ``c_density`` converts squared wave amplitude to mass density;
    ``mu_medium`` and ``eps_medium`` are the (dimensionless, vacuum)
    medium constants entering the field equations.
    """

    hbar: float
    c0: float
    m_e: float
    e_charge: float
    c_density: float
    mu_medium: float
    eps_medium: float
    scheme: str

    def __post_init__(self):
        for name in ("hbar", "c0", "m_e", "e_charge", "c_density",
                     "mu_medium", "eps_medium"):
            if getattr(self, name) <= 0.0:
                raise ConfigError(f"constant {name} must be positive")
        if self.scheme not in _SCHEMES:
            raise ConfigError(f"unknown unit scheme {self.scheme!r}")

    @property
    def h(self) -> float:
        """Unreduced Planck constant h = 2 pi hbar."""
        return 2.0 * math.pi * self.hbar


def make_units(scheme: str = "natural", **overrides: float) -> Units:
    """Build a fully populated :class:`Units` for the given scheme.

    SI constants can be overridden by keyword (e.g. ``m_e=...``);
    overrides are rejected for the natural scheme, which is all-ones by
    definition.
    """
    if scheme == "natural":
        if overrides:
            raise ConfigError("natural units are fixed to 1; no overrides")
        return Units(1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, "natural")
    if scheme == "si":
        units = Units(HBAR_SI, C0_SI, M_ELECTRON_SI, E_CHARGE_SI,
                      1.0, 1.0, 1.0, "si")
        if overrides:
            bad = set(overrides) - {"hbar", "c0", "m_e", "e_charge",
                                    "c_density", "mu_medium", "eps_medium"}
            if bad:
                raise ConfigError(f"unknown constant override(s): {sorted(bad)}")
            units = replace(units, **overrides)
        return units
    raise ConfigError(f"unknown unit scheme {scheme!r}")


def sigma_bar(units: Units, rho_bar: float) -> float:
    """Charge density paired with a mean mass density: (e/m) * rho_bar.

    The ratio rho_bar / sigma_bar is m/e for any rho_bar > 0.
    """
    if rho_bar < 0.0:
        raise ValueError("rho_bar must be non-negative")
    return (units.e_charge / units.m_e) * rho_bar


def units_from_config(section: dict) -> Units:
    """Build Units from a parsed ``[units]`` config section.

    Keys: ``scheme`` plus optional SI constant overrides.
    """
    scheme = section.get("scheme", "natural")
    overrides = {k: float(v) for k, v in section.items() if k != "scheme"}
    return make_units(scheme, **overrides)
