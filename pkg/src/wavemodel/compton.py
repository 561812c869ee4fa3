"""Compton-scattering pipeline: recoil, Doppler shift, and the angular
wavelength-shift law delta_lambda = lambda_C * (1 - cos theta)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import RelativisticRecoilError
from .units import Units

CSV_HEADER = "theta_deg,delta_lambda,lambda_out,nu_out,u_recoil"


@dataclass(frozen=True)
class ComptonRow:
    theta: float
    delta_lambda: float
    lambda_out: Optional[float]
    nu_out: Optional[float]
    u_recoil: Optional[float]

    def csv_row(self) -> str:
        def fmt(v):
            return "" if v is None else "%.17g" % v
        return ",".join([
            "%.17g" % math.degrees(self.theta), "%.17g" % self.delta_lambda,
            fmt(self.lambda_out), fmt(self.nu_out), fmt(self.u_recoil)])


def recoil_velocity(units: Units, omega_ph: float) -> float:
    """Longitudinal recoil speed sqrt(hbar*omega/m) of an absorbing electron.

    Valid for free electrons only: the implied speed must stay below c0.
    """
    if omega_ph < 0.0:
        raise ValueError("omega_ph must be non-negative")
    if units.hbar * omega_ph / units.m_e >= units.c0 ** 2:
        raise RelativisticRecoilError(
            "hbar*omega/m >= c0^2: recoil formula leaves its "
            "low-velocity domain")
    return math.sqrt(units.hbar * omega_ph / units.m_e)


def doppler_shift(units: Units, nu: float, u: float):
    """(exact, first_order) receding-source Doppler frequencies."""
    if abs(u) >= units.c0:
        raise ValueError("|u| must be below c0")
    ratio = u / units.c0
    exact = nu * math.sqrt((1.0 - ratio) / (1.0 + ratio))
    return exact, nu * (1.0 - ratio)


def compton_wavelength(units: Units) -> float:
    """lambda_C = h / (m c0), independent of the incident wavelength."""
    return units.h / (units.m_e * units.c0)


def angular_shift(units: Units, theta: float,
                  lambda_in: float = None) -> ComptonRow:
    """Wavelength shift at observation angle theta.

    The longitudinal recoil contributes the full Compton wavelength; the
    projection u' = u0*cos(theta) of the recoil onto the observation
    direction reduces it to lambda_C * (1 - cos theta).
    """
    if not 0.0 <= theta < 2.0 * math.pi:
        raise ValueError("theta must lie in [0, 2 pi)")
    lam_c = compton_wavelength(units)
    delta = lam_c * (1.0 - math.cos(theta))
    lambda_out = nu_out = u_recoil = None
    if lambda_in is not None:
        if lambda_in <= 0.0:
            raise ValueError("lambda_in must be positive")
        lambda_out = lambda_in + delta
        nu_out = units.c0 / lambda_out
        omega_in = 2.0 * math.pi * units.c0 / lambda_in
        u_recoil = recoil_velocity(units, omega_in) * math.cos(theta)
    return ComptonRow(theta, delta, lambda_out, nu_out, u_recoil)


def shift_table(units: Units, theta_start: float, theta_end: float,
                steps: int, lambda_in: float = None) -> list:
    """Rows of the angular shift law on an inclusive angle grid."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    rows = []
    for i in range(steps):
        frac = i / (steps - 1) if steps > 1 else 0.0
        theta = theta_start + frac * (theta_end - theta_start)
        rows.append(angular_shift(units, theta, lambda_in))
    return rows
