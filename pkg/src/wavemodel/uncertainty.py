"""Uncertainty-floor arithmetic and the measurement-resolution argument.

The position spread of a periodic internal structure is half a
wavelength; the wavenumber spread induced by the intrinsic potential
amplitude m*u^2 equals k itself, so the position-momentum product lands
exactly on h/2 for canonical models and grows linearly with any larger
potential uncertainty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import WrongKindError
from .fields import ParticleModel
from .units import Units


@dataclass(frozen=True)
class UncertaintyReport:
    delta_v: float
    delta_k: float
    delta_x: float
    delta_p: float
    product_xp: float
    floor: float

    def csv_row(self, speed: float, k: float, lam: float) -> str:
        ok = self.product_xp >= self.floor * (1.0 - 1e-12)
        return ",".join(["%.17g" % v for v in (
            speed, k, lam, self.delta_v, self.delta_k, self.delta_x,
            self.product_xp, self.floor)] + [str(ok).lower()])


CSV_HEADER = "speed,k,lambda,delta_v,delta_k,delta_x,product,floor,ok"


@dataclass(frozen=True)
class ResolutionReport:
    required_dx: float
    uncertainty_dx: float
    violates: bool


def uncertainty_floor(units: Units, model: ParticleModel,
                      delta_v: float = None) -> UncertaintyReport:
    """Position-momentum uncertainty product of a single-mode electron.

    ``delta_v`` defaults to the intrinsic potential amplitude m*speed^2,
    the minimum uncertainty of the applied potential; raising it raises
    the product proportionally.
    """
    if model.kind != "electron":
        raise WrongKindError("uncertainty_floor is framed for massive "
                             "particles; got a photon model")
    mode = model.mode
    k = mode.k_norm
    if delta_v is None:
        delta_v = units.m_e * model.speed ** 2
    delta_k = units.m_e * delta_v / (units.hbar ** 2 * k)
    delta_x = mode.wavelength / 2.0
    delta_p = units.hbar * delta_k
    return UncertaintyReport(delta_v, delta_k, delta_x, delta_p,
                             delta_x * delta_p, units.h / 2.0)


def canonical_floor(units: Units):
    """(h/2, hbar/2, ratio): the model floor, the textbook floor, and
    their unit-independent ratio 2 pi."""
    half_h = units.h / 2.0
    half_hbar = units.hbar / 2.0
    return half_h, half_hbar, half_h / half_hbar


def bell_resolution_check(model: ParticleModel) -> ResolutionReport:
    """Spin-correlation measurements need resolution strictly below
    lambda/2, which is exactly the position-uncertainty floor: the
    requirement always violates it."""
    lam = model.modes[0].wavelength
    required = lam / 2.0
    floor = lam / 2.0
    return ResolutionReport(required, floor, required <= floor)
