"""Lorentz boosts, transformed wave speed, and the frame energy audit.

Boosts act along x. The density scale factor under a boost is resolved
to gamma (relativistic mass effect), the x-extent of the particle volume
contracts by 1/gamma, and the total intrinsic energy phi0 * V_P is the
same in both frames.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFrameError, SuperluminalBoostError
from .fields import ParticleModel, electron_model, photon_model
from .units import Units

MINKOWSKI_ETA = np.diag([1.0, -1.0, -1.0, -1.0])

SWEEP_HEADER = "beta,gamma,phi_ratio,vp_ratio,energy_ratio"


@dataclass(frozen=True)
class BoostParams:
    v_boost: float
    beta: float
    gamma: float
    matrix: np.ndarray
    alpha_density: float

    def __post_init__(self):
        object.__setattr__(self, "matrix",
                           np.asarray(self.matrix, dtype=float))


@dataclass(frozen=True)
class FrameEnergyAudit:
    phi0_rest: float
    phi0_moving: float
    vp_rest: float
    vp_moving: float
    e_rest: float
    e_moving: float


def boost(units: Units, v: float) -> BoostParams:
    """Standard x-boost; the matrix preserves the Minkowski interval."""
    if abs(v) >= units.c0:
        raise SuperluminalBoostError(f"|v| = {abs(v)} >= c0 = {units.c0}")
    beta = v / units.c0
    gamma = 1.0 / math.sqrt(1.0 - beta * beta)
    lam = np.eye(4)
    lam[0, 0] = lam[1, 1] = gamma
    lam[0, 1] = lam[1, 0] = -beta * gamma
    if not np.allclose(lam.T @ MINKOWSKI_ETA @ lam, MINKOWSKI_ETA,
                       atol=1e-12):
        raise AssertionError("boost matrix fails interval preservation")
    return BoostParams(v, beta, gamma, lam, gamma)


def velocity_addition(units: Units, u_x: float, v: float) -> float:
    """u' = (u_x - v) / (1 - u_x v / c0^2)."""
    if abs(u_x) > units.c0:
        raise ValueError("|u_x| must not exceed c0")
    if abs(v) >= units.c0:
        raise SuperluminalBoostError(f"|v| = {abs(v)} >= c0 = {units.c0}")
    denom = 1.0 - u_x * v / units.c0 ** 2
    if denom == 0.0:
        raise DegenerateFrameError("velocity-addition denominator vanished")
    return (u_x - v) / denom


def transformed_wave_speed(units: Units, model: ParticleModel,
                           params: BoostParams):
    """Characteristic speed of the wave equation seen from the boosted frame.

    The (1 - beta^2) scalings of the Laplacian and the time term cancel,
    so the transformed equation is again a wave equation whose speed is
    the velocity-addition composite u'. Returns (u_prime, residual_fn)
    where ``residual_fn(points_per_wavelength)`` evaluates the density
    wave-equation residual for a plane wave travelling at u'.
    """
    u_prime = velocity_addition(units, model.speed, params.v_boost)

    def residual_fn(points_per_wavelength: int = 64):
        from . import residuals
        from .grids import build_grid
        if model.kind == "photon":
            moved = photon_model(units, model.modes[0].omega)
        else:
            if not 0.0 < abs(u_prime) < units.c0:
                raise DegenerateFrameError(
                    "comoving frame: no propagating wave to verify")
            moved = electron_model(units, abs(u_prime))
        grid = build_grid(moved, points_per_wavelength, c0=units.c0)
        return residuals.residual("wave_eq_rho", moved, grid, units)

    return u_prime, residual_fn


def frame_energy_audit(model: ParticleModel,
                       params: BoostParams) -> FrameEnergyAudit:
    """gamma-scaled potential times gamma-contracted volume is invariant."""
    phi0_rest = model.phi0
    phi0_moving = params.gamma * phi0_rest
    vp_rest = model.volume
    vp_moving = vp_rest / params.gamma
    return FrameEnergyAudit(phi0_rest, phi0_moving, vp_rest, vp_moving,
                            phi0_rest * vp_rest, phi0_moving * vp_moving)


def sweep_rows(units: Units, model: ParticleModel, betas) -> list:
    """CSV rows beta,gamma,phi_ratio,vp_ratio,energy_ratio."""
    rows = []
    for beta in betas:
        params = boost(units, beta * units.c0)
        audit = frame_energy_audit(model, params)
        rows.append(",".join("%.17g" % v for v in (
            beta, params.gamma,
            audit.phi0_moving / audit.phi0_rest,
            audit.vp_moving / audit.vp_rest,
            audit.e_moving / audit.e_rest)))
    return rows
