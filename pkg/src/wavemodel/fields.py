"""Closed-form internal fields of extended electrons and photons.

Every evaluator is a pure function of (model, position, time). Positions
are arrays of shape (..., 3); scalar results have shape (...), vector
results (..., 3). All internal fields are functions of the travelling
phase k.r - omega*t alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import UnsupportedSuperpositionError, WrongKindError
from .units import Units

_UNIT_TOL = 1e-12

X_HAT = np.array([1.0, 0.0, 0.0])
Y_HAT = np.array([0.0, 1.0, 0.0])
Z_HAT = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True)
class WaveMode:
    """One monochromatic plane-wave component.

    ``amp`` is the density amplitude of the component; the momentum and
    potential amplitudes derive from it via the particle speed. ``e_prop``
    and ``e_trans`` are orthonormal propagation / transversal polarization
    unit vectors.
    """

    amp: float
    k_vec: np.ndarray
    omega: float
    e_prop: np.ndarray = field(default_factory=lambda: X_HAT.copy())
    e_trans: np.ndarray = field(default_factory=lambda: Y_HAT.copy())

    def __post_init__(self):
        object.__setattr__(self, "k_vec", np.asarray(self.k_vec, dtype=float))
        object.__setattr__(self, "e_prop", np.asarray(self.e_prop, dtype=float))
        object.__setattr__(self, "e_trans", np.asarray(self.e_trans, dtype=float))
        if self.omega <= 0.0:
            raise ValueError("omega must be positive")
        if self.k_norm <= 0.0:
            raise ValueError("wave vector must be non-zero")
        for name, v in (("e_prop", self.e_prop), ("e_trans", self.e_trans)):
            if abs(np.linalg.norm(v) - 1.0) > _UNIT_TOL:
                raise ValueError(f"{name} must be a unit vector")
        if abs(float(self.e_prop @ self.e_trans)) > _UNIT_TOL:
            raise ValueError("e_prop and e_trans must be orthogonal")

    @property
    def k_norm(self) -> float:
        return float(np.linalg.norm(self.k_vec))

    @property
    def wavelength(self) -> float:
        return 2.0 * math.pi / self.k_norm

    @property
    def frequency(self) -> float:
        return self.omega / (2.0 * math.pi)

    @property
    def period(self) -> float:
        return 1.0 / self.frequency

    def phase(self, r: np.ndarray, t) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return r @ self.k_vec - self.omega * np.asarray(t, dtype=float)


@dataclass(frozen=True)
class ParticleModel:
    """Extended electron or photon: speed, density amplitude, volume, modes.

    ``volume`` spans a whole number of wavelengths along the propagation
    direction so period averages are exact.
    """

    kind: str
    speed: float
    rho0: float
    volume: float
    modes: tuple

    def __post_init__(self):
        if self.kind not in ("electron", "photon"):
            raise ValueError(f"unknown particle kind {self.kind!r}")
        if not self.modes:
            raise ValueError("at least one wave mode required")
        object.__setattr__(self, "modes", tuple(self.modes))
        if self.rho0 < 0.0 or self.volume <= 0.0:
            raise ValueError("rho0 must be >= 0 and volume > 0")
        if self.kind == "electron" and self.speed <= 0.0:
            raise ValueError("electron speed must be positive")

    @property
    def mode(self) -> WaveMode:
        """Primary (first) mode; errors if more than one is present."""
        if len(self.modes) != 1:
            raise UnsupportedSuperpositionError(
                "operation defined per component; model has "
                f"{len(self.modes)} modes")
        return self.modes[0]

    @property
    def rho_bar(self) -> float:
        """Mean mass density: period average of rho0*sin^2."""
        return 0.5 * self.rho0

    @property
    def phi0(self) -> float:
        """Constant total intrinsic energy density rho0*speed^2."""
        return self.rho0 * self.speed ** 2


def electron_model(units: Units, speed: float, wavelengths: int = 1,
                   transverse_area: float = 1.0,
                   e_prop: np.ndarray = X_HAT,
                   e_trans: np.ndarray = Y_HAT) -> ParticleModel:
    """Canonical single-mode electron.

    Wavenumber and frequency follow the matter-wave relations
    k = m*speed/hbar and omega = m*speed^2/hbar, so the dispersion
    omega = speed*k holds by construction. The density amplitude is
    2m/V_P, which makes the volume integral of the density equal m.
    """
    if not 0.0 < speed < units.c0:
        raise ValueError("electron speed must satisfy 0 < speed < c0")
    if wavelengths < 1:
        raise ValueError("volume must span at least one wavelength")
    k = units.m_e * speed / units.hbar
    omega = units.m_e * speed ** 2 / units.hbar
    lam = 2.0 * math.pi / k
    volume = wavelengths * lam * transverse_area
    rho0 = 2.0 * units.m_e / volume
    e_prop = np.asarray(e_prop, dtype=float)
    mode = WaveMode(rho0, k * e_prop, omega, e_prop, np.asarray(e_trans, float))
    return ParticleModel("electron", speed, rho0, volume, (mode,))


def photon_model(units: Units, omega: float, rho0: float = 1.0,
                 wavelengths: int = 1, transverse_area: float = 1.0,
                 e_prop: np.ndarray = X_HAT,
                 e_trans: np.ndarray = Y_HAT) -> ParticleModel:
    """Canonical single-mode photon: speed c0, vacuum dispersion omega = c0*k."""
    if omega <= 0.0:
        raise ValueError("omega must be positive")
    if wavelengths < 1:
        raise ValueError("volume must span at least one wavelength")
    k = omega / units.c0
    lam = 2.0 * math.pi / k
    volume = wavelengths * lam * transverse_area
    e_prop = np.asarray(e_prop, dtype=float)
    mode = WaveMode(rho0, k * e_prop, omega, e_prop, np.asarray(e_trans, float))
    return ParticleModel("photon", units.c0, rho0, volume, (mode,))


def with_omega_scaled(model: ParticleModel, factor: float) -> ParticleModel:
    """Copy of the model with every mode frequency scaled by ``factor``.

    Breaks the dispersion relation on purpose; used to check that the
    residual engine flags non-solutions.
    """
    modes = tuple(replace(m, omega=m.omega * factor) for m in model.modes)
    return replace(model, modes=modes)


def dispersion_mismatch(model: ParticleModel) -> float:
    """Largest relative violation of omega = speed*|k| over all modes."""
    return max(abs(m.omega - model.speed * m.k_norm) / m.omega
               for m in model.modes)


# ---------------------------------------------------------------------------
# pointwise evaluators


def wavefunction(mode: WaveMode, r, t):
    """amp * sin(k.r - omega*t)."""
    return mode.amp * np.sin(mode.phase(r, t))


def mass_density(model: ParticleModel, r, t):
    """rho0 * sin^2(phase); defined per component only."""
    mode = model.mode
    return model.rho0 * np.sin(mode.phase(r, t)) ** 2


def momentum_field(model: ParticleModel, r, t):
    """Sum over modes of amp*speed * e_prop * sin^2(phase)."""
    r = np.asarray(r, dtype=float)
    out = np.zeros(np.broadcast_shapes(r[..., 0].shape,
                                       np.shape(t)) + (3,))
    for mode in model.modes:
        s2 = np.sin(mode.phase(r, t)) ** 2
        out = out + (mode.amp * model.speed) * s2[..., None] * mode.e_prop
    return out


def intrinsic_potential(model: ParticleModel, r, t):
    """Sum over modes of amp*speed^2 * cos^2(phase).

    For photons speed is c0, so the per-mode amplitude is amp*c0^2 and
    the Einstein relation holds mode by mode.
    """
    r = np.asarray(r, dtype=float)
    out = np.zeros(np.broadcast_shapes(r[..., 0].shape, np.shape(t)))
    v2 = model.speed ** 2
    for mode in model.modes:
        out = out + mode.amp * v2 * np.cos(mode.phase(r, t)) ** 2
    return out


def em_fields(model: ParticleModel, r, t):
    """Transversal (E, B) pair of the single-mode model.

    E = e_trans * v * sqrt(4 pi rho0) * cos(phase), B the same magnitude
    along e_prop x e_trans; E.B = 0 and |E| = |B| by construction.
    """
    mode = model.mode
    c = np.cos(mode.phase(r, t))
    amp = model.speed * math.sqrt(4.0 * math.pi * model.rho0)
    b_dir = np.cross(mode.e_prop, mode.e_trans)
    e_field = amp * c[..., None] * mode.e_trans
    b_field = amp * c[..., None] * b_dir
    return e_field, b_field


def em_energy_density(model: ParticleModel, r, t):
    """(E^2 + B^2) / 8 pi of the transversal fields."""
    e_field, b_field = em_fields(model, r, t)
    return (np.sum(e_field ** 2, axis=-1)
            + np.sum(b_field ** 2, axis=-1)) / (8.0 * math.pi)


def vector_potential(units: Units, model: ParticleModel, r, t):
    """A = -c0 * p, antiparallel to the momentum field everywhere."""
    return -units.c0 * momentum_field(model, r, t)


def require_kind(model: ParticleModel, kind: str, op: str) -> None:
    if model.kind != kind:
        raise WrongKindError(f"{op} expects a {kind} model, got {model.kind}")


# ---------------------------------------------------------------------------
# field dumps


def dump_scalar_field(path, positions, times, values) -> int:
    """Write `x,y,z,t,value` rows at full double precision; returns row count."""
    return _dump(path, "x,y,z,t,value", positions, times,
                 np.asarray(values, dtype=float)[..., None])


def dump_vector_field(path, positions, times, values) -> int:
    """Write `x,y,z,t,vx,vy,vz` rows at full double precision."""
    return _dump(path, "x,y,z,t,vx,vy,vz", positions, times,
                 np.asarray(values, dtype=float))


def _dump(path, header, positions, times, values) -> int:
    positions = np.asarray(positions, dtype=float).reshape(-1, 3)
    times = np.broadcast_to(np.asarray(times, dtype=float),
                            positions.shape[:1])
    values = values.reshape(positions.shape[0], -1)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(header + "\n")
        for pos, t, val in zip(positions, times, values):
            cols = [*pos, t, *val]
            fh.write(",".join("%.17g" % c for c in cols) + "\n")
    return positions.shape[0]
