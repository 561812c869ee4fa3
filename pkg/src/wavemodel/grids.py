"""Periodic rectilinear grids and second-order central stencils.

All first derivatives share one stencil (two-point central with wrap),
so discrete curl, grad, div and the time derivative commute exactly;
identities like div(curl F) = 0 and curl(grad f) = 0 hold to round-off
on these grids. The second derivative is the compact 3-point stencil.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidGridError
from .fields import ParticleModel, X_HAT

MIN_POINTS_PER_WAVELENGTH = 8


@dataclass(frozen=True)
class Grid:
    """Periodic sampling domain aligned with the propagation axis (x).

    ``shape`` is (nx, ny, nz); spacing is uniform and nx*h spans a whole
    number of wavelengths. Fields of an x-propagating model are constant
    along y and z, so a thin transverse extent is enough.
    """

    origin: np.ndarray
    spacing: float
    shape: tuple
    time_step: float
    wavelength: float
    points_per_wavelength: int

    def __post_init__(self):
        object.__setattr__(self, "origin", np.asarray(self.origin, dtype=float))

    @property
    def axes(self):
        return tuple(self.origin[i] + self.spacing * np.arange(self.shape[i])
                     for i in range(3))

    def mesh(self) -> np.ndarray:
        """Positions of every grid node, shape (nx, ny, nz, 3)."""
        xs, ys, zs = self.axes
        mx, my, mz = np.meshgrid(xs, ys, zs, indexing="ij")
        return np.stack([mx, my, mz], axis=-1)


def build_grid(model: ParticleModel, points_per_wavelength: int,
               wavelengths: int = 1, transverse_points: int = 4,
               c0: float = 1.0) -> Grid:
    """Grid with h*N = lambda exactly along the propagation direction.

    Default time step is h / (2 * max(c0, speed)).
    """
    if points_per_wavelength < MIN_POINTS_PER_WAVELENGTH:
        raise InvalidGridError(
            f"points_per_wavelength must be >= {MIN_POINTS_PER_WAVELENGTH}")
    if wavelengths < 1:
        raise InvalidGridError("wavelengths must be >= 1")
    mode = model.modes[0]
    if not np.allclose(mode.e_prop, X_HAT, atol=1e-12):
        raise InvalidGridError("grid construction expects propagation along x")
    lam = mode.wavelength
    h = lam / points_per_wavelength
    dt = h / (2.0 * max(c0, model.speed))
    shape = (points_per_wavelength * wavelengths,
             transverse_points, transverse_points)
    return Grid(np.zeros(3), h, shape, dt, lam, points_per_wavelength)


# ---------------------------------------------------------------------------
# spatial stencils (periodic wrap via np.roll; field axes are the first three)


def d1(f: np.ndarray, axis: int, h: float) -> np.ndarray:
    """Central first derivative along one grid axis."""
    return (np.roll(f, -1, axis=axis) - np.roll(f, 1, axis=axis)) / (2.0 * h)


def d2(f: np.ndarray, axis: int, h: float) -> np.ndarray:
    """Compact central second derivative along one grid axis."""
    return (np.roll(f, -1, axis=axis) - 2.0 * f
            + np.roll(f, 1, axis=axis)) / h ** 2


def grad(f: np.ndarray, h: float) -> np.ndarray:
    return np.stack([d1(f, 0, h), d1(f, 1, h), d1(f, 2, h)], axis=-1)


def div(v: np.ndarray, h: float) -> np.ndarray:
    return (d1(v[..., 0], 0, h) + d1(v[..., 1], 1, h)
            + d1(v[..., 2], 2, h))


def curl(v: np.ndarray, h: float) -> np.ndarray:
    cx = d1(v[..., 2], 1, h) - d1(v[..., 1], 2, h)
    cy = d1(v[..., 0], 2, h) - d1(v[..., 2], 0, h)
    cz = d1(v[..., 1], 0, h) - d1(v[..., 0], 1, h)
    return np.stack([cx, cy, cz], axis=-1)


def laplacian(f: np.ndarray, h: float) -> np.ndarray:
    return d2(f, 0, h) + d2(f, 1, h) + d2(f, 2, h)


def vector_laplacian(v: np.ndarray, h: float) -> np.ndarray:
    return np.stack([laplacian(v[..., i], h) for i in range(3)], axis=-1)


# ---------------------------------------------------------------------------
# time stencils: ``sample`` maps a time to a field array


def dt1(sample, t: float, dt: float) -> np.ndarray:
    return (sample(t + dt) - sample(t - dt)) / (2.0 * dt)


def dt2(sample, t: float, dt: float) -> np.ndarray:
    return (sample(t + dt) - 2.0 * sample(t) + sample(t - dt)) / dt ** 2


def linf(f: np.ndarray) -> float:
    return float(np.max(np.abs(f)))


def l2(f: np.ndarray) -> float:
    return float(math.sqrt(np.mean(np.square(f))))
