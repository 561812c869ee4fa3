"""Internal-field model of extended electrons and photons.

Closed-form plane-wave fields (density, momentum, intrinsic potential,
wavefunction, derived E/B pairs) plus finite-difference residual checks
for every governing equation, energy partitions, uncertainty floors,
spin solutions, Lorentz-frame audits, interaction bookkeeping, and the
Compton-scattering pipeline. The ``wavemodel`` CLI wraps it all.
"""

from . import (compton, energetics, fields, grids, interaction, relativity,
               reporting, residuals, spin, uncertainty, units)
from .errors import (ConfigError, DegenerateFrameError, InvalidGridError,
                     OrderUndefinedError, OutOfDomainError,
                     RelativisticRecoilError, SuperluminalBoostError,
                     UnknownEquationError, UnsupportedSuperpositionError,
                     WavemodelError, WrongKindError)
from .fields import (ParticleModel, WaveMode, electron_model, photon_model,
                     with_omega_scaled)
from .grids import Grid, build_grid
from .residuals import EQUATION_IDS, ResidualReport, residual
from .units import Units, make_units, sigma_bar

__version__ = "1.0.0"

__all__ = [
    "ConfigError", "DegenerateFrameError", "EQUATION_IDS", "Grid",
    "InvalidGridError", "OrderUndefinedError", "OutOfDomainError",
    "ParticleModel", "RelativisticRecoilError", "ResidualReport",
    "SuperluminalBoostError", "Units", "UnknownEquationError",
    "UnsupportedSuperpositionError", "WaveMode", "WavemodelError",
    "WrongKindError", "build_grid", "compton", "electron_model",
    "energetics", "fields", "grids", "interaction", "make_units",
    "photon_model", "relativity", "reporting", "residual", "residuals",
    "sigma_bar", "spin", "uncertainty", "units", "with_omega_scaled",
]
