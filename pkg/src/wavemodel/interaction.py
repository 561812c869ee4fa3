"""Electron-photon interaction bookkeeping: Lagrangian density,
first-order Hamiltonian, and the photon-emission energy balance.

The first-order Hamiltonian contains no velocity term; the kinetic
energy an electron gains in an external field is balanced exactly by
emitted photon energy. The signed interaction Hamiltonian is
-rho_el0 * xdot^2; the emitted density is its magnitude divided by c0^2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import OutOfDomainError


@dataclass(frozen=True)
class InteractionScenario:
    """Electron in a sampled 1-D external potential profile.

    ``phi_profile`` is a pair (x_samples, phi_samples); ``position`` is
    where pointwise quantities are evaluated.
    """

    rho_el0: float
    sigma_el0: float
    phi_x: np.ndarray
    phi_values: np.ndarray
    xdot_sq_initial: float
    xdot_sq_final: float
    c0: float = 1.0
    position: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "phi_x",
                           np.asarray(self.phi_x, dtype=float))
        object.__setattr__(self, "phi_values",
                           np.asarray(self.phi_values, dtype=float))
        if self.rho_el0 < 0.0 or self.sigma_el0 < 0.0:
            raise ValueError("densities must be non-negative")
        if self.xdot_sq_initial < 0.0 or self.xdot_sq_final < 0.0:
            raise ValueError("squared velocities must be non-negative")
        if not np.all(np.isfinite(self.phi_values)):
            raise ValueError("potential profile must be finite")

    def phi_at(self, x: float) -> float:
        if x < self.phi_x[0] or x > self.phi_x[-1]:
            raise OutOfDomainError(
                f"position {x} outside profile domain "
                f"[{self.phi_x[0]}, {self.phi_x[-1]}]")
        return float(np.interp(x, self.phi_x, self.phi_values))


def constant_potential_scenario(rho_el0, sigma_el0, phi_value,
                                xdot_sq_initial=0.0, xdot_sq_final=0.0,
                                c0=1.0) -> InteractionScenario:
    return InteractionScenario(rho_el0, sigma_el0, [-1.0, 1.0],
                               [phi_value, phi_value], xdot_sq_initial,
                               xdot_sq_final, c0)


@dataclass(frozen=True)
class InteractionReport:
    lagrangian: float
    hamiltonian: float
    h_w: float
    rho_ph0_emitted: float
    v_em: float

    def to_json(self) -> str:
        return json.dumps({
            "lagrangian": self.lagrangian,
            "hamiltonian": self.hamiltonian,
            "h_w": self.h_w,
            "rho_ph0_emitted": self.rho_ph0_emitted,
            "v_em": self.v_em,
        }, indent=2, sort_keys=True)


def emitted_photon_density(s: InteractionScenario) -> float:
    """Photon density amplitude balancing the kinetic-energy change."""
    return s.rho_el0 * (s.xdot_sq_final - s.xdot_sq_initial) / s.c0 ** 2


def lagrangian_density(s: InteractionScenario, at: float) -> float:
    """rho_el0*xdot^2 + rho_ph0*c0^2 - sigma_el0*phi(x) at a position."""
    rho_ph0 = emitted_photon_density(s)
    return (s.rho_el0 * s.xdot_sq_final + rho_ph0 * s.c0 ** 2
            - s.sigma_el0 * s.phi_at(at))


def hamiltonian(s: InteractionScenario) -> float:
    """First-order Hamiltonian sigma_el0 * phi(x); no velocity term."""
    return s.sigma_el0 * s.phi_at(s.position)


def emission_balance(s: InteractionScenario) -> InteractionReport:
    """Full interaction report with the energy audit.

    Kinetic gain plus emitted photon energy equals the field energy
    v_em drawn during the interaction; h_w keeps the signed value
    -rho_el0 * xdot_final^2 while the emitted density is a magnitude.
    """
    kinetic_gain = s.rho_el0 * (s.xdot_sq_final - s.xdot_sq_initial)
    rho_ph0 = kinetic_gain / s.c0 ** 2
    h_w = -s.rho_el0 * s.xdot_sq_final
    v_em = kinetic_gain + rho_ph0 * s.c0 ** 2
    return InteractionReport(lagrangian_density(s, s.position),
                             hamiltonian(s), h_w, rho_ph0, v_em)
