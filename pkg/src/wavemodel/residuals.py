"""Finite-difference residual checks for every field equation of the model.

Each equation is evaluated on a periodic grid with second-order central
stencils and reported as a normalized L-infinity residual: the imbalance
of the discretized equation divided by the characteristic magnitude of
its terms. For fields that solve an equation exactly in the continuum the
residual is pure truncation and shrinks with order 2 under refinement;
for non-solutions it stays O(1).

The E and B fields entering the Maxwell-form checks are built from the
momentum and intrinsic-potential fields with the same discrete stencils
(E = (-grad phi + dp/dt)/sigma_bar, B = -curl p / sigma_bar), so the
curl/grad/time-derivative cancellations hold at the stencil level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from . import fields, grids
from .errors import OrderUndefinedError, UnknownEquationError, WrongKindError
from .fields import ParticleModel
from .grids import Grid
from .units import Units, sigma_bar

EQUATION_IDS = (
    "wave_eq_psi",
    "wave_eq_rho",
    "wave_eq_p",
    "continuity",
    "faraday",
    "ampere_modified",
    "div_B",
    "div_D",
    "ampere_inhomogeneous",
    "lorentz_condition",
    "vector_potential_evolution",
    "schrodinger_free",
)

_EPS_FLOOR = 100.0 * np.finfo(float).eps


@dataclass(frozen=True)
class ResidualReport:
    equation_id: str
    residual_linf: float
    residual_l2: float
    scale: float
    normalized_linf: float
    estimated_order: Optional[float] = None

    def csv_row(self, n_points: int) -> str:
        order = "" if self.estimated_order is None else (
            "%.17g" % self.estimated_order)
        return ",".join([
            self.equation_id, str(n_points),
            "%.17g" % self.residual_linf, "%.17g" % self.residual_l2,
            "%.17g" % self.scale, "%.17g" % self.normalized_linf, order])


REPORT_HEADER = ("equation_id,N,residual_linf,residual_l2,"
                 "scale,normalized_linf,estimated_order")


class _Context:
    """Grid samples of the model fields and their discrete EM derivatives."""

    def __init__(self, model: ParticleModel, grid: Grid, units: Units):
        self.model = model
        self.grid = grid
        self.units = units
        self.mesh = grid.mesh()
        self.h = grid.spacing
        self.dt = grid.time_step
        self.sbar = sigma_bar(units, model.rho_bar)
        mode = model.modes[0]
        # characteristic magnitude of the sigma_bar-scaled intrinsic fields
        self.char_e = (model.rho0 * model.speed * mode.omega / self.sbar
                       if self.sbar > 0.0 else 0.0)
        self.k_field = 2.0 * max(m.k_norm for m in model.modes)
        self.w_field = 2.0 * max(m.omega for m in model.modes)

    def rho(self, t):
        return fields.mass_density(self.model, self.mesh, t)

    def p(self, t):
        return fields.momentum_field(self.model, self.mesh, t)

    def phi(self, t):
        return fields.intrinsic_potential(self.model, self.mesh, t)

    def psi(self, t):
        return fields.wavefunction(self.model.mode, self.mesh, t)

    def e_disc(self, t):
        dp_dt = grids.dt1(self.p, t, self.dt)
        return (-grids.grad(self.phi(t), self.h) + dp_dt) / self.sbar

    def b_disc(self, t):
        return -grids.curl(self.p(t), self.h) / self.sbar


def _report(equation_id: str, res: np.ndarray, scale: float) -> ResidualReport:
    linf = grids.linf(res)
    if scale <= 0.0:
        normalized = 0.0 if linf == 0.0 else math.inf
        scale = max(scale, np.finfo(float).tiny)
    else:
        normalized = linf / scale
    return ResidualReport(equation_id, linf, grids.l2(res), scale, normalized)


def _term_scale(*terms: np.ndarray, floor: float = 0.0) -> float:
    return max([grids.linf(t) for t in terms] + [floor])


def _eval_time(model: ParticleModel) -> float:
    # arbitrary phase offset; avoids grid-symmetric sample times
    return 0.37 * model.modes[0].period


def residual(equation_id: str, model: ParticleModel, grid: Grid,
             units: Units) -> ResidualReport:
    """Normalized residual of one discretized equation on the grid."""
    if equation_id not in EQUATION_IDS:
        raise UnknownEquationError(f"unknown equation id {equation_id!r}")
    ctx = _Context(model, grid, units)
    t = _eval_time(model)
    return _EQUATIONS[equation_id](ctx, t)


def _wave_eq(ctx: _Context, sample, t: float, eq_id: str) -> ResidualReport:
    # the axis-wise stencils broadcast over a trailing component axis,
    # so scalar and vector fields share one code path
    lap = grids.laplacian(sample(t), ctx.h)
    dtt = grids.dt2(sample, t, ctx.dt) / ctx.model.speed ** 2
    return _report(eq_id, lap - dtt, _term_scale(lap, dtt))


def _eq_wave_psi(ctx, t):
    return _wave_eq(ctx, ctx.psi, t, "wave_eq_psi")


def _eq_wave_rho(ctx, t):
    return _wave_eq(ctx, ctx.rho, t, "wave_eq_rho")


def _eq_wave_p(ctx, t):
    return _wave_eq(ctx, ctx.p, t, "wave_eq_p")


def _eq_continuity(ctx, t):
    divp = grids.div(ctx.p(t), ctx.h)
    drho = grids.dt1(ctx.rho, t, ctx.dt)
    return _report("continuity", divp + drho, _term_scale(divp, drho))


def _eq_faraday(ctx, t):
    curl_e = grids.curl(ctx.e_disc(t), ctx.h)
    db_dt = grids.dt1(ctx.b_disc, t, ctx.dt)
    floor = ctx.char_e * ctx.k_field
    return _report("faraday", curl_e + db_dt,
                   _term_scale(curl_e, db_dt, floor=floor))


def _eq_ampere_modified(ctx, t):
    de_dt = grids.dt1(ctx.e_disc, t, ctx.dt) / ctx.model.speed ** 2
    curl_b = grids.curl(ctx.b_disc(t), ctx.h)
    floor = ctx.char_e * ctx.w_field / ctx.model.speed ** 2
    return _report("ampere_modified", de_dt - curl_b,
                   _term_scale(de_dt, curl_b, floor=floor))


def _eq_div_b(ctx, t):
    div_b = grids.div(ctx.b_disc(t), ctx.h)
    floor = ctx.char_e * ctx.k_field
    return _report("div_B", div_b, _term_scale(div_b, floor=floor))


def _eq_div_d(ctx, t):
    # source-free form: the intrinsic structure carries no free charge,
    # so div(eps*E) must vanish along with E itself
    div_d = ctx.units.eps_medium * grids.div(ctx.e_disc(t), ctx.h)
    floor = ctx.units.eps_medium * ctx.char_e * ctx.k_field
    return _report("div_D", div_d, _term_scale(div_d, floor=floor))


def _eq_ampere_inhomogeneous(ctx, t):
    # with vacuum constitutive relations and the model wave speed, the
    # current term is absorbed by charge continuity and the equation
    # reduces to the modified Ampere form divided by mu
    mu_inv = 1.0 / ctx.units.mu_medium
    de_dt = mu_inv * grids.dt1(ctx.e_disc, t, ctx.dt) / ctx.model.speed ** 2
    curl_h = mu_inv * grids.curl(ctx.b_disc(t), ctx.h)
    floor = mu_inv * ctx.char_e * ctx.w_field / ctx.model.speed ** 2
    return _report("ampere_inhomogeneous", de_dt - curl_h,
                   _term_scale(de_dt, curl_h, floor=floor))


def _eq_lorentz_condition(ctx, t):
    dphi = grids.dt1(ctx.phi, t, ctx.dt) / ctx.model.speed ** 2
    divp = grids.div(ctx.p(t), ctx.h)
    return _report("lorentz_condition", dphi - divp, _term_scale(dphi, divp))


def _eq_vector_potential_evolution(ctx, t):
    # sigma_bar-scaled form with the vanishing intrinsic E substituted:
    # (1/c0) dA/dt + grad phi = -dp/dt + grad phi must vanish
    def a_pot(tt):
        return fields.vector_potential(ctx.units, ctx.model, ctx.mesh, tt)
    da_dt = grids.dt1(a_pot, t, ctx.dt) / ctx.units.c0
    gphi = grids.grad(ctx.phi(t), ctx.h)
    return _report("vector_potential_evolution", da_dt + gphi,
                   _term_scale(da_dt, gphi))


def _eq_schrodinger_free(ctx, t):
    if ctx.model.kind != "electron":
        raise WrongKindError("schrodinger_free expects an electron model")
    u = ctx.units
    omega = ctx.model.mode.omega
    psi = ctx.psi(t)
    kinetic = -(u.hbar ** 2 / (2.0 * u.m_e)) * grids.laplacian(psi, ctx.h)
    # V is the mean intrinsic potential energy hbar*omega/2; together with
    # W_T = hbar*omega the equation reduces to kinetic = (hbar*omega/2) psi
    rest = (u.hbar * omega / 2.0) * psi
    return _report("schrodinger_free", kinetic - rest,
                   _term_scale(kinetic, rest))


_EQUATIONS = {
    "wave_eq_psi": _eq_wave_psi,
    "wave_eq_rho": _eq_wave_rho,
    "wave_eq_p": _eq_wave_p,
    "continuity": _eq_continuity,
    "faraday": _eq_faraday,
    "ampere_modified": _eq_ampere_modified,
    "div_B": _eq_div_b,
    "div_D": _eq_div_d,
    "ampere_inhomogeneous": _eq_ampere_inhomogeneous,
    "lorentz_condition": _eq_lorentz_condition,
    "vector_potential_evolution": _eq_vector_potential_evolution,
    "schrodinger_free": _eq_schrodinger_free,
}


def longitudinal_vanishing(model: ParticleModel, grid: Grid,
                           units: Units) -> ResidualReport:
    """Magnitude of the E and B fields built from the longitudinal
    momentum and intrinsic potential; both must vanish up to truncation
    when the dispersion relation holds.

    Normalization is the characteristic field scale rho0*speed*omega/sigma_bar.
    """
    ctx = _Context(model, grid, units)
    t = _eval_time(model)
    e_field = ctx.e_disc(t)
    b_field = ctx.b_disc(t)
    res = np.concatenate([e_field[..., None], b_field[..., None]], axis=-1)
    linf = grids.linf(res)
    scale = ctx.char_e
    if scale <= 0.0:
        normalized = 0.0 if linf == 0.0 else math.inf
        scale = np.finfo(float).tiny
    else:
        normalized = linf / scale
    return ResidualReport("longitudinal_vanishing", linf, grids.l2(res),
                          scale, normalized)


def convergence_order(equation_id: str, model: ParticleModel,
                      base_grid: Grid, units: Units) -> float:
    """log2 ratio of normalized residuals at N and 2N points per wavelength.

    Exact solutions of the continuous equation give order close to 2
    (central stencils); models that violate the equation give order
    close to 0. Residuals at the round-off floor carry no truncation
    signal and raise :class:`OrderUndefinedError`.
    """
    n = base_grid.points_per_wavelength
    wavelengths = base_grid.shape[0] // n
    coarse = residual(equation_id, model, base_grid, units)
    if coarse.normalized_linf < _EPS_FLOOR:
        raise OrderUndefinedError(
            f"{equation_id}: residual {coarse.normalized_linf:.3e} is at "
            "the round-off floor; nothing to extrapolate")
    fine_grid = build_refined(model, base_grid, units, 2 * n, wavelengths)
    fine = residual(equation_id, model, fine_grid, units)
    return math.log2(coarse.normalized_linf / fine.normalized_linf)


def build_refined(model, base_grid, units, n, wavelengths):
    from .grids import build_grid
    return build_grid(model, n, wavelengths, base_grid.shape[1],
                      c0=units.c0)


def with_order(report: ResidualReport, order: float) -> ResidualReport:
    return replace(report, estimated_order=order)
