"""Polar-vector time derivatives and an inverted-slider-crank closed form.

The mechanism: a crank of fixed length spins about the origin at constant
rate ``phi_dot``; its tip carries a rod that slides through a pivot block
fixed at ``pivot_c``.  The rod length ``s`` from crank tip to pivot and
the rod orientation ``psi`` follow from the loop

    a_vec + s*e_psi - c = 0,

and differentiating that loop once and twice gives the rates and
accelerations without ever solving an equation system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import ATOL, Vec2, dot, norm, tilde, wrap_angle
from .errors import SingularPositionError


@dataclass(frozen=True, slots=True)
class PolarMotion:
    """Polar coordinates of a moving vector plus their time derivatives."""

    r: float
    r_dot: float
    r_ddot: float
    phi: float
    phi_dot: float
    phi_ddot: float

    def __post_init__(self) -> None:
        for name in ("r", "r_dot", "r_ddot", "phi", "phi_dot", "phi_ddot"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"PolarMotion field {name} must be finite")


class PolarKinematics(NamedTuple):
    position: Vec2
    velocity: Vec2
    acceleration: Vec2


def polar_kinematics(m: PolarMotion) -> PolarKinematics:
    """Position, velocity, and acceleration of ``r*e_phi`` with moving r and phi.

    With ``e = (cos phi, sin phi)`` and its quarter-turn ``tilde(e)``:

        position     = r*e
        velocity     = r_dot*e + phi_dot*r*tilde(e)
        acceleration = (r_ddot - phi_dot^2*r)*e + (phi_ddot*r + 2*phi_dot*r_dot)*tilde(e)

    The tilde(e) components are the familiar transverse and Coriolis terms.
    """
    e = Vec2(math.cos(m.phi), math.sin(m.phi))
    te = tilde(e)
    position = e * m.r
    velocity = e * m.r_dot + te * (m.phi_dot * m.r)
    acceleration = (
        e * (m.r_ddot - m.phi_dot * m.phi_dot * m.r)
        + te * (m.phi_ddot * m.r + 2.0 * m.phi_dot * m.r_dot)
    )
    return PolarKinematics(position, velocity, acceleration)


@dataclass(frozen=True, slots=True)
class CrankConfig:
    """Crank of fixed length about the origin, pivot block at ``pivot_c``,
    driven at the constant angular rate ``phi_dot``."""

    crank_length: float
    pivot_c: Vec2
    phi_dot: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.crank_length) and self.crank_length > 0.0):
            raise ValueError(f"crank_length must be finite and > 0, got {self.crank_length}")
        if not math.isfinite(self.phi_dot):
            raise ValueError("phi_dot must be finite")

    def crank_vector(self, phi: float) -> Vec2:
        """Crank tip position a_vec for crank angle ``phi``."""
        return Vec2(self.crank_length * math.cos(phi), self.crank_length * math.sin(phi))


class CrankPosition(NamedTuple):
    s: float
    e_psi: Vec2
    psi: float


class CrankRates(NamedTuple):
    s_dot: float
    psi_dot: float


class CrankAccel(NamedTuple):
    s_ddot: float
    psi_ddot: float


@dataclass(frozen=True, slots=True)
class CrankState:
    """Full kinematic state of the rod at one crank angle."""

    phi: float
    s: float
    psi: float
    s_dot: float
    psi_dot: float
    s_ddot: float
    psi_ddot: float
    e_psi: Vec2


@dataclass(frozen=True, slots=True)
class SweepEntry:
    """One sweep sample; ``state`` is None exactly when ``singular``.

    ``psi_unwrapped`` continues psi across the branch cut so plots of
    psi(phi) stay smooth; ``near_singular`` flags entries whose rod length
    falls below 1e-6 of the crank length, where the 1/s terms start
    amplifying roundoff.
    """

    phi: float
    singular: bool
    near_singular: bool
    state: CrankState | None
    psi_unwrapped: float | None


#: Rod lengths below this fraction of the crank length are flagged in sweeps.
NEAR_SINGULAR_FRACTION = 1e-6


def _singularity_floor(cfg: CrankConfig) -> float:
    return ATOL * (1.0 + norm(cfg.pivot_c))


def crank_position(cfg: CrankConfig, phi: float) -> CrankPosition:
    """Rod length, unit rod direction, and rod angle at crank angle ``phi``.

    Closes ``a_vec + s*e_psi = c``; raises :class:`SingularPositionError`
    when the crank tip lands on the pivot and the direction degenerates.
    """
    rel = cfg.pivot_c - cfg.crank_vector(phi)
    s = norm(rel)
    if s <= _singularity_floor(cfg):
        raise SingularPositionError(f"rod length vanishes at phi={phi}")
    e_psi = rel / s
    return CrankPosition(s, e_psi, math.atan2(e_psi.y, e_psi.x))


def crank_velocity(cfg: CrankConfig, phi: float, s: float, e_psi: Vec2) -> CrankRates:
    """Time rates of s and psi from the once-differentiated loop.

        s_dot   = phi_dot * dot(a_vec, tilde(e_psi))
        psi_dot = -phi_dot * dot(a_vec, e_psi) / s

    Projecting the loop rate onto e_psi isolates s_dot (an area with the
    crank vector); projecting onto tilde(e_psi) isolates psi_dot.
    """
    if s <= _singularity_floor(cfg):
        raise SingularPositionError("rates undefined at a singular position")
    a_vec = cfg.crank_vector(phi)
    s_dot = cfg.phi_dot * dot(a_vec, tilde(e_psi))
    psi_dot = -cfg.phi_dot * dot(a_vec, e_psi) / s
    return CrankRates(s_dot, psi_dot)


def crank_acceleration(cfg: CrankConfig, s: float, s_dot: float, psi_dot: float) -> CrankAccel:
    """Second time derivatives of s and psi for a constant drive rate.

        s_ddot   = psi_dot * (psi_dot - phi_dot) * s
        psi_ddot = (phi_dot - 2*psi_dot) * s_dot / s

    Both follow from projecting the twice-differentiated loop onto e_psi
    and tilde(e_psi) and eliminating the crank projections with the rate
    expressions; phi_ddot = 0 is baked in.
    """
    if s <= _singularity_floor(cfg):
        raise SingularPositionError("accelerations undefined at a singular position")
    s_ddot = psi_dot * (psi_dot - cfg.phi_dot) * s
    psi_ddot = (cfg.phi_dot - 2.0 * psi_dot) * s_dot / s
    return CrankAccel(s_ddot, psi_ddot)


def crank_state(cfg: CrankConfig, phi: float) -> CrankState:
    """Position, rates, and accelerations assembled for one crank angle."""
    s, e_psi, psi = crank_position(cfg, phi)
    s_dot, psi_dot = crank_velocity(cfg, phi, s, e_psi)
    s_ddot, psi_ddot = crank_acceleration(cfg, s, s_dot, psi_dot)
    return CrankState(phi, s, psi, s_dot, psi_dot, s_ddot, psi_ddot, e_psi)


def loop_residuals(cfg: CrankConfig, state: CrankState) -> tuple[float, float, float]:
    """Norms of the position, velocity, and acceleration loop closures.

    All three vanish identically for exact states, so the returned values
    measure the floating-point quality of the closed-form solution:

        position:     a_vec + s*e_psi - c
        velocity:     phi_dot*tilde(a_vec) + s_dot*e_psi + psi_dot*s*tilde(e_psi)
        acceleration: -phi_dot^2*a_vec + (s_ddot - psi_dot^2*s)*e_psi
                      + (psi_ddot*s + 2*psi_dot*s_dot)*tilde(e_psi)
    """
    a_vec = cfg.crank_vector(state.phi)
    te = tilde(state.e_psi)
    position = a_vec + state.e_psi * state.s - cfg.pivot_c
    velocity = (
        tilde(a_vec) * cfg.phi_dot
        + state.e_psi * state.s_dot
        + te * (state.psi_dot * state.s)
    )
    acceleration = (
        a_vec * (-cfg.phi_dot * cfg.phi_dot)
        + state.e_psi * (state.s_ddot - state.psi_dot * state.psi_dot * state.s)
        + te * (state.psi_ddot * state.s + 2.0 * state.psi_dot * state.s_dot)
    )
    return (norm(position), norm(velocity), norm(acceleration))


def crank_sweep(cfg: CrankConfig, phi_start: float, phi_end: float, steps: int) -> list[SweepEntry]:
    """Tabulate the full state at ``steps`` evenly spaced crank angles, inclusive.

    Singular angles become flagged entries instead of raising, so a sweep
    over a pivot lying exactly on the crank circle still reports every
    sample.  ``psi_unwrapped`` accumulates the rod angle continuously from
    the first non-singular entry.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    span = phi_end - phi_start
    entries: list[SweepEntry] = []
    last_psi: float | None = None
    last_unwrapped = 0.0
    for i in range(steps):
        phi = phi_start + span * (i / (steps - 1))
        try:
            state = crank_state(cfg, phi)
        except SingularPositionError:
            entries.append(SweepEntry(phi, True, True, None, None))
            continue
        if last_psi is None:
            unwrapped = state.psi
        else:
            unwrapped = last_unwrapped + wrap_angle(state.psi - last_psi)
        last_psi = state.psi
        last_unwrapped = unwrapped
        near = state.s < NEAR_SINGULAR_FRACTION * cfg.crank_length
        entries.append(SweepEntry(phi, False, near, state, unwrapped))
    return entries
