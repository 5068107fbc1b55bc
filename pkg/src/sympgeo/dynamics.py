"""Harmonic-oscillator phase space built on the planar vector algebra.

A phase point ``(q, p)`` is treated as a planar vector, and the flow
direction is literally the negated quarter-turn of the energy gradient:
the same ``tilde`` operator that rotates geometry rotates the gradient
onto the energy level sets here.  Three fixed-step integrators with
contrasting energy behavior are provided: the area-preserving pair stays
on (near) the level-set ellipse forever, while the explicit Euler scheme
spirals outward at an exactly geometric rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Vec2, tilde
from .errors import InvalidStepError

EXPLICIT_EULER = "explicit_euler"
SYMPLECTIC_EULER = "symplectic_euler"
LEAPFROG = "leapfrog"
METHODS = (EXPLICIT_EULER, SYMPLECTIC_EULER, LEAPFROG)


@dataclass(frozen=True, slots=True)
class OscillatorParams:
    """Point mass on a linear spring."""

    mass: float
    stiffness: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mass) and self.mass > 0.0):
            raise ValueError(f"mass must be finite and > 0, got {self.mass}")
        if not (math.isfinite(self.stiffness) and self.stiffness > 0.0):
            raise ValueError(f"stiffness must be finite and > 0, got {self.stiffness}")

    @property
    def omega(self) -> float:
        """Natural angular frequency ``sqrt(stiffness/mass)``."""
        return math.sqrt(self.stiffness / self.mass)


@dataclass(frozen=True, slots=True)
class PhaseState:
    """One phase-space point ``(q, p)`` with its time stamp."""

    q: float
    p: float
    t: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.q) and math.isfinite(self.p) and math.isfinite(self.t)):
            raise ValueError("phase-state fields must be finite")


@dataclass(frozen=True, slots=True)
class Trajectory:
    """A fixed-step run: the initial state plus one state per step."""

    params: OscillatorParams
    dt: float
    states: list[PhaseState]
    integrator: str


def hamiltonian(s: PhaseState, params: OscillatorParams) -> float:
    """Total energy ``p^2/(2m) + k*q^2/2``."""
    return s.p * s.p / (2.0 * params.mass) + params.stiffness * s.q * s.q / 2.0


def hamiltonian_gradient(s: PhaseState, params: OscillatorParams) -> Vec2:
    """Energy gradient ``(dH/dq, dH/dp) = (k*q, p/m)`` as a phase-plane vector."""
    return Vec2(params.stiffness * s.q, s.p / params.mass)


def hamiltonian_field(s: PhaseState, params: OscillatorParams) -> tuple[float, float]:
    """Flow direction ``(q_dot, p_dot)``: the negated quarter-turn of the gradient.

    Evaluates to ``(p/m, -k*q)``; the momentum component is Newton's law,
    and is everywhere orthogonal to the gradient, i.e. tangent to the
    energy level sets.
    """
    f = -tilde(hamiltonian_gradient(s, params))
    return (f.x, f.y)


def step(s: PhaseState, params: OscillatorParams, dt: float,
         method: str = LEAPFROG) -> PhaseState:
    """Advance one fixed step of size ``dt`` with the chosen method.

    * ``explicit_euler``: both coordinates from the current field.
    * ``symplectic_euler``: kick p with the current q, then drift q with
      the new p.
    * ``leapfrog``: half-kick, drift, half-kick (time-reversible).
    """
    if not (math.isfinite(dt) and dt > 0.0):
        raise InvalidStepError(f"dt must be finite and > 0, got {dt}")
    if method == EXPLICIT_EULER:
        q_dot, p_dot = hamiltonian_field(s, params)
        return PhaseState(s.q + dt * q_dot, s.p + dt * p_dot, s.t + dt)
    if method == SYMPLECTIC_EULER:
        _, p_dot = hamiltonian_field(s, params)
        p_new = s.p + dt * p_dot
        q_dot, _ = hamiltonian_field(PhaseState(s.q, p_new, s.t), params)
        return PhaseState(s.q + dt * q_dot, p_new, s.t + dt)
    if method == LEAPFROG:
        _, p_dot = hamiltonian_field(s, params)
        p_half = s.p + 0.5 * dt * p_dot
        q_dot, _ = hamiltonian_field(PhaseState(s.q, p_half, s.t), params)
        q_new = s.q + dt * q_dot
        _, p_dot_end = hamiltonian_field(PhaseState(q_new, p_half, s.t), params)
        return PhaseState(q_new, p_half + 0.5 * dt * p_dot_end, s.t + dt)
    raise ValueError(f"unknown integrator {method!r}; expected one of {METHODS}")


def simulate(initial: PhaseState, params: OscillatorParams, dt: float,
             n_steps: int, method: str = LEAPFROG) -> Trajectory:
    """Run ``n_steps`` fixed steps; the trajectory includes the initial state."""
    if not (math.isfinite(dt) and dt > 0.0):
        raise InvalidStepError(f"dt must be finite and > 0, got {dt}")
    if n_steps < 1:
        raise InvalidStepError(f"n_steps must be >= 1, got {n_steps}")
    states = [initial]
    current = initial
    for _ in range(n_steps):
        current = step(current, params, dt, method)
        states.append(current)
    return Trajectory(params, dt, states, method)


def analytic_oscillator(t: float, initial: PhaseState, params: OscillatorParams) -> PhaseState:
    """Closed-form state a time ``t`` after ``initial``.

        q(t) = q0*cos(w*t) + p0/(m*w)*sin(w*t)
        p(t) = p0*cos(w*t) - m*w*q0*sin(w*t)

    Conserves the energy exactly, so it doubles as the reference orbit for
    integrator error and drift measurements.
    """
    w = params.omega
    cos_wt = math.cos(w * t)
    sin_wt = math.sin(w * t)
    q = initial.q * cos_wt + initial.p / (params.mass * w) * sin_wt
    p = initial.p * cos_wt - params.mass * w * initial.q * sin_wt
    return PhaseState(q, p, initial.t + t)


def ellipse_residual(s: PhaseState, initial: PhaseState, params: OscillatorParams) -> float:
    """Energy offset ``H(s) - H(initial)`` from the level-set ellipse."""
    return hamiltonian(s, params) - hamiltonian(initial, params)
