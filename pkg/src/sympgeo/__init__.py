"""Planar symplectic geometry toolkit.

Four layers, each built on the one below:

* :mod:`sympgeo.core`: the quarter-turn operator, perp-dot product, polar
  form, similarity transforms, and the classical product identities;
* :mod:`sympgeo.geometry`: closed-form constructions (line intersection,
  projection, ratios, common circle tangents) as signed-area quotients;
* :mod:`sympgeo.kinematics`: polar time derivatives and the inverted
  slider crank solved by differentiating one vector loop;
* :mod:`sympgeo.dynamics`: harmonic-oscillator phase flow where the same
  quarter-turn operator implements Hamilton's equations, with contrasting
  fixed-step integrators.

The ``sympgeo`` command line drives all of it and emits deterministic
JSON/CSV reports plus optional SVG plots.
"""

from .core import (
    ATOL,
    RTOL,
    IdentityResiduals,
    Polar,
    Vec2,
    close,
    directed_angle,
    dot,
    from_polar,
    identity_residuals,
    inverse,
    norm,
    rotate,
    similarity,
    similarity_div,
    symp,
    tilde,
    to_polar,
    wrap_angle,
)
from .dynamics import (
    EXPLICIT_EULER,
    LEAPFROG,
    METHODS,
    SYMPLECTIC_EULER,
    OscillatorParams,
    PhaseState,
    Trajectory,
    analytic_oscillator,
    ellipse_residual,
    hamiltonian,
    hamiltonian_field,
    hamiltonian_gradient,
    simulate,
    step,
)
from .errors import (
    CoincidentCentersError,
    DegeneracyError,
    DegenerateDenominatorError,
    DegenerateScaleError,
    InvalidStepError,
    ParallelLinesError,
    SingularityError,
    SingularPositionError,
    SympGeoError,
    ZeroDirectionError,
    ZeroVectorError,
)
from .geometry import (
    Circle,
    Intersection,
    Line,
    Tangent,
    circle_tangents,
    collinearity_residual,
    cross_ratio,
    intersect_lines,
    is_collinear,
    jacobi_triangle_residual,
    point_circle_tangents,
    project_point_onto_line,
    simple_ratio,
    tangent_distance_error,
)
from .kinematics import (
    CrankAccel,
    CrankConfig,
    CrankPosition,
    CrankRates,
    CrankState,
    PolarKinematics,
    PolarMotion,
    SweepEntry,
    crank_acceleration,
    crank_position,
    crank_state,
    crank_sweep,
    crank_velocity,
    loop_residuals,
    polar_kinematics,
)

__version__ = "0.1.0"

__all__ = [
    "ATOL",
    "RTOL",
    "IdentityResiduals",
    "Polar",
    "Vec2",
    "close",
    "directed_angle",
    "dot",
    "from_polar",
    "identity_residuals",
    "inverse",
    "norm",
    "rotate",
    "similarity",
    "similarity_div",
    "symp",
    "tilde",
    "to_polar",
    "wrap_angle",
    "EXPLICIT_EULER",
    "LEAPFROG",
    "METHODS",
    "SYMPLECTIC_EULER",
    "OscillatorParams",
    "PhaseState",
    "Trajectory",
    "analytic_oscillator",
    "ellipse_residual",
    "hamiltonian",
    "hamiltonian_field",
    "hamiltonian_gradient",
    "simulate",
    "step",
    "SympGeoError",
    "DegeneracyError",
    "SingularityError",
    "ZeroVectorError",
    "DegenerateScaleError",
    "DegenerateDenominatorError",
    "ParallelLinesError",
    "CoincidentCentersError",
    "ZeroDirectionError",
    "SingularPositionError",
    "InvalidStepError",
    "Circle",
    "Intersection",
    "Line",
    "Tangent",
    "circle_tangents",
    "collinearity_residual",
    "cross_ratio",
    "intersect_lines",
    "is_collinear",
    "jacobi_triangle_residual",
    "point_circle_tangents",
    "project_point_onto_line",
    "simple_ratio",
    "tangent_distance_error",
    "CrankAccel",
    "CrankConfig",
    "CrankPosition",
    "CrankRates",
    "CrankState",
    "PolarKinematics",
    "PolarMotion",
    "SweepEntry",
    "crank_acceleration",
    "crank_position",
    "crank_state",
    "crank_sweep",
    "crank_velocity",
    "loop_residuals",
    "polar_kinematics",
    "__version__",
]
