"""Actuator force, velocity ratio and placement search for n-stage scissor lifts."""

from .errors import *  # noqa: F401,F403
from .forces import (
    DEFAULT_POLICY,
    AnalysisRow,
    Singular,
    SingularityPolicy,
    actuator_length,
    analyze_at,
    force,
    peak_force,
    stroke_range,
    velocity_ratio,
)
from .model import (
    ActuatorPlacement,
    ArmSlope,
    Column,
    LiftSpec,
    PlacementConstants,
    ThetaDomain,
    effective_load,
    height,
    lift_constants,
    resolve_shared_hinge,
    theta_from_height,
)
