"""Closed-form actuator length, velocity ratio dh/dl and actuator force.

Negatively sloping arm (Q = ((1-a)D cos t, (i+a)D sin t)):

    l/D   = sqrt(K_A cos^2 t - 2 K_B cos t + K_C)
    dh/dl = n (l/D) / (K_B tan t - K_A sin t)

Positively sloping arm (Q = (aD cos t, (i+a)D sin t)):

    l/D   = sqrt(K_C - 2ab cos t - K_D cos^2 t)
    dh/dl = n (l/D) / (ab tan t + K_D sin t)

The force is the effective load times dh/dl. The velocity ratio keeps the sign
of its denominator: a negative value means that shortening the actuator
raises the platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegeneratePlacementError,
    GeometryConsistencyError,
    InvalidSpecError,
    SingularInRangeError,
)
from .model import (
    ActuatorPlacement,
    ArmSlope,
    LiftSpec,
    ThetaDomain,
    check_theta,
    effective_load,
    height,
)

# Relative slack on the squared length before a negative value is called inconsistent.
_RADICAND_SLACK = 64 * np.finfo(float).eps


@dataclass(frozen=True)
class SingularityPolicy:
    """Thresholds below which dh/dl or the actuator length are treated as zero.

    ``eps_length`` is in meters; when left as None it is taken as
    ``1e-9 * D`` for the lift at hand.
    """

    eps_denominator: float = 1e-9
    eps_length: float | None = None

    def __post_init__(self):
        if not self.eps_denominator > 0:
            raise InvalidSpecError("eps_denominator must be positive")
        if self.eps_length is not None and not self.eps_length > 0:
            raise InvalidSpecError("eps_length must be positive")

    def length_threshold(self, D: float) -> float:
        return 1e-9 * D if self.eps_length is None else self.eps_length


DEFAULT_POLICY = SingularityPolicy()


@dataclass(frozen=True)
class Singular:
    """Marker returned in place of a velocity ratio or force that has no finite value."""

    theta: float
    denominator: float

    def __str__(self):
        return f"zero denominator in dh/dl at theta={self.theta!r} rad (|{self.denominator:.3g}| below threshold)"


@dataclass(frozen=True)
class AnalysisRow:
    theta: float
    h: float
    l: float
    dh_dl: float | None
    F: float | None
    singular: bool


def _radicand(p: ActuatorPlacement, c):
    k = p.constants
    if p.slope is ArmSlope.NEGATIVE:
        return k.K_A * c * c - 2 * k.K_B * c + k.K_C
    return k.K_C - 2 * p.a * p.b * c - k.K_D * c * c


def _radicand_scale(p: ActuatorPlacement, c):
    k = p.constants
    if p.slope is ArmSlope.NEGATIVE:
        return abs(k.K_A) * c * c + 2 * abs(k.K_B) * c + k.K_C
    return k.K_C + 2 * abs(p.a * p.b) * c + k.K_D * c * c


def _denominator(p: ActuatorPlacement, s, t):
    k = p.constants
    if p.slope is ArmSlope.NEGATIVE:
        return k.K_B * t - k.K_A * s
    return p.a * p.b * t + k.K_D * s


def _unit_length(p: ActuatorPlacement, theta: float) -> float:
    """l/D at ``theta``, with round-off below zero clamped away."""
    c = math.cos(theta)
    r = _radicand(p, c)
    if r < 0:
        if r < -_RADICAND_SLACK * _radicand_scale(p, c):
            raise GeometryConsistencyError(f"squared actuator length {r!r} < 0 at theta={theta!r}")
        r = 0.0
    return math.sqrt(r)


def actuator_length(p: ActuatorPlacement, D: float, theta: float, policy: SingularityPolicy = DEFAULT_POLICY) -> float:
    check_theta(theta)
    l = D * _unit_length(p, theta)
    if l < policy.length_threshold(D):
        raise DegeneratePlacementError(f"actuator length {l!r} m is degenerate at theta={theta!r}")
    return l


def velocity_ratio(
    p: ActuatorPlacement, n: int, theta: float, policy: SingularityPolicy = DEFAULT_POLICY
) -> float | Singular:
    """Instantaneous dh/dl, or a ``Singular`` marker where the denominator vanishes."""
    check_theta(theta)
    den = _denominator(p, math.sin(theta), math.tan(theta))
    if abs(den) <= policy.eps_denominator:
        return Singular(theta, den)
    return n * _unit_length(p, theta) / den


def force(
    lift: LiftSpec, p: ActuatorPlacement, theta: float, policy: SingularityPolicy = DEFAULT_POLICY
) -> float | Singular:
    p.check_fits(lift)
    ratio = velocity_ratio(p, lift.n, theta, policy)
    if isinstance(ratio, Singular):
        return ratio
    return effective_load(lift.L, lift.W) * ratio


def analyze_at(
    lift: LiftSpec, p: ActuatorPlacement, theta: float, policy: SingularityPolicy = DEFAULT_POLICY
) -> AnalysisRow:
    """Height, actuator length, dh/dl and force at one angle.

    A zero-length actuator only happens where the denominator of dh/dl also
    vanishes, so both conditions are reported through the singular flag.
    """
    p.check_fits(lift)
    h = height(lift.n, lift.D, theta)
    l = lift.D * _unit_length(p, theta)
    ratio = velocity_ratio(p, lift.n, theta, policy)
    if isinstance(ratio, Singular) or l < policy.length_threshold(lift.D):
        return AnalysisRow(theta, h, l, None, None, True)
    return AnalysisRow(theta, h, l, ratio, lift.effective_load * ratio, False)


def force_profile(lift: LiftSpec, p: ActuatorPlacement, thetas, policy: SingularityPolicy = DEFAULT_POLICY):
    """Vectorised force over an array of angles.

    Returns ``(F, singular)``; entries of ``F`` where ``singular`` is set are 0
    and must not be read.
    """
    p.check_fits(lift)
    thetas = np.asarray(thetas, dtype=float)
    outside = (thetas <= 0) | (thetas >= math.pi / 2)
    if outside.any():
        check_theta(float(thetas[outside][0]))
    c = np.cos(thetas)
    r = _radicand(p, c)
    if np.any(r < -_RADICAND_SLACK * _radicand_scale(p, c)):
        raise GeometryConsistencyError("squared actuator length < 0 on the grid")
    unit = np.sqrt(np.clip(r, 0.0, None))
    den = _denominator(p, np.sin(thetas), np.tan(thetas))
    singular = (np.abs(den) <= policy.eps_denominator) | (lift.D * unit < policy.length_threshold(lift.D))
    safe = np.where(singular, 1.0, den)
    F = np.where(singular, 0.0, lift.effective_load * lift.n * unit / safe)
    return F, singular


def stroke_range(
    p: ActuatorPlacement, D: float, dom: ThetaDomain, samples: int, policy: SingularityPolicy = DEFAULT_POLICY
) -> tuple[float, float]:
    """Shortest and longest actuator over a uniform angle grid (the length need not be monotone)."""
    thetas = np.array(dom.grid(samples))
    c = np.cos(thetas)
    r = _radicand(p, c)
    if np.any(r < -_RADICAND_SLACK * _radicand_scale(p, c)):
        raise GeometryConsistencyError("squared actuator length < 0 on the grid")
    lengths = D * np.sqrt(np.clip(r, 0.0, None))
    k = int(np.argmin(lengths))
    if lengths[k] < policy.length_threshold(D):
        raise DegeneratePlacementError(f"actuator length {lengths[k]!r} m is degenerate at theta={thetas[k]!r}")
    return float(lengths.min()), float(lengths.max())


def peak_force(
    lift: LiftSpec,
    p: ActuatorPlacement,
    dom: ThetaDomain,
    samples: int = 512,
    policy: SingularityPolicy = DEFAULT_POLICY,
) -> tuple[float, float]:
    """Grid sample with the largest force magnitude, as ``(theta, F)``.

    Values within a few ulps of the maximum count as ties and resolve to the
    smallest angle.
    """
    thetas = np.array(dom.grid(samples))
    F, singular = force_profile(lift, p, thetas, policy)
    if singular.any():
        raise SingularInRangeError(float(thetas[np.argmax(singular)]))
    mag = np.abs(F)
    k = int(np.argmax(mag >= mag.max() * (1 - 1e-12)))
    return float(thetas[k]), float(F[k])
