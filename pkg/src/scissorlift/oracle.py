"""Brute-force checks built from explicit hinge coordinates.

Nothing here uses the placement constants: lengths are plain Euclidean
distances between hinge-derived points, derivatives are central differences,
and the work balance is integrated numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    InvalidSpecError,
    SingularInRangeError,
    StationaryLengthError,
    UndefinedResidualError,
)
from .forces import DEFAULT_POLICY, SingularityPolicy, force_profile
from .model import ActuatorPlacement, ArmSlope, LiftSpec, check_theta, height

Point = tuple[float, float]


@dataclass(frozen=True)
class JointSet:
    static_hinges: list[Point]
    mobile_hinges: list[Point]
    pivots: list[Point]


def hinge_coordinates(n: int, D: float, theta: float) -> JointSet:
    check_theta(theta)
    x = D * math.cos(theta)
    dy = D * math.sin(theta)
    return JointSet(
        static_hinges=[(0.0, k * dy) for k in range(n + 1)],
        mobile_hinges=[(x, k * dy) for k in range(n + 1)],
        pivots=[(x / 2, (k + 0.5) * dy) for k in range(n)],
    )


def _arm_endpoints(p: ActuatorPlacement, D: float, c, s):
    """Lower and upper hinge of the arm carrying Q, for scalar or array cos/sin."""
    static_lo, static_hi = (0.0 * c, p.i * D * s), (0.0 * c, (p.i + 1) * D * s)
    mobile_lo, mobile_hi = (D * c, p.i * D * s), (D * c, (p.i + 1) * D * s)
    if p.slope is ArmSlope.NEGATIVE:
        return mobile_lo, static_hi
    return static_lo, mobile_hi


def _euclidean_length(p: ActuatorPlacement, D: float, thetas):
    (x0, y0), (x1, y1) = _arm_endpoints(p, D, np.cos(thetas), np.sin(thetas))
    qx, qy = x0 + p.a * (x1 - x0), y0 + p.a * (y1 - y0)
    return np.hypot(qx - p.b * D, qy)


def point_of_application(p: ActuatorPlacement, D: float, theta: float) -> Point:
    """Q as the point a fraction ``a`` of the way up its arm."""
    check_theta(theta)
    (x0, y0), (x1, y1) = _arm_endpoints(p, D, math.cos(theta), math.sin(theta))
    return x0 + p.a * (x1 - x0), y0 + p.a * (y1 - y0)


def oracle_actuator_length(p: ActuatorPlacement, D: float, theta: float) -> float:
    qx, qy = point_of_application(p, D, theta)
    return math.hypot(qx - p.b * D, qy)


def fd_velocity_ratio(p: ActuatorPlacement, n: int, D: float, theta: float, delta: float = 1e-6) -> float:
    lo, hi = theta - delta, theta + delta
    if not (0.0 < lo and hi < math.pi / 2) or delta <= 0:
        raise DomainError(f"[{lo!r}, {hi!r}] leaves the open range (0, pi/2)")
    dl = oracle_actuator_length(p, D, hi) - oracle_actuator_length(p, D, lo)
    if dl == 0:
        raise StationaryLengthError(f"actuator length is stationary at theta={theta!r}")
    return (height(n, D, hi) - height(n, D, lo)) / dl


def _length_rate(p: ActuatorPlacement, D: float, thetas: np.ndarray, delta: float) -> np.ndarray:
    """dl/dtheta from a five-point central difference of the Euclidean length."""
    def l(shift):
        return _euclidean_length(p, D, thetas + shift)

    return (l(-2 * delta) - 8 * l(-delta) + 8 * l(delta) - l(2 * delta)) / (12 * delta)


def energy_residual(
    lift: LiftSpec,
    p: ActuatorPlacement,
    theta1: float,
    theta2: float,
    steps: int = 10_000,
    policy: SingularityPolicy = DEFAULT_POLICY,
    delta: float = 1e-3,
) -> float:
    """Relative mismatch between actuator work and the work done lifting the load.

    The actuator work is the integral of F dl/dtheta over theta, with F from the
    closed form and dl/dtheta differenced from the Euclidean length. It uses the
    composite trapezoid rule plus the Euler-Maclaurin end correction
    -h^2/12 (g'(theta2) - g'(theta1)), which takes the rule to fourth order.
    """
    check_theta(theta1)
    check_theta(theta2)
    if not theta1 < theta2:
        raise DomainError(f"need theta1 < theta2, got {theta1!r}, {theta2!r}")
    if steps < 16:
        raise InvalidSpecError(f"need at least 16 quadrature steps, got {steps}")
    gain = lift.effective_load * (height(lift.n, lift.D, theta2) - height(lift.n, lift.D, theta1))
    if gain == 0:
        raise UndefinedResidualError("effective load is zero; relative residual undefined")
    thetas = np.linspace(theta1, theta2, steps + 1)
    F, singular = force_profile(lift, p, thetas, policy)
    if singular.any():
        raise SingularInRangeError(float(thetas[np.argmax(singular)]))
    delta = min(delta, theta1 / 3, (math.pi / 2 - theta2) / 3)
    g = F * _length_rate(p, lift.D, thetas, delta)
    h = (theta2 - theta1) / steps
    trapezoid = h * (g.sum() - (g[0] + g[-1]) / 2)
    slope_lo = (-3 * g[0] + 4 * g[1] - g[2]) / (2 * h)
    slope_hi = (3 * g[-1] - 4 * g[-2] + g[-3]) / (2 * h)
    work = float(trapezoid - h * h / 12 * (slope_hi - slope_lo))
    return abs(work - gain) / abs(gain)
