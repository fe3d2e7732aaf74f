"""Lift geometry, actuator placement variables and the derived placement constants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, InvalidSpecError, UnsupportedPlacementError


class ArmSlope(Enum):
    """Slope of the arm carrying the force-application point."""

    NEGATIVE = "negative"
    POSITIVE = "positive"


class Column(Enum):
    """Hinge column of the lift: the fixed column at x = 0 or the sliding one."""

    STATIC = "static"
    MOBILE = "mobile"


@dataclass(frozen=True)
class LiftSpec:
    """An n-stage scissor lift.

    Attributes:
        n: number of stages.
        D: arm length [m].
        W: self-weight of the lift [N].
        L: payload weight [N].
    """

    n: int
    D: float
    W: float = 0.0
    L: float = 0.0

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise InvalidSpecError(f"stage count must be a positive integer, got {self.n!r}")
        if not math.isfinite(self.D) or self.D <= 0:
            raise InvalidSpecError(f"arm length must be positive, got {self.D!r}")
        if not math.isfinite(self.W) or self.W < 0:
            raise InvalidSpecError(f"lift weight must be non-negative, got {self.W!r}")
        if not math.isfinite(self.L) or self.L < 0:
            raise InvalidSpecError(f"load must be non-negative, got {self.L!r}")

    @property
    def effective_load(self) -> float:
        return effective_load(self.L, self.W)


@dataclass(frozen=True)
class ActuatorPlacement:
    """Where the actuator acts on the lift.

    ``a`` is the fraction of the arm between the application point Q and the
    hinge below it on the same arm, ``b`` is the ground anchor offset OP in arm
    lengths (any real), and ``i`` counts the complete levels below Q.
    """

    a: float
    b: float
    i: int
    slope: ArmSlope

    def __post_init__(self):
        if not math.isfinite(self.a) or not 0.0 <= self.a <= 1.0:
            raise InvalidSpecError(f"a must lie in [0, 1], got {self.a!r}")
        if not math.isfinite(self.b):
            raise InvalidSpecError(f"b must be finite, got {self.b!r}")
        if isinstance(self.i, bool) or not isinstance(self.i, int) or self.i < 0:
            raise InvalidSpecError(f"i must be a non-negative integer, got {self.i!r}")
        if not isinstance(self.slope, ArmSlope):
            raise InvalidSpecError(f"slope must be an ArmSlope, got {self.slope!r}")

    def check_fits(self, lift: LiftSpec) -> None:
        """Raise unless the arm carrying Q exists on ``lift``."""
        if self.i > lift.n - 1:
            raise InvalidSpecError(
                f"i={self.i} needs at least {self.i + 1} stages, lift has {lift.n}"
            )

    @property
    def constants(self) -> PlacementConstants:
        return lift_constants(self.a, self.b, self.i)


@dataclass(frozen=True)
class PlacementConstants:
    K_A: float
    K_B: float
    K_C: float
    K_D: float


@dataclass(frozen=True)
class ThetaDomain:
    """Closed operating range of the arm angle, strictly inside (0, pi/2)."""

    lo: float
    hi: float

    def __post_init__(self):
        check_theta(self.lo)
        check_theta(self.hi)
        if self.lo > self.hi:
            raise DomainError(f"empty angle range [{self.lo}, {self.hi}]")

    @classmethod
    def from_degrees(cls, lo_deg: float, hi_deg: float) -> ThetaDomain:
        return cls(math.radians(lo_deg), math.radians(hi_deg))

    def grid(self, samples: int) -> list[float]:
        """Uniform grid of ``samples`` angles including both endpoints."""
        if samples < 2:
            raise InvalidSpecError(f"need at least 2 samples, got {samples}")
        step = (self.hi - self.lo) / (samples - 1)
        pts = [self.lo + k * step for k in range(samples - 1)]
        pts.append(self.hi)
        return pts


def check_theta(theta: float) -> float:
    if not (0.0 < theta < math.pi / 2):
        raise DomainError(f"theta out of open range (0, pi/2): {theta!r}")
    return theta


def effective_load(L: float, W: float) -> float:
    """Payload plus half the lift self-weight."""
    if L < 0 or W < 0:
        raise InvalidSpecError(f"loads must be non-negative, got L={L!r}, W={W!r}")
    return L + W / 2


def height(n: int, D: float, theta: float) -> float:
    check_theta(theta)
    return n * D * math.sin(theta)


def theta_from_height(h: float, n: int, D: float) -> float:
    full = n * D
    if not (0.0 < h < full):
        raise DomainError(f"height {h!r} outside the open range (0, {full!r})")
    return math.asin(h / full)


def lift_constants(a: float, b: float, i: int) -> PlacementConstants:
    u = i + a
    return PlacementConstants(
        K_A=(1 - a) ** 2 - u**2,
        K_B=b * (1 - a),
        K_C=b**2 + u**2,
        K_D=i * (2 * a + i),
    )


def resolve_shared_hinge(column: Column, k: int, n: int | None = None) -> tuple[float, int, ArmSlope]:
    """Pick (a, i, slope) for a force applied at the hinge on level ``k``.

    The arm that counts is the one lying entirely above the hinge: rising from
    a static hinge it slopes up, from a mobile hinge it slopes down. The top
    hinge of the lift has no arm above it. ``n`` bounds ``k`` when given.
    """
    if k < 0:
        raise UnsupportedPlacementError(f"hinge level must be non-negative, got {k}")
    if n is not None and k >= n:
        raise UnsupportedPlacementError(f"hinge level {k} is the top of a {n}-stage lift, no arm above it")
    slope = ArmSlope.POSITIVE if Column(column) is Column.STATIC else ArmSlope.NEGATIVE
    return 0.0, k, slope
