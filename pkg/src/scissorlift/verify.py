"""Seeded randomized comparisons of the closed forms against the geometry oracle.

Samplers draw placements that fit the given lift and angles inside the given
domain. Each suite keeps to the region where its comparison is meaningful:

* lengths: actuator at least ``MIN_UNIT_LENGTH`` arm lengths long, where the
  expanded closed form does not lose digits to cancellation;
* derivatives: ``|denominator of dh/dl| > MIN_DENOMINATOR``;
* energy: the same margin held over a whole angle interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .forces import _denominator, actuator_length, velocity_ratio
from .model import ActuatorPlacement, ArmSlope, LiftSpec, ThetaDomain
from .oracle import energy_residual, fd_velocity_ratio, oracle_actuator_length

LENGTH_TOL = 1e-12
DERIVATIVE_TOL = 1e-5
ENERGY_TOL = 1e-8

MIN_UNIT_LENGTH = 0.05
MIN_DENOMINATOR = 1e-3
FD_STEP = 1e-6
ENERGY_STEPS = 10_000


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    max_deviation: float
    tolerance: float
    worst: tuple[ActuatorPlacement, float, float] | None  # placement, theta (or theta1), theta2

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.max_deviation <= self.tolerance


def random_placement(rng: np.random.Generator, n: int, b_range=(-1.0, 3.0)) -> ActuatorPlacement:
    return ActuatorPlacement(
        a=float(rng.uniform(0.0, 1.0)),
        b=float(rng.uniform(*b_range)),
        i=int(rng.integers(0, n)),
        slope=ArmSlope.NEGATIVE if rng.integers(0, 2) == 0 else ArmSlope.POSITIVE,
    )


def _denominator_at(p: ActuatorPlacement, theta):
    return _denominator(p, np.sin(theta), np.tan(theta))


def _draw(rng, lift, dom, b_range, accept, max_tries):
    for _ in range(max_tries):
        p = random_placement(rng, lift.n, b_range)
        theta = float(rng.uniform(dom.lo, dom.hi))
        if accept(p, theta):
            return p, theta
    return None


def length_suite(lift: LiftSpec, dom: ThetaDomain, trials: int, rng: np.random.Generator, b_range=(-1.0, 3.0)):
    def ok(p, t):
        return oracle_actuator_length(p, lift.D, t) >= MIN_UNIT_LENGTH * lift.D

    worst, worst_case, cases = 0.0, None, 0
    for _ in range(trials):
        drawn = _draw(rng, lift, dom, b_range, ok, 1000)
        if drawn is None:
            continue
        p, t = drawn
        ref = oracle_actuator_length(p, lift.D, t)
        dev = abs(actuator_length(p, lift.D, t) - ref) / ref
        cases += 1
        if dev >= worst:
            worst, worst_case = dev, (p, t, t)
    return SuiteResult("length", cases, worst, LENGTH_TOL, worst_case)


def derivative_suite(lift: LiftSpec, dom: ThetaDomain, trials: int, rng: np.random.Generator, b_range=(-1.0, 3.0)):
    def ok(p, t):
        return (
            abs(_denominator_at(p, t)) > MIN_DENOMINATOR
            and FD_STEP < t < math.pi / 2 - FD_STEP
            and oracle_actuator_length(p, lift.D, t) >= MIN_UNIT_LENGTH * lift.D
        )

    worst, worst_case, cases = 0.0, None, 0
    for _ in range(trials):
        drawn = _draw(rng, lift, dom, b_range, ok, 1000)
        if drawn is None:
            continue
        p, t = drawn
        closed = velocity_ratio(p, lift.n, t)
        fd = fd_velocity_ratio(p, lift.n, lift.D, t, FD_STEP)
        dev = abs(closed - fd) / abs(closed)
        cases += 1
        if dev >= worst:
            worst, worst_case = dev, (p, t, t)
    return SuiteResult("derivative", cases, worst, DERIVATIVE_TOL, worst_case)


def energy_suite(
    lift: LiftSpec,
    dom: ThetaDomain,
    trials: int,
    rng: np.random.Generator,
    b_range=(-1.0, 3.0),
    steps: int = ENERGY_STEPS,
):
    """Energy residuals on random placements over random sub-intervals of the domain."""
    worst, worst_case, cases = 0.0, None, 0
    if dom.hi <= dom.lo:
        return SuiteResult("energy", 0, math.inf, ENERGY_TOL, None)
    if lift.effective_load == 0:
        # the residual is relative and linear in the load
        lift = LiftSpec(lift.n, lift.D, 0.0, 1.0)
    for _ in range(trials):
        for _ in range(1000):
            p = random_placement(rng, lift.n, b_range)
            t1, t2 = sorted(float(x) for x in rng.uniform(dom.lo, dom.hi, 2))
            if t2 - t1 < 1e-3:
                continue
            den = _denominator_at(p, np.linspace(t1, t2, steps + 1))
            if np.all(den > MIN_DENOMINATOR) or np.all(den < -MIN_DENOMINATOR):
                break
        else:
            continue
        dev = energy_residual(lift, p, t1, t2, steps)
        cases += 1
        if dev >= worst:
            worst, worst_case = dev, (p, t1, t2)
    return SuiteResult("energy", cases, worst, ENERGY_TOL, worst_case)


def run_all(lift: LiftSpec, dom: ThetaDomain, trials: int, seed: int, b_range=(-1.0, 3.0)) -> list[SuiteResult]:
    rng = np.random.default_rng(seed)
    return [
        length_suite(lift, dom, trials, rng, b_range),
        derivative_suite(lift, dom, trials, rng, b_range),
        energy_suite(lift, dom, trials, rng, b_range),
    ]
