"""Angle sweeps and actuator placement search.

The search evaluates every candidate on a grid over (a, b, i, slope), ranks
them, and can then polish one candidate by coordinate descent on (a, b).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from .errors import InvalidSpecError, RefineSeedError, ScissorLiftError
from .forces import (
    DEFAULT_POLICY,
    Singular,
    AnalysisRow,
    SingularityPolicy,
    analyze_at,
    force,
    peak_force,
    stroke_range,
)
from .model import ActuatorPlacement, ArmSlope, LiftSpec, ThetaDomain, check_theta

GOLDEN = (math.sqrt(5) - 1) / 2


class Objective(Enum):
    MIN_PEAK_FORCE = "min_peak_force"
    MIN_STROKE = "min_stroke"
    MIN_FORCE_AT = "min_force_at"


@dataclass(frozen=True)
class Constraints:
    max_force: float | None = None
    max_length: float | None = None
    min_length: float | None = None

    def __post_init__(self):
        for name in ("max_force", "max_length", "min_length"):
            value = getattr(self, name)
            if value is not None and not value > 0:
                raise InvalidSpecError(f"constraint {name} must be positive, got {value!r}")


@dataclass(frozen=True)
class SearchProblem:
    """What to minimise, under which limits, over which candidates.

    When ``candidates`` is given it replaces the cartesian grid built from
    ``a_steps``, ``b_range``/``b_steps``, ``i_set`` and ``slopes``.
    ``i_set`` defaults to every level of the lift.
    """

    lift: LiftSpec
    dom: ThetaDomain
    objective: Objective = Objective.MIN_PEAK_FORCE
    objective_theta: float | None = None
    constraints: Constraints = field(default_factory=Constraints)
    a_steps: int = 21
    b_range: tuple[float, float] = (0.0, 2.0)
    b_steps: int = 41
    i_set: tuple[int, ...] | None = None
    slopes: tuple[ArmSlope, ...] = (ArmSlope.NEGATIVE, ArmSlope.POSITIVE)
    candidates: tuple[ActuatorPlacement, ...] | None = None
    samples: int = 512

    def __post_init__(self):
        if self.objective is Objective.MIN_FORCE_AT:
            if self.objective_theta is None:
                raise InvalidSpecError("min_force_at needs an objective angle")
            check_theta(self.objective_theta)
        if self.samples < 2:
            raise InvalidSpecError("samples must be at least 2")
        if self.candidates is not None:
            if not self.candidates:
                raise InvalidSpecError("candidate list is empty")
            for c in self.candidates:
                c.check_fits(self.lift)
            return
        lo, hi = self.b_range
        if not (math.isfinite(lo) and math.isfinite(hi) and lo <= hi):
            raise InvalidSpecError(f"b range must be finite and ordered, got {self.b_range!r}")
        if self.a_steps < 1 or self.b_steps < 1:
            raise InvalidSpecError("grid step counts must be positive")
        if not self.slopes:
            raise InvalidSpecError("no slopes to search")
        if self.i_set is not None:
            if not self.i_set:
                raise InvalidSpecError("i set is empty")
            bad = [i for i in self.i_set if not 0 <= i <= self.lift.n - 1]
            if bad:
                raise InvalidSpecError(f"i values {bad} outside 0..{self.lift.n - 1}")

    def levels(self) -> tuple[int, ...]:
        return tuple(range(self.lift.n)) if self.i_set is None else tuple(sorted(set(self.i_set)))

    def grid(self) -> list[ActuatorPlacement]:
        if self.candidates is not None:
            return list(self.candidates)
        a_vals = _linspace(0.0, 1.0, self.a_steps)
        b_vals = _linspace(*self.b_range, self.b_steps)
        slopes = sorted(set(self.slopes), key=_slope_rank)
        return [
            ActuatorPlacement(a, b, i, s)
            for i, s, a, b in itertools.product(self.levels(), slopes, a_vals, b_vals)
        ]


@dataclass(frozen=True)
class Candidate:
    placement: ActuatorPlacement
    objective: float | None
    feasible: bool
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class SearchResult:
    ranked: list[Candidate]

    @property
    def best(self) -> Candidate | None:
        if self.ranked and self.ranked[0].feasible:
            return self.ranked[0]
        return None


def _linspace(lo: float, hi: float, steps: int) -> list[float]:
    if steps == 1:
        return [lo]
    return [float(x) for x in np.linspace(lo, hi, steps)]


def _slope_rank(slope: ArmSlope) -> int:
    return 0 if slope is ArmSlope.NEGATIVE else 1


def _tie_key(p: ActuatorPlacement) -> tuple:
    return (p.i, _slope_rank(p.slope), p.a, p.b)


def sweep(
    lift: LiftSpec,
    p: ActuatorPlacement,
    dom: ThetaDomain,
    samples: int,
    policy: SingularityPolicy = DEFAULT_POLICY,
) -> list[AnalysisRow]:
    """One analysis row per grid angle, ascending; singular rows are kept and flagged."""
    return [analyze_at(lift, p, t, policy) for t in dom.grid(samples)]


def evaluate(problem: SearchProblem, p: ActuatorPlacement, policy: SingularityPolicy = DEFAULT_POLICY) -> Candidate:
    """Objective value and constraint check for one placement."""
    lift, dom, cons = problem.lift, problem.dom, problem.constraints
    flags = []
    needs_stroke = problem.objective is Objective.MIN_STROKE or (
        cons.max_length is not None or cons.min_length is not None
    )
    try:
        _, f_peak = peak_force(lift, p, dom, problem.samples, policy)
        if needs_stroke:
            l_min, l_max = stroke_range(p, lift.D, dom, problem.samples, policy)
    except ScissorLiftError:
        return Candidate(p, None, False, ("singular",))

    if problem.objective is Objective.MIN_PEAK_FORCE:
        value = abs(f_peak)
    elif problem.objective is Objective.MIN_STROKE:
        value = l_max - l_min
    else:
        f = force(lift, p, problem.objective_theta, policy)
        if isinstance(f, Singular):
            return Candidate(p, None, False, ("singular",))
        value = abs(f)

    if cons.max_force is not None and abs(f_peak) > cons.max_force:
        flags.append("max_force")
    if cons.max_length is not None and l_max > cons.max_length:
        flags.append("max_length")
    if cons.min_length is not None and l_min < cons.min_length:
        flags.append("min_length")
    return Candidate(p, value, not flags, tuple(flags))


def _rank_key(c: Candidate) -> tuple:
    value = math.inf if c.objective is None else c.objective
    return (not c.feasible, value, _tie_key(c.placement))


def grid_search(problem: SearchProblem, policy: SingularityPolicy = DEFAULT_POLICY) -> SearchResult:
    """Evaluate every grid candidate; feasible ones first, ascending objective."""
    evaluated = [evaluate(problem, p, policy) for p in problem.grid()]
    return SearchResult(sorted(evaluated, key=_rank_key))


def golden_section(f, lo: float, hi: float, tol: float = 1e-8, max_iter: int = 200) -> tuple[float, float]:
    """Minimise ``f`` on [lo, hi]; the endpoints are checked as well."""
    x1 = hi - GOLDEN * (hi - lo)
    x2 = lo + GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    a, b = lo, hi
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + GOLDEN * (b - a)
            f2 = f(x2)
    best = min([(f1, x1), (f2, x2), (f(lo), lo), (f(hi), hi)])
    return best[1], best[0]


def refine(
    lift: LiftSpec,
    seed: ActuatorPlacement,
    problem: SearchProblem,
    policy: SingularityPolicy = DEFAULT_POLICY,
    max_rounds: int = 100,
    rtol: float = 1e-9,
    history: list[float] | None = None,
) -> ActuatorPlacement:
    """Coordinate descent on ``a`` in [0, 1] and ``b`` in the problem's b range.

    ``i`` and the slope stay fixed. Infeasible points score +inf, so the
    result stays feasible, and a move is only taken when it strictly
    improves the objective. Objective values per round are appended to
    ``history`` when given.
    """
    if lift != problem.lift:
        problem = replace(problem, lift=lift)
    b_lo, b_hi = problem.b_range

    def score(p: ActuatorPlacement) -> float:
        c = evaluate(problem, p, policy)
        return c.objective if c.feasible else math.inf

    current = seed
    best = score(seed)
    if not math.isfinite(best):
        raise RefineSeedError(f"seed placement {seed} is infeasible")
    if history is not None:
        history.append(best)

    for _ in range(max_rounds):
        start = best
        x, fx = golden_section(lambda a: score(replace(current, a=a)), 0.0, 1.0)
        if fx < best:
            current, best = replace(current, a=x), fx
        if b_lo < b_hi:
            x, fx = golden_section(lambda b: score(replace(current, b=b)), b_lo, b_hi)
            if fx < best:
                current, best = replace(current, b=x), fx
        if history is not None:
            history.append(best)
        if start - best <= rtol * abs(start):
            break
    return current
