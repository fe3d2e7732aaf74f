import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import NEG, POS
from scissorlift import ActuatorPlacement, LiftSpec, RefineSeedError, ThetaDomain, peak_force, stroke_range
from scissorlift.errors import InvalidSpecError
from scissorlift.search import (
    Constraints,
    Objective,
    SearchProblem,
    evaluate,
    golden_section,
    grid_search,
    refine,
    sweep,
)

LIFT = LiftSpec(2, 1.0, 0, 100)
DOM = ThetaDomain.from_degrees(20, 70)
SJ = ActuatorPlacement(0.0, 2.0, 0, NEG)
VP = ActuatorPlacement(0.0, 0.0, 1, POS)


def test_sweep_screw_jack():
    dom = ThetaDomain.from_degrees(30, 60)
    rows = sweep(LIFT, SJ, dom, 4)
    assert len(rows) == 4
    assert [r.theta for r in rows] == sorted(r.theta for r in rows)
    for r in rows:
        assert r.F * math.tan(r.theta) / (LIFT.n * LIFT.effective_load) == pytest.approx(1, abs=1e-9)


def test_sweep_vertical_and_endpoints():
    rows = sweep(LIFT, VP, DOM, 7)
    assert all(r.F == pytest.approx(200, rel=1e-12) for r in rows)
    rows = sweep(LIFT, VP, DOM, 2)
    assert [r.theta for r in rows] == [DOM.lo, DOM.hi]


def test_sweep_keeps_singular_rows():
    t0 = math.acos(0.9)
    rows = sweep(LIFT, ActuatorPlacement(0, 0.9, 0, NEG), ThetaDomain(t0 - 0.3, t0 + 0.3), 11)
    assert len(rows) == 11
    assert [r.singular for r in rows] == [False] * 5 + [True] + [False] * 5


def two_candidates(**kw):
    return SearchProblem(LIFT, DOM, candidates=(SJ, VP), **kw)


def test_grid_search_two_candidates():
    result = grid_search(two_candidates())
    assert result.best.placement == VP
    assert result.best.objective == pytest.approx(200, rel=1e-12)
    assert result.ranked[1].objective == pytest.approx(200 / math.tan(math.radians(20)), rel=1e-12)


def test_grid_search_single_candidate():
    result = grid_search(SearchProblem(LIFT, DOM, candidates=(SJ,)))
    assert result.best.placement == SJ


def test_grid_search_nothing_feasible():
    result = grid_search(two_candidates(constraints=Constraints(max_force=100)))
    assert result.best is None
    assert all(not c.feasible and "max_force" in c.flags for c in result.ranked)


def test_singular_candidates_rank_last():
    bad = ActuatorPlacement(0.0, 0.0, 0, POS)  # anchor on Q: zero length everywhere
    result = grid_search(SearchProblem(LIFT, DOM, candidates=(bad, SJ)))
    assert result.ranked[-1].placement == bad
    assert result.ranked[-1].objective is None
    assert result.ranked[-1].flags == ("singular",)


def test_min_stroke_and_force_at():
    p = SearchProblem(LIFT, DOM, objective=Objective.MIN_STROKE, candidates=(SJ, VP))
    for c in grid_search(p).ranked:
        lo, hi = stroke_range(c.placement, LIFT.D, DOM, p.samples)
        assert c.objective == hi - lo
    p = SearchProblem(LIFT, DOM, objective=Objective.MIN_FORCE_AT, objective_theta=math.radians(70), candidates=(SJ, VP))
    best = grid_search(p).best
    assert best.placement == SJ
    assert best.objective == pytest.approx(200 / math.tan(math.radians(70)), rel=1e-12)
    with pytest.raises(InvalidSpecError):
        SearchProblem(LIFT, DOM, objective=Objective.MIN_FORCE_AT)


def test_length_constraints():
    p = two_candidates(constraints=Constraints(max_length=1.0))
    res = grid_search(p)
    assert res.best.placement == VP
    assert "max_length" in res.ranked[1].flags
    with pytest.raises(InvalidSpecError):
        Constraints(max_force=-1.0)


def test_grid_shape_and_tie_order():
    p = SearchProblem(LIFT, DOM, a_steps=3, b_range=(0.5, 1.5), b_steps=3, samples=32)
    grid = p.grid()
    assert len(grid) == 3 * 3 * 2 * 2
    keys = [(c.i, c.slope is POS, c.a, c.b) for c in grid]
    assert keys == sorted(keys)


SMALL = SearchProblem(LIFT, DOM, a_steps=5, b_range=(-0.5, 2.0), b_steps=6, samples=64)


def test_grid_search_dominance_and_ranking():
    result = grid_search(SMALL)
    feasible = [c for c in result.ranked if c.feasible]
    assert feasible
    assert all(result.best.objective <= c.objective for c in feasible)
    values = [c.objective for c in feasible]
    assert values == sorted(values)
    # infeasible strictly after feasible
    flags = [c.feasible for c in result.ranked]
    assert flags == sorted(flags, reverse=True)


def test_grid_search_deterministic():
    assert grid_search(SMALL) == grid_search(SMALL)


def test_objective_matches_peak_force():
    for c in grid_search(SMALL).ranked:
        if c.objective is not None:
            _, F = peak_force(LIFT, c.placement, DOM, SMALL.samples)
            assert c.objective == abs(F)


def test_golden_section():
    x, fx = golden_section(lambda x: (x - 0.3) ** 2, 0.0, 1.0)
    assert x == pytest.approx(0.3, abs=1e-6)
    x, fx = golden_section(lambda x: x, 0.0, 1.0)
    assert x == 0.0 and fx == 0.0


def test_refine_vertical_seed():
    problem = SearchProblem(LIFT, DOM, b_range=(-1.0, 2.0), samples=128)
    history = []
    out = refine(LIFT, VP, problem, history=history)
    assert out.i == VP.i and out.slope is VP.slope
    assert 0 <= out.a <= 1 and -1 <= out.b <= 2
    final = evaluate(problem, out)
    assert final.feasible and final.objective <= 200 + 1e-9
    assert all(b <= a for a, b in zip(history, history[1:]))
    assert history[-1] == final.objective


def test_refine_seed_at_minimum_unchanged():
    # screw jack force is independent of b (away from b = cos theta) and
    # any a > 0 on the bottom arm only raises the peak force here
    problem = SearchProblem(LIFT, DOM, b_range=(2.0, 2.0), samples=64)
    seed = ActuatorPlacement(0.0, 2.0, 0, NEG)
    assert evaluate(problem, seed).objective < evaluate(problem, ActuatorPlacement(0.01, 2.0, 0, NEG)).objective
    assert refine(LIFT, seed, problem) == seed


def test_refine_infeasible_seed():
    problem = two_candidates(constraints=Constraints(max_force=100))
    with pytest.raises(RefineSeedError):
        refine(LIFT, VP, problem)


@settings(max_examples=15)
@given(st.floats(0.0, 1.0), st.floats(-0.5, 2.0), st.integers(0, 1), st.sampled_from([NEG, POS]))
def test_refine_never_worsens(a, b, i, slope):
    problem = SearchProblem(LIFT, DOM, b_range=(-0.5, 2.0), samples=32)
    seed = ActuatorPlacement(a, b, i, slope)
    start = evaluate(problem, seed)
    if not start.feasible:
        return
    out = refine(LIFT, seed, problem, max_rounds=5)
    end = evaluate(problem, out)
    assert end.feasible and end.objective <= start.objective
    assert 0 <= out.a <= 1 and -0.5 <= out.b <= 2.0
