"""JSON run configuration: strict parsing into the library types.

Angles are given in degrees in the file and converted to radians here, once.

Example::

    {
      "lift": {"stages": 2, "arm_length_m": 1.0, "lift_weight_n": 0, "load_n": 200},
      "placement": {"a": 0, "b": 2, "i": 0, "slope": "negative"},
      "domain": {"theta_lo_deg": 20, "theta_hi_deg": 70},
      "search": {
        "objective": "min_peak_force",
        "constraints": {"max_force_n": 1000},
        "grids": {"a_steps": 21, "b_range": [0, 2], "b_steps": 41}
      }
    }
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import InvalidSpecError, ScissorLiftError
from .model import ActuatorPlacement, ArmSlope, LiftSpec, ThetaDomain
from .search import Constraints, Objective, SearchProblem


class ConfigError(InvalidSpecError):
    """Invalid config document; ``path`` is the dotted location of the bad field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


@dataclass(frozen=True)
class RunConfig:
    lift: LiftSpec
    placement: ActuatorPlacement | None
    dom: ThetaDomain
    search: SearchProblem | None = None
    refine: bool = False


_SECTIONS = {
    "lift": {"stages", "arm_length_m", "lift_weight_n", "load_n"},
    "placement": {"a", "b", "i", "slope"},
    "domain": {"theta_lo_deg", "theta_hi_deg"},
}
_SEARCH_KEYS = {"objective", "objective_theta_deg", "constraints", "grids", "samples", "refine"}
_CONSTRAINT_KEYS = {"max_force_n", "max_length_m", "min_length_m"}
_GRID_KEYS = {"a_steps", "b_range", "b_steps", "i_set", "slopes", "candidates"}


def _object(doc, path: str, allowed: set[str], required: set[str] = frozenset()) -> dict:
    if not isinstance(doc, dict):
        raise ConfigError(path, "expected an object")
    for key in sorted(doc):
        if key not in allowed:
            raise ConfigError(f"{path}.{key}" if path else key, "unknown key")
    for key in sorted(required):
        if key not in doc:
            raise ConfigError(f"{path}.{key}" if path else key, "missing")
    return doc


def _number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ConfigError(path, f"expected a finite number, got {value!r}")
    return float(value)


def _integer(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(path, f"expected an integer, got {value!r}")
    return value


def _slope(value, path: str) -> ArmSlope:
    try:
        return ArmSlope(value)
    except ValueError:
        raise ConfigError(path, f"must be one of 'negative', 'positive', got {value!r}") from None


def _build(path: str, factory, *args):
    """Run a constructor, attributing its validation error to ``path``."""
    try:
        return factory(*args)
    except ConfigError:
        raise
    except ScissorLiftError as exc:
        raise ConfigError(path, str(exc)) from None


def _placement(doc, path: str) -> ActuatorPlacement:
    doc = _object(doc, path, _SECTIONS["placement"], _SECTIONS["placement"])
    return _build(
        path,
        ActuatorPlacement,
        _number(doc["a"], f"{path}.a"),
        _number(doc["b"], f"{path}.b"),
        _integer(doc["i"], f"{path}.i"),
        _slope(doc["slope"], f"{path}.slope"),
    )


def _search(doc, lift: LiftSpec, dom: ThetaDomain) -> tuple[SearchProblem, bool]:
    doc = _object(doc, "search", _SEARCH_KEYS)
    kwargs = {}
    try:
        kwargs["objective"] = Objective(doc.get("objective", "min_peak_force"))
    except ValueError:
        raise ConfigError(
            "search.objective", f"must be one of {[o.value for o in Objective]}, got {doc['objective']!r}"
        ) from None
    if "objective_theta_deg" in doc:
        kwargs["objective_theta"] = math.radians(_number(doc["objective_theta_deg"], "search.objective_theta_deg"))
    if "samples" in doc:
        kwargs["samples"] = _integer(doc["samples"], "search.samples")

    cons = _object(doc.get("constraints", {}), "search.constraints", _CONSTRAINT_KEYS)
    kwargs["constraints"] = _build(
        "search.constraints",
        Constraints,
        *(
            None if cons.get(k) is None else _number(cons[k], f"search.constraints.{k}")
            for k in ("max_force_n", "max_length_m", "min_length_m")
        ),
    )

    grids = _object(doc.get("grids", {}), "search.grids", _GRID_KEYS)
    for key in ("a_steps", "b_steps"):
        if key in grids:
            kwargs[key] = _integer(grids[key], f"search.grids.{key}")
    if "b_range" in grids:
        rng = grids["b_range"]
        if not isinstance(rng, list) or len(rng) != 2:
            raise ConfigError("search.grids.b_range", "expected [low, high]")
        kwargs["b_range"] = tuple(_number(v, f"search.grids.b_range[{k}]") for k, v in enumerate(rng))
    if "i_set" in grids:
        if not isinstance(grids["i_set"], list):
            raise ConfigError("search.grids.i_set", "expected a list of integers")
        kwargs["i_set"] = tuple(_integer(v, f"search.grids.i_set[{k}]") for k, v in enumerate(grids["i_set"]))
    if "slopes" in grids:
        if not isinstance(grids["slopes"], list):
            raise ConfigError("search.grids.slopes", "expected a list")
        kwargs["slopes"] = tuple(_slope(v, f"search.grids.slopes[{k}]") for k, v in enumerate(grids["slopes"]))
    if "candidates" in grids:
        if not isinstance(grids["candidates"], list):
            raise ConfigError("search.grids.candidates", "expected a list of placements")
        kwargs["candidates"] = tuple(
            _placement(c, f"search.grids.candidates[{k}]") for k, c in enumerate(grids["candidates"])
        )

    refine = doc.get("refine", False)
    if not isinstance(refine, bool):
        raise ConfigError("search.refine", "expected true or false")
    return _build("search", lambda: SearchProblem(lift, dom, **kwargs)), refine


def parse_config(doc) -> RunConfig:
    doc = _object(doc, "", {"lift", "placement", "domain", "search"}, {"lift", "domain"})

    lift_doc = _object(doc["lift"], "lift", _SECTIONS["lift"], {"stages", "arm_length_m"})
    lift = _build(
        "lift",
        LiftSpec,
        _integer(lift_doc["stages"], "lift.stages"),
        _number(lift_doc["arm_length_m"], "lift.arm_length_m"),
        _number(lift_doc.get("lift_weight_n", 0), "lift.lift_weight_n"),
        _number(lift_doc.get("load_n", 0), "lift.load_n"),
    )

    dom_doc = _object(doc["domain"], "domain", _SECTIONS["domain"], _SECTIONS["domain"])
    dom = _build(
        "domain",
        ThetaDomain.from_degrees,
        _number(dom_doc["theta_lo_deg"], "domain.theta_lo_deg"),
        _number(dom_doc["theta_hi_deg"], "domain.theta_hi_deg"),
    )

    placement = None
    if "placement" in doc:
        placement = _placement(doc["placement"], "placement")
        _build("placement.i", placement.check_fits, lift)

    search, refine = (None, False)
    if "search" in doc:
        search, refine = _search(doc["search"], lift, dom)
    return RunConfig(lift, placement, dom, search, refine)


def load_config(path: str | Path) -> RunConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError("", f"cannot read config {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("", f"config is not valid JSON: {exc}") from None
    return parse_config(doc)
