"""CSV, JSON and SVG renderings of sweep rows and search results."""

from __future__ import annotations

import csv
import io
import json
import math

from .forces import AnalysisRow
from .search import Candidate, SearchResult

COLUMNS = ("theta_deg", "theta_rad", "height_m", "actuator_length_m", "dh_dl", "force_n", "singular")


def _finite(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"refusing to emit non-finite value {x!r}")
    return x


def row_record(row: AnalysisRow) -> dict:
    """Row as an ordered mapping over COLUMNS; singular rows carry None for dh_dl and force."""
    return {
        "theta_deg": _finite(math.degrees(row.theta)),
        "theta_rad": _finite(row.theta),
        "height_m": _finite(row.h),
        "actuator_length_m": _finite(row.l),
        "dh_dl": None if row.singular else _finite(row.dh_dl),
        "force_n": None if row.singular else _finite(row.F),
        "singular": row.singular,
    }


def rows_to_csv(rows: list[AnalysisRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        rec = row_record(row)
        writer.writerow(
            "true" if v is True else "false" if v is False else "" if v is None else repr(v)
            for v in rec.values()
        )
    return buf.getvalue()


def rows_to_json(rows: list[AnalysisRow]) -> str:
    return json.dumps([row_record(r) for r in rows], indent=2, allow_nan=False) + "\n"


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 5, 10) if m * mag >= raw)
    first = math.ceil(lo / step) * step
    return [first + k * step for k in range(int((hi - first) / step + 1e-9) + 1)]


def rows_to_svg(rows: list[AnalysisRow], title: str = "Actuator force vs arm angle") -> str:
    """800x500 force-vs-angle line chart; the line breaks at singular samples."""
    width, height = 800, 500
    left, right, top, bottom = 80, 30, 50, 60
    pw, ph = width - left - right, height - top - bottom

    xs = [math.degrees(r.theta) for r in rows]
    forces = [r.F for r in rows if not r.singular]
    x_lo, x_hi = (min(xs), max(xs)) if xs else (0.0, 1.0)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1, x_hi + 1
    y_lo, y_hi = (min(forces), max(forces)) if forces else (0.0, 1.0)
    y_lo = min(y_lo, 0.0)
    if y_hi == y_lo:
        y_hi = y_lo + (abs(y_lo) or 1.0)
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - (pad if y_lo < 0 else 0), y_hi + pad

    def px(x):
        return left + (x - x_lo) / (x_hi - x_lo) * pw

    def py(y):
        return top + (1 - (y - y_lo) / (y_hi - y_lo)) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2}" y="28" text-anchor="middle" font-family="sans-serif" font-size="16">{title}</text>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for t in _ticks(x_lo, x_hi):
        x = px(t)
        out.append(f'<line x1="{x:.2f}" y1="{top + ph}" x2="{x:.2f}" y2="{top + ph + 5}" stroke="black"/>')
        out.append(
            f'<text x="{x:.2f}" y="{top + ph + 20}" text-anchor="middle" font-family="sans-serif" '
            f'font-size="11">{t:g}</text>'
        )
    for t in _ticks(y_lo, y_hi):
        y = py(t)
        out.append(f'<line x1="{left - 5}" y1="{y:.2f}" x2="{left}" y2="{y:.2f}" stroke="black"/>')
        out.append(f'<line x1="{left}" y1="{y:.2f}" x2="{left + pw}" y2="{y:.2f}" stroke="#ddd"/>')
        out.append(
            f'<text x="{left - 8}" y="{y + 4:.2f}" text-anchor="end" font-family="sans-serif" '
            f'font-size="11">{t:g}</text>'
        )
    out.append(
        f'<text x="{left + pw / 2}" y="{height - 15}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="13">arm angle theta [deg]</text>'
    )
    out.append(
        f'<text x="20" y="{top + ph / 2}" text-anchor="middle" font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 20 {top + ph / 2})">actuator force [N]</text>'
    )

    segments, current = [], []
    for x, row in zip(xs, rows):
        if row.singular:
            if current:
                segments.append(current)
            current = []
            out.append(
                f'<line x1="{px(x):.2f}" y1="{top}" x2="{px(x):.2f}" y2="{top + ph}" '
                f'stroke="red" stroke-dasharray="4 4"/>'
            )
        else:
            current.append(f"{px(x):.2f},{py(row.F):.2f}")
    if current:
        segments.append(current)
    for seg in segments:
        if len(seg) == 1:
            cx, cy = seg[0].split(",")
            out.append(f'<circle cx="{cx}" cy="{cy}" r="2" fill="steelblue"/>')
        else:
            out.append(f'<polyline fill="none" stroke="steelblue" stroke-width="2" points="{" ".join(seg)}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def candidate_record(c: Candidate) -> dict:
    p = c.placement
    return {
        "a": p.a,
        "b": p.b,
        "i": p.i,
        "slope": p.slope.value,
        "objective": None if c.objective is None else _finite(c.objective),
        "feasible": c.feasible,
        "flags": list(c.flags),
    }


def search_report(result: SearchResult, objective: str, refined: Candidate | None = None) -> str:
    best = result.best
    doc = {
        "objective": objective,
        "best": None if best is None else candidate_record(best),
        "ranked": [candidate_record(c) for c in result.ranked],
    }
    if refined is not None:
        doc["refined"] = candidate_record(refined)
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"
