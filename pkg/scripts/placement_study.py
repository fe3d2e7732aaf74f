"""Grid search then refine an actuator placement, and plot force for the result.

    python scripts/placement_study.py [config.json] [outdir]
"""

import sys
from pathlib import Path

from scissorlift.config import load_config
from scissorlift.report import rows_to_svg, search_report
from scissorlift.search import evaluate, grid_search, refine, sweep

cfg_path = sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parents[1] / "configs" / "grid_search.json"
outdir = Path(sys.argv[2] if len(sys.argv) > 2 else "out")
outdir.mkdir(parents=True, exist_ok=True)

cfg = load_config(cfg_path)
problem = cfg.search
result = grid_search(problem)
best = result.best
if best is None:
    sys.exit("no feasible placement on the grid")

history = []
polished = refine(problem.lift, best.placement, problem, history=history)
final = evaluate(problem, polished)
print(f"grid best   : {best.placement}  objective {best.objective:.3f}")
print(f"refined     : {polished}  objective {final.objective:.3f}")
print("round trace : " + ", ".join(f"{v:.3f}" for v in history))

(outdir / "search.json").write_text(search_report(result, problem.objective.value, final))
(outdir / "refined_force.svg").write_text(rows_to_svg(sweep(problem.lift, polished, problem.dom, 200)))
print(f"wrote {outdir / 'search.json'} and {outdir / 'refined_force.svg'}")
