"""
Solving benchmark problems
==========================

End-to-end runs on five classic small LPs: parse, convert, solve, and check
the objective against the published optimum.
"""

import os

from galp import SolverConfig, read_mps, solve, to_standard_form

HERE = os.path.dirname(__file__)
CORPUS = os.path.join(HERE, "..", "tests", "data", "netlib")

PUBLISHED = {
    "afiro": -464.75314286,
    "sc50a": -64.575077059,
    "sc50b": -70.0,
    "adlittle": 225494.96316,
    "blend": -30.812149846,
}

print(f"{'problem':10} {'status':10} {'iters':>5} {'objective':>16} {'published':>16}")
for name, published in PUBLISHED.items():
    raw = read_mps(os.path.join(CORPUS, f"{name}.mps"))
    lp, vmap = to_standard_form(raw)
    report = solve(lp, SolverConfig(r=0.2), offset=vmap.offset)
    print(
        f"{name:10} {report.status.value:10} {report.iterations:5d}"
        f" {report.objective_original:16.8g} {published:16.8g}"
    )

# the trace records one row per iteration: objective, residuals, step sizes
lp, vmap = to_standard_form(read_mps(os.path.join(CORPUS, "afiro.mps")))
report = solve(lp, SolverConfig(r=0.2), offset=vmap.offset)
print("\nafiro trace (first five iterations):")
print(f"{'it':>3} {'objective':>14} {'rf':>10} {'rgap':>10}")
for rec in report.trace[:5]:
    print(f"{rec.iteration:3d} {rec.objective:14.6g} {rec.rf:10.2e} {rec.rgap:10.2e}")
