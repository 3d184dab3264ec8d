"""Main affine scaling loop: starting point, combined feasibility/descent
steps, dual recovery, stopping, and per-iteration trace capture.

Each iteration factorizes A H^-1 A^t once at the current point and reuses
the factor for the feasibility direction, the descent direction, and the
dual estimates (y, w, s).  The feasibility move uses step factor 0.95 while
the residual is large and 0.65 once it is small; the descent move swaps the
two factors.  Reported duals therefore lag the reported primal point by one
move.

Stopping declares optimality only when the feasibility measure Rf, the
expected relative duality gap Rgap, and a sign safeguard on s all hold;
stopping on min(Rf, Rgap) alone would accept feasible-but-unconverged
points (Rgap can transiently vanish away from the optimum).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .directions import descent_direction, feasibility_direction, max_step, reproject
from .model import StandardLP, primal_infeasibility
from .penalty import GaugeParams, NotInterior, scaling_diagonals


class Status(enum.Enum):
    OPTIMAL = "Optimal"
    ITERATION_LIMIT = "IterationLimit"
    UNBOUNDED = "Unbounded"
    NUMERICAL_FAILURE = "NumericalFailure"


@dataclass
class SolverConfig:
    r: float = 0.2
    epsilon: float = 1e-8
    max_iterations: int = 300
    step_aggressive: float = 0.95
    step_conservative: float = 0.65
    reproject_gap_threshold: float = 1e-3
    reproject_iteration_threshold: int = 20
    start_policy: str = "auto"  # auto | x1 | x2
    dual_safeguard: float = 1e-6

    def __post_init__(self):
        if not 0.0 <= self.r < 1.0:
            raise ValueError("r must lie in [0, 1)")
        if not 0.0 < self.step_conservative < self.step_aggressive < 1.0:
            raise ValueError("need 0 < conservative < aggressive < 1")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.start_policy not in ("auto", "x1", "x2"):
            raise ValueError(f"unknown start policy {self.start_policy!r}")


@dataclass
class TraceRecord:
    iteration: int
    objective: float
    rf: float
    rgap: float
    step_feas: float
    step_desc: float
    min_x: float
    clamps: int
    regularization: float


@dataclass
class IterateState:
    x: np.ndarray
    y: np.ndarray
    w: np.ndarray
    s: np.ndarray
    rf: float
    rgap: float
    iteration: int = 0
    clamps: int = 0
    rho: float = 0.0
    step_feas: float = 0.0
    step_desc: float = 0.0
    status: Status | None = None


@dataclass
class SolveReport:
    status: Status
    iterations: int
    objective: float
    objective_original: float
    x: np.ndarray
    y: np.ndarray
    s: np.ndarray
    w: np.ndarray
    rf: float
    rgap: float
    trace: list = field(default_factory=list)


class UnboundedDirection(Exception):
    pass


def starting_point_x1(lp: StandardLP) -> np.ndarray:
    """Column-norm heuristic start, pushed toward the cheap side of the box."""
    norms = np.sqrt(np.asarray(lp.A.multiply(lp.A).sum(axis=0)).ravel())
    denom = np.maximum(norms, 1.0)  # zero columns fall back to n/1
    base = lp.n / denom
    frac = np.where(lp.c < 0, 0.9, 0.1)
    return np.minimum(base, frac * lp.upper)


def starting_point_x2(lp: StandardLP) -> np.ndarray:
    """Minimum-norm solution of Ax = b shifted into the open box."""
    F = linalg.factor(linalg.assemble_normal(lp.A, np.ones(lp.n)))
    xhat = lp.A.T @ linalg.solve(F, lp.b)
    xnorm = np.linalg.norm(xhat, np.inf) if lp.n else 0.0
    delta = max(-1.5 * float(xhat.min(initial=0.0)), 0.01 * (1.0 + xnorm))
    x = xhat + delta
    idx = lp.bounded
    x[idx] = np.clip(x[idx], 0.01 * lp.upper[idx], 0.99 * lp.upper[idx])
    return x


def choose_start(lp: StandardLP) -> np.ndarray:
    x1 = starting_point_x1(lp)
    x2 = starting_point_x2(lp)
    if x2.min() > x1.min() or x1.min() < 1.0:
        return x2
    return x1


def recover_duals(lp: StandardLP, x, p: GaugeParams, F: linalg.CholeskyFactor):
    """Expected dual estimates (y, w, s) at the point x."""
    hinv = 1.0 / scaling_diagonals(x, p).h
    y = linalg.solve(F, lp.A @ (hinv * lp.c))
    reduced = lp.c - lp.A.T @ y
    w = np.zeros(lp.n)
    idx = lp.bounded
    w[idx] = -(x[idx] / lp.upper[idx]) * reduced[idx]
    s = reduced + w
    return y, w, s


def relative_gap(lp: StandardLP, x, y, w) -> float:
    """Expected relative duality gap (<c,x> - <b,y> + <u_I, w_I>) / (|<c,x>| + 1)."""
    cx = float(lp.c @ x)
    idx = lp.bounded
    gap = cx - float(lp.b @ y) + float(lp.upper[idx] @ w[idx])
    return gap / (abs(cx) + 1.0)


def _record(state: IterateState, lp: StandardLP) -> TraceRecord:
    return TraceRecord(
        iteration=state.iteration,
        objective=float(lp.c @ state.x),
        rf=state.rf,
        rgap=state.rgap,
        step_feas=state.step_feas,
        step_desc=state.step_desc,
        min_x=float(state.x.min()) if lp.n else 0.0,
        clamps=state.clamps,
        regularization=state.rho,
    )


def iterate_once(state: IterateState, lp: StandardLP, cfg: SolverConfig) -> IterateState:
    """One combined feasibility + descent pass of the main loop."""
    p = GaugeParams(r=cfg.r, upper=lp.upper)
    x = state.x
    sd = scaling_diagonals(x, p)
    F = linalg.factor(linalg.assemble_normal(lp.A, 1.0 / sd.h))

    dx = feasibility_direction(lp, x, p, F)
    d, y, s_reduced = descent_direction(lp, x, p, F)
    if state.rgap < cfg.reproject_gap_threshold or state.iteration > cfg.reproject_iteration_threshold:
        d = reproject(d, lp, F, p, x)

    # duals at the pre-move point, from the same factorization
    w = np.zeros(lp.n)
    idx = lp.bounded
    w[idx] = -(x[idx] / lp.upper[idx]) * s_reduced[idx]
    s = s_reduced + w

    infeasible = state.rf > cfg.epsilon

    t_feas = (cfg.step_aggressive if infeasible else cfg.step_conservative) * max_step(
        x, lp.upper, dx, cap=1.0
    )
    x = x + t_feas * dx

    tmax = max_step(x, lp.upper, d, cap=None)
    if np.isinf(tmax) and float(lp.c @ d) < 0:
        if not infeasible:
            raise UnboundedDirection("descent ray is unconstrained and strictly decreasing")
        t_desc = 0.0  # cannot certify unboundedness at an infeasible point; skip the move
    else:
        t_desc = (cfg.step_conservative if infeasible else cfg.step_aggressive) * (
            tmax if np.isfinite(tmax) else 0.0
        )
    x = x + t_desc * d

    return IterateState(
        x=x,
        y=y,
        w=w,
        s=s,
        rf=primal_infeasibility(lp, x),
        rgap=relative_gap(lp, x, y, w),
        iteration=state.iteration + 1,
        clamps=sd.clamp_events,
        rho=F.rho,
        step_feas=t_feas,
        step_desc=t_desc,
    )


def _converged(state: IterateState, lp: StandardLP, cfg: SolverConfig) -> bool:
    cnorm = np.linalg.norm(lp.c, np.inf) if lp.n else 0.0
    safeguard = -cfg.dual_safeguard * (1.0 + cnorm)
    # |rgap|: a strongly negative gap means the dual estimate is infeasible
    # and the point may be far from optimal even though rf is tiny
    return (
        state.rf <= cfg.epsilon
        and abs(state.rgap) <= cfg.epsilon
        and float(state.s.min(initial=0.0)) >= safeguard
    )


def solve(lp: StandardLP, cfg: SolverConfig | None = None, offset: float = 0.0) -> SolveReport:
    """Run the full affine scaling iteration; never raises past this API."""
    cfg = cfg or SolverConfig()
    p = GaugeParams(r=cfg.r, upper=lp.upper)
    trace: list[TraceRecord] = []

    def report(state, status):
        return SolveReport(
            status=status,
            iterations=state.iteration,
            objective=float(lp.c @ state.x),
            objective_original=float(lp.c @ state.x) + offset,
            x=state.x,
            y=state.y,
            s=state.s,
            w=state.w,
            rf=state.rf,
            rgap=state.rgap,
            trace=trace,
        )

    state = None
    try:
        if cfg.start_policy == "x1":
            x0 = starting_point_x1(lp)
        elif cfg.start_policy == "x2":
            x0 = starting_point_x2(lp)
        else:
            x0 = choose_start(lp)

        F0 = linalg.factor(linalg.assemble_normal(lp.A, 1.0 / scaling_diagonals(x0, p).h))
        y0, w0, s0 = recover_duals(lp, x0, p, F0)
        state = IterateState(
            x=x0,
            y=y0,
            w=w0,
            s=s0,
            rf=primal_infeasibility(lp, x0),
            rgap=relative_gap(lp, x0, y0, w0),
            rho=F0.rho,
        )
        trace.append(_record(state, lp))

        while not _converged(state, lp, cfg):
            if state.iteration >= cfg.max_iterations:
                return report(state, Status.ITERATION_LIMIT)
            state = iterate_once(state, lp, cfg)
            trace.append(_record(state, lp))
        return report(state, Status.OPTIMAL)

    except UnboundedDirection:
        return report(state, Status.UNBOUNDED)
    except (linalg.FactorizationFailed, linalg.NonFiniteInput, NotInterior):
        if state is None:
            state = IterateState(
                x=np.full(lp.n, np.nan),
                y=np.full(lp.m, np.nan),
                w=np.full(lp.n, np.nan),
                s=np.full(lp.n, np.nan),
                rf=np.nan,
                rgap=np.nan,
            )
        return report(state, Status.NUMERICAL_FAILURE)
