import numpy as np
import pytest
import scipy.sparse as sp
from numpy.testing import assert_allclose

from galp import linalg
from galp.model import StandardLP, primal_infeasibility
from galp.penalty import GaugeParams, scaling_diagonals
from galp.solver import (
    IterateState,
    SolverConfig,
    Status,
    choose_start,
    iterate_once,
    recover_duals,
    relative_gap,
    solve,
    starting_point_x1,
    starting_point_x2,
)

from conftest import random_lp


def make_lp(A, b, c, upper=None):
    A = np.atleast_2d(np.asarray(A, dtype=float))
    n = A.shape[1]
    if upper is None:
        upper = np.full(n, np.inf)
    return StandardLP(
        A=sp.csc_matrix(A),
        b=np.asarray(b, dtype=float),
        c=np.asarray(c, dtype=float),
        upper=np.asarray(upper, dtype=float),
    )


def factor_at(lp, x, r):
    p = GaugeParams(r=r, upper=lp.upper)
    F = linalg.factor(linalg.assemble_normal(lp.A, 1.0 / scaling_diagonals(x, p).h))
    return p, F


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(r=1.0)
    with pytest.raises(ValueError):
        SolverConfig(step_aggressive=0.5, step_conservative=0.65)
    with pytest.raises(ValueError):
        SolverConfig(epsilon=0.0)
    with pytest.raises(ValueError):
        SolverConfig(start_policy="warm")


def test_starting_point_x1_values():
    # columns 1,2 have norm 2 (base n/2 = 2); columns 3,4 are zero (base n = 4)
    lp = make_lp(
        [[2.0, 0.0, 0.0, 0.0], [0.0, 2.0, 0.0, 0.0]],
        [1.0, 1.0],
        [-1.0, 1.0, 1.0, -1.0],
        upper=[np.inf, np.inf, 1.0, 40.0],
    )
    assert_allclose(starting_point_x1(lp), [2.0, 2.0, 0.1, 4.0])


def test_starting_point_x2_values():
    lp = make_lp([[1.0, 1.0]], [1.0], [0.0, 0.0])
    assert_allclose(starting_point_x2(lp), [0.515, 0.515])

    lp = make_lp([[1.0, 1.0]], [0.0], [0.0, 0.0])
    assert_allclose(starting_point_x2(lp), [0.01, 0.01])

    # min-norm solution (1, -1): the shift is driven by the negative entry
    lp = make_lp([[1.0, -1.0]], [2.0], [0.0, 0.0])
    assert_allclose(starting_point_x2(lp), [2.5, 0.5])


def test_starting_point_x2_respects_bounds():
    lp = make_lp([[1.0, 1.0]], [100.0], [0.0, 0.0], upper=[2.0, np.inf])
    x = starting_point_x2(lp)
    assert 0.0 < x[0] <= 0.99 * 2.0


def test_choose_start_branches():
    # min x1 = 2 >= 1 and min x2 = 0.515 < 2: keep x1
    lp = make_lp([[1.0, 1.0]], [1.0], [-1.0, -1.0])
    assert_allclose(choose_start(lp), starting_point_x1(lp))
    # min x2 ~ 5 beats min x1 = 2: switch to x2
    lp = make_lp([[1.0, 1.0]], [10.0], [-1.0, -1.0])
    assert_allclose(choose_start(lp), starting_point_x2(lp))
    # min x1 = 0.1 < 1 forces x2 regardless
    lp = make_lp([[1.0, 1.0]], [1.0], [1.0, 1.0], upper=[1.0, 1.0])
    assert starting_point_x1(lp).min() < 1.0
    assert_allclose(choose_start(lp), starting_point_x2(lp))


def test_recover_duals_unbounded_case():
    lp = make_lp([[1.0, 1.0]], [1.0], [1.0, 0.0])
    x = np.array([0.5, 0.5])
    p, F = factor_at(lp, x, 0.0)
    y, w, s = recover_duals(lp, x, p, F)
    assert_allclose(y, [0.5])
    assert_allclose(w, [0.0, 0.0])
    assert_allclose(s, [0.5, -0.5])


def test_recover_duals_bounded_case():
    lp = make_lp([[1.0, 1.0]], [1.0], [1.0, 0.0], upper=[1.0, np.inf])
    x = np.array([0.5, 0.5])
    p, F = factor_at(lp, x, 0.0)
    y, w, s = recover_duals(lp, x, p, F)
    assert_allclose(y, [1.0 / 3.0])
    assert_allclose(w, [-1.0 / 3.0, 0.0])
    assert_allclose(s, [1.0 / 3.0, -1.0 / 3.0])


def test_relative_gap_identity(rng):
    # at a feasible x the gap equals <s, x> + <w_I, u_I - x_I>
    for _ in range(20):
        lp, x = random_lp(rng, m=3, n=6, bounded="some")
        p, F = factor_at(lp, x, 0.3)
        y, w, s = recover_duals(lp, x, p, F)
        idx = lp.bounded
        direct = float(s @ x) + float(w[idx] @ (lp.upper[idx] - x[idx]))
        expected = direct / (abs(float(lp.c @ x)) + 1.0)
        assert relative_gap(lp, x, y, w) == pytest.approx(expected, rel=1e-10, abs=1e-12)


def _fresh_state(lp, x, r=0.0):
    p, F = factor_at(lp, x, r)
    y, w, s = recover_duals(lp, x, p, F)
    return IterateState(
        x=x, y=y, w=w, s=s,
        rf=primal_infeasibility(lp, x),
        rgap=relative_gap(lp, x, y, w),
    )


def test_iterate_once_descent_step_hand_case():
    lp = make_lp([[1.0, 1.0]], [1.0], [1.0, 0.0])
    cfg = SolverConfig(r=0.0)
    state = _fresh_state(lp, np.array([0.5, 0.5]))
    assert state.rf == 0.0
    out = iterate_once(state, lp, cfg)
    # feasible point: residual move is a no-op, descent uses the 0.95 factor
    # on d = (-0.125, 0.125) with wall at t = 4
    assert out.step_desc == pytest.approx(0.95 * 4.0)
    assert_allclose(out.x, [0.025, 0.975])
    assert out.iteration == 1


def test_iterate_once_feasibility_step_hand_case():
    lp = make_lp([[1.0, 1.0]], [1.0], [0.0, 0.0])
    cfg = SolverConfig(r=0.0)
    state = _fresh_state(lp, np.array([1.0, 1.0]))  # residual -1, Rf = 0.5
    out = iterate_once(state, lp, cfg)
    # infeasible: dx = (-0.5, -0.5), cap at 1 binds, factor 0.95
    assert out.step_feas == pytest.approx(0.95)
    assert out.rf == pytest.approx(0.05 * 0.5)
    assert out.rf < state.rf


def test_iterate_once_swaps_step_factors(rng):
    lp, x_feas = random_lp(rng, m=3, n=7)
    cfg = SolverConfig(r=0.2)
    # infeasible start: feasibility gets the aggressive factor
    state = _fresh_state(lp, np.full(lp.n, 2.0), r=cfg.r)
    assert state.rf > cfg.epsilon
    out = iterate_once(state, lp, cfg)
    tmax_feas = out.step_feas / cfg.step_aggressive
    assert 0.0 < tmax_feas <= 1.0 + 1e-12


def test_iterate_preserves_interiority(rng):
    lp, _ = random_lp(rng, m=3, n=7, bounded="all")
    cfg = SolverConfig(r=0.2)
    state = _fresh_state(lp, choose_start(lp), r=cfg.r)
    for _ in range(40):
        if state.rf <= cfg.epsilon and state.rgap <= cfg.epsilon:
            break
        state = iterate_once(state, lp, cfg)
        assert state.x.min() > 0.0
        assert np.all(state.x < lp.upper)


def test_residual_contracts_across_iterations(rng):
    lp, _ = random_lp(rng, m=4, n=9)
    cfg = SolverConfig(r=0.3)
    x0 = np.minimum(np.full(lp.n, 3.0), 0.9 * lp.upper)
    state = _fresh_state(lp, x0, r=cfg.r)
    prev = state.rf
    for _ in range(10):
        state = iterate_once(state, lp, cfg)
        if prev > cfg.epsilon:
            assert state.rf <= prev * 0.06  # (1 - 0.95) with slack
        prev = state.rf


def test_objective_monotone_once_feasible(rng):
    lp, _ = random_lp(rng, m=3, n=7, bounded="all")
    cfg = SolverConfig(r=0.2)
    report = solve(lp, cfg)
    assert report.status == Status.OPTIMAL
    objs = [t.objective for t in report.trace]
    rfs = [t.rf for t in report.trace]
    for k in range(1, len(objs)):
        if rfs[k - 1] <= cfg.epsilon:
            assert objs[k] <= objs[k - 1] + 1e-9 * (1.0 + abs(objs[k - 1]))


def test_solve_min_coordinate():
    # min x1 subject to x1 + x2 = 1: optimum at (0, 1)
    lp = make_lp([[1.0, 1.0]], [1.0], [1.0, 0.0])
    report = solve(lp, SolverConfig(r=0.0))
    assert report.status == Status.OPTIMAL
    assert report.objective == pytest.approx(0.0, abs=1e-7)
    assert_allclose(report.x, [0.0, 1.0], atol=1e-6)
    assert report.rf <= 1e-8
    assert report.rgap <= 1e-8


def test_solve_bounded_instance():
    # min -x1 - x2 with x1 + x2 + slack = 3, x1 <= 1, x2 <= 1
    lp = make_lp([[1.0, 1.0, 1.0]], [3.0], [-1.0, -1.0, 0.0], upper=[1.0, 1.0, np.inf])
    report = solve(lp, SolverConfig(r=0.2))
    assert report.status == Status.OPTIMAL
    assert report.objective == pytest.approx(-2.0, abs=1e-6)
    assert_allclose(report.x[:2], [1.0, 1.0], atol=1e-5)


def test_solve_reports_unbounded():
    # min -x1 subject to x1 - x2 = 0: the ray (t, t) decreases forever
    lp = make_lp([[1.0, -1.0]], [0.0], [-1.0, 0.0])
    report = solve(lp, SolverConfig(r=0.0))
    assert report.status == Status.UNBOUNDED


def test_solve_reports_numerical_failure():
    lp = make_lp([[0.0, 0.0]], [1.0], [1.0, 1.0])
    report = solve(lp)
    assert report.status == Status.NUMERICAL_FAILURE
    assert np.isnan(report.x).all()


def test_solve_iteration_limit():
    lp = make_lp([[1.0, 1.0]], [1.0], [1.0, 0.0])
    report = solve(lp, SolverConfig(r=0.0, max_iterations=2))
    assert report.status == Status.ITERATION_LIMIT
    assert report.iterations == 2


def test_solve_trace_schema_and_offset():
    lp = make_lp([[1.0, 1.0]], [1.0], [1.0, 0.0])
    report = solve(lp, SolverConfig(r=0.0), offset=5.0)
    assert report.objective_original == pytest.approx(report.objective + 5.0)
    assert len(report.trace) == report.iterations + 1
    for k, rec in enumerate(report.trace):
        assert rec.iteration == k
        assert np.isfinite(rec.objective)
        assert rec.rf >= 0.0
        assert rec.regularization in (0.0,) + tuple(linalg.REGULARIZATIONS)


def test_solve_is_deterministic(rng):
    lp, _ = random_lp(rng, m=3, n=7, bounded="some")
    a = solve(lp, SolverConfig(r=0.2))
    b = solve(lp, SolverConfig(r=0.2))
    assert a.iterations == b.iterations
    assert np.array_equal(a.x, b.x)
    assert [t.objective for t in a.trace] == [t.objective for t in b.trace]


def test_duals_lag_primal_by_one_move():
    lp = make_lp([[1.0, 1.0]], [1.0], [1.0, 0.0])
    cfg = SolverConfig(r=0.0)
    state = _fresh_state(lp, np.array([0.5, 0.5]))
    out = iterate_once(state, lp, cfg)
    # reported duals were computed at the pre-move point
    p, F = factor_at(lp, state.x, 0.0)
    y_pre, w_pre, s_pre = recover_duals(lp, state.x, p, F)
    assert_allclose(out.y, y_pre)
    assert_allclose(out.s, s_pre)


def test_start_policy_override():
    lp = make_lp([[1.0, 1.0]], [1.0], [-1.0, -1.0])
    r1 = solve(lp, SolverConfig(r=0.2, start_policy="x1", max_iterations=0))
    r2 = solve(lp, SolverConfig(r=0.2, start_policy="x2", max_iterations=0))
    assert_allclose(r1.x, starting_point_x1(lp))
    assert_allclose(r2.x, starting_point_x2(lp))
