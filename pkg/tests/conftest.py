import os
import sys

import numpy as np
import pytest
import scipy.sparse as sp

sys.path.insert(0, os.path.dirname(__file__))

from galp.model import StandardLP

DATA = os.path.join(os.path.dirname(__file__), "data")
NETLIB = os.path.join(DATA, "netlib")
FIXTURES = os.path.join(DATA, "fixtures")

NETLIB_PROBLEMS = ("afiro", "sc50a", "sc50b", "adlittle", "blend")

# Published optimal objectives for the mini-corpus.
NETLIB_OPTIMA = {
    "afiro": -464.75314286,
    "sc50a": -64.575077059,
    "sc50b": -70.0,
    "adlittle": 225494.96316,
    "blend": -30.812149846,
}


def netlib_path(name):
    return os.path.join(NETLIB, f"{name}.mps")


def random_lp(rng, m=3, n=6, bounded="some"):
    """Feasible random instance: b = A @ x_feas for an interior x_feas.

    bounded: "none", "some", or "all" columns get finite upper bounds; with
    "all" the feasible set is compact, so the LP is bounded for any c.
    """
    A = rng.uniform(-1.0, 1.0, size=(m, n))
    x_feas = rng.uniform(0.5, 1.5, size=n)
    b = A @ x_feas
    c = rng.uniform(-1.0, 1.0, size=n)
    upper = np.full(n, np.inf)
    if bounded == "all":
        mask = np.ones(n, dtype=bool)
    elif bounded == "some":
        mask = rng.random(n) < 0.5
    else:
        mask = np.zeros(n, dtype=bool)
    upper[mask] = x_feas[mask] + rng.uniform(0.5, 2.0, size=int(mask.sum()))
    lp = StandardLP(A=sp.csc_matrix(A), b=b, c=c, upper=upper)
    return lp, x_feas


def random_interior_point(rng, lp):
    """A strictly interior point of the box (not necessarily feasible)."""
    x = rng.uniform(0.1, 1.0, size=lp.n)
    idx = lp.bounded
    x[idx] = lp.upper[idx] * rng.uniform(0.1, 0.9, size=len(idx))
    return x


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
