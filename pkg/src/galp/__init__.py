"""Affine scaling LP solver built on a differential-barrier penalty family."""

from .model import (
    InfeasibleBounds,
    StandardLP,
    VariableMap,
    map_back,
    objective,
    primal_infeasibility,
    to_standard_form,
)
from .mps import MpsError, RawMps, parse_mps, read_mps, write_mps
from .penalty import GaugeParams, ScalingDiagonals, scaling_diagonals, xi_r
from .solver import SolveReport, SolverConfig, Status, solve

__version__ = "0.1.0"

__all__ = [
    "GaugeParams",
    "InfeasibleBounds",
    "MpsError",
    "RawMps",
    "ScalingDiagonals",
    "SolveReport",
    "SolverConfig",
    "StandardLP",
    "Status",
    "VariableMap",
    "map_back",
    "objective",
    "parse_mps",
    "primal_infeasibility",
    "read_mps",
    "scaling_diagonals",
    "solve",
    "to_standard_form",
    "write_mps",
    "xi_r",
]
