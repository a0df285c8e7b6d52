"""Exact Riemann solver for 1-D shallow water over porosity and bed-elevation steps."""

from .classify import Classification, DamBreakCase, classify_dambreak, find_h_c
from .constructor import (
    CompositeCurve,
    NoSolutionReport,
    build_composite_curve,
    solve,
    solve_constant_terrain,
    solve_type1,
    solve_type2,
    solve_type3,
)
from .core import (
    DEFAULT_G,
    ElementaryWave,
    HydraulicState,
    RiemannProblem,
    StructureType,
    TerrainSide,
    WaveKind,
    WaveStructure,
)
from .errors import RiemannError
from .sampler import ProfileRequest, profile, sample_at
from .terrain_jump import solve_w3, verify_generalized_rh

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "CompositeCurve",
    "DEFAULT_G",
    "DamBreakCase",
    "ElementaryWave",
    "HydraulicState",
    "NoSolutionReport",
    "ProfileRequest",
    "RiemannError",
    "RiemannProblem",
    "StructureType",
    "TerrainSide",
    "WaveKind",
    "WaveStructure",
    "build_composite_curve",
    "classify_dambreak",
    "find_h_c",
    "profile",
    "sample_at",
    "solve",
    "solve_constant_terrain",
    "solve_type1",
    "solve_type2",
    "solve_type3",
    "solve_w3",
    "verify_generalized_rh",
]
