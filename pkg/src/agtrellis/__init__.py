"""Trellis state complexity of linear and algebraic-geometry codes."""

from __future__ import annotations

from agtrellis.codes import LinearCode, StateProfile, absolute_complexity_search, dual_code, state_profile
from agtrellis.field import Field, get_field
from agtrellis.gonality import GonalitySequence, gs_explicit, gs_hyperelliptic, gs_plane_curve, split_min_table
from agtrellis.hermitian import hermitian_code
from agtrellis.matrix import Matrix

__version__ = "0.1.0"

__all__ = [
    "Field", "GonalitySequence", "LinearCode", "Matrix", "StateProfile",
    "absolute_complexity_search", "dual_code", "get_field", "gs_explicit",
    "gs_hyperelliptic", "gs_plane_curve", "hermitian_code", "split_min_table",
    "state_profile",
]
