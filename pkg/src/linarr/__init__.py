"""Exact analysis of line arrangements in the real projective plane."""

from .arrangement import (
    Arrangement,
    MultiplicityProfile,
    ProjectiveLine,
    SingularPoint,
    intersect,
    per_line_profile,
    profile,
    random_arrangement,
    singular_points,
    tau_combinatorial,
)
from .classify import ClassificationReport, classify
from .syzygy import SyzygyAnalysis, analyze

__all__ = [
    "Arrangement",
    "ClassificationReport",
    "MultiplicityProfile",
    "ProjectiveLine",
    "SingularPoint",
    "SyzygyAnalysis",
    "analyze",
    "classify",
    "intersect",
    "per_line_profile",
    "profile",
    "random_arrangement",
    "singular_points",
    "tau_combinatorial",
]
