"""
Feasibility - Çizelge/Yerleşim Tipleri ve Doğrulama
=====================================================
Kullanım:
    from feasibility import Schedule, validate_schedule, oracle_validate_schedule
"""

from feasibility.collisions import generic_rects_overlap, jobs_collide, rects_collide
from feasibility.models import (
    Packing,
    Placement,
    Rectangle,
    Schedule,
    ValidationReport,
    Violation,
    ViolationKind,
    rectangle_of,
    rectangles_of,
)
from feasibility.oracle import oracle_validate_schedule
from feasibility.validators import is_canonical, validate_packing, validate_schedule

__all__ = [
    "Schedule",
    "Packing",
    "Placement",
    "Rectangle",
    "ValidationReport",
    "Violation",
    "ViolationKind",
    "rectangle_of",
    "rectangles_of",
    "jobs_collide",
    "rects_collide",
    "generic_rects_overlap",
    "validate_schedule",
    "validate_packing",
    "is_canonical",
    "oracle_validate_schedule",
]
