"""
Domain - Temel Tipler
======================
Harmonik periyot kümesi, işler, örnekler ve karışık tabanlı aritmetik.

Kullanım:
    from domain import build_period_set, make_instance, flip
"""

from domain.instance import Instance, Job, make_instance
from domain.mixed_radix import MixedRadixDigits, bflip, compose, decompose, flip
from domain.periods import HarmonicPeriodSet, build_period_set, periods_from_base

__all__ = [
    "HarmonicPeriodSet",
    "build_period_set",
    "periods_from_base",
    "Job",
    "Instance",
    "make_instance",
    "MixedRadixDigits",
    "decompose",
    "compose",
    "bflip",
    "flip",
]
