"""
Transform - Çizelge ↔ Yerleşim ve Alt Kutu Ağacı
==================================================
Kullanım:
    from transform import schedule_to_packing, packing_to_schedule, canonicalize
    from transform import SubBinTree, tree_to_packing
"""

from transform.bijection import packing_to_schedule, schedule_to_packing
from transform.canonical import canonicalize
from transform.subbin_tree import (
    PlacedRectangle,
    SubBin,
    SubBinSlot,
    SubBinTree,
    tree_to_packing,
)

__all__ = [
    "schedule_to_packing",
    "packing_to_schedule",
    "canonicalize",
    "SubBinTree",
    "SubBin",
    "SubBinSlot",
    "PlacedRectangle",
    "tree_to_packing",
]
