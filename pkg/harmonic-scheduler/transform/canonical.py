"""
Canonical - Kanonik Forma Getirme
==================================
Geçerli bir yerleşimi kanonik hale getirir: her alt kutuda kendi
yüksekliğindeki dikdörtgenler solda bitişik durur, daha kısa olanlar
onların sağında kalır.

Her geçerli yerleşim, dikdörtgenleri y aralığını koruyarak yalnızca
yatayda kaydırıp kanonik hale getirilebilir. Bu yüzden aramayı kanonik
yerleşimlerle sınırlamak hiçbir çözümü kaybettirmez.

Alt kutu içindeki sıra: genişlik azalan, kimlik artan. Bu yüzden
canonicalize(canonicalize(P)) == canonicalize(P).

Kullanım:
    from transform.canonical import canonicalize

    canon = canonicalize(instance, packing)
    assert is_canonical(instance, canon)
"""

import os
import sys

# Depo kökünü path'e ekle (shared paketi için)
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from domain.errors import InvalidPackingError
from domain.instance import Instance
from feasibility.models import Packing, rectangles_of
from feasibility.validators import validate_packing
from shared.telemetry.logger import get_logger
from transform.subbin_tree import SubBinTree, tree_to_packing

logger = get_logger("transform.canonical")


def canonicalize(instance: Instance, packing: Packing) -> Packing:
    """
    Yerleşimi kanonik forma getir; y koordinatları değişmez.

    Fırlatır:
        InvalidPackingError: Girdi yerleşimi geçersizse
    """
    report = validate_packing(instance, packing)
    if not report.ok:
        raise InvalidPackingError(report.summary())

    heights = instance.period_set.heights
    rects = sorted(
        rectangles_of(instance).values(),
        key=lambda r: (-r.height, -r.width, r.id),
    )
    tree = SubBinTree(instance.period_set)
    for rect in rects:
        q = packing.placements[rect.id].y // heights[rect.level]
        tree.insert(tree.slot(rect.level, q), rect.width, rect.id)

    logger.debug(f"Kanonik form: {len(rects)} dikdörtgen, en dolu satır {tree.max_row_load}")
    return tree_to_packing(tree)
