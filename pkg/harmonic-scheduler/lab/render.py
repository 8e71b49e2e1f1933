"""
Render - Yerleşim Çizimi (SVG)
===============================
w × H kutusunu ve içindeki dikdörtgenleri SVG 1.1 olarak çizer.

- Her yerleşim için bir `rect`; renk periyot indeksine göre
- y ekseni yukarı doğru: satır 0 en altta
- Küçük kutularda w × H birim ızgarası
- İsteğe bağlı: alt kutu sınırları (contours) ve karışık tabanlı satır etiketleri

Çıktı deterministiktir: aynı girdi aynı baytları üretir.

Kullanım:
    from lab.render import render_packing

    svg_text = render_packing(instance, packing, path="packing.svg")
"""

import os
import sys
from pathlib import Path
from typing import Optional

import svgwrite

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from domain.errors import InvalidPackingError
from domain.instance import Instance
from domain.mixed_radix import decompose
from feasibility.models import Packing, rectangles_of
from feasibility.validators import validate_packing
from shared.telemetry.logger import get_logger

logger = get_logger("lab.render")

PALETTE = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#ff9da7")
MARGIN = 10
LABEL_WIDTH = 90
MAX_GRID_CELLS = 10_000
MAX_LABEL_ROWS = 64


def _cell_size(w: int, h: int) -> tuple[int, int]:
    return max(1, min(40, 800 // w)), max(1, min(40, 600 // h))


def render_packing(
    instance: Instance,
    packing: Packing,
    path: Optional[str | Path] = None,
    partial: bool = False,
    contours: bool = True,
    row_labels: bool = True,
) -> str:
    """
    Yerleşimi SVG olarak çiz.

    Parametreler:
        path: Verilirse dosyaya da yazılır
        partial: True ise doğrulama yapılmaz (yarım kalmış yerleşimler için)
        contours: Alt kutu sınırlarını çiz
        row_labels: Satırları karışık tabanlı basamaklarıyla etiketle

    Fırlatır:
        InvalidPackingError: partial=False ve yerleşim geçersizse

    Döndürür:
        SVG metni
    """
    ps = instance.period_set
    w, height = ps.width, ps.bin_height
    if not partial:
        report = validate_packing(instance, packing)
        if not report.ok:
            raise InvalidPackingError(report.summary())

    cw, ch = _cell_size(w, height)
    show_labels = row_labels and height <= MAX_LABEL_ROWS
    left = MARGIN + (LABEL_WIDTH if show_labels else 0)
    width_px = left + w * cw + MARGIN
    height_px = 2 * MARGIN + height * ch

    def to_px(x: int, y: int, h: int) -> tuple[int, int]:
        return left + x * cw, MARGIN + (height - y - h) * ch

    dwg = svgwrite.Drawing(str(path) if path else "packing.svg", size=(width_px, height_px),
                           profile="full", debug=False)
    dwg.add(dwg.rect(insert=(left, MARGIN), size=(w * cw, height * ch), fill="white", stroke="black", stroke_width=1))

    if w * height <= MAX_GRID_CELLS:
        grid = dwg.g(stroke="#dddddd", stroke_width=0.5)
        for x in range(1, w):
            grid.add(dwg.line(start=(left + x * cw, MARGIN), end=(left + x * cw, MARGIN + height * ch)))
        for y in range(1, height):
            grid.add(dwg.line(start=(left, MARGIN + y * ch), end=(left + w * cw, MARGIN + y * ch)))
        dwg.add(grid)

    rects = rectangles_of(instance)
    shapes = dwg.g(stroke="black", stroke_width=1)
    for rect_id, place in sorted(packing.placements.items(), key=lambda kv: str(kv[0])):
        rect = rects.get(rect_id)
        if rect is None:
            continue
        px, py = to_px(place.x, place.y, rect.height)
        shapes.add(dwg.rect(
            insert=(px, py),
            size=(rect.width * cw, rect.height * ch),
            fill=PALETTE[rect.level % len(PALETTE)],
            id=f"rect-{rect_id}",
        ))
    dwg.add(shapes)

    if contours:
        # Derin seviyeler ince çizgiyle; çok sık sınırlar çizilmez
        lines = dwg.g(stroke="#333333", stroke_dasharray="4,2")
        for k in range(1, ps.r):
            step = ps.heights[k]
            if step * ch < 4:
                continue
            stroke_width = max(0.5, 2.0 - 0.5 * k)
            for q in range(1, ps.cumulative[k]):
                _, py = to_px(0, q * step, 0)
                lines.add(dwg.line(start=(left, py), end=(left + w * cw, py), stroke_width=stroke_width))
        dwg.add(lines)

    if show_labels and ps.r > 1:
        base = ps.base_vector
        labels = dwg.g(font_size=min(12, max(6, ch - 2)), font_family="monospace")
        for y in range(height):
            _, py = to_px(0, y, 1)
            labels.add(dwg.text(str(decompose(y, base)),
                                insert=(MARGIN, py + ch - 2)))
        dwg.add(labels)

    svg_text = dwg.tostring()
    if path:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(svg_text, encoding="utf-8")
        logger.info(f"🖼️ {path}: {len(packing)} dikdörtgen çizildi")
    return svg_text
