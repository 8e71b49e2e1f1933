"""
Model Export - Kutu Modeli Metni
=================================
Yüksekliği bölünebilir kutu modelini harici bir çözücüye (CP/ILP) verilecek,
insan tarafından okunabilir, deterministik bir metne döker.

Biçim:
    HD2D w=<w> H=<H> heights=<H_0,…,H_{r-1}>
    pack <k> height=<H_k> groups=<B_k> items=<kimlikler>     (her yükseklik için)
    rect <id> <genişlik> <yükseklik>                          (her dikdörtgen için)
    row <i>: sum loads <= <w>                                 (i = 0 … H−1)

`pack` bloğu, yüksekliği H_k olan dikdörtgenlerin B_k gruba (alt kutuya)
atanmasını; `row` satırı Σ_k L^k_{⌊i/H_k⌋} ≤ w kısıtını temsil eder.

Kullanım:
    from exact.model_export import export_bin_model

    text = export_bin_model(instance)
    Path("model.txt").write_text(text)
"""

from domain.instance import Instance
from feasibility.models import rectangles_of


def export_bin_model(instance: Instance) -> str:
    """Örneğin kutu modelini metin olarak üret (sondaki yeni satır dahil)."""
    ps = instance.period_set
    rects = rectangles_of(instance)
    lines = [
        f"HD2D w={ps.width} H={ps.bin_height} heights={','.join(map(str, ps.heights))}"
    ]
    for k in range(ps.r):
        ids = sorted(rid for rid, rect in rects.items() if rect.level == k)
        items = ",".join(map(str, ids)) if ids else "-"
        lines.append(f"pack {k} height={ps.heights[k]} groups={ps.cumulative[k]} items={items}")
    for rid in sorted(rects):
        rect = rects[rid]
        lines.append(f"rect {rid} {rect.width} {rect.height}")
    for i in range(ps.bin_height):
        lines.append(f"row {i}: sum loads <= {ps.width}")
    return "\n".join(lines) + "\n"
