"""
Validators - Çizelge ve Yerleşim Doğrulayıcıları
=================================================
İkili çakışma testlerini bütün çiftlere uygulayarak rapor üretir.

- validate_schedule: sınırlar (s ∈ [0, T), u + c ≤ w) + her çift için iş çakışması
- validate_packing: kutu sınırları + bölünebilirlik + her çift için dikdörtgen çakışması
- is_canonical: daha yüksek bir dikdörtgenin y aralığı içinde kalan daha kısa
  dikdörtgen, onun sağında başlar mı?

Kullanım:
    from feasibility.validators import validate_schedule

    report = validate_schedule(instance, schedule)
    if not report.ok:
        print(report.summary())
"""

from itertools import combinations

from domain.errors import InvalidPackingError, JobSetMismatchError
from domain.instance import Instance
from feasibility.collisions import jobs_collide, rects_collide
from feasibility.models import (
    Packing,
    Schedule,
    ValidationReport,
    ViolationKind,
    rectangles_of,
)


def _ensure_same_jobs(instance: Instance, ids) -> None:
    expected = set(instance.job_map)
    got = set(ids)
    if expected != got:
        missing = sorted(expected - got)
        extra = sorted(got - expected, key=str)
        raise JobSetMismatchError(f"Eksik işler: {missing}, fazla kimlikler: {extra}")


def validate_schedule(instance: Instance, schedule: Schedule) -> ValidationReport:
    """
    Çizelgeyi doğrula.

    Sınır dışı işler rapora yazılır ve çift testine alınmaz.

    Fırlatır:
        JobSetMismatchError: Çizelgedeki iş kümesi örnektekiyle aynı değilse

    Döndürür:
        ValidationReport: ok == True ancak ve ancak hiç ihlal yoksa
    """
    _ensure_same_jobs(instance, schedule.starts)
    report = ValidationReport()
    ps = instance.period_set
    w = ps.width

    in_bounds = []
    for job in instance.jobs:
        s = schedule.starts[job.id]
        period = instance.period_of(job)
        if not 0 <= s < period:
            report.add(
                ViolationKind.OUT_OF_RANGE,
                f"J{job.id}: s={s}, [0, {period}) aralığında değil",
                (job.id,),
            )
            continue
        if s % w + job.processing_time > w:
            report.add(
                ViolationKind.ROW_OVERRUN,
                f"J{job.id}: u={s % w} + c={job.processing_time} > w={w}",
                (job.id,),
            )
            continue
        in_bounds.append(job)

    for a, b in combinations(in_bounds, 2):
        report.checked_pairs += 1
        if jobs_collide(a, schedule.starts[a.id], b, schedule.starts[b.id], ps):
            report.add(
                ViolationKind.COLLISION,
                f"J{a.id} ile J{b.id} çakışıyor",
                (a.id, b.id),
                {"starts": (schedule.starts[a.id], schedule.starts[b.id])},
            )
    return report


def validate_packing(instance: Instance, packing: Packing) -> ValidationReport:
    """
    Yerleşimi doğrula: kutu sınırları, y'nin yüksekliğe bölünebilirliği, çakışmalar.

    Fırlatır:
        JobSetMismatchError: Yerleşimdeki kimlikler örnektekilerle aynı değilse
    """
    _ensure_same_jobs(instance, packing.placements)
    report = ValidationReport()
    ps = instance.period_set
    rects = rectangles_of(instance)

    in_bounds = []
    for job_id, rect in rects.items():
        place = packing.placements[job_id]
        if place.x < 0 or place.x + rect.width > ps.width or place.y < 0 or place.y + rect.height > ps.bin_height:
            report.add(
                ViolationKind.OUT_OF_RANGE,
                f"R{job_id}: ({place.x}, {place.y}) kutu dışında",
                (job_id,),
            )
            continue
        if place.y % rect.height != 0:
            report.add(
                ViolationKind.NOT_DIVISIBLE,
                f"R{job_id}: y={place.y}, yükseklik {rect.height} katı değil",
                (job_id,),
            )
            continue
        in_bounds.append(job_id)

    for a, b in combinations(in_bounds, 2):
        report.checked_pairs += 1
        if rects_collide(rects[a], packing.placements[a], rects[b], packing.placements[b]):
            report.add(ViolationKind.COLLISION, f"R{a} ile R{b} çakışıyor", (a, b))
    return report


def is_canonical(instance: Instance, packing: Packing) -> bool:
    """
    Yerleşim kanonik mi?

    Kural: h_i > h_j ve R_j'nin y aralığı R_i'ninkinin içindeyse x_i + ℓ_i ≤ x_j.

    Fırlatır:
        InvalidPackingError: Yerleşim geçerli değilse
    """
    report = validate_packing(instance, packing)
    if not report.ok:
        raise InvalidPackingError(report.summary())

    rects = rectangles_of(instance)
    pl = packing.placements
    for i, j in combinations(rects, 2):
        for hi, lo in ((i, j), (j, i)):
            ri, rj = rects[hi], rects[lo]
            if ri.height <= rj.height:
                continue
            pi, pj = pl[hi], pl[lo]
            if pj.y >= pi.y and pj.y + rj.height <= pi.y + ri.height and pi.x + ri.width > pj.x:
                return False
    return True
