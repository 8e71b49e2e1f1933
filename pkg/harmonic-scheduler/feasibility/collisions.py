"""
Collisions - İkili Çakışma Testleri
====================================
İki iş (çizelge tarafı) ya da iki dikdörtgen (yerleşim tarafı) çakışıyor mu?

İş çakışması:
    p_i ≤ p_j olacak şekilde sıralanır. Çakışma ancak ve ancak
    - [u_i, u_i + c_i) ile [u_j, u_j + c_j) kesişiyor VE
    - v_j − v_i = κ·B_{p_i}, 0 ≤ κ < B_{p_j} / B_{p_i}
    (yani v_j ≡ v_i mod B_{p_i}).

Dikdörtgen çakışması (yükseklikler birbirini böler, y yüksekliğin katı):
    h_j ≤ h_i olacak şekilde sıralanır. Çakışma ancak ve ancak
    - x aralıkları kesişiyor VE
    - y_i ≤ y_j < y_i + h_i

Kullanım:
    from feasibility.collisions import jobs_collide, rects_collide
"""

from domain.errors import InvalidPlacementError
from domain.instance import Job
from domain.periods import HarmonicPeriodSet
from feasibility.models import Placement, Rectangle


def _intervals_overlap(a_start: int, a_len: int, b_start: int, b_len: int) -> bool:
    return a_start < b_start + b_len and b_start < a_start + a_len


def _check_start(job: Job, start: int, period_set: HarmonicPeriodSet) -> tuple[int, int]:
    period = period_set.periods[job.period_index]
    w = period_set.width
    if not 0 <= start < period:
        raise InvalidPlacementError(f"J{job.id}: s={start}, [0, {period}) aralığında değil")
    u, v = start % w, start // w
    if u + job.processing_time > w:
        raise InvalidPlacementError(
            f"J{job.id}: u={u} + c={job.processing_time} > w={w} (satır taşması)"
        )
    return u, v


def jobs_collide(
    job_i: Job,
    start_i: int,
    job_j: Job,
    start_j: int,
    period_set: HarmonicPeriodSet,
) -> bool:
    """
    İki işin hiperperiyot boyunca herhangi bir tekrarı çakışıyor mu?

    Fırlatır:
        InvalidPlacementError: s ∉ [0, T) veya u + c > w

    Örnek (w=2, periyotlar [2, 4]):
        A: c=1, T=2, s=0 ve B: c=1, T=4, s=2   → True (t=2'de ikisi de çalışır)
    """
    u_i, v_i = _check_start(job_i, start_i, period_set)
    u_j, v_j = _check_start(job_j, start_j, period_set)

    if job_i.period_index > job_j.period_index:
        job_i, job_j = job_j, job_i
        u_i, v_i, u_j, v_j = u_j, v_j, u_i, v_i

    if not _intervals_overlap(u_i, job_i.processing_time, u_j, job_j.processing_time):
        return False

    # v_i < B_{p_i} ve v_j < B_{p_j} olduğundan κ aralığı kendiliğinden sağlanır
    step = period_set.cumulative[job_i.period_index]
    return (v_j - v_i) % step == 0


def generic_rects_overlap(a: Rectangle, pa: Placement, b: Rectangle, pb: Placement) -> bool:
    """Düz geometrik kesişim (yükseklik varsayımı yok)."""
    return _intervals_overlap(pa.x, a.width, pb.x, b.width) and _intervals_overlap(
        pa.y, a.height, pb.y, b.height
    )


def rects_collide(a: Rectangle, pa: Placement, b: Rectangle, pb: Placement) -> bool:
    """
    Yüksekliği bölünebilir iki dikdörtgen çakışıyor mu?

    Fırlatır:
        InvalidPlacementError: y kendi yüksekliğinin katı değilse veya
        yükseklikler birbirini bölmüyorsa
    """
    for rect, place in ((a, pa), (b, pb)):
        if place.y % rect.height != 0:
            raise InvalidPlacementError(
                f"{rect.id}: y={place.y}, yükseklik {rect.height} katı değil"
            )
    if b.height > a.height:
        a, pa, b, pb = b, pb, a, pa
    if a.height % b.height != 0:
        raise InvalidPlacementError(f"Yükseklikler bölünebilir değil: {a.height}, {b.height}")

    if not _intervals_overlap(pa.x, a.width, pb.x, b.width):
        return False
    return pa.y <= pb.y < pa.y + a.height
