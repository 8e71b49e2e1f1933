"""
Bijection - Çizelge ↔ Yerleşim Dönüşümü
========================================
Geçerli çizelgeler ile yüksekliği bölünebilir geçerli yerleşimler arasında
birebir eşleme.

Çizelge → Yerleşim:
    x = u
    y = H_p · flip(v, p, b)

Yerleşim → Çizelge:
    u = x
    v = flip(y / H_p, p, bflip(b, p))
    s = u + v·w

Neden flip?
-----------
Periyodu T_p olan bir iş, çizelgede v, v + B_p, v + 2B_p, … satırlarını
kullanır (birbirinden uzak satırlar). v'nin en anlamsız p basamağını
ters çevirince bu dağınık satırlar yerleşimde bitişik H_p satıra dönüşür.

Kullanım:
    from transform.bijection import schedule_to_packing, packing_to_schedule

    packing = schedule_to_packing(instance, schedule)
    assert packing_to_schedule(instance, packing) == schedule
"""

from domain.errors import InvalidPackingError, InvalidScheduleError
from domain.instance import Instance
from domain.mixed_radix import bflip, flip
from feasibility.models import Packing, Placement, Schedule
from feasibility.validators import validate_packing, validate_schedule


def schedule_to_packing(instance: Instance, schedule: Schedule, validate: bool = True) -> Packing:
    """
    Çizelgeyi yerleşime çevir.

    Fırlatır:
        InvalidScheduleError: validate=True ve çizelge geçersizse
    """
    if validate:
        report = validate_schedule(instance, schedule)
        if not report.ok:
            raise InvalidScheduleError(report.summary())

    ps = instance.period_set
    b = ps.base_vector
    placements = {}
    for job in instance.jobs:
        p = job.period_index
        u, v = schedule.split(job.id, ps.width)
        placements[job.id] = Placement(x=u, y=ps.heights[p] * flip(v, p, b))
    return Packing(placements)


def packing_to_schedule(instance: Instance, packing: Packing, validate: bool = True) -> Schedule:
    """
    Yerleşimi çizelgeye çevir.

    Fırlatır:
        InvalidPackingError: validate=True ve yerleşim geçersizse
    """
    if validate:
        report = validate_packing(instance, packing)
        if not report.ok:
            raise InvalidPackingError(report.summary())

    ps = instance.period_set
    b = ps.base_vector
    starts = {}
    for job in instance.jobs:
        p = job.period_index
        place = packing.placements[job.id]
        v = flip(place.y // ps.heights[p], p, bflip(b, p))
        starts[job.id] = place.x + v * ps.width
    return Schedule(starts)
