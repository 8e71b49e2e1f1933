"""
Oracle - Bağımsız Zaman Çizelgesi Doğrulayıcısı
================================================
Çakışma formüllerine hiç güvenmeden, her işin hiperperiyottaki bütün
tekrarlarını açıp sıralar ve komşu aralıkların örtüşüp örtüşmediğine bakar.

Yavaştır (O(Σ Ĥ/T_i · log)), ama formüllerden bağımsız olduğu için
testlerde hakem olarak kullanılır.

Kullanım:
    from feasibility.oracle import oracle_validate_schedule

    assert oracle_validate_schedule(instance, schedule)
"""

from domain.errors import JobSetMismatchError
from domain.instance import Instance
from feasibility.models import Schedule


def oracle_validate_schedule(instance: Instance, schedule: Schedule) -> bool:
    """
    Çizelge gerçekten çakışmasız mı?

    Fırlatır:
        JobSetMismatchError: Çizelgedeki iş kümesi örnektekiyle aynı değilse

    Döndürür:
        True: Her s ∈ [0, T), hiçbir tekrar satır sınırını aşmıyor ve
              hiçbir iki tekrar örtüşmüyor. Boş örnek için True.
    """
    expected, got = set(instance.job_map), set(schedule.starts)
    if expected != got:
        raise JobSetMismatchError(
            f"Eksik işler: {sorted(expected - got)}, fazla kimlikler: {sorted(got - expected, key=str)}"
        )

    ps = instance.period_set
    w = ps.width
    horizon = ps.hyperperiod
    intervals: list[tuple[int, int]] = []

    for job in instance.jobs:
        s = schedule.starts[job.id]
        period = instance.period_of(job)
        c = job.processing_time
        if not 0 <= s < period:
            return False
        for start in range(s, horizon, period):
            end = start + c
            # Tekrar tek bir satırın içinde kalmalı
            if start // w != (end - 1) // w:
                return False
            intervals.append((start, end))

    intervals.sort()
    for (_, prev_end), (next_start, _) in zip(intervals, intervals[1:]):
        if next_start < prev_end:
            return False
    return True
