"""
Brute Force - Kaba Kuvvet Başlangıç Zamanı Taraması
====================================================
Küçük örnekler için bağımsız hakem: her işin her geçerli başlangıç zamanını
(u + c ≤ w olan s ∈ [0, T)) dener, ikili çakışma testiyle budar.

Alt kutu ağacını hiç kullanmaz; bu yüzden kesin aramanın doğruluğunu
sınamak için uygundur.

Kullanım:
    from exact.brute_force import brute_force_enumerate

    outcome = brute_force_enumerate(instance, cap=10**6)
"""

import os
import sys
import time
from math import prod
from typing import Optional

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from domain.errors import InstanceTooLargeError
from domain.instance import Instance
from exact.search import ExactOutcome, ExactStatus
from feasibility.collisions import jobs_collide
from feasibility.models import Schedule
from shared.telemetry.logger import get_logger

logger = get_logger("exact.brute_force")


def brute_force_enumerate(instance: Instance, cap: Optional[int] = None) -> ExactOutcome:
    """
    Bütün başlangıç zamanı atamalarını tara.

    Parametreler:
        cap: Π T_{p_i} üst sınırı (varsayılan HSCHED_BRUTE_FORCE_CAP)

    Fırlatır:
        InstanceTooLargeError: Π T_{p_i} > cap
    """
    if cap is None:
        from config import get_settings
        cap = get_settings().brute_force_cap

    started = time.perf_counter()
    ps = instance.period_set
    space = prod(instance.period_of(j) for j in instance.jobs)
    if space > cap:
        raise InstanceTooLargeError(f"Arama uzayı {space} > sınır {cap}")

    w = ps.width
    jobs = instance.rate_monotonic_jobs()
    options = [
        [s for s in range(instance.period_of(job)) if s % w + job.processing_time <= w]
        for job in jobs
    ]
    starts: dict[int, int] = {}
    nodes = 0

    def assign(i: int) -> bool:
        nonlocal nodes
        if i == len(jobs):
            return True
        job = jobs[i]
        for s in options[i]:
            nodes += 1
            if any(jobs_collide(job, s, other, starts[other.id], ps) for other in jobs[:i]):
                continue
            starts[job.id] = s
            if assign(i + 1):
                return True
            del starts[job.id]
        return False

    found = assign(0)
    elapsed = time.perf_counter() - started
    logger.debug(f"Kaba kuvvet: {'bulundu' if found else 'yok'} ({nodes} düğüm)")
    return ExactOutcome(
        status=ExactStatus.FEASIBLE if found else ExactStatus.INFEASIBLE,
        schedule=Schedule(dict(starts)) if found else None,
        nodes=nodes,
        elapsed_s=elapsed,
        method="brute-force",
    )
