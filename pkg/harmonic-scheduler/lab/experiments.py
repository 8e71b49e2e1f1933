"""
Experiments - Deney Koşucuları
===============================
İki deney protokolü:

1. Başarı deneyi
   Her yöntem her örnekte bir kez çalışır; yöntem ve portföy başına kaç
   örneğin çözüldüğü sayılır. Portföy, üyelerinden biri çözdüyse başarılıdır.

2. Kullanım deneyi
   Yöntem örneği çözene kadar, her başarısızlıktan sonra en küçük U_i'li iş
   çıkarılır (eşitlikte en küçük c_i, sonra en büyük kimlik). Çözüldüğü
   andaki kullanım U_F kaydedilir. U alt sınırın (varsayılan 0.7) altına
   düşerse başarısızlık kaydedilir. Portföyün U_F'si üyelerinin en büyüğüdür.

Sonuçlar CSV olarak yazılır:
    instance,method,status,u_final_num,u_final_den,jobs_removed,elapsed_ms

Çalıştırmalar birbirinden bağımsızdır; workers > 1 ise (örnek, yöntem)
çiftleri süreç havuzunda koşar, kayıtlar girdi sırasıyla birleştirilir.

Kullanım:
    from lab.experiments import run_success_experiment, write_records

    table = run_success_experiment(instances, ["S-FF", "RG-FF-OPT"])
    print(table.counts)
    write_records("success.csv", table.records)
"""

import csv
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from domain.instance import Instance, Job
from exact.budget import SearchBudget
from heuristics.portfolio import PORTFOLIOS
from heuristics.registry import default_registry
from shared.telemetry.logger import get_logger

logger = get_logger("lab.experiments")

CSV_HEADER = ("instance", "method", "status", "u_final_num", "u_final_den", "jobs_removed", "elapsed_ms")


@dataclass(frozen=True)
class ExperimentRecord:
    """
    Bir (örnek, yöntem) çalıştırmasının sonucu.

    u_final yalnızca kullanım deneyinde dolar; başarısızlıkta o anki
    (alt sınırın altına düşmüş) kullanımdır.
    """
    instance: str
    method: str
    status: str
    u_final: Optional[Fraction] = None
    jobs_removed: int = 0
    elapsed_ms: int = 0

    @property
    def succeeded(self) -> bool:
        return self.status in ("solved", "feasible")


@dataclass
class SuccessTable:
    """Başarı deneyinin tablosu: kayıtlar ve yöntem/portföy başına çözülen sayısı."""
    records: list[ExperimentRecord] = field(default_factory=list)
    methods: tuple[str, ...] = ()
    counts: dict[str, int] = field(default_factory=dict)
    portfolio_counts: dict[str, int] = field(default_factory=dict)
    total: int = 0


@dataclass(frozen=True)
class SummaryRow:
    """Bir yöntemin veya portföyün özet satırı."""
    method: str
    solved: int
    total: int
    avg_u_final: Optional[float] = None


# ============================================================
# Tek Çalıştırmalar (süreç havuzunda da koşar)
# ============================================================

def _label(instance: Instance, index: int) -> str:
    return instance.name or f"instance-{index}"


def _success_task(task: tuple[str, Instance, str, Optional[SearchBudget]]) -> ExperimentRecord:
    label, instance, method, budget = task
    registry = default_registry()
    started = time.perf_counter()
    outcome = registry.run(method, instance, budget)
    return ExperimentRecord(
        instance=label,
        method=method,
        status=outcome.status_label,
        jobs_removed=0,
        elapsed_ms=round((time.perf_counter() - started) * 1000),
    )


def removal_candidate(instance: Instance) -> Job:
    """Çıkarılacak iş: en küçük U_i, sonra en küçük c_i, sonra en büyük kimlik."""
    return min(
        instance.jobs,
        key=lambda j: (instance.job_utilization(j), j.processing_time, -j.id),
    )


def _utilization_task(
    task: tuple[str, Instance, str, Optional[SearchBudget], Fraction],
) -> ExperimentRecord:
    label, instance, method, budget, floor = task
    registry = default_registry()
    started = time.perf_counter()
    current = instance
    removed = 0
    status = "failed"
    while current.utilization >= floor and current.jobs:
        outcome = registry.run(method, current, budget)
        if outcome.succeeded:
            status = "solved"
            break
        current = current.without_job(removal_candidate(current).id)
        removed += 1
    return ExperimentRecord(
        instance=label,
        method=method,
        status=status,
        u_final=current.utilization,
        jobs_removed=removed,
        elapsed_ms=round((time.perf_counter() - started) * 1000),
    )


def _run_tasks(func, tasks: list, workers: int) -> list[ExperimentRecord]:
    if workers <= 1 or len(tasks) <= 1:
        records = []
        for i, task in enumerate(tasks, start=1):
            records.append(func(task))
            logger.debug(f"🔄 [{i}/{len(tasks)}] {task[0]} / {task[2]}: {records[-1].status}")
        return records
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, tasks))


def _resolve_workers(workers: Optional[int]) -> int:
    if workers is not None:
        return workers
    from config import get_settings
    return get_settings().workers


def _check_methods(methods: Sequence[str]) -> None:
    known = default_registry().names()
    unknown = [m for m in methods if m not in known]
    if unknown:
        raise KeyError(f"Bilinmeyen yöntem: {', '.join(unknown)} (kayıtlı: {', '.join(known)})")


# ============================================================
# Deneyler
# ============================================================

def run_success_experiment(
    instances: Sequence[Instance],
    methods: Sequence[str],
    budget: Optional[SearchBudget] = None,
    workers: Optional[int] = None,
    portfolios: Mapping[str, Sequence[str]] = PORTFOLIOS,
) -> SuccessTable:
    """
    Her yöntemi her örnekte bir kez çalıştır.

    Portföy sayımı yalnızca bütün üyeleri `methods` içinde olan portföyler
    için yapılır.

    Fırlatır:
        KeyError: Kayıtlı olmayan yöntem adı
    """
    _check_methods(methods)
    labels = [_label(inst, i) for i, inst in enumerate(instances)]
    tasks = [(label, inst, m, budget) for label, inst in zip(labels, instances) for m in methods]
    logger.info(f"🚀 Başarı deneyi: {len(instances)} örnek × {len(methods)} yöntem")
    records = _run_tasks(_success_task, tasks, _resolve_workers(workers))

    table = SuccessTable(records=records, methods=tuple(methods), total=len(instances))
    for m in methods:
        table.counts[m] = sum(1 for r in records if r.method == m and r.succeeded)

    solved = {(r.instance, r.method) for r in records if r.succeeded}
    for name, members in portfolios.items():
        if not set(members) <= set(methods):
            continue
        table.portfolio_counts[name] = sum(
            1 for label in labels if any((label, m) in solved for m in members)
        )
    logger.info(f"🏁 Başarı deneyi bitti: {table.counts} {table.portfolio_counts}")
    return table


def run_utilization_experiment(
    instances: Sequence[Instance],
    methods: Sequence[str],
    budget: Optional[SearchBudget] = None,
    floor: Optional[Fraction] = None,
    workers: Optional[int] = None,
) -> list[ExperimentRecord]:
    """
    Her (örnek, yöntem) için çözülene kadar iş çıkararak U_F'yi bul.

    Parametreler:
        floor: Kullanım alt sınırı; None → HSCHED_UTILIZATION_FLOOR (0.7)

    Örnek:
        Yöntem örneği hemen çözerse U_F = U ve jobs_removed = 0
    """
    _check_methods(methods)
    if floor is None:
        from config import get_settings
        floor = get_settings().utilization_floor
    floor = Fraction(floor)
    tasks = [
        (_label(inst, i), inst, m, budget, floor)
        for i, inst in enumerate(instances)
        for m in methods
    ]
    logger.info(f"🚀 Kullanım deneyi: {len(instances)} örnek × {len(methods)} yöntem, alt sınır {floor}")
    records = _run_tasks(_utilization_task, tasks, _resolve_workers(workers))
    logger.info(f"🏁 Kullanım deneyi bitti: {len(records)} kayıt")
    return records


def summarize_records(
    records: Iterable[ExperimentRecord],
    portfolios: Mapping[str, Sequence[str]] = PORTFOLIOS,
) -> list[SummaryRow]:
    """
    Yöntem ve portföy başına çözülen sayısı ve ortalama U_F.

    Ortalama U_F yalnızca başarılı denemelerden alınır; başarı yoksa None.
    Portföy satırında bir örnek, üyelerinden biri çözdüyse çözülmüş sayılır;
    U_F çözen üyelerin U_F'lerinin en büyüğüdür.
    """
    records = list(records)
    by_method: dict[str, list[ExperimentRecord]] = {}
    for r in records:
        by_method.setdefault(r.method, []).append(r)

    def row(name: str, solved: int, total: int, u_values: list[Fraction]) -> SummaryRow:
        avg = float(sum(u_values) / len(u_values)) if u_values else None
        return SummaryRow(method=name, solved=solved, total=total, avg_u_final=avg)

    rows = []
    for method, group in by_method.items():
        rows.append(row(
            method,
            sum(1 for r in group if r.succeeded),
            len(group),
            [r.u_final for r in group if r.succeeded and r.u_final is not None],
        ))

    index = {(r.instance, r.method): r for r in records}
    instances = list(dict.fromkeys(r.instance for r in records))
    for name, members in portfolios.items():
        if not all(m in by_method for m in members):
            continue
        solved, u_values = 0, []
        for inst in instances:
            member_records = [index[(inst, m)] for m in members if (inst, m) in index]
            winners = [r for r in member_records if r.succeeded]
            if winners:
                solved += 1
            finals = [r.u_final for r in winners if r.u_final is not None]
            if finals:
                u_values.append(max(finals))
        rows.append(row(name, solved, len(instances), u_values))
    return rows


# ============================================================
# CSV
# ============================================================

def write_records(path: str | Path, records: Iterable[ExperimentRecord]) -> Path:
    """Kayıtları CSV olarak yaz."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow([
                r.instance,
                r.method,
                r.status,
                "" if r.u_final is None else r.u_final.numerator,
                "" if r.u_final is None else r.u_final.denominator,
                r.jobs_removed,
                r.elapsed_ms,
            ])
    return path


def read_records(path: str | Path) -> list[ExperimentRecord]:
    """write_records ile yazılmış CSV'yi oku."""
    records = []
    with Path(path).open(newline="", encoding="utf-8") as f:
        for row in csv.DictReader(f):
            u_final = None
            if row["u_final_num"]:
                u_final = Fraction(int(row["u_final_num"]), int(row["u_final_den"]))
            records.append(ExperimentRecord(
                instance=row["instance"],
                method=row["method"],
                status=row["status"],
                u_final=u_final,
                jobs_removed=int(row["jobs_removed"]),
                elapsed_ms=int(row["elapsed_ms"]),
            ))
    return records
