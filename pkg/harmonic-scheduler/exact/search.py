"""
Search - Kesin Alt Kutu Araması
================================
Her dikdörtgeni kendi yüksekliğindeki bir alt kutuya atayan derinlik öncelikli
arama. Kanonik yerleşimler bütün çözümleri temsil ettiği için alt kutu
ataması tam bir arama uzayıdır: arama "infeasible" derse örnek gerçekten
çizelgelenemez.

Sıra: yükseklik azalan, genişlik azalan, kimlik artan.

Budama:
(a) satır kapasitesi: her ekleme satır yüklerini w içinde tutmalı
(b) alan: kalan dikdörtgenlerin alanı, onları alabilecek alt kutuların
    boş alanını aşamaz (kalan en dar dikdörtgenin sığmadığı alt kutular sayılmaz)
(c) simetri: boş kardeş alt kutulardan yalnızca en küçük q'lu denenir;
    aynı boyutlu ardışık dikdörtgenler azalmayan q sırasıyla yerleşir

Kullanım:
    from exact.search import solve_exact
    from exact.budget import SearchBudget

    outcome = solve_exact(instance, SearchBudget(time_limit_s=10))
    print(outcome.status)   # feasible / infeasible / unknown
"""

import os
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from domain.instance import Instance
from exact.budget import SearchBudget
from feasibility.models import Packing, Rectangle, Schedule, rectangles_of
from shared.telemetry.logger import get_logger
from transform.bijection import packing_to_schedule
from transform.subbin_tree import PlacedRectangle, SubBinSlot, SubBinTree, tree_to_packing

logger = get_logger("exact.search")


class ExactStatus(str, Enum):
    """Kesin arama sonucu."""
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"


@dataclass
class ExactOutcome:
    """Kesin arama (veya kaba kuvvet) sonucu."""
    status: ExactStatus
    schedule: Optional[Schedule] = None
    packing: Optional[Packing] = None
    nodes: int = 0
    elapsed_s: float = 0.0
    method: str = "exact"

    @property
    def succeeded(self) -> bool:
        return self.status == ExactStatus.FEASIBLE

    @property
    def status_label(self) -> str:
        return self.status.value


@dataclass
class _Frame:
    candidates: list[SubBinSlot]
    pos: int = 0
    placed: Optional[PlacedRectangle] = None


@dataclass
class BinSearch:
    """
    Alt kutu atama araması.

    Parametreler:
        instance: Çözülecek örnek
        budget: Süre/düğüm bütçesi
        symmetry_breaking: Boş kardeş ve özdeş dikdörtgen simetrisini kır
        area_pruning: Kalan alan sınırıyla buda
    """
    instance: Instance
    budget: SearchBudget = field(default_factory=SearchBudget)
    symmetry_breaking: bool = True
    area_pruning: bool = True
    method: str = "exact"

    def __post_init__(self):
        ps = self.instance.period_set
        self.rects: list[Rectangle] = sorted(
            rectangles_of(self.instance).values(),
            key=lambda r: (-r.height, -r.width, r.id),
        )
        n = len(self.rects)
        self._suffix_area = [0] * (n + 1)
        self._suffix_min_width = [ps.width + 1] * (n + 1)
        for i in range(n - 1, -1, -1):
            rect = self.rects[i]
            self._suffix_area[i] = self._suffix_area[i + 1] + rect.width * rect.height
            self._suffix_min_width[i] = min(self._suffix_min_width[i + 1], rect.width)
        self.tree = SubBinTree(ps)
        self._placed_area = 0

    def _outcome(self, status: ExactStatus, clock, packing: Packing = None) -> ExactOutcome:
        schedule = None
        if packing is not None:
            schedule = packing_to_schedule(self.instance, packing, validate=False)
        return ExactOutcome(
            status=status,
            schedule=schedule,
            packing=packing,
            nodes=clock.nodes,
            elapsed_s=clock.elapsed_s,
            method=self.method,
        )

    def _candidates(self, i: int) -> list[SubBinSlot]:
        rect = self.rects[i]
        slots = self.tree.iter_slots(rect.level, rect.width, compress=self.symmetry_breaking)
        if self.symmetry_breaking and i > 0:
            prev = self.rects[i - 1]
            if prev.level == rect.level and prev.width == rect.width:
                floor = self._frames[i - 1].placed.sub_bin
                # Sanal yuva bütün boş kardeşleri temsil eder, tabanla elenmez
                return [s for s in slots if s.is_virtual or s.index >= floor]
        return list(slots)

    def _area_ok(self, j: int) -> bool:
        remaining = self._suffix_area[j]
        ps = self.instance.period_set
        if remaining > ps.width * ps.bin_height - self._placed_area:
            return False
        usable = self.tree.free_area(self.rects[j].level, self._suffix_min_width[j])
        return remaining <= usable

    def run(self) -> ExactOutcome:
        """Aramayı bütçe içinde çalıştır."""
        clock = self.budget.start()
        ps = self.instance.period_set
        name = self.instance.name or "?"

        if self.instance.utilization > 1:
            logger.info(f"🚫 {name}: U = {self.instance.utilization} > 1, arama gerekmez")
            return self._outcome(ExactStatus.INFEASIBLE, clock)
        if any(r.width > ps.width for r in self.rects):
            logger.info(f"🚫 {name}: c > w olan iş var")
            return self._outcome(ExactStatus.INFEASIBLE, clock)
        if not self.rects:
            return self._outcome(ExactStatus.FEASIBLE, clock, Packing({}))

        n = len(self.rects)
        self._frames: list[_Frame] = [_Frame(self._candidates(0))]
        while self._frames:
            i = len(self._frames) - 1
            frame = self._frames[i]
            rect = self.rects[i]
            if frame.placed is not None:
                self.tree.remove(frame.placed)
                self._placed_area -= rect.width * rect.height
                frame.placed = None
            if frame.pos >= len(frame.candidates):
                self._frames.pop()
                continue
            if clock.tick():
                logger.warning(f"⏱️ {name}: bütçe bitti → unknown ({clock.get_report()})")
                return self._outcome(ExactStatus.UNKNOWN, clock)

            slot = frame.candidates[frame.pos]
            frame.pos += 1
            frame.placed = self.tree.insert(slot, rect.width, rect.id)
            self._placed_area += rect.width * rect.height

            if i + 1 == n:
                logger.info(f"✅ {name}: çözüm bulundu ({clock.nodes} düğüm, {clock.elapsed_s:.3f}s)")
                return self._outcome(ExactStatus.FEASIBLE, clock, tree_to_packing(self.tree))
            if self.area_pruning and not self._area_ok(i + 1):
                continue
            candidates = self._candidates(i + 1)
            if candidates:
                self._frames.append(_Frame(candidates))

        logger.info(f"🚫 {name}: çözüm yok ({clock.nodes} düğüm, {clock.elapsed_s:.3f}s)")
        return self._outcome(ExactStatus.INFEASIBLE, clock)


def solve_exact(
    instance: Instance,
    budget: Optional[SearchBudget] = None,
    symmetry_breaking: bool = True,
    area_pruning: bool = True,
) -> ExactOutcome:
    """
    Örneği kesin olarak çöz (bütçe içinde).

    Döndürür:
        ExactOutcome: feasible (+ çizelge), infeasible veya unknown
    """
    if budget is None:
        budget = SearchBudget.from_settings()
    return BinSearch(
        instance,
        budget=budget,
        symmetry_breaking=symmetry_breaking,
        area_pruning=area_pruning,
    ).run()
