"""
Base Heuristic - Sezgisel Soyut Sınıfı
=======================================
Bütün tek geçişli sezgisellerin miras aldığı şablon.

Ortak akış (solve):
1. İşleri yerleştirme sırasına diz (periyot artan, süre azalan, kimlik artan)
2. Her iş için alt kutu seç → select_slot() (alt sınıf belirler)
3. Seçilen alt kutuya ekle, izi kaydet
4. Bir iş sığmazsa dur ve FAILED döndür
5. Hepsi sığarsa ağacı yerleşime, yerleşimi çizelgeye çevir

Alt sınıflar yalnızca seçim kuralını tanımlar:
    class SpatialFirstFit(BaseHeuristic):
        name = "S-FF"

        def select_slot(self, tree, level, width):
            return tree.first_fit(level, width)
"""

import os
import sys
from abc import ABC, abstractmethod
from typing import Optional

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from domain.instance import Instance
from heuristics.ordering import order_jobs
from heuristics.outcome import HeuristicOutcome, HeuristicStatus
from shared.telemetry.logger import SolveTracer, get_logger
from transform.bijection import packing_to_schedule
from transform.subbin_tree import SubBinSlot, SubBinTree, tree_to_packing


class BaseHeuristic(ABC):
    """
    Tek geçişli yerleştirme sezgiseli.

    Alt sınıflar MUTLAKA şunları tanımlamalı:
    1. name → yöntem adı ("S-FF", "T-FF", …)
    2. select_slot() → bir dikdörtgen için alt kutu seçimi
    """

    name: str = ""

    def __init__(self):
        self.logger = get_logger(f"heuristics.{self.name.lower()}")

    @abstractmethod
    def select_slot(self, tree: SubBinTree, level: int, width: int) -> Optional[SubBinSlot]:
        """
        k seviyesinde genişliği width olan dikdörtgen için alt kutu seç.

        Döndürür:
            SubBinSlot veya None (sığacak alt kutu yoksa)
        """

    def solve(self, instance: Instance) -> HeuristicOutcome:
        """Örneği çizelgelemeyi dene."""
        tracer = SolveTracer(self.name)
        tracer.start_run(instance.name, len(instance))
        tree = SubBinTree(instance.period_set)

        for job in order_jobs(instance):
            slot = None
            if job.processing_time <= tree.width:
                slot = self.select_slot(tree, job.period_index, job.processing_time)
            if slot is None:
                tracer.log_failure(job.id, job.period_index, "sığacak alt kutu yok")
                return self._failed(tracer, job.id)
            placed = tree.insert(slot, job.processing_time, job.id)
            tracer.log_placement(job.id, slot.level, slot.index, placed.x)

        return self._solved(instance, tree, tracer)

    def _failed(self, tracer: SolveTracer, rect_id) -> HeuristicOutcome:
        tracer.end_run(success=False)
        return HeuristicOutcome(
            method=self.name,
            status=HeuristicStatus.FAILED,
            trace=tracer.steps,
            elapsed_s=tracer.elapsed_s,
            failed_rect=rect_id,
        )

    def _solved(self, instance: Instance, tree: SubBinTree, tracer: SolveTracer) -> HeuristicOutcome:
        packing = tree_to_packing(tree)
        # Ağaç satır kapasitesini koruduğu için yeniden doğrulama yapılmaz
        schedule = packing_to_schedule(instance, packing, validate=False)
        tracer.end_run(success=True)
        return HeuristicOutcome(
            method=self.name,
            status=HeuristicStatus.SOLVED,
            schedule=schedule,
            packing=packing,
            trace=tracer.steps,
            elapsed_s=tracer.elapsed_s,
        )

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}(name='{self.name}')>"
