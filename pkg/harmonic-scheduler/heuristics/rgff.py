"""
RG-FF - Dikdörtgen Güdümlü First Fit
=====================================
İleriye bakan iki aşamalı sezgisel.

Aşama 1 (aşağıdan yukarı):
    k = r−2 … 0 için, k+1 seviyesindeki gerçek dikdörtgenler ve k+1
    seviyesinin kuklaları toplanıp k seviyesi kuklalarına dönüştürülür.

Aşama 2 (yukarıdan aşağı):
    Gerçek + kukla dikdörtgenler (yükseklik azalan, genişlik azalan,
    gerçek önce) S-FF ile yerleştirilir. Bir seviyenin son dikdörtgeni
    yerleşince o seviyenin kuklaları silinir.

    - Sığmayan kukla → en az dolu alt kutuya zorla (taşma izinli)
    - Sığmayan gerçek dikdörtgen → kuklalar silinince sığacağı alt kutular
      arasında en az dolu olana zorla; öyle bir alt kutu yoksa FAILED

Kuklalar gerçek dikdörtgenleri farklı alt kutulara yayar: bir alt
kutunun üstüne yığılan yük, alttaki kısa dikdörtgenlerin yerini kapatmaz.

Kullanım:
    from heuristics.rgff import solve_rgff

    outcome = solve_rgff(instance, mode="optimistic")
"""

from enum import Enum

from domain.instance import Instance
from heuristics.base import BaseHeuristic
from heuristics.dummies import (
    BagItem,
    DummyRectangle,
    build_dummies_optimistic,
    build_dummies_pessimistic,
)
from heuristics.ordering import order_jobs, rectangle_sort_key
from heuristics.outcome import HeuristicOutcome
from shared.telemetry.logger import SolveTracer
from transform.subbin_tree import SubBinTree


class DummyMode(str, Enum):
    """Kukla üretim kipi."""
    PESSIMISTIC = "pessimistic"
    OPTIMISTIC = "optimistic"


_BUILDERS = {
    DummyMode.PESSIMISTIC: build_dummies_pessimistic,
    DummyMode.OPTIMISTIC: build_dummies_optimistic,
}

_NAMES = {
    DummyMode.PESSIMISTIC: "RG-FF-PES",
    DummyMode.OPTIMISTIC: "RG-FF-OPT",
}


class RectangleGuidedFirstFit(BaseHeuristic):
    """Kukla dikdörtgenlerle ileriye bakan first fit."""

    def __init__(self, mode: DummyMode | str = DummyMode.OPTIMISTIC):
        self.mode = DummyMode(mode)
        self.name = _NAMES[self.mode]
        super().__init__()

    def select_slot(self, tree, level, width):
        return tree.first_fit(level, width)

    def build_dummies(self, instance: Instance) -> dict[int, list[DummyRectangle]]:
        """Aşama 1: her seviye için kuklalar (son seviyede kukla yok)."""
        ps = instance.period_set
        builder = _BUILDERS[self.mode]
        by_level: dict[int, list[BagItem]] = {k: [] for k in range(ps.r)}
        for job in instance.jobs:
            by_level[job.period_index].append(BagItem(job.id, job.processing_time, False, job.id))

        dummies: dict[int, list[DummyRectangle]] = {}
        for k in range(ps.r - 2, -1, -1):
            items = by_level[k + 1] + [d.as_item() for d in dummies.get(k + 1, [])]
            dummies[k] = builder(items, ps.ratio(k), level=k, height=ps.heights[k])
            self.logger.debug(f"Seviye {k}: {len(items)} dikdörtgenden {len(dummies[k])} kukla")
        return dummies

    def solve(self, instance: Instance) -> HeuristicOutcome:
        tracer = SolveTracer(self.name)
        tracer.start_run(instance.name, len(instance))
        ps = instance.period_set
        tree = SubBinTree(ps)

        too_wide = [j for j in instance.jobs if j.processing_time > ps.width]
        if too_wide:
            tracer.log_failure(too_wide[0].id, too_wide[0].period_index, "c > w")
            return self._failed(tracer, too_wide[0].id)

        entries = [
            (rectangle_sort_key(ps.heights[j.period_index], j.processing_time, False, j.id),
             j.period_index, j.processing_time, j.id, False)
            for j in order_jobs(instance)
        ]
        for level, level_dummies in self.build_dummies(instance).items():
            entries += [
                (rectangle_sort_key(d.height, d.width, True, d.seq), level, d.width, d.id, True)
                for d in level_dummies
            ]
        entries.sort(key=lambda e: e[0])

        current_level = None
        for _, level, width, rect_id, is_dummy in entries:
            if current_level is not None and level != current_level:
                tree.remove_dummies(current_level)
            current_level = level

            slot = tree.first_fit(level, width)
            if slot is not None:
                placed = tree.insert(slot, width, rect_id, is_dummy=is_dummy)
                tracer.log_placement(rect_id, level, slot.index, placed.x)
                continue

            if is_dummy:
                slot = tree.least_occupied(level)
                placed = tree.insert(slot, width, rect_id, is_dummy=True, force=True)
                tracer.log_forced(rect_id, level, slot.index, placed.x, "kukla taşması")
                continue

            # Kuklalar silinince sığacağı alt kutular
            candidates = list(tree.iter_slots(level, width, real_only=True))
            if not candidates:
                tracer.log_failure(rect_id, level, "kuklalar silinse de sığmıyor")
                return self._failed(tracer, rect_id)
            slot = min(candidates, key=lambda s: (tree.occupancy(s), s.index))
            placed = tree.insert(slot, width, rect_id, force=True)
            tracer.log_forced(rect_id, level, slot.index, placed.x, "kukla yerine")

        tree.remove_dummies()
        return self._solved(instance, tree, tracer)


def solve_rgff(instance: Instance, mode: DummyMode | str = DummyMode.OPTIMISTIC) -> HeuristicOutcome:
    return RectangleGuidedFirstFit(mode).solve(instance)


def solve_rgff_optimistic(instance: Instance) -> HeuristicOutcome:
    return solve_rgff(instance, DummyMode.OPTIMISTIC)


def solve_rgff_pessimistic(instance: Instance) -> HeuristicOutcome:
    return solve_rgff(instance, DummyMode.PESSIMISTIC)
