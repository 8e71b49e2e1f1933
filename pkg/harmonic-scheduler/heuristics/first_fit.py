"""
First Fit Ailesi - T-FF, S-FF, S-BF, LPT
=========================================
Aynı sırayla işleyen, yalnızca alt kutu seçim kuralı farklı dört sezgisel.

| Yöntem | Seçim                                               |
|--------|-----------------------------------------------------|
| T-FF   | Sığan alt kutular arasında en erken başlangıç (v)   |
| S-FF   | Sığan alt kutular arasında en alttaki (en küçük q)  |
| S-BF   | Ekleme sonrası en az boşluk kalan (eşitlikte en alt)|
| LPT    | En az dolu alt kutu; sığmazsa hemen başarısız       |

T-FF ile S-FF aynı alt kutu ağacında çalışır; fark yalnızca sıralamadadır:
alt kutunun q'su yerleşimdeki yeri, v'si çizelgedeki satırıdır.

Kullanım:
    from heuristics.first_fit import solve_sff

    outcome = solve_sff(instance)
"""

from typing import Optional

from domain.instance import Instance
from heuristics.base import BaseHeuristic
from heuristics.outcome import HeuristicOutcome
from transform.subbin_tree import SubBinSlot, SubBinTree


class TimeFirstFit(BaseHeuristic):
    """Her işi mümkün olan en erken başlangıç zamanına koy."""

    name = "T-FF"

    def select_slot(self, tree: SubBinTree, level: int, width: int) -> Optional[SubBinSlot]:
        # Aynı v'li alt kutuda u = mevcut kanonik yük; s = u + v·w
        return min(tree.iter_slots(level, width), key=lambda s: (s.v, s.index), default=None)


class SpatialFirstFit(BaseHeuristic):
    """Her dikdörtgeni sığdığı en alttaki alt kutuya koy."""

    name = "S-FF"

    def select_slot(self, tree: SubBinTree, level: int, width: int) -> Optional[SubBinSlot]:
        return tree.first_fit(level, width)


class SpatialBestFit(BaseHeuristic):
    """Ekleme sonrası kalan boşluğu en aza indiren alt kutu."""

    name = "S-BF"

    def select_slot(self, tree: SubBinTree, level: int, width: int) -> Optional[SubBinSlot]:
        return min(
            tree.iter_slots(level, width),
            key=lambda s: (tree.residual(s) - width, s.index),
            default=None,
        )


class LongestProcessingTime(BaseHeuristic):
    """En az dolu alt kutuya koy; sığmazsa geri dönmeden başarısız ol."""

    name = "LPT"

    def select_slot(self, tree: SubBinTree, level: int, width: int) -> Optional[SubBinSlot]:
        slot = tree.least_occupied(level)
        return slot if tree.residual(slot) >= width else None


def solve_tff(instance: Instance) -> HeuristicOutcome:
    return TimeFirstFit().solve(instance)


def solve_sff(instance: Instance) -> HeuristicOutcome:
    return SpatialFirstFit().solve(instance)


def solve_sbf(instance: Instance) -> HeuristicOutcome:
    return SpatialBestFit().solve(instance)


def solve_lpt(instance: Instance) -> HeuristicOutcome:
    return LongestProcessingTime().solve(instance)
