"""
Budget - Arama Bütçesi
=======================
Kesin arama üstel sürebilir; süre ve düğüm sayısıyla sınırlanır.
Bütçe biterse sonuç "unknown" olur (çözüm bulunamadı ama yokluğu da
kanıtlanamadı).

Kullanım:
    from exact.budget import SearchBudget

    budget = SearchBudget(time_limit_s=10)
    clock = budget.start()
    while search_continues:
        if clock.tick():
            break   # bütçe bitti
    print(clock.get_report())
"""

import time
from dataclasses import dataclass
from typing import Optional

from domain.errors import ConfigInvalidError


@dataclass(frozen=True)
class SearchBudget:
    """Süre (saniye) ve/veya düğüm sınırı; None → sınırsız."""
    time_limit_s: Optional[float] = None
    node_limit: Optional[int] = None

    def __post_init__(self):
        if self.time_limit_s is not None and self.time_limit_s <= 0:
            raise ConfigInvalidError(f"Süre bütçesi pozitif olmalı: {self.time_limit_s}")
        if self.node_limit is not None and self.node_limit <= 0:
            raise ConfigInvalidError(f"Düğüm bütçesi pozitif olmalı: {self.node_limit}")

    @classmethod
    def from_settings(cls, settings=None) -> "SearchBudget":
        """Varsayılan bütçe (HSCHED_EXACT_BUDGET_S, HSCHED_EXACT_NODE_LIMIT)."""
        if settings is None:
            from config import get_settings
            settings = get_settings()
        return cls(time_limit_s=settings.exact_budget_s, node_limit=settings.exact_node_limit)

    def start(self) -> "BudgetClock":
        return BudgetClock(self)


class BudgetClock:
    """
    Çalışan bir aramanın bütçe sayacı.

    Her düğüm açılışında tick() çağrılır; True dönerse arama durmalıdır.
    """

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.started = time.perf_counter()
        self.nodes = 0
        self._exhausted = False

    @property
    def elapsed_s(self) -> float:
        return time.perf_counter() - self.started

    def tick(self) -> bool:
        """Bir düğüm say; bütçe bittiyse True."""
        self.nodes += 1
        if self.budget.node_limit is not None and self.nodes > self.budget.node_limit:
            self._exhausted = True
        elif self.budget.time_limit_s is not None and self.elapsed_s >= self.budget.time_limit_s:
            self._exhausted = True
        return self._exhausted

    def is_over_budget(self) -> bool:
        return self._exhausted

    def remaining_s(self) -> Optional[float]:
        if self.budget.time_limit_s is None:
            return None
        return max(0.0, self.budget.time_limit_s - self.elapsed_s)

    def usage_percent(self) -> float:
        """Süre bütçesinin kullanım yüzdesi (süre sınırı yoksa 0)."""
        if not self.budget.time_limit_s:
            return 0.0
        return min(100.0, self.elapsed_s / self.budget.time_limit_s * 100)

    def get_report(self) -> str:
        limit = f"{self.budget.time_limit_s:.1f}s" if self.budget.time_limit_s else "sınırsız"
        return (
            f"⏱️ Arama bütçesi: {self.elapsed_s:.3f}s / {limit} "
            f"({self.usage_percent():.1f}%), {self.nodes} düğüm"
        )
