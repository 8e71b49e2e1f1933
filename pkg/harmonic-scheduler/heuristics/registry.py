"""
Method Registry - Yöntem Kayıt Sistemi
=======================================
Bütün çözüm yöntemlerini adla erişilebilir kılan merkezi kayıt.

CLI, portföy ve deney koşucusu yöntemleri adla çağırır:
    LPT, T-FF, S-FF, S-BF, RG-FF-PES, RG-FF-OPT  (sezgiseller)
    exact, exact-10, exact-60                    (kesin arama, bütçeli)

Kullanım:
    from heuristics.registry import default_registry

    registry = default_registry()
    outcome = registry.run("RG-FF-OPT", instance)
    print(registry.get_stats())
"""

import os
import sys
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Callable, Optional

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from domain.instance import Instance
from heuristics.first_fit import solve_lpt, solve_sbf, solve_sff, solve_tff
from heuristics.rgff import solve_rgff_optimistic, solve_rgff_pessimistic
from shared.telemetry.logger import get_logger

HEURISTIC_METHODS = ("LPT", "T-FF", "S-FF", "S-BF", "RG-FF-PES", "RG-FF-OPT")


@dataclass
class MethodEntry:
    """
    Registry'deki bir yöntem kaydı.

    Attributes:
        name: Yöntem adı
        func: (instance, budget) → sonuç
        description: Kısa açıklama
        metadata: {"kind": "heuristic" | "exact", ...}
        call_count / success_count: İstatistik
    """
    name: str
    func: Callable[[Instance, Any], Any]
    description: str = ""
    metadata: dict = field(default_factory=dict)
    registered_at: datetime = field(default_factory=datetime.now)
    call_count: int = 0
    success_count: int = 0

    @property
    def kind(self) -> str:
        return self.metadata.get("kind", "heuristic")

    @property
    def success_rate(self) -> float:
        """Başarı oranı (%)."""
        if self.call_count == 0:
            return 0.0
        return self.success_count / self.call_count * 100


class MethodRegistry:
    """
    Merkezi yöntem kayıt ve çalıştırma sistemi.

    Kullanım:
        registry = MethodRegistry()
        registry.register("S-FF", lambda inst, budget: solve_sff(inst))
        outcome = registry.run("S-FF", instance)
    """

    def __init__(self):
        self._methods: dict[str, MethodEntry] = {}
        self.logger = get_logger("heuristics.registry")

    def register(
        self,
        name: str,
        func: Callable[[Instance, Any], Any],
        description: str = "",
        metadata: dict = None,
    ) -> None:
        """Yeni bir yöntem kaydet (aynı ad varsa üzerine yazar)."""
        self._methods[name] = MethodEntry(
            name=name,
            func=func,
            description=description,
            metadata=metadata or {},
        )
        self.logger.debug(f"✅ Yöntem kaydedildi: {name}")

    def get(self, name: str) -> Optional[MethodEntry]:
        return self._methods.get(name)

    def names(self) -> list[str]:
        return list(self._methods)

    def list_methods(self) -> list[dict]:
        """Kayıtlı yöntemlerin özeti."""
        return [
            {
                "name": e.name,
                "kind": e.kind,
                "description": e.description,
                "calls": e.call_count,
                "success_rate": f"{e.success_rate:.1f}%",
            }
            for e in self._methods.values()
        ]

    def run(self, name: str, instance: Instance, budget=None):
        """
        Yöntemi adla çalıştır.

        Fırlatır:
            KeyError: Yöntem kayıtlı değilse
        """
        entry = self._methods.get(name)
        if entry is None:
            raise KeyError(f"Bilinmeyen yöntem: {name} (kayıtlı: {', '.join(self._methods)})")
        outcome = entry.func(instance, budget)
        entry.call_count += 1
        if outcome.succeeded:
            entry.success_count += 1
        return outcome

    def get_stats(self) -> dict:
        return {
            "total_methods": len(self._methods),
            "total_calls": sum(e.call_count for e in self._methods.values()),
            "methods": self.list_methods(),
        }


def _heuristic(func):
    return lambda instance, budget=None: func(instance)


def _exact(time_limit_s: Optional[float]):
    def run(instance, budget=None):
        from exact.budget import SearchBudget
        from exact.search import solve_exact

        if budget is None:
            budget = SearchBudget(time_limit_s=time_limit_s) if time_limit_s else SearchBudget.from_settings()
        return solve_exact(instance, budget)

    return run


def default_registry() -> MethodRegistry:
    """Altı sezgisel ve kesin arama varyantlarıyla dolu registry."""
    registry = MethodRegistry()
    heuristic_funcs = {
        "LPT": (solve_lpt, "En az dolu alt kutu"),
        "T-FF": (solve_tff, "En erken başlangıç zamanı"),
        "S-FF": (solve_sff, "En alttaki sığan alt kutu"),
        "S-BF": (solve_sbf, "En az boşluk bırakan alt kutu"),
        "RG-FF-PES": (solve_rgff_pessimistic, "Kötümser kuklalı RG-FF"),
        "RG-FF-OPT": (solve_rgff_optimistic, "İyimser kuklalı RG-FF"),
    }
    for name, (func, description) in heuristic_funcs.items():
        registry.register(name, _heuristic(func), description, {"kind": "heuristic"})
    registry.register("exact", _exact(None), "Alt kutu araması (varsayılan bütçe)", {"kind": "exact"})
    registry.register("exact-10", _exact(10.0), "Alt kutu araması, 10 s", {"kind": "exact"})
    registry.register("exact-60", _exact(60.0), "Alt kutu araması, 60 s", {"kind": "exact"})
    return registry
