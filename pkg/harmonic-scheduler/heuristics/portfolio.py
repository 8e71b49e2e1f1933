"""
Portfolio - Yöntem Portföyü
============================
Birkaç yöntemi aynı örnekte çalıştırır; herhangi biri başarılıysa portföy
başarılıdır. Dönen çizelge, listedeki sırayla ilk başarılı yöntemin
çizelgesidir.

Hazır portföyler:
    M1 = RG-FF-OPT + RG-FF-PES
    M2 = RG-FF-OPT + S-BF
    M3 = RG-FF-OPT + T-FF
    MA = altı sezgiselin hepsi

Kullanım:
    from heuristics.portfolio import run_portfolio, PORTFOLIOS

    result = run_portfolio(instance, PORTFOLIOS["M2"])
    print(result.winner)
"""

from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from domain.instance import Instance
from feasibility.models import Schedule
from heuristics.registry import HEURISTIC_METHODS, MethodRegistry, default_registry

PORTFOLIOS: dict[str, tuple[str, ...]] = {
    "M1": ("RG-FF-OPT", "RG-FF-PES"),
    "M2": ("RG-FF-OPT", "S-BF"),
    "M3": ("RG-FF-OPT", "T-FF"),
    "MA": HEURISTIC_METHODS,
}


@dataclass
class PortfolioOutcome:
    """Portföy sonucu; her üyenin sonucu `outcomes` içinde."""
    methods: tuple[str, ...]
    outcomes: dict[str, Any] = field(default_factory=dict)
    winner: Optional[str] = None

    @property
    def succeeded(self) -> bool:
        return self.winner is not None

    @property
    def schedule(self) -> Optional[Schedule]:
        return self.outcomes[self.winner].schedule if self.winner else None

    @property
    def elapsed_s(self) -> float:
        return sum(o.elapsed_s for o in self.outcomes.values())

    @property
    def status_label(self) -> str:
        return "solved" if self.succeeded else "failed"


def run_portfolio(
    instance: Instance,
    methods: Sequence[str],
    registry: Optional[MethodRegistry] = None,
    stop_at_first: bool = False,
    budget=None,
) -> PortfolioOutcome:
    """
    Yöntemleri sırayla çalıştır.

    Parametreler:
        methods: Yöntem adları (registry'de kayıtlı)
        stop_at_first: İlk başarıda kalanları çalıştırma

    Örnek:
        [RG-FF-OPT, S-BF] ve yalnızca S-BF başarılı → winner == "S-BF"
    """
    registry = registry or default_registry()
    result = PortfolioOutcome(methods=tuple(methods))
    for name in methods:
        outcome = registry.run(name, instance, budget)
        result.outcomes[name] = outcome
        if outcome.succeeded and result.winner is None:
            result.winner = name
            if stop_at_first:
                break
    return result
