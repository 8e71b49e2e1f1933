"""
Outcome - Sezgisel Sonuç Tipleri
=================================
Her sezgisel aynı biçimde sonuç döndürür: durum, (başarılıysa) çizelge ve
yerleşim, iş iş yerleştirme izi ve süre.

Kullanım:
    outcome = solve_sff(instance)
    if outcome.succeeded:
        print(outcome.schedule.starts)
    else:
        print(f"Yerleştirilemeyen: {outcome.failed_rect}")
"""

import os
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from feasibility.models import Packing, Schedule
from shared.telemetry.logger import TraceStep


class HeuristicStatus(str, Enum):
    """Sezgisel sonucu."""
    SOLVED = "solved"
    FAILED = "failed"


@dataclass
class HeuristicOutcome:
    """
    Bir sezgisel çalıştırmasının sonucu.

    Başarısızlık bir hata değildir; `status=FAILED` ve `failed_rect`
    yerleştirilemeyen ilk dikdörtgeni gösterir.
    """
    method: str
    status: HeuristicStatus
    schedule: Optional[Schedule] = None
    packing: Optional[Packing] = None
    trace: list[TraceStep] = field(default_factory=list)
    elapsed_s: float = 0.0
    failed_rect: Any = None

    @property
    def succeeded(self) -> bool:
        return self.status == HeuristicStatus.SOLVED

    @property
    def status_label(self) -> str:
        return self.status.value
