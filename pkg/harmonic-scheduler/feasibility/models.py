"""
Models - Çizelge, Yerleşim ve Doğrulama Raporu
================================================
İki eşdeğer gösterimin veri tipleri:

1. Çizelge (Schedule): her işin ilk başlangıç zamanı s_i ∈ [0, T_{p_i})
       u = s mod w  (satır içi konum)
       v = s div w  (satır numarası)

2. Yerleşim (Packing): w × H kutusunda her dikdörtgenin sol alt köşesi (x, y)
       genişlik = c_i, yükseklik = H_{p_i}

Kullanım:
    from feasibility.models import Schedule, Packing, Placement

    sched = Schedule({1: 0, 2: 1, 3: 3})
    sched.split(3, width=2)   # → (1, 1)
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from domain.instance import Instance, Job


@dataclass(frozen=True)
class Schedule:
    """İş kimliği → başlangıç zamanı s_i."""
    starts: dict[int, int] = field(default_factory=dict)

    def split(self, job_id: int, width: int) -> tuple[int, int]:
        """(u, v) = (s mod w, s div w)."""
        return self.starts[job_id] % width, self.starts[job_id] // width

    def __len__(self) -> int:
        return len(self.starts)


@dataclass(frozen=True)
class Placement:
    """Dikdörtgenin sol alt köşesi."""
    x: int
    y: int


@dataclass(frozen=True)
class Rectangle:
    """Bir işin dikdörtgeni: genişlik c_i, yükseklik H_{p_i}."""
    id: Any
    width: int
    height: int
    level: int   # yükseklik indeksi k (= periyot indeksi)


@dataclass(frozen=True)
class Packing:
    """Dikdörtgen kimliği → konum."""
    placements: dict[Any, Placement] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.placements)


def rectangle_of(job: Job, instance: Instance) -> Rectangle:
    """İşin dikdörtgeni."""
    height = instance.period_set.heights[job.period_index]
    return Rectangle(id=job.id, width=job.processing_time, height=height, level=job.period_index)


def rectangles_of(instance: Instance) -> dict[int, Rectangle]:
    """Örnekteki bütün işlerin dikdörtgenleri."""
    return {job.id: rectangle_of(job, instance) for job in instance.jobs}


# ============================================================
# Doğrulama Raporu
# ============================================================

class ViolationKind(str, Enum):
    """İhlal türleri."""
    OUT_OF_RANGE = "out_of_range"       # s ∉ [0, T) veya kutu dışı
    ROW_OVERRUN = "row_overrun"         # u + c > w
    NOT_DIVISIBLE = "not_divisible"     # y, yüksekliğin katı değil
    COLLISION = "collision"             # iki iş/dikdörtgen çakışıyor
    NOT_CANONICAL = "not_canonical"


@dataclass
class Violation:
    """Tek bir ihlal ve tanığı."""
    kind: ViolationKind
    message: str
    job_ids: tuple = ()
    witness: Optional[dict] = None


@dataclass
class ValidationReport:
    """
    Doğrulama sonucu.

    `ok` ihlal listesi boşsa True'dur; ikisi ayrı ayrı tutulmaz.
    """
    violations: list[Violation] = field(default_factory=list)
    checked_pairs: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: ViolationKind, message: str, job_ids: tuple = (), witness: dict = None):
        self.violations.append(Violation(kind, message, job_ids, witness))

    def summary(self) -> str:
        if self.ok:
            return f"✅ Geçerli ({self.checked_pairs} çift kontrol edildi)"
        lines = [f"❌ {len(self.violations)} ihlal:"]
        lines += [f"  - [{v.kind.value}] {v.message}" for v in self.violations[:20]]
        if len(self.violations) > 20:
            lines.append(f"  ... ve {len(self.violations) - 20} tane daha")
        return "\n".join(lines)
