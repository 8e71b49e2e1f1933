"""
Files - Örnek ve Çizelge Dosyaları
===================================
Örnekler ve çizelgeler JSON olarak saklanır. Şema pydantic ile doğrulanır,
alan kuralları (uyumlu periyotlar, 1 ≤ c ≤ T, tekil kimlik) domain
katmanında kontrol edilir.

Örnek dosyası:
    {
      "name": "demo",
      "periods": [2, 4],
      "jobs": [{"id": 1, "period": 2, "c": 1}, {"id": 2, "period": 4, "c": 1}]
    }

Çizelge dosyası:
    {"instance": "demo", "starts": {"1": 0, "2": 1}}

Hatalar:
    InstanceParseError     → JSON sözdizimi (satır numarasıyla) veya şema alanı
    SchemaViolationError   → şema doğru ama alan kuralı bozuk

Kullanım:
    from lab.files import load_instance, save_schedule

    instance = load_instance("demo.json")
    save_schedule("demo.schedule.json", outcome.schedule, instance)
"""

import json
import os
import sys
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, ValidationError

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from domain.errors import HarmonicSchedulingError, InstanceParseError, SchemaViolationError
from domain.instance import Instance, make_instance
from feasibility.models import Schedule
from shared.telemetry.logger import get_logger

logger = get_logger("lab.files")


class JobEntry(BaseModel):
    """Dosyadaki bir iş."""
    id: int
    period: int = Field(..., ge=1)
    c: int = Field(..., ge=1, description="İşlem süresi")


class InstanceFile(BaseModel):
    """Örnek dosyasının şeması."""
    name: str = ""
    periods: list[int] = Field(..., min_length=1)
    jobs: list[JobEntry] = Field(default_factory=list)
    metadata: dict = Field(default_factory=dict)


class ScheduleFile(BaseModel):
    """Çizelge dosyasının şeması."""
    instance: str = ""
    starts: dict[int, int]


def _parse(text: str, model: type[BaseModel], source: str) -> BaseModel:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceParseError(f"{source}: geçersiz JSON ({e.msg})", line=e.lineno) from e
    try:
        return model.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(p) for p in first["loc"]) or None
        raise InstanceParseError(f"{source}: {first['msg']}", field=field) from e


def parse_instance(text: str, source: str = "<metin>") -> Instance:
    """
    JSON metninden örnek oluştur.

    Fırlatır:
        InstanceParseError: Sözdizimi veya şema hatası
        SchemaViolationError: Uyumsuz periyotlar, geçersiz iş, tekrarlı kimlik
    """
    data = _parse(text, InstanceFile, source)
    try:
        instance = make_instance(
            data.periods,
            [(j.id, j.c, j.period) for j in data.jobs],
            name=data.name,
        )
    except HarmonicSchedulingError as e:
        raise SchemaViolationError(f"{source}: {e}") from e
    if data.metadata:
        instance.metadata.update(data.metadata)
    return instance


def load_instance(path: str | Path) -> Instance:
    """Örnek dosyasını oku (bkz. parse_instance)."""
    path = Path(path)
    instance = parse_instance(path.read_text(encoding="utf-8"), source=str(path))
    if not instance.name:
        instance = Instance(
            period_set=instance.period_set,
            jobs=instance.jobs,
            name=path.stem,
            metadata=instance.metadata,
        )
    logger.debug(f"📂 {path}: {len(instance)} iş")
    return instance


def instance_to_dict(instance: Instance) -> dict:
    ps = instance.period_set
    return {
        "name": instance.name,
        "periods": list(ps.periods),
        "jobs": [
            {"id": j.id, "period": ps.periods[j.period_index], "c": j.processing_time}
            for j in instance.jobs
        ],
        "metadata": dict(instance.metadata),
    }


def save_instance(path: str | Path, instance: Instance) -> Path:
    """Örneği JSON olarak yaz; dizin yoksa oluşturulur."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(instance_to_dict(instance), indent=2, ensure_ascii=False), encoding="utf-8")
    logger.debug(f"💾 {path} yazıldı")
    return path


def load_schedule(path: str | Path, instance: Optional[Instance] = None) -> Schedule:
    """
    Çizelge dosyasını oku.

    instance verilirse iş kümesinin aynı olduğu kontrol edilir.

    Fırlatır:
        InstanceParseError: Sözdizimi veya şema hatası
        SchemaViolationError: İş kümesi örnekle uyuşmuyor veya negatif başlangıç
    """
    path = Path(path)
    data = _parse(path.read_text(encoding="utf-8"), ScheduleFile, str(path))
    negative = [job_id for job_id, s in data.starts.items() if s < 0]
    if negative:
        raise SchemaViolationError(f"{path}: negatif başlangıç zamanı: {negative}")
    if instance is not None:
        expected = {j.id for j in instance.jobs}
        if set(data.starts) != expected:
            missing = sorted(expected - set(data.starts))
            extra = sorted(set(data.starts) - expected)
            raise SchemaViolationError(f"{path}: iş kümesi uyuşmuyor (eksik {missing}, fazla {extra})")
    return Schedule(starts=dict(data.starts))


def save_schedule(path: str | Path, schedule: Schedule, instance: Optional[Instance] = None) -> Path:
    """Çizelgeyi JSON olarak yaz."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = ScheduleFile(
        instance=instance.name if instance is not None else "",
        starts=dict(sorted(schedule.starts.items())),
    )
    path.write_text(payload.model_dump_json(indent=2), encoding="utf-8")
    return path
