"""
Config - Proje Ayarları
========================
Ortam değişkenlerinden (veya depo kökündeki .env dosyasından) okunan
ayarlar. Anahtarların listesi için .env.example dosyasına bakın.

| Değişken                  | Varsayılan | Anlamı                                  |
|---------------------------|------------|-----------------------------------------|
| LOG_LEVEL                 | INFO       | Log seviyesi                            |
| HSCHED_EXACT_BUDGET_S     | 180        | Kesin aramanın varsayılan süre bütçesi  |
| HSCHED_EXACT_NODE_LIMIT   | (yok)      | Kesin aramanın düğüm bütçesi            |
| HSCHED_BRUTE_FORCE_CAP    | 10000000   | Kaba kuvvet arama uzayı sınırı          |
| HSCHED_UTILIZATION_FLOOR  | 0.7        | Kullanım deneyinin alt sınırı           |
| HSCHED_WORKERS            | 1          | Deneylerde süreç sayısı                 |

Kullanım:
    from config import get_settings

    settings = get_settings()
    print(settings.exact_budget_s)
"""

import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from domain.errors import ConfigInvalidError
from shared.utils.helpers import load_env


@dataclass(frozen=True)
class Settings:
    """Çalışma zamanı ayarları."""
    log_level: str = "INFO"
    exact_budget_s: float = 180.0
    exact_node_limit: Optional[int] = None
    brute_force_cap: int = 10_000_000
    utilization_floor: Fraction = Fraction(7, 10)
    workers: int = 1


def _read(name: str, cast, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw.strip())
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise ConfigInvalidError(f"{name}={raw!r} okunamadı: {e}") from e


def get_settings() -> Settings:
    """
    Ayarları ortamdan oku.

    Fırlatır:
        ConfigInvalidError: Bir değer çözümlenemezse veya aralık dışındaysa
    """
    load_env()
    settings = Settings(
        log_level=_read("LOG_LEVEL", str, "INFO"),
        exact_budget_s=_read("HSCHED_EXACT_BUDGET_S", float, 180.0),
        exact_node_limit=_read("HSCHED_EXACT_NODE_LIMIT", int, None),
        brute_force_cap=_read("HSCHED_BRUTE_FORCE_CAP", int, 10_000_000),
        utilization_floor=_read("HSCHED_UTILIZATION_FLOOR", Fraction, Fraction(7, 10)),
        workers=_read("HSCHED_WORKERS", int, 1),
    )
    if settings.exact_budget_s <= 0:
        raise ConfigInvalidError("HSCHED_EXACT_BUDGET_S pozitif olmalı")
    if not 0 <= settings.utilization_floor <= 1:
        raise ConfigInvalidError("HSCHED_UTILIZATION_FLOOR [0, 1] aralığında olmalı")
    if settings.workers < 1:
        raise ConfigInvalidError("HSCHED_WORKERS en az 1 olmalı")
    return settings
