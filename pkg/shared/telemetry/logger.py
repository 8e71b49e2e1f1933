"""
Logger - Loglama Sistemi
=========================
Çözücülerin (heuristic, kesin arama, deney koşucusu) ne yaptığını takip
etmemizi sağlar.

Neden loglama önemli?
---------------------
Bir sezgisel yüzlerce dikdörtgen yerleştirir, kesin arama binlerce düğüm
açar. Bir örnek "neden başarısız oldu?" sorusunu cevaplamak için hangi işin
hangi alt kutuya konduğunu görmek gerekir.

Loglama Seviyeleri:
- DEBUG: Her yerleştirme, her arama düğümü
- INFO: Çalıştırma başı/sonu, deney ilerlemesi
- WARNING: Zorla taşma, bütçe tükenmesi
- ERROR: Dosya/ayrıştırma hataları

Kullanım:
    from shared.telemetry.logger import get_logger

    logger = get_logger("heuristics.sff")

    logger.debug("J4 → alt kutu (2, 1), x=3")
    logger.info("S-FF tamamlandı: 12 iş yerleşti")
    logger.warning("Kukla dikdörtgen zorla yerleştirildi")
    logger.error("Örnek dosyası okunamadı: satır 7")
"""

import os
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Optional

from dotenv import load_dotenv

load_dotenv()

# Rich kütüphanesi yüklüyse güzel çıktı kullan
try:
    from rich.logging import RichHandler
    RICH_AVAILABLE = True
except ImportError:
    RICH_AVAILABLE = False


def get_logger(name: str, level: str = None) -> logging.Logger:
    """
    İsimlendirilmiş logger oluştur.

    Parametreler:
        name: Logger adı (genellikle paket.modül, örn: "exact.search")
        level: Loglama seviyesi (varsayılan: .env'den veya INFO)

    Döndürür:
        logging.Logger: Yapılandırılmış logger

    Örnek:
        logger = get_logger("lab.experiments")
        logger.info("Başarı deneyi başladı: 200 örnek × 6 yöntem")
        logger.warning("exact bütçeyi aştı: unknown")
    """
    log_level = level or os.getenv("LOG_LEVEL", "INFO")

    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, log_level.upper(), logging.INFO))

    # Handler zaten eklenmişse tekrar ekleme
    if logger.handlers:
        return logger

    if RICH_AVAILABLE:
        handler = RichHandler(
            rich_tracebacks=True,
            show_time=True,
            show_path=False,
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
    else:
        handler = logging.StreamHandler()
        handler.setFormatter(
            logging.Formatter(
                "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
                datefmt="%H:%M:%S",
            )
        )

    logger.addHandler(handler)
    return logger


@dataclass
class TraceStep:
    """Tek bir yerleştirme (veya başarısızlık) kaydı."""
    kind: str                     # "place", "forced", "failure"
    rect_id: Any                  # İş kimliği veya kukla kimliği
    level: int                    # Yükseklik indeksi k
    sub_bin: Optional[int] = None  # Alt kutu indeksi q
    x: Optional[int] = None       # Yatay konum
    note: str = ""


class SolveTracer:
    """
    Bir çözücü çalıştırmasını adım adım izleyen izleyici.

    Her yerleştirmeyi kaydeder ve sonunda özet rapor üretir.
    Adım listesi sezgisel sonucunun `trace` alanına olduğu gibi konur.

    Kullanım:
        tracer = SolveTracer("S-FF")

        tracer.start_run("ornek-01", job_count=12)
        tracer.log_placement(rect_id=4, level=2, sub_bin=1, x=3)
        tracer.log_failure(rect_id=9, level=3, reason="sığacak alt kutu yok")
        tracer.end_run(success=False)

        print(tracer.get_summary())
    """

    def __init__(self, method_name: str):
        self.method_name = method_name
        self.logger = get_logger(f"tracer.{method_name}")
        self.steps: list[TraceStep] = []
        self.start_time: float = None
        self.instance_name: str = ""
        self.success: Optional[bool] = None

    def start_run(self, instance_name: str, job_count: int = 0):
        """Yeni bir çalıştırmayı başlat."""
        self.instance_name = instance_name
        self.start_time = time.perf_counter()
        self.steps = []
        self.success = None
        self.logger.debug(f"📋 {self.method_name} başladı: {instance_name} ({job_count} iş)")

    def log_placement(self, rect_id: Any, level: int, sub_bin: int, x: int):
        """Normal yerleştirmeyi kaydet."""
        self.steps.append(TraceStep("place", rect_id, level, sub_bin, x))
        self.logger.debug(f"📦 {rect_id} → alt kutu ({level}, {sub_bin}), x={x}")

    def log_forced(self, rect_id: Any, level: int, sub_bin: int, x: int, note: str = ""):
        """Kapasiteyi aşan (zorla) yerleştirmeyi kaydet."""
        self.steps.append(TraceStep("forced", rect_id, level, sub_bin, x, note))
        self.logger.debug(f"⚠️ Zorla yerleştirme: {rect_id} → ({level}, {sub_bin}) {note}")

    def log_failure(self, rect_id: Any, level: int, reason: str):
        """Yerleştirilemeyen dikdörtgeni kaydet."""
        self.steps.append(TraceStep("failure", rect_id, level, note=reason))
        self.logger.debug(f"❌ {rect_id} yerleştirilemedi: {reason}")

    @property
    def elapsed_s(self) -> float:
        """Başlangıçtan bu yana geçen süre (saniye)."""
        return time.perf_counter() - self.start_time if self.start_time else 0.0

    def end_run(self, success: bool):
        """Çalıştırmayı sonlandır."""
        self.success = success
        status = "✅ Başarılı" if success else "❌ Başarısız"
        self.logger.info(
            f"{status} | {self.method_name} | {self.instance_name} | "
            f"Süre: {self.elapsed_s:.3f}s | Adım: {len(self.steps)}"
        )

    def get_summary(self) -> str:
        """Çalıştırma özetini döndür."""
        forced = [s for s in self.steps if s.kind == "forced"]
        failures = [s for s in self.steps if s.kind == "failure"]

        return (
            f"\n{'='*50}\n"
            f"📊 Çözücü İzleme Raporu\n"
            f"{'='*50}\n"
            f"Yöntem:      {self.method_name}\n"
            f"Örnek:       {self.instance_name}\n"
            f"Süre:        {self.elapsed_s:.3f}s\n"
            f"Yerleştirme: {len(self.steps) - len(failures)}\n"
            f"Zorla:       {len(forced)}\n"
            f"Başarısız:   {len(failures)}\n"
            f"{'='*50}"
        )
