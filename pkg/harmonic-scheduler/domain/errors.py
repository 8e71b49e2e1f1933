"""
Errors - Hata Sınıfları
========================
Kütüphanenin fırlattığı tüm hatalar tek bir hiyerarşidedir.

Kural:
- Girdi/sözleşme ihlali → exception (bu dosyadaki sınıflar)
- Algoritmik başarısızlık (sığmadı, bütçe bitti) → sonuç nesnesinde durum

Kullanım:
    from domain.errors import HarmonicSchedulingError, NonHarmonicError

    try:
        build_period_set([2, 3])
    except NonHarmonicError as e:
        print(f"Harmonik değil: {e}")
"""


class HarmonicSchedulingError(Exception):
    """Tüm kütüphane hatalarının kökü."""


# ============================================================
# domain
# ============================================================

class NonHarmonicError(HarmonicSchedulingError, ValueError):
    """Sıralı periyotlardan biri bir öncekini tam bölmüyor (veya oran < 2)."""


class EmptyPeriodSetError(HarmonicSchedulingError, ValueError):
    """Periyot listesi boş ya da pozitif olmayan periyot içeriyor."""


class ValueOutOfRangeError(HarmonicSchedulingError, ValueError):
    """Karışık tabanlı sayı tabanın temsil aralığı dışında."""


class DigitOutOfRangeError(HarmonicSchedulingError, ValueError):
    """Basamak 0 ≤ y_k < b_k koşulunu sağlamıyor."""


class KOutOfRangeError(HarmonicSchedulingError, ValueError):
    """Ters çevrilecek basamak sayısı k taban uzunluğunu aşıyor."""


class InvalidJobError(HarmonicSchedulingError, ValueError):
    """İşin süresi veya periyot indeksi geçersiz."""


class DuplicateJobIdError(HarmonicSchedulingError, ValueError):
    """Aynı kimlik iki işte kullanılmış."""


# ============================================================
# feasibility
# ============================================================

class InvalidPlacementError(HarmonicSchedulingError, ValueError):
    """Başlangıç zamanı ya da dikdörtgen konumu kendi sınırlarının dışında."""


class JobSetMismatchError(HarmonicSchedulingError, ValueError):
    """Çizelgedeki iş kümesi örnekteki iş kümesiyle aynı değil."""


class InvalidPackingError(HarmonicSchedulingError, ValueError):
    """Yerleşim geçerli değil (çakışma, sınır dışı, bölünebilirlik)."""


class InvalidScheduleError(HarmonicSchedulingError, ValueError):
    """Çizelge geçerli değil."""


# ============================================================
# transform
# ============================================================

class WouldOverflowError(HarmonicSchedulingError):
    """Ekleme, kapsanan bir satırın yükünü w üzerine çıkarırdı."""


class DummiesPresentError(HarmonicSchedulingError):
    """Ağaçta hâlâ kukla dikdörtgen var; yerleşime çevrilemez."""


# ============================================================
# exact
# ============================================================

class InstanceTooLargeError(HarmonicSchedulingError):
    """Kaba kuvvet taraması için arama uzayı sınırı aşıldı."""


# ============================================================
# lab
# ============================================================

class ConfigInvalidError(HarmonicSchedulingError, ValueError):
    """Üreteç veya deney yapılandırması geçersiz."""


class InstanceParseError(HarmonicSchedulingError, ValueError):
    """
    Örnek/çizelge dosyası okunamadı.

    `line` JSON sözdizimi hatalarında, `field` şema hatalarında doludur.
    """

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        location = []
        if line is not None:
            location.append(f"satır {line}")
        if field:
            location.append(f"alan '{field}'")
        prefix = f"[{', '.join(location)}] " if location else ""
        super().__init__(f"{prefix}{message}")


class SchemaViolationError(HarmonicSchedulingError, ValueError):
    """Dosya sözdizimi doğru ama içerik alan modeline uymuyor."""
