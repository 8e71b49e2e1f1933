"""
Generator Config - Üreteç Yapılandırmaları
===========================================
Rastgele örnek üreteçlerinin parametreleri. Oluşturulurken doğrulanır;
geçersiz değer ConfigInvalidError fırlatır.

Kullanım:
    from lab.gen_config import SplitSchemeConfig, difficult_preset

    cfg = SplitSchemeConfig(base_period=10, base_vector=(2, 2, 2), seed=7)
    hard = difficult_preset("D_2^6", seed=3)
"""

from dataclasses import dataclass
from math import prod

from domain.errors import ConfigInvalidError

# Zor örnek kümeleri: ad → (oran, seviye sayısı)
DIFFICULT_PRESETS: dict[str, tuple[int, int]] = {
    "D_2^6": (2, 6),
    "D_3^6": (3, 6),
    "D_5^6": (5, 6),
    "D_20^3": (20, 3),
}

# Zor üreteçte alt kutu sayısının üst sınırı
MAX_SUB_BINS = 2_000_000


@dataclass(frozen=True)
class SplitSchemeConfig:
    """
    Bölme şeması (ve π_save > 0 ise değiştirilmiş bölme şeması).

    Attributes:
        base_period: T_0
        base_vector: b = (b_1, …, b_{r-1})
        iterations: Deneme sayısı (reddedilen denemeler de sayılır)
        divide_prob: π_divide, bir işi alt periyoda bölme olasılığı
        save_prob: π_save, çekilen işi kalıcı olarak dokunulmaz yapma olasılığı
        min_processing_time: Bölmede oluşabilecek en küçük süre
        split_mode: "even" (⌈c/2⌉ + ⌊c/2⌋) veya "random" (rastgele kesim noktası)
        seed: Rastgelelik tohumu
    """
    base_period: int = 10
    base_vector: tuple[int, ...] = (2, 2, 2, 2)
    iterations: int = 60
    divide_prob: float = 0.5
    save_prob: float = 0.0
    min_processing_time: int = 1
    split_mode: str = "even"
    seed: int = 0
    name: str = ""

    def __post_init__(self):
        if self.base_period < 1:
            raise ConfigInvalidError(f"T_0 pozitif olmalı: {self.base_period}")
        if any(b < 2 for b in self.base_vector):
            raise ConfigInvalidError(f"Taban vektörü bileşenleri ≥ 2 olmalı: {self.base_vector}")
        if self.iterations < 0:
            raise ConfigInvalidError(f"Deneme sayısı negatif olamaz: {self.iterations}")
        for label, p in (("π_divide", self.divide_prob), ("π_save", self.save_prob)):
            if not 0.0 <= p <= 1.0:
                raise ConfigInvalidError(f"{label} [0, 1] aralığında olmalı: {p}")
        if not 1 <= self.min_processing_time <= self.base_period:
            raise ConfigInvalidError(
                f"En küçük süre [1, T_0] aralığında olmalı: {self.min_processing_time}"
            )
        if self.split_mode not in ("even", "random"):
            raise ConfigInvalidError(f"Bilinmeyen bölme kipi: {self.split_mode}")


@dataclass(frozen=True)
class DifficultConfig:
    """
    U = 1 olan, kanonik bir yerleşimden geriye doğru kurulan zor örnekler.

    Periyotlar base_period · ratio^k, k = 0 … levels−1.

    Attributes:
        c_min: Örnekleme yapılan en küçük genişlik
        large_threshold / large_fraction: İşlerin en az bu oranı
            large_threshold'dan uzun olana kadar yeniden örneklenir
        reserve_prob: Bir iç alt kutunun kendi yüksekliğinde iş taşıma olasılığı
        reserve_share: İç alt kutunun ayırabileceği en büyük genişlik payı
        max_attempts: Yeniden örnekleme sınırı
    """
    ratio: int = 2
    levels: int = 6
    base_period: int = 800
    c_min: int = 14
    large_threshold: int = 13
    large_fraction: float = 0.6
    reserve_prob: float = 0.9
    reserve_share: float = 1.0
    max_attempts: int = 50
    seed: int = 0
    name: str = ""

    def __post_init__(self):
        if self.ratio < 2:
            raise ConfigInvalidError(f"Oran ≥ 2 olmalı: {self.ratio}")
        if self.levels < 2:
            raise ConfigInvalidError(f"Seviye sayısı ≥ 2 olmalı: {self.levels}")
        if not 1 <= self.c_min <= self.base_period:
            raise ConfigInvalidError(f"c_min [1, T_0] aralığında olmalı: {self.c_min}")
        for label, p in (
            ("large_fraction", self.large_fraction),
            ("reserve_prob", self.reserve_prob),
            ("reserve_share", self.reserve_share),
        ):
            if not 0.0 <= p <= 1.0:
                raise ConfigInvalidError(f"{label} [0, 1] aralığında olmalı: {p}")
        if self.max_attempts < 1:
            raise ConfigInvalidError("max_attempts ≥ 1 olmalı")
        sub_bins = sum(prod([self.ratio] * k) for k in range(self.levels))
        if sub_bins > MAX_SUB_BINS:
            raise ConfigInvalidError(f"Alt kutu sayısı çok büyük: {sub_bins} > {MAX_SUB_BINS}")


def difficult_preset(name: str, seed: int = 0, **overrides) -> DifficultConfig:
    """
    Hazır zor küme yapılandırması.

    Fırlatır:
        ConfigInvalidError: Bilinmeyen küme adı
    """
    if name not in DIFFICULT_PRESETS:
        raise ConfigInvalidError(
            f"Bilinmeyen zor küme: {name} (seçenekler: {', '.join(DIFFICULT_PRESETS)})"
        )
    ratio, levels = DIFFICULT_PRESETS[name]
    return DifficultConfig(ratio=ratio, levels=levels, seed=seed, name=name, **overrides)
