"""
Periods - Harmonik Periyot Kümesi
==================================
Harmonik periyot kümesi ve ondan türeyen bütün büyüklükler.

Harmonik ne demek?
------------------
Periyotlar sıralandığında her biri bir öncekinin tam katıdır:
    T_0 = 2, T_1 = 4, T_2 = 12   → oranlar (2, 3)

Bu oranlar "taban vektörü" b'yi verir. Kümülatif çarpımlar
B_k = b_1·…·b_k (B_0 = 1) her periyodun kaç "satır" sürdüğünü söyler.

Türeyen büyüklükler:
    w         = T_0            → kutunun genişliği
    H         = B_{r-1}        → kutunun yüksekliği (satır sayısı)
    H_k       = H / B_k        → periyodu T_k olan işin dikdörtgen yüksekliği
    hiperperiyot = T_{r-1}     (= w·H)

Kullanım:
    from domain.periods import build_period_set

    ps = build_period_set([4, 2, 12, 4])
    print(ps.periods)       # (2, 4, 12)
    print(ps.base_vector)   # (2, 3)
    print(ps.heights)       # (6, 3, 1)
"""

from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Iterable

from domain.errors import EmptyPeriodSetError, NonHarmonicError


@dataclass(frozen=True)
class HarmonicPeriodSet:
    """
    Tekilleştirilmiş, artan sırada harmonik periyotlar.

    Değişmezler:
        - len(base_vector) == r - 1 ve her b_k ≥ 2
        - periods[k] == width * cumulative[k]
        - heights[k] * cumulative[k] == bin_height
    """
    periods: tuple[int, ...]

    def __post_init__(self):
        if not self.periods or any(t <= 0 for t in self.periods):
            raise EmptyPeriodSetError(f"Geçersiz periyot listesi: {self.periods}")
        for prev, cur in zip(self.periods, self.periods[1:]):
            if cur % prev != 0 or cur // prev < 2:
                raise NonHarmonicError(
                    f"{cur} periyodu {prev} periyodunun ≥2 katı değil"
                )

    @property
    def r(self) -> int:
        """Farklı periyot sayısı."""
        return len(self.periods)

    @cached_property
    def base_vector(self) -> tuple[int, ...]:
        """b = (b_1, …, b_{r-1}), b_k = T_k / T_{k-1}."""
        return tuple(cur // prev for prev, cur in zip(self.periods, self.periods[1:]))

    @cached_property
    def cumulative(self) -> tuple[int, ...]:
        """(B_0, …, B_{r-1}), B_0 = 1."""
        return tuple(t // self.periods[0] for t in self.periods)

    @property
    def width(self) -> int:
        """Kutu genişliği w = T_0."""
        return self.periods[0]

    @property
    def bin_height(self) -> int:
        """Kutu yüksekliği H = B_{r-1}."""
        return self.cumulative[-1]

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """(H_0, …, H_{r-1}), H_k = H / B_k; H_0 = H ve H_{r-1} = 1."""
        h = self.bin_height
        return tuple(h // b for b in self.cumulative)

    @property
    def hyperperiod(self) -> int:
        """En büyük periyot T_{r-1} (= w·H)."""
        return self.periods[-1]

    def index_of(self, period: int) -> int:
        """Periyot değerinden indeks k bul; küme dışındaysa ValueError."""
        try:
            return self.periods.index(period)
        except ValueError:
            raise ValueError(f"{period} periyodu kümede yok: {self.periods}") from None

    def ratio(self, k: int) -> int:
        """H_k / H_{k+1} = b_{k+1}: k seviyesindeki bir alt kutunun çocuk sayısı."""
        return self.base_vector[k]


def build_period_set(periods: Iterable[int]) -> HarmonicPeriodSet:
    """
    Ham periyot listesinden harmonik periyot kümesi kur.

    Tekrarlar atılır, değerler sıralanır, harmoniklik doğrulanır.

    Parametreler:
        periods: Pozitif tamsayı periyotlar (sırasız, tekrarlı olabilir)

    Döndürür:
        HarmonicPeriodSet

    Fırlatır:
        EmptyPeriodSetError: Liste boşsa veya pozitif olmayan değer varsa
        NonHarmonicError: Bölünebilirlik veya oran ≥ 2 koşulu bozuksa

    Örnek:
        build_period_set([4, 2, 12, 4]).base_vector   # → (2, 3)
        build_period_set([2, 3])                      # → NonHarmonicError
    """
    values = list(periods)
    if not values:
        raise EmptyPeriodSetError("Periyot listesi boş")
    if any(int(t) != t or t <= 0 for t in values):
        raise EmptyPeriodSetError(f"Periyotlar pozitif tamsayı olmalı: {values}")
    return HarmonicPeriodSet(tuple(sorted({int(t) for t in values})))


def periods_from_base(base_period: int, base_vector: Iterable[int]) -> HarmonicPeriodSet:
    """
    T_0 ve taban vektöründen periyot kümesi üret: T_k = T_0·B_k.

    Örnek:
        periods_from_base(800, [2, 2]).periods   # → (800, 1600, 3200)
    """
    vector = list(base_vector)
    periods = [base_period * prod(vector[:k]) for k in range(len(vector) + 1)]
    return build_period_set(periods)
