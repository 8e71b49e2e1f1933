"""
Mixed Radix - Karışık Tabanlı Sayılar ve Basamak Ters Çevirme
===============================================================
Çizelge ile yerleşim arasındaki dönüşümün aritmetiği.

Karışık taban nedir?
--------------------
Taban vektörü b = (b_1, …, b_m) olduğunda y sayısı basamaklara ayrılır:
    y = y_1 + y_2·b_1 + y_3·b_1·b_2 + …,   0 ≤ y_k < b_k

Basamaklar en anlamsızdan başlayarak tutulur (LSB-first).

Ters çevirme (flip):
--------------------
flip(y, k, b): y'nin en anlamsız k basamağının sırasını ters çevirir;
sonuç bflip(b, k) tabanında yorumlanır (b'nin ilk k bileşeni de ters).

    flip(10, 3, (2, 2, 3)) = 5     # (0,1,2) → (2,1,0) tabanı (3,2,2)
    flip(6, 3, (2, 2, 3))  = 4

flip(flip(y, k, b), k, bflip(b, k)) == y  (kendi tersidir)

Kullanım:
    from domain.mixed_radix import decompose, compose, flip, bflip

    digits = decompose(10, (2, 2, 3))   # → MixedRadixDigits((0, 1, 2), (2, 2, 3))
    digits.value                        # → 10
    str(digits)                         # → "2_3 1_2 0_2"
"""

from dataclasses import dataclass
from math import prod
from typing import Sequence

from domain.errors import DigitOutOfRangeError, KOutOfRangeError, ValueOutOfRangeError


@dataclass(frozen=True)
class MixedRadixDigits:
    """
    Bir tabana göre basamaklar (en anlamsız basamak önce).

    Değişmez: 0 ≤ digits[i] < base[i] ve len(digits) == len(base)
    """
    digits: tuple[int, ...]
    base: tuple[int, ...]

    def __post_init__(self):
        if len(self.digits) != len(self.base):
            raise DigitOutOfRangeError(
                f"Basamak sayısı ({len(self.digits)}) taban uzunluğuna ({len(self.base)}) eşit değil"
            )
        for d, b in zip(self.digits, self.base):
            if not 0 <= d < b:
                raise DigitOutOfRangeError(f"Basamak {d}, [0, {b}) aralığında değil")

    @property
    def value(self) -> int:
        return compose(self.digits, self.base)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, index):
        return self.digits[index]

    def __str__(self) -> str:
        # En anlamlı basamak solda: "2_3 1_2 0_2"
        return " ".join(f"{d}_{b}" for d, b in reversed(list(zip(self.digits, self.base))))


def decompose(y: int, base: Sequence[int]) -> MixedRadixDigits:
    """
    y'yi karışık tabanlı basamaklarına ayır.

    Sonuç basamak demeti gibi gezilir ve dilimlenir; .digits ham demettir.

    Fırlatır:
        ValueOutOfRangeError: y < 0 veya y ≥ Π b_i

    Örnek:
        decompose(10, (2, 2, 3)).digits   # → (0, 1, 2)
    """
    if y < 0 or y >= prod(base):
        raise ValueOutOfRangeError(f"{y}, [0, {prod(base)}) aralığında değil")
    digits = []
    for b in base:
        digits.append(y % b)
        y //= b
    return MixedRadixDigits(tuple(digits), tuple(base))


def compose(digits: Sequence[int], base: Sequence[int]) -> int:
    """
    Basamaklardan sayıyı geri kur.

    Fırlatır:
        DigitOutOfRangeError: Bir basamak kendi tabanının dışındaysa
    """
    if len(digits) != len(base):
        raise DigitOutOfRangeError(
            f"Basamak sayısı ({len(digits)}) taban uzunluğuna ({len(base)}) eşit değil"
        )
    value = 0
    for d, b in zip(reversed(digits), reversed(base)):
        if not 0 <= d < b:
            raise DigitOutOfRangeError(f"Basamak {d}, [0, {b}) aralığında değil")
        value = value * b + d
    return value


def bflip(base: Sequence[int], k: int) -> tuple[int, ...]:
    """
    Tabanın ilk k bileşenini ters çevir.

    Örnek:
        bflip((2, 2, 3), 3)   # → (3, 2, 2)
        bflip((2, 3, 5), 2)   # → (3, 2, 5)
    """
    if not 0 <= k <= len(base):
        raise KOutOfRangeError(f"k={k}, [0, {len(base)}] aralığında değil")
    return tuple(reversed(base[:k])) + tuple(base[k:])


def flip(y: int, k: int, base: Sequence[int]) -> int:
    """
    y'nin en anlamsız k basamağını ters çevir; sonuç bflip(base, k) tabanında.

    Fırlatır:
        KOutOfRangeError: k > len(base) veya k < 0
        ValueOutOfRangeError: y tabanın aralığı dışında

    Örnek:
        flip(10, 3, (2, 2, 3))   # → 5
        flip(6, 3, (2, 2, 3))    # → 4
    """
    if not 0 <= k <= len(base):
        raise KOutOfRangeError(f"k={k}, [0, {len(base)}] aralığında değil")
    digits = decompose(y, base).digits
    flipped = tuple(reversed(digits[:k])) + digits[k:]
    return compose(flipped, bflip(base, k))
