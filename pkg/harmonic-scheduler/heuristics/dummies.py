"""
Dummies - Kukla Dikdörtgen Üreticileri
=======================================
RG-FF'nin ileriye bakma mekanizması: k+1 seviyesindeki (yüksekliği H_{k+1})
dikdörtgenler, yüksekliği H_k olan "kukla" dikdörtgenlerde toplanır.
Kuklalar ağaca asıl dikdörtgenlerle birlikte yerleştirilir; böylece daha
kısa dikdörtgenler için yer ayrılmış olur.

m = H_k / H_{k+1} olmak üzere bir kukla, genişliği ℓ olan m torbadan oluşur
(her torba kuklanın bir satır şeridi).

Kötümser (pessimistic):
    - dikdörtgenler genişlik azalan sırada
    - her biri, sığdığı torbalar içinde en az boşluk bırakana (best fit)
    - sığmazsa: genişliği ℓ_i olan yeni kukla, m torba, ilk torbaya konur

İyimser (optimistic):
    - tek açık torba; kapasitesi ℓ·m (m torba uç uca)
    - en geniş kalan dikdörtgen sığarsa konur; sığmazsa boşluk kadarı konur,
      kalan parça listeye geri döner (bölme)
    - torba doluysa: en geniş kalan dikdörtgenin genişliğinde yeni kukla

Kullanım:
    from heuristics.dummies import BagItem, build_dummies_optimistic

    items = [BagItem(rect_id=1, width=3), BagItem(rect_id=2, width=1)]
    dummies = build_dummies_optimistic(items, ratio=2)
    # → tek kukla (genişlik 3), torbada 2 birim boşluk
"""

import heapq
from bisect import bisect_left, insort
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple, Sequence


class BagItem(NamedTuple):
    """Torbalara konacak bir dikdörtgen (gerçek veya alt seviyenin kuklası)."""
    rect_id: Any
    width: int
    is_dummy: bool = False
    order: int = 0      # gerçekte iş kimliği, kuklada sıra numarası


@dataclass
class Constituent:
    """Torbadaki bir parça; fraction = parça genişliği / asıl genişlik."""
    rect_id: Any
    width: int
    fraction: Fraction = Fraction(1)


@dataclass
class Bag:
    """Kapasiteli torba."""
    capacity: int
    fill: int = 0
    contents: list[Constituent] = field(default_factory=list)

    @property
    def residual(self) -> int:
        return self.capacity - self.fill

    def add(self, part: Constituent) -> None:
        self.contents.append(part)
        self.fill += part.width


@dataclass
class DummyRectangle:
    """Yüksekliği H_k olan kukla dikdörtgen."""
    id: str
    level: int
    height: int
    width: int
    seq: int
    bags: list[Bag] = field(default_factory=list)

    @property
    def constituents(self) -> list[Constituent]:
        return [part for bag in self.bags for part in bag.contents]

    @property
    def fill(self) -> int:
        return sum(bag.fill for bag in self.bags)

    def as_item(self) -> BagItem:
        return BagItem(rect_id=self.id, width=self.width, is_dummy=True, order=self.seq)


def _sorted_items(rectangles: Sequence[BagItem]) -> list[BagItem]:
    return sorted(rectangles, key=lambda it: (-it.width, it.is_dummy, it.order))


def _new_dummy(level: int, height: int, width: int, seq: int) -> DummyRectangle:
    return DummyRectangle(id=f"D{level}.{seq}", level=level, height=height, width=width, seq=seq)


def build_dummies_pessimistic(
    rectangles: Sequence[BagItem],
    ratio: int,
    level: int = 0,
    height: int = 0,
) -> list[DummyRectangle]:
    """
    Kötümser kukla üretimi (bölme yok, best fit).

    Parametreler:
        rectangles: Yüksekliği H_{k+1} olan dikdörtgenler
        ratio: m = H_k / H_{k+1}
        level, height: Üretilen kuklaların seviyesi k ve yüksekliği H_k

    Örnek:
        genişlikler {4, 4}, m=2 → tek kukla (genişlik 4), iki torba da dolu
    """
    dummies: list[DummyRectangle] = []
    bags: list[Bag] = []
    # (kalan, torba sırası): bisect ile en az boşluk bırakan torba
    open_bags: list[tuple[int, int]] = []

    for item in _sorted_items(rectangles):
        pos = bisect_left(open_bags, (item.width, -1))
        if pos < len(open_bags):
            _, bag_index = open_bags.pop(pos)
            bag = bags[bag_index]
        else:
            dummy = _new_dummy(level, height, item.width, len(dummies))
            dummies.append(dummy)
            for _ in range(ratio):
                dummy.bags.append(Bag(capacity=item.width))
                bags.append(dummy.bags[-1])
            bag_index = len(bags) - ratio
            bag = bags[bag_index]
            for extra in range(bag_index + 1, len(bags)):
                insort(open_bags, (bags[extra].residual, extra))
        bag.add(Constituent(item.rect_id, item.width))
        if bag.residual > 0:
            insort(open_bags, (bag.residual, bag_index))
    return dummies


def build_dummies_optimistic(
    rectangles: Sequence[BagItem],
    ratio: int,
    level: int = 0,
    height: int = 0,
) -> list[DummyRectangle]:
    """
    İyimser kukla üretimi (tek açık torba, bölmeye izin var).

    Örnek:
        genişlikler {3, 1}, m=2 → tek kukla (genişlik 3), 2 birim boşluk
    """
    dummies: list[DummyRectangle] = []
    heap: list[tuple] = []
    counter = 0
    for item in rectangles:
        heapq.heappush(heap, (-item.width, item.is_dummy, item.order, counter, item.rect_id, item.width))
        counter += 1

    current: Bag | None = None
    while heap:
        neg_width, is_dummy, order, _, rect_id, original = heapq.heappop(heap)
        width = -neg_width
        if current is None or current.residual == 0:
            dummy = _new_dummy(level, height, width, len(dummies))
            current = Bag(capacity=width * ratio)
            dummy.bags.append(current)
            dummies.append(dummy)
        part = min(width, current.residual)
        current.add(Constituent(rect_id, part, Fraction(part, original)))
        if part < width:
            heapq.heappush(heap, (-(width - part), is_dummy, order, counter, rect_id, original))
            counter += 1
    return dummies
