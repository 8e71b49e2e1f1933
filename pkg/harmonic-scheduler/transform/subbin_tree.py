"""
Sub-Bin Tree - Sıkıştırılmış Alt Kutu Ağacı
=============================================
Kanonik yerleşimlerin iç gösterimi. Sezgiseller ve kesin arama bu ağaç
üzerinde çalışır.

Yapı
----
w × H kutusu, yüksekliği H_k olan B_k tane alt kutuya bölünür: (k, q),
q = 0 … B_k − 1, q. alt kutu [q·H_k, (q+1)·H_k) satırlarını kaplar.
(k, q) alt kutusunun çocukları (k+1, q·b_{k+1} + d), d = 0 … b_{k+1} − 1.

Kanonik yerleşimde:
- (k, q) alt kutusunda yalnızca yüksekliği H_k olan dikdörtgenler durur
- alt kutunun yükü L = içindeki genişliklerin toplamı
- alt kutu, atalarının yükleri toplamı kadar sağdan (x_offset) başlar

Satır kapasitesi: her satır i için Σ_k L^k_{⌊i/H_k⌋} ≤ w

Sıkıştırma
----------
Yalnızca içinde (veya altında) dikdörtgen olan alt kutular düğüm olarak
tutulur ("materialized"). Boş kardeşlerin hepsi aynıdır; sorgular boş
bölgeyi tek bir sanal aday (en küçük q) ile temsil eder.

Her düğüm, her hedef seviye t için altındaki en az dolu satır yolunun yükünü
(occ[t]) tutar; böylece first-fit ve en-az-dolu sorguları kökten aşağı tek
bir inişle cevaplanır.

Kullanım:
    from transform.subbin_tree import SubBinTree, tree_to_packing

    tree = SubBinTree(instance.period_set)
    slot = tree.first_fit(level=1, width=3)
    placed = tree.insert(slot, width=3, rect_id=7)
    packing = tree_to_packing(tree)
"""

from dataclasses import dataclass
from itertools import product
from typing import Any, Iterator, NamedTuple, Optional

from domain.errors import DummiesPresentError, ValueOutOfRangeError, WouldOverflowError
from domain.periods import HarmonicPeriodSet
from feasibility.models import Packing, Placement

_INF = float("inf")


@dataclass(eq=False)
class PlacedRectangle:
    """Ağaca yerleştirilmiş bir dikdörtgen (gerçek veya kukla)."""
    rect_id: Any
    width: int
    level: int
    sub_bin: int
    x: int
    is_dummy: bool = False
    forced: bool = False


class SubBin:
    """Ağaçtaki tek bir (k, q) alt kutusu."""

    __slots__ = (
        "level", "index", "v", "digit", "parent", "children",
        "items", "load", "dummy_load", "occ", "occ_real",
    )

    def __init__(self, level: int, index: int, v: int, digit: int, parent: Optional["SubBin"]):
        self.level = level
        self.index = index
        self.v = v                      # alt kutunun çizelgedeki satırı
        self.digit = digit              # ebeveyn içindeki sıra
        self.parent = parent
        self.children: dict[int, SubBin] = {}
        self.items: list[PlacedRectangle] = []
        self.load = 0                   # kuklalar dahil (nominal)
        self.dummy_load = 0
        self.occ: list[float] = []
        self.occ_real: list[float] = []

    @property
    def real_load(self) -> int:
        """Kuklalar hariç yük."""
        return self.load - self.dummy_load

    def __repr__(self) -> str:
        return f"<SubBin ({self.level}, {self.index}) load={self.load} dummy={self.dummy_load}>"


class SubBinSlot(NamedTuple):
    """
    Sorgu sonucu: bir (k, q) alt kutusu.

    `node` doluysa alt kutu ağaçta vardır. Yoksa alt kutu sanaldır:
    `anchor` en derin mevcut atası, `tail` ondan aşağı inen basamaklardır.
    """
    level: int
    index: int
    v: int
    node: Optional[SubBin]
    anchor: SubBin
    tail: tuple[int, ...] = ()

    @property
    def is_virtual(self) -> bool:
        return self.node is None


class SubBinTree:
    """
    Sıkıştırılmış, tembel alt kutu ağacı.

    Yükler iki türlü raporlanır: nominal (kuklalar dahil) ve gerçek
    (kuklalar hariç). Sorgu metotlarının `real_only` bayrağı ikincisini seçer.
    """

    def __init__(self, period_set: HarmonicPeriodSet):
        self.period_set = period_set
        self.width = period_set.width
        self.r = period_set.r
        self._branching = period_set.base_vector
        self._cumulative = period_set.cumulative
        self._heights = period_set.heights
        self.root = SubBin(0, 0, 0, 0, None)
        self._index: dict[tuple[int, int], SubBin] = {(0, 0): self.root}
        self._dummy_count = 0
        self._refresh(self.root)

    # ─────────────────────────────────────────
    # Yük vektörleri
    # ─────────────────────────────────────────

    def _refresh(self, node: SubBin) -> None:
        depth = self.r - node.level
        children = list(node.children.values())
        has_gap = node.level < self.r - 1 and len(children) < self._branching[node.level]
        for attr, load in (("occ", node.load), ("occ_real", node.real_load)):
            vectors = [getattr(c, attr) for c in children]
            vec = [load + max((cv[0] for cv in vectors), default=0)]
            for t in range(1, depth):
                best = min((cv[t - 1] for cv in vectors), default=_INF)
                if has_gap:
                    best = min(best, 0)
                vec.append(load + best)
            setattr(node, attr, vec)

    def _propagate(self, node: Optional[SubBin]) -> None:
        while node is not None:
            self._refresh(node)
            node = node.parent

    @staticmethod
    def _load_of(node: SubBin, real_only: bool) -> int:
        return node.real_load if real_only else node.load

    def _path_load(self, node: Optional[SubBin], real_only: bool = False) -> int:
        """node ve bütün atalarının yükleri toplamı (node=None → 0)."""
        total = 0
        while node is not None:
            total += self._load_of(node, real_only)
            node = node.parent
        return total

    # ─────────────────────────────────────────
    # Alt kutu adresleme
    # ─────────────────────────────────────────

    def _virtual(self, anchor: SubBin, tail: tuple[int, ...]) -> SubBinSlot:
        q, v, level = anchor.index, anchor.v, anchor.level
        for d in tail:
            q = q * self._branching[level] + d
            v += d * self._cumulative[level]
            level += 1
        return SubBinSlot(level, q, v, None, anchor, tail)

    @staticmethod
    def _of_node(node: SubBin) -> SubBinSlot:
        return SubBinSlot(node.level, node.index, node.v, node, node)

    def slot(self, level: int, index: int) -> SubBinSlot:
        """
        (k, q) alt kutusunu adresle (ağaçta yoksa sanal slot döner).

        Fırlatır:
            ValueOutOfRangeError: k ∉ [0, r) veya q ∉ [0, B_k)
        """
        if not 0 <= level < self.r:
            raise ValueOutOfRangeError(f"Seviye {level}, [0, {self.r}) aralığında değil")
        if not 0 <= index < self._cumulative[level]:
            raise ValueOutOfRangeError(
                f"Alt kutu {index}, [0, {self._cumulative[level]}) aralığında değil"
            )
        digits = []
        q = index
        for j in range(level - 1, -1, -1):
            digits.append(q % self._branching[j])
            q //= self._branching[j]
        digits.reverse()

        node = self.root
        for pos, d in enumerate(digits):
            child = node.children.get(d)
            if child is None:
                return self._virtual(node, tuple(digits[pos:]))
            node = child
        return self._of_node(node)

    def node(self, level: int, index: int) -> Optional[SubBin]:
        """Ağaçtaki (k, q) düğümü; yoksa None."""
        return self._index.get((level, index))

    def sub_bins(self) -> Iterator[SubBin]:
        """Ağaçtaki bütün düğümler (seviye, q sırasıyla)."""
        for key in sorted(self._index):
            yield self._index[key]

    # ─────────────────────────────────────────
    # Sorgular
    # ─────────────────────────────────────────

    def occupancy(self, slot: SubBinSlot, real_only: bool = False) -> int:
        """Alt kutunun kapsadığı satırların en dolusunun yükü."""
        if slot.node is not None:
            vec = slot.node.occ_real if real_only else slot.node.occ
            return self._path_load(slot.node.parent, real_only) + int(vec[0])
        return self._path_load(slot.anchor, real_only)

    def residual(self, slot: SubBinSlot, real_only: bool = False) -> int:
        """w − doluluk (taşmış alt kutuda negatif olabilir)."""
        return self.width - self.occupancy(slot, real_only)

    def first_fit(self, level: int, width: int, real_only: bool = False) -> Optional[SubBinSlot]:
        """
        width genişliğinin sığdığı, q'su en küçük k seviyesi alt kutusu.

        Kökten tek iniş: her adımda sığma garantili ilk çocuk seçilir.
        """
        attr = "occ_real" if real_only else "occ"
        node = self.root
        base = 0
        if getattr(node, attr)[level] + width > self.width:
            return None
        while node.level < level:
            through = base + self._load_of(node, real_only)
            target = level - node.level - 1
            for d in range(self._branching[node.level]):
                child = node.children.get(d)
                if child is None:
                    if through + width <= self.width:
                        return self._virtual(node, (d,) + (0,) * target)
                elif through + getattr(child, attr)[target] + width <= self.width:
                    node, base = child, through
                    break
            else:  # pragma: no cover - occ vektörü sığmayı garanti eder
                return None
        return self._of_node(node)

    def least_occupied(self, level: int, real_only: bool = False) -> SubBinSlot:
        """En az dolu k seviyesi alt kutusu (eşitlikte en küçük q)."""
        attr = "occ_real" if real_only else "occ"
        node = self.root
        while node.level < level:
            target = level - node.level - 1
            best_d, best_val, best_child = None, _INF, None
            for d in range(self._branching[node.level]):
                child = node.children.get(d)
                val = getattr(child, attr)[target] if child is not None else 0
                if val < best_val:
                    best_d, best_val, best_child = d, val, child
            if best_child is None:
                return self._virtual(node, (best_d,) + (0,) * target)
            node = best_child
        return self._of_node(node)

    def iter_slots(
        self,
        level: int,
        width: Optional[int] = None,
        real_only: bool = False,
        compress: bool = True,
    ) -> Iterator[SubBinSlot]:
        """
        k seviyesindeki alt kutuları q sırasıyla üret.

        Parametreler:
            width: Verilirse yalnızca bu genişliğin sığdığı alt kutular
            real_only: Sığma kontrolünde kukla yükleri yok sayılır
            compress: True ise her düğümün boş çocuklarından yalnızca en
                küçüğü üretilir (boş kardeşler birbirinin aynısıdır)
        """
        attr = "occ_real" if real_only else "occ"
        w = self.width

        def fits(base_load: int) -> bool:
            return width is None or base_load + width <= w

        def walk(node: SubBin, base: int) -> Iterator[SubBinSlot]:
            vec = getattr(node, attr)
            if node.level == level:
                if fits(base + int(vec[0])):
                    yield self._of_node(node)
                return
            if width is not None and base + vec[level - node.level] + width > w:
                return
            through = base + self._load_of(node, real_only)
            gap_seen = False
            remaining = level - node.level - 1
            for d in range(self._branching[node.level]):
                child = node.children.get(d)
                if child is not None:
                    yield from walk(child, through)
                elif not fits(through):
                    continue
                elif compress:
                    if not gap_seen:
                        gap_seen = True
                        yield self._virtual(node, (d,) + (0,) * remaining)
                else:
                    ranges = [range(self._branching[j]) for j in range(node.level + 1, level)]
                    for rest in product(*ranges):
                        yield self._virtual(node, (d,) + rest)

        yield from walk(self.root, 0)

    def free_area(self, level: int, min_width: int = 1) -> int:
        """
        k seviyesi alt kutularında, kalan genişliği min_width'ten az olmayanların
        toplam boş alanı.

        Yalnızca k'dan derin seviyelerde dikdörtgen yokken tamdır (alt kutu
        satırları o zaman eşit doludur); kesin arama bu sırayla ilerler.
        """
        w = self.width

        def walk(node: SubBin, base: int) -> int:
            through = base + node.load
            if node.level == level:
                residual = w - base - int(node.occ[0])
                return residual * self._heights[level] if residual >= min_width else 0
            area = 0
            residual = w - through
            gaps = self._branching[node.level] - len(node.children)
            if gaps and residual >= min_width:
                area += gaps * residual * self._heights[node.level + 1]
            for child in node.children.values():
                area += walk(child, through)
            return area

        return walk(self.root, 0)

    @property
    def max_row_load(self) -> int:
        """En dolu satırın nominal yükü."""
        return int(self.root.occ[0])

    def is_overflowed(self) -> bool:
        """Herhangi bir satır w'yi aşıyor mu (kuklalar dahil)?"""
        return self.max_row_load > self.width

    @property
    def has_dummies(self) -> bool:
        return self._dummy_count > 0

    def placed_rectangles(self) -> Iterator[PlacedRectangle]:
        for node in self.sub_bins():
            yield from node.items

    # ─────────────────────────────────────────
    # Güncelleme
    # ─────────────────────────────────────────

    def _materialize(self, slot: SubBinSlot) -> SubBin:
        if slot.node is not None:
            return slot.node
        node = slot.anchor
        for d in slot.tail:
            level = node.level
            child = SubBin(
                level=level + 1,
                index=node.index * self._branching[level] + d,
                v=node.v + d * self._cumulative[level],
                digit=d,
                parent=node,
            )
            node.children[d] = child
            self._index[(child.level, child.index)] = child
            node = child
        return node

    def insert(
        self,
        slot: SubBinSlot,
        width: int,
        rect_id: Any,
        is_dummy: bool = False,
        force: bool = False,
    ) -> PlacedRectangle:
        """
        Alt kutuya genişliği width olan bir dikdörtgen ekle.

        x = alt kutunun x_offset'i + alt kutudaki mevcut yük.

        Fırlatır:
            WouldOverflowError: force=False iken kapsanan bir satır w'yi aşacaksa
        """
        occupied = self.occupancy(slot)
        overflow = occupied + width > self.width
        if overflow and not force:
            raise WouldOverflowError(
                f"{rect_id}: ({slot.level}, {slot.index}) alt kutusunda doluluk "
                f"{occupied} + {width} > {self.width}"
            )
        node = self._materialize(slot)
        placed = PlacedRectangle(
            rect_id=rect_id,
            width=width,
            level=node.level,
            sub_bin=node.index,
            x=self._path_load(node.parent) + node.load,
            is_dummy=is_dummy,
            forced=overflow,
        )
        node.items.append(placed)
        node.load += width
        if is_dummy:
            node.dummy_load += width
            self._dummy_count += 1
        self._propagate(node)
        return placed

    def _prune(self, node: SubBin) -> SubBin:
        """Boşalan düğümleri yukarı doğru sil; kalan en derin düğümü döndür."""
        while node.parent is not None and not node.items and not node.children:
            parent = node.parent
            del parent.children[node.digit]
            del self._index[(node.level, node.index)]
            node = parent
        return node

    def _relayout(self, node: SubBin) -> None:
        x = self._path_load(node.parent)
        for item in node.items:
            item.x = x
            x += item.width
        for child in node.children.values():
            self._relayout(child)

    def remove(self, placed: PlacedRectangle) -> None:
        """Yerleştirilmiş bir dikdörtgeni geri al."""
        node = self._index[(placed.level, placed.sub_bin)]
        node.items.remove(placed)
        node.load -= placed.width
        if placed.is_dummy:
            node.dummy_load -= placed.width
            self._dummy_count -= 1
        self._relayout(node)
        self._propagate(self._prune(node))

    def remove_dummies(self, level: Optional[int] = None) -> int:
        """
        Kuklaları sil (level verilirse yalnızca o seviyedekileri).

        Döndürür:
            int: Silinen kukla sayısı
        """
        removed = 0
        targets = [n for n in list(self._index.values()) if n.dummy_load and (level is None or n.level == level)]
        for node in targets:
            dummies = [i for i in node.items if i.is_dummy]
            node.items = [i for i in node.items if not i.is_dummy]
            node.load -= node.dummy_load
            node.dummy_load = 0
            removed += len(dummies)
            self._relayout(node)
            self._propagate(self._prune(node))
        self._dummy_count -= removed
        return removed


def tree_to_packing(tree: SubBinTree) -> Packing:
    """
    Ağacı kanonik yerleşime çevir: x = x_offset + alt kutuda öncekilerin yükü,
    y = q · H_k.

    Fırlatır:
        DummiesPresentError: Ağaçta kukla kaldıysa
    """
    if tree.has_dummies:
        raise DummiesPresentError("Yerleşime çevirmeden önce kuklalar silinmeli")
    heights = tree.period_set.heights
    placements: dict[Any, Placement] = {}

    def walk(node: SubBin, offset: int) -> None:
        x = offset
        for item in node.items:
            placements[item.rect_id] = Placement(x=x, y=node.index * heights[node.level])
            x += item.width
        for d in sorted(node.children):
            walk(node.children[d], x)

    walk(tree.root, 0)
    return Packing(placements)
