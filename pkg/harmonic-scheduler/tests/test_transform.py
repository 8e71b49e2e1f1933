"""
Transform Testleri - Çizelge ↔ Yerleşim, Kanonik Form, Alt Kutu Ağacı
Çalıştırma: cd harmonic-scheduler && python -m pytest tests/test_transform.py -v
"""

import os
import sys

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from domain.instance import Instance, Job, make_instance
from domain.periods import periods_from_base
from feasibility.collisions import jobs_collide
from feasibility.models import Packing, Placement, Schedule
from feasibility.oracle import oracle_validate_schedule
from feasibility.validators import is_canonical, validate_packing, validate_schedule
from transform.bijection import packing_to_schedule, schedule_to_packing
from transform.canonical import canonicalize
from transform.subbin_tree import SubBinTree, tree_to_packing


# ============================================================
# Rastgele örnek + çizelge stratejileri
# ============================================================

@st.composite
def instances(draw, max_jobs: int = 10):
    base = draw(st.lists(st.integers(min_value=2, max_value=3), min_size=0, max_size=3))
    w = draw(st.integers(min_value=1, max_value=12))
    ps = periods_from_base(w, base)
    n = draw(st.integers(min_value=0, max_value=max_jobs))
    jobs = []
    for job_id in range(1, n + 1):
        level = draw(st.integers(min_value=0, max_value=ps.r - 1))
        c = draw(st.integers(min_value=1, max_value=w))
        jobs.append(Job(id=job_id, processing_time=c, period_index=level))
    return Instance(period_set=ps, jobs=tuple(jobs), name="hyp")


@st.composite
def random_schedules(draw):
    """Rastgele (çoğunlukla geçersiz) çizelge: her iş kendi satırında kalır."""
    inst = draw(instances())
    w = inst.period_set.width
    starts = {}
    for job in inst.jobs:
        rows = inst.period_of(job) // w
        v = draw(st.integers(min_value=0, max_value=rows - 1))
        u = draw(st.integers(min_value=0, max_value=w - job.processing_time))
        starts[job.id] = u + v * w
    return inst, Schedule(starts)


@st.composite
def feasible_schedules(draw):
    """Geçerli çizelge: işler sırayla çakışmayan rastgele bir başlangıca konur, sığmayan atılır."""
    inst = draw(instances())
    ps = inst.period_set
    w = ps.width
    kept, starts = [], {}
    for job in inst.jobs:
        options = [
            s for s in range(inst.period_of(job))
            if s % w + job.processing_time <= w
            and not any(jobs_collide(job, s, other, starts[other.id], ps) for other in kept)
        ]
        if not options:
            continue
        starts[job.id] = options[draw(st.integers(min_value=0, max_value=len(options) - 1))]
        kept.append(job)
    return Instance(period_set=ps, jobs=tuple(kept), name="feasible"), Schedule(starts)


def three_jobs():
    return make_instance([2, 4], [(1, 1, 2), (2, 1, 4), (3, 1, 4)], name="three")


# ============================================================
# Çizelge ↔ Yerleşim
# ============================================================

class TestBijection:
    def test_worked_example(self):
        """(0, 1, 3) başlangıçları → (0,0), (1,0), (1,1)."""
        packing = schedule_to_packing(three_jobs(), Schedule({1: 0, 2: 1, 3: 3}))
        assert packing.placements == {1: Placement(0, 0), 2: Placement(1, 0), 3: Placement(1, 1)}
        assert packing_to_schedule(three_jobs(), packing) == Schedule({1: 0, 2: 1, 3: 3})

    def test_flip_moves_rows(self):
        """T=12 işinin 1. satırı (taban 2,3) yerleşimde 3. satıra gider."""
        inst = make_instance([2, 4, 12], [(1, 1, 12)])
        packing = schedule_to_packing(inst, Schedule({1: 2}))
        assert packing.placements[1] == Placement(0, 3)

    def test_invalid_schedule_rejected(self):
        from domain.errors import InvalidScheduleError
        with pytest.raises(InvalidScheduleError):
            schedule_to_packing(three_jobs(), Schedule({1: 0, 2: 1, 3: 2}))

    def test_invalid_packing_rejected(self):
        from domain.errors import InvalidPackingError
        bad = Packing({1: Placement(0, 0), 2: Placement(0, 1), 3: Placement(1, 1)})
        with pytest.raises(InvalidPackingError):
            packing_to_schedule(three_jobs(), bad)

    @settings(max_examples=1000, deadline=None)
    @given(random_schedules())
    def test_round_trip_and_verdicts(self, case):
        """İki yönlü dönüşüm özdeşliktir; geçerlilik kararı iki tarafta ve hakemde aynıdır."""
        inst, schedule = case
        packing = schedule_to_packing(inst, schedule, validate=False)
        assert packing_to_schedule(inst, packing, validate=False) == schedule
        verdict = oracle_validate_schedule(inst, schedule)
        assert validate_schedule(inst, schedule).ok == verdict
        assert validate_packing(inst, packing).ok == verdict


# ============================================================
# Kanonik Form
# ============================================================

class TestCanonical:
    def test_mirrored_packing(self):
        """Uzun dikdörtgen sola taşınır, y değişmez."""
        mirrored = Packing({1: Placement(1, 0), 2: Placement(0, 0), 3: Placement(0, 1)})
        canon = canonicalize(three_jobs(), mirrored)
        assert canon.placements == {1: Placement(0, 0), 2: Placement(1, 0), 3: Placement(1, 1)}

    def test_rejects_invalid(self):
        from domain.errors import InvalidPackingError
        bad = Packing({1: Placement(0, 0), 2: Placement(0, 0), 3: Placement(1, 1)})
        with pytest.raises(InvalidPackingError):
            canonicalize(three_jobs(), bad)

    @settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(feasible_schedules())
    def test_canonicalize_properties(self, case):
        """Geçerli her yerleşim kanonikleşir; sonuç geçerli, kanonik ve sabit noktadır."""
        inst, schedule = case
        packing = schedule_to_packing(inst, schedule)
        canon = canonicalize(inst, packing)
        assert validate_packing(inst, canon).ok
        assert is_canonical(inst, canon)
        assert canonicalize(inst, canon) == canon
        for rect_id, place in packing.placements.items():
            assert canon.placements[rect_id].y == place.y
        assert oracle_validate_schedule(inst, packing_to_schedule(inst, canon))


# ============================================================
# Alt Kutu Ağacı
# ============================================================

class TestSubBinTree:
    def setup_method(self):
        # w=4, periyotlar [4, 8, 16] → H=4, yükseklikler (4, 2, 1)
        self.ps = periods_from_base(4, [2, 2])
        self.tree = SubBinTree(self.ps)

    def test_slot_addressing(self):
        """(2, 3) boş ağaçta sanaldır; satırı v = 3."""
        root = self.tree.slot(0, 0)
        assert not root.is_virtual
        slot = self.tree.slot(2, 3)
        assert slot.is_virtual
        assert (slot.level, slot.index, slot.v) == (2, 3, 3)
        assert self.tree.slot(2, 2).v == 1

    def test_slot_out_of_range(self):
        from domain.errors import ValueOutOfRangeError
        with pytest.raises(ValueOutOfRangeError):
            self.tree.slot(3, 0)
        with pytest.raises(ValueOutOfRangeError):
            self.tree.slot(1, 2)

    def test_insert_and_occupancy(self):
        """Ata yükleri alt kutunun doluluğuna eklenir."""
        self.tree.insert(self.tree.slot(0, 0), 1, "a")
        placed = self.tree.insert(self.tree.slot(1, 1), 2, "b")
        assert placed.x == 1
        assert self.tree.occupancy(self.tree.slot(2, 2)) == 3
        assert self.tree.residual(self.tree.slot(2, 0)) == 3
        assert self.tree.max_row_load == 3
        assert self.tree.node(1, 1) is not None
        assert self.tree.node(1, 0) is None

    def test_overflow(self):
        """Taşma force=False iken hata, force=True iken işaretli yerleşim."""
        from domain.errors import WouldOverflowError
        self.tree.insert(self.tree.slot(0, 0), 3, "a")
        with pytest.raises(WouldOverflowError):
            self.tree.insert(self.tree.slot(1, 0), 2, "b")
        placed = self.tree.insert(self.tree.slot(1, 0), 2, "b", force=True)
        assert placed.forced
        assert self.tree.is_overflowed()

    def test_first_fit_and_least_occupied(self):
        self.tree.insert(self.tree.slot(1, 0), 3, "a")
        slot = self.tree.first_fit(2, 2)
        assert (slot.level, slot.index) == (2, 2)
        assert self.tree.first_fit(2, 1).index == 0
        assert self.tree.first_fit(1, 5) is None
        assert self.tree.least_occupied(1).index == 1

    def test_iter_slots_compression(self):
        """Boş kardeşlerden sıkıştırmada yalnızca en küçüğü üretilir."""
        assert len(list(self.tree.iter_slots(2))) == 1
        assert [s.index for s in self.tree.iter_slots(2, compress=False)] == [0, 1, 2, 3]
        self.tree.insert(self.tree.slot(2, 1), 1, "a")
        assert [s.index for s in self.tree.iter_slots(2)] == [0, 1, 2]
        assert [s.index for s in self.tree.iter_slots(2, width=4)] == [0, 2]

    def test_remove_prunes(self):
        """Geri alınan dikdörtgenin boşalan düğümleri silinir."""
        placed = self.tree.insert(self.tree.slot(2, 3), 2, "a")
        assert self.tree.node(1, 1) is not None
        self.tree.remove(placed)
        assert self.tree.node(2, 3) is None
        assert self.tree.node(1, 1) is None
        assert self.tree.max_row_load == 0

    def test_remove_relayouts(self):
        """Ata yükü azalınca torun x'leri sola kayar."""
        first = self.tree.insert(self.tree.slot(0, 0), 1, "a")
        deep = self.tree.insert(self.tree.slot(2, 0), 1, "b")
        assert deep.x == 1
        self.tree.remove(first)
        assert deep.x == 0

    def test_dummies(self):
        """Kukla kalan ağaç yerleşime çevrilemez; remove_dummies sayıyı döndürür."""
        from domain.errors import DummiesPresentError
        self.tree.insert(self.tree.slot(1, 0), 2, "D1", is_dummy=True)
        self.tree.insert(self.tree.slot(1, 0), 1, "r")
        assert self.tree.has_dummies
        assert self.tree.occupancy(self.tree.slot(1, 0), real_only=True) == 1
        with pytest.raises(DummiesPresentError):
            tree_to_packing(self.tree)
        assert self.tree.remove_dummies(level=0) == 0
        assert self.tree.remove_dummies() == 1
        assert tree_to_packing(self.tree).placements == {"r": Placement(0, 0)}

    def test_free_area(self):
        """Boş ağaçta bütün seviyelerin boş alanı w·H."""
        for level in range(3):
            assert self.tree.free_area(level) == 16
        self.tree.insert(self.tree.slot(1, 0), 3, "a")
        # (1,0): 1·2 boş; (1,1): 4·2 boş
        assert self.tree.free_area(1) == 10
        assert self.tree.free_area(1, min_width=2) == 8

    def test_tree_to_packing_is_canonical(self):
        """Ağaçtan çıkan yerleşim kanonik ve geçerlidir."""
        inst = make_instance([4, 8, 16], [(1, 1, 4), (2, 1, 8), (3, 2, 16), (4, 2, 16)])
        self.tree.insert(self.tree.slot(0, 0), 1, 1)
        self.tree.insert(self.tree.slot(1, 1), 1, 2)
        self.tree.insert(self.tree.slot(2, 3), 2, 3)
        self.tree.insert(self.tree.slot(2, 0), 2, 4)
        packing = tree_to_packing(self.tree)
        assert packing.placements[3] == Placement(2, 3)
        assert packing.placements[4] == Placement(1, 0)
        assert is_canonical(inst, packing)
