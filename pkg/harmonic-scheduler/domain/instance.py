"""
Instance - İşler ve Problem Örneği
===================================
Kesintisiz, kesin periyodik işlerden oluşan bir problem örneği.

Her iş (job) şunlara sahiptir:
- id: Benzersiz kimlik
- processing_time (c): Her periyotta kesintisiz çalışma süresi
- period_index (p): Periyot kümesindeki indeks; periyodu T_p

İşin tekrarları s, s+T, s+2T, … anlarında başlar ve c kadar sürer.

Kullanım:
    from domain.instance import Instance, Job, make_instance

    inst = make_instance([2, 4], [(1, 1, 2), (2, 1, 4), (3, 1, 4)])
    print(inst.utilization)   # Fraction(1, 1)
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from domain.errors import DuplicateJobIdError, InvalidJobError
from domain.periods import HarmonicPeriodSet, build_period_set


@dataclass(frozen=True)
class Job:
    """Tek bir periyodik iş."""
    id: int
    processing_time: int   # c ≥ 1
    period_index: int      # p, 0 ≤ p < r


@dataclass(frozen=True)
class Instance:
    """
    Bir periyot kümesi ve o kümeye ait işler.

    Değişmezler:
        - iş kimlikleri benzersiz
        - 1 ≤ c_i ≤ T_{p_i}

    Not: c_i > w olan iş geçerli bir örnektir; yalnızca çizelgelenemez.
    """
    period_set: HarmonicPeriodSet
    jobs: tuple[Job, ...]
    name: str = ""
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        seen = set()
        for job in self.jobs:
            if job.id in seen:
                raise DuplicateJobIdError(f"İş kimliği tekrar ediyor: {job.id}")
            seen.add(job.id)
            if not 0 <= job.period_index < self.period_set.r:
                raise InvalidJobError(
                    f"J{job.id}: periyot indeksi {job.period_index} geçersiz (r={self.period_set.r})"
                )
            if not 1 <= job.processing_time <= self.period_set.periods[job.period_index]:
                raise InvalidJobError(
                    f"J{job.id}: süre {job.processing_time}, "
                    f"[1, {self.period_set.periods[job.period_index]}] aralığında değil"
                )

    @cached_property
    def job_map(self) -> dict[int, Job]:
        return {job.id: job for job in self.jobs}

    def job(self, job_id: int) -> Job:
        return self.job_map[job_id]

    def period_of(self, job: Job) -> int:
        """İşin periyodu T_{p}."""
        return self.period_set.periods[job.period_index]

    def job_utilization(self, job: Job) -> Fraction:
        """U_i = c_i / T_{p_i} (tam kesir)."""
        return Fraction(job.processing_time, self.period_of(job))

    @cached_property
    def utilization(self) -> Fraction:
        """
        Toplam kullanım U = Σ c_i / T_{p_i}.

        Kayan nokta yok: ≤ 1 karşılaştırması tam yapılır.
        """
        return sum((self.job_utilization(j) for j in self.jobs), Fraction(0))

    def utilization_ratio(self) -> tuple[int, int]:
        """U'yu (pay, payda) olarak döndür; payda hiperperiyodu böler."""
        u = self.utilization
        return u.numerator, u.denominator

    def rate_monotonic_jobs(self) -> list[Job]:
        """İşler: periyot artan, süre azalan, kimlik artan."""
        return sorted(self.jobs, key=lambda j: (j.period_index, -j.processing_time, j.id))

    def without_job(self, job_id: int) -> "Instance":
        """Bir işi çıkarılmış kopya (periyot kümesi aynı kalır)."""
        return Instance(
            period_set=self.period_set,
            jobs=tuple(j for j in self.jobs if j.id != job_id),
            name=self.name,
            metadata=dict(self.metadata),
        )

    def __len__(self) -> int:
        return len(self.jobs)


def make_instance(
    periods: Iterable[int],
    jobs: Iterable[tuple[int, int, int]],
    name: str = "",
) -> Instance:
    """
    Periyot listesi ve (id, c, T) üçlülerinden örnek kur.

    Parametreler:
        periods: Periyot kümesi (tekrarlı/sırasız olabilir)
        jobs: (id, süre, periyot değeri) üçlüleri

    Fırlatır:
        InvalidJobError: Periyot değeri kümede yoksa

    Örnek:
        make_instance([3, 6], [(1, 2, 3), (2, 1, 6), (3, 2, 6)])
    """
    period_set = build_period_set(periods)
    built = []
    for job_id, c, period in jobs:
        if period not in period_set.periods:
            raise InvalidJobError(f"J{job_id}: {period} periyodu kümede yok {period_set.periods}")
        built.append(Job(id=job_id, processing_time=c, period_index=period_set.index_of(period)))
    return Instance(period_set=period_set, jobs=tuple(built), name=name)
