"""
Generators - Rastgele Örnek Üreteçleri
=======================================
Deneylerde kullanılan üç örnek ailesi. Hepsi tohumla deterministiktir:
aynı yapılandırma aynı örneği üretir.

1. Bölme şeması (split scheme)
   c = T = T_0 olan tek işle başlar (U = 1). Her denemede uygun bir iş
   rastgele seçilir ve
     - π_divide olasılıkla b_{k+1} tane T_{k+1} periyotlu işe bölünür
       (son periyottaysa deneme reddedilir)
     - yoksa süresi ⌈c/2⌉ + ⌊c/2⌋ olarak ikiye ayrılır
       (parça en küçük sürenin altına düşerse reddedilir)
   Her adım U'yu korur; sonuç U = 1.

2. Değiştirilmiş bölme şeması
   Çekilen iş, π_save·ağırlık olasılıkla kalıcı olarak "korunur" ve bir
   daha bölünmez. Ağırlık U_i / max U_j: kısa periyotlu ve uzun süreli
   işler daha kolay korunur. Koruma yalnızca en az iki uygun iş varken
   yapılır; başlangıç işi asla korunmaz ve üretim her zaman sürer.
   π_save = 0 iken (1) ile aynı örnekleri üretir.

3. Zor örnekler
   Kanonik bir yerleşim yukarıdan aşağı kurulur: her iç alt kutu kendi
   yüksekliğinde rastgele genişlik ayırır, en alt seviye satırın kalanını
   tamamen doldurur. Her satır tam dolu olduğu için U = 1 ve örnek
   çözülebilirdir; kurulan çizelge sertifika olarak saklanır.

Kullanım:
    from lab.generators import generate_split_scheme, generate_difficult
    from lab.gen_config import SplitSchemeConfig, difficult_preset

    inst = generate_split_scheme(SplitSchemeConfig(seed=1))
    hard = generate_difficult(difficult_preset("D_2^6", seed=1))
"""

import os
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from domain.instance import Instance, Job
from domain.periods import periods_from_base
from feasibility.models import Packing, Placement, Schedule
from lab.gen_config import DifficultConfig, SplitSchemeConfig
from shared.telemetry.logger import get_logger
from transform.bijection import packing_to_schedule

logger = get_logger("lab.generators")


# ============================================================
# Bölme Şeması
# ============================================================

@dataclass(eq=False)
class _DraftJob:
    c: int
    k: int
    saved: bool = False


def _run_split(config: SplitSchemeConfig) -> Instance:
    period_set = periods_from_base(config.base_period, config.base_vector)
    rng = np.random.default_rng(config.seed)
    jobs = [_DraftJob(c=config.base_period, k=0)]
    last = period_set.r - 1
    min_c = config.min_processing_time
    saved_order: list[int] = []

    def utilization(job: _DraftJob) -> Fraction:
        return Fraction(job.c, period_set.periods[job.k])

    for _ in range(config.iterations):
        eligible = [j for j in jobs if not j.saved]
        if not eligible:
            break
        job = eligible[int(rng.integers(len(eligible)))]

        # Son uygun iş korunmaz
        if config.save_prob > 0 and len(eligible) >= 2:
            weight = utilization(job) / max(utilization(j) for j in eligible)
            if rng.random() < config.save_prob * float(weight):
                job.saved = True
                saved_order.append(jobs.index(job) + 1)
                continue

        if rng.random() < config.divide_prob:
            if job.k == last:
                continue
            copies = period_set.base_vector[job.k]
            job.k += 1
            jobs.extend(_DraftJob(c=job.c, k=job.k) for _ in range(copies - 1))
        else:
            if config.split_mode == "random":
                if job.c < 2 * min_c:
                    continue
                first = int(rng.integers(min_c, job.c - min_c + 1))
            else:
                first = (job.c + 1) // 2
            second = job.c - first
            if second < min_c:
                continue
            job.c = first
            jobs.append(_DraftJob(c=second, k=job.k))

    name = config.name or ("modified" if config.save_prob > 0 else "split") + f"-{config.seed}"
    return Instance(
        period_set=period_set,
        jobs=tuple(Job(id=i + 1, processing_time=j.c, period_index=j.k) for i, j in enumerate(jobs)),
        name=name,
        metadata={"scheme": "modified" if config.save_prob > 0 else "split", "saved": saved_order},
    )


def generate_split_scheme(config: SplitSchemeConfig) -> Instance:
    """Bölme şemasıyla U = 1 örneği üret (π_save yok sayılır)."""
    instance = _run_split(replace(config, save_prob=0.0))
    logger.debug(f"🎲 {instance.name}: {len(instance)} iş")
    return instance


def generate_modified_scheme(config: SplitSchemeConfig) -> Instance:
    """Değiştirilmiş bölme şemasıyla U = 1 örneği üret."""
    instance = _run_split(config)
    logger.debug(f"🎲 {instance.name}: {len(instance)} iş, {len(instance.metadata['saved'])} korunan")
    return instance


# ============================================================
# Zor Örnekler
# ============================================================

def _fill(rng: np.random.Generator, total: int, config: DifficultConfig) -> list[int]:
    """
    total genişliği parçalara böl.

    Her parça [c_min, min(w, kalan)] aralığından düzgün örneklenir. Kalan
    c_min'in altına düşecekse son parça onu da alır (w'yi aşmadan); böylece
    toplam tam olarak total olur ve her parça w'ye sığar.
    """
    w = config.base_period
    pieces = []
    remaining = total
    while remaining > 0:
        high = min(w, remaining)
        if high <= config.c_min:
            width = high
        else:
            width = int(rng.integers(config.c_min, high + 1))
        if 0 < remaining - width < config.c_min:
            width = remaining if remaining <= w else remaining - config.c_min
        pieces.append(width)
        remaining -= width
    return pieces


def _build_canonical(rng: np.random.Generator, config: DifficultConfig) -> list[tuple[int, int, int, int]]:
    """(seviye, q, x, genişlik) listesi: U = 1 olan kanonik yerleşim."""
    w = config.base_period
    last = config.levels - 1
    rects = []
    stack = [(0, 0, w)]   # (seviye, q, kullanılabilir genişlik)
    while stack:
        level, q, avail = stack.pop()
        x = w - avail
        if level == last:
            widths = _fill(rng, avail, config)
        else:
            reserve = 0
            if avail >= config.c_min and rng.random() < config.reserve_prob:
                high = max(config.c_min, int(avail * config.reserve_share))
                reserve = int(rng.integers(config.c_min, high + 1))
            widths = _fill(rng, reserve, config)
            # Ters sırayla yığına koy; çocuklar q sırasıyla işlenir
            for d in range(config.ratio - 1, -1, -1):
                stack.append((level + 1, q * config.ratio + d, avail - reserve))
        for width in widths:
            rects.append((level, q, x, width))
            x += width
    return rects


def generate_difficult_certified(config: DifficultConfig) -> tuple[Instance, Schedule]:
    """
    Zor örnek ve onu doğrulayan çizelge (sertifika).

    İşlerin en az large_fraction oranı large_threshold'dan uzun olana kadar
    yeniden örneklenir; sınır aşılırsa en iyi deneme kullanılır.
    """
    period_set = periods_from_base(config.base_period, [config.ratio] * (config.levels - 1))
    rng = np.random.default_rng(config.seed)
    heights = period_set.heights

    best, best_share = None, -1.0
    for attempt in range(config.max_attempts):
        rects = _build_canonical(rng, config)
        share = sum(1 for r in rects if r[3] > config.large_threshold) / len(rects)
        if share > best_share:
            best, best_share = rects, share
        if share >= config.large_fraction:
            break
    else:
        logger.warning(
            f"⚠️ {config.max_attempts} denemede uzun iş oranı {config.large_fraction} "
            f"sağlanamadı, en iyi oran: {best_share:.2f}"
        )

    jobs = []
    placements = {}
    for job_id, (level, q, x, width) in enumerate(best, start=1):
        jobs.append(Job(id=job_id, processing_time=width, period_index=level))
        placements[job_id] = Placement(x=x, y=q * heights[level])

    name = config.name or f"difficult-r{config.ratio}-l{config.levels}"
    instance = Instance(
        period_set=period_set,
        jobs=tuple(jobs),
        name=f"{name}-{config.seed}",
        metadata={"scheme": "difficult", "large_share": best_share},
    )
    certificate = packing_to_schedule(instance, Packing(placements), validate=False)
    logger.debug(f"🎲 {instance.name}: {len(jobs)} iş, uzun iş oranı {best_share:.2f}")
    return instance, certificate


def generate_difficult(config: DifficultConfig) -> Instance:
    """Zor örnek üret (sertifika olmadan)."""
    return generate_difficult_certified(config)[0]
