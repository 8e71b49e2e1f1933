#!/usr/bin/env python3
"""
Harmonic Scheduler - Komut Satırı
==================================
Örnek üretme, çözme, doğrulama, deney ve çizim komutları.

Kullanım:
    python run.py generate --scheme split --seed 7 --out data/s7.json
    python run.py solve data/s7.json --method rgff-opt --schedule-out data/s7.schedule.json
    python run.py validate --instance data/s7.json --schedule data/s7.schedule.json --oracle
    python run.py experiment success --instances "data/*.json" --methods sff,rgff-opt --out success.csv
    python run.py export-model data/s7.json data/s7.model.txt
    python run.py render data/s7.json --schedule data/s7.schedule.json --out s7.svg
    python run.py info data/s7.json

Çıkış kodları:
    0 = çözüldü / geçerli
    1 = çözülemedi / çözümsüz / geçersiz
    2 = bilinmiyor (bütçe bitti)
    3 = kullanım veya dosya hatası
"""

import argparse
import glob
import os
import sys
from fractions import Fraction
from pathlib import Path

# ============================================================
# Import Yolları
# ============================================================
# harmonic-scheduler/ dizinini ve depo kökünü sys.path'e ekle
PROJECT_DIR = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, PROJECT_DIR)
WORKSPACE_DIR = os.path.dirname(PROJECT_DIR)
sys.path.insert(0, WORKSPACE_DIR)

from rich.console import Console
from rich.table import Table

from domain.errors import (
    ConfigInvalidError,
    HarmonicSchedulingError,
    InstanceParseError,
    JobSetMismatchError,
    SchemaViolationError,
)
from exact.budget import SearchBudget
from exact.model_export import export_bin_model
from feasibility.oracle import oracle_validate_schedule
from feasibility.validators import validate_schedule
from heuristics.portfolio import PORTFOLIOS, run_portfolio
from heuristics.registry import default_registry
from lab.experiments import run_success_experiment, run_utilization_experiment, summarize_records, write_records
from lab.files import load_instance, load_schedule, save_instance, save_schedule
from lab.gen_config import DIFFICULT_PRESETS, DifficultConfig, SplitSchemeConfig, difficult_preset
from lab.generators import generate_difficult_certified, generate_modified_scheme, generate_split_scheme
from lab.render import render_packing
from shared.telemetry.logger import get_logger
from shared.utils.helpers import format_fraction, parse_int_list, truncate_text
from transform.bijection import schedule_to_packing

logger = get_logger("harmonic_scheduler")
console = Console()

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3

# Komut satırı adı → registry adı
METHOD_ALIASES = {
    "tff": "T-FF",
    "sff": "S-FF",
    "sbf": "S-BF",
    "lpt": "LPT",
    "rgff-pes": "RG-FF-PES",
    "rgff-opt": "RG-FF-OPT",
    "exact": "exact",
    "exact-10": "exact-10",
    "exact-60": "exact-60",
}


class UsageError(Exception):
    """Komut satırı argümanı anlamsız."""


class _ArgumentParser(argparse.ArgumentParser):
    """Kullanım hatasında 2 yerine 3 koduyla çıkar."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"❌ {self.prog}: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


# ============================================================
# Terminal Çıktı Yardımcıları
# ============================================================

def _header(title: str):
    """Başlık banner'ı yazdır."""
    print()
    print("═" * 56)
    print(f"🗓️  Harmonic Scheduler: {title}")
    print("═" * 56)


def _step(title: str):
    """Adım başlığı yazdır."""
    print(f"\n─── {title} ───")


def _footer():
    """Kapanış banner'ı yazdır."""
    print("═" * 56)
    print()


def _info(icon: str, message: str):
    """Bilgi satırı yazdır."""
    print(f"{icon} {message}")


def resolve_method(name: str) -> str:
    """CLI yöntem adını registry adına çevir (registry adları da kabul edilir)."""
    if name in METHOD_ALIASES:
        return METHOD_ALIASES[name]
    if name in default_registry().names():
        return name
    raise UsageError(f"Bilinmeyen yöntem: {name} (seçenekler: {', '.join(METHOD_ALIASES)}, portfolio)")


def _budget(args) -> SearchBudget | None:
    if getattr(args, "budget_s", None) is None:
        return None
    return SearchBudget(time_limit_s=args.budget_s)


# ============================================================
# Komutlar
# ============================================================

def cmd_generate(args) -> int:
    _header("Örnek Üretimi")
    certificate = None
    if args.scheme in ("split", "modified"):
        config = SplitSchemeConfig(
            base_period=args.base_period,
            base_vector=tuple(parse_int_list(args.base_vector)),
            iterations=args.iterations,
            divide_prob=args.divide_prob,
            save_prob=args.save_prob if args.scheme == "modified" else 0.0,
            min_processing_time=args.min_c,
            split_mode=args.split_mode,
            seed=args.seed,
            name=args.name,
        )
        if args.scheme == "split":
            instance = generate_split_scheme(config)
        else:
            instance = generate_modified_scheme(config)
    else:
        if args.preset:
            config = difficult_preset(args.preset, seed=args.seed)
        else:
            config = DifficultConfig(
                ratio=args.ratio,
                levels=args.levels,
                base_period=args.base_period,
                seed=args.seed,
                name=args.name,
            )
        instance, certificate = generate_difficult_certified(config)

    save_instance(args.out, instance)
    _info("🎲", f"{instance.name}: {len(instance)} iş, periyotlar {list(instance.period_set.periods)}")
    _info("📊", f"U = {format_fraction(instance.utilization)}")
    _info("💾", f"Yazıldı: {args.out}")
    if certificate is not None and args.certificate:
        save_schedule(args.certificate, certificate, instance)
        _info("📜", f"Sertifika: {args.certificate}")
    _footer()
    return EXIT_OK


def _print_schedule(instance, schedule, limit: int = 30):
    table = Table(title="Başlangıç zamanları")
    table.add_column("İş", justify="right")
    table.add_column("c", justify="right")
    table.add_column("T", justify="right")
    table.add_column("s", justify="right")
    for job in sorted(instance.jobs, key=lambda j: j.id)[:limit]:
        table.add_row(str(job.id), str(job.processing_time), str(instance.period_of(job)),
                      str(schedule.starts[job.id]))
    console.print(table)
    if len(instance) > limit:
        _info("…", f"{len(instance) - limit} iş daha")


def cmd_solve(args) -> int:
    instance = load_instance(args.instance)
    budget = _budget(args)
    _header(f"Çözüm ({args.method})")
    _info("📋", f"{instance.name}: {len(instance)} iş, U = {format_fraction(instance.utilization)}")

    if args.method == "portfolio":
        members = [resolve_method(m) for m in split_method_list(args.portfolio)]
        result = run_portfolio(instance, members, budget=budget, stop_at_first=True)
        for name, outcome in result.outcomes.items():
            _info("  •", f"{name}: {outcome.status_label} ({outcome.elapsed_s:.3f}s)")
        schedule = result.schedule
        if result.succeeded:
            code = EXIT_OK
        elif any(o.status_label == "unknown" for o in result.outcomes.values()):
            code = EXIT_UNKNOWN
        else:
            code = EXIT_FAILED
        label = f"{result.status_label} (kazanan: {result.winner or '-'})"
    else:
        outcome = default_registry().run(resolve_method(args.method), instance, budget)
        schedule = outcome.schedule
        label = outcome.status_label
        if outcome.succeeded:
            code = EXIT_OK
        elif outcome.status_label == "unknown":
            code = EXIT_UNKNOWN
        else:
            code = EXIT_FAILED

    _step("Sonuç")
    icon = {EXIT_OK: "✅", EXIT_FAILED: "❌", EXIT_UNKNOWN: "⏱️"}[code]
    _info(icon, f"Durum: {label}")
    if schedule is not None:
        _print_schedule(instance, schedule)
        if args.schedule_out:
            save_schedule(args.schedule_out, schedule, instance)
            _info("💾", f"Çizelge: {args.schedule_out}")
        if args.svg:
            render_packing(instance, schedule_to_packing(instance, schedule), path=args.svg)
            _info("🖼️", f"Çizim: {args.svg}")
    _footer()
    return code


def split_method_list(text: str) -> list[str]:
    """Portföy adı (M1…MA) veya virgüllü yöntem listesi."""
    if text in PORTFOLIOS:
        return list(PORTFOLIOS[text])
    return [p.strip() for p in text.split(",") if p.strip()]


def cmd_validate(args) -> int:
    instance = load_instance(args.instance)
    schedule = load_schedule(args.schedule)
    _header("Doğrulama")
    try:
        report = validate_schedule(instance, schedule)
    except JobSetMismatchError as e:
        _info("❌", f"İş kümesi uyuşmuyor: {e}")
        _footer()
        return EXIT_FAILED
    print(report.summary())
    valid = report.ok
    if args.oracle:
        oracle_ok = oracle_validate_schedule(instance, schedule)
        _info("🔎", f"Simülasyon hakemi: {'geçerli' if oracle_ok else 'geçersiz'}")
        if oracle_ok != report.ok:
            logger.error("Doğrulayıcı ile simülasyon hakemi uyuşmuyor")
        valid = valid and oracle_ok
    _footer()
    return EXIT_OK if valid else EXIT_FAILED


def cmd_experiment(args) -> int:
    paths = sorted(glob.glob(args.instances))
    if not paths:
        raise UsageError(f"Desene uyan örnek yok: {args.instances}")
    instances = [load_instance(p) for p in paths]
    methods = [resolve_method(m) for m in split_method_list(args.methods)]
    budget = _budget(args)
    _header(f"Deney ({args.kind})")
    _info("📂", f"{len(instances)} örnek, yöntemler: {', '.join(methods)}")

    if args.kind == "success":
        records = run_success_experiment(instances, methods, budget, workers=args.workers).records
    else:
        try:
            floor = Fraction(args.floor) if args.floor else None
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"Geçersiz alt sınır: {args.floor}")
        records = run_utilization_experiment(instances, methods, budget, floor=floor, workers=args.workers)
    write_records(args.out, records)

    table = Table(title="Özet")
    table.add_column("Yöntem")
    table.add_column("Çözülen", justify="right")
    table.add_column("Toplam", justify="right")
    table.add_column("Ort. U_F", justify="right")
    for row in summarize_records(records):
        avg = f"{row.avg_u_final:.4f}" if row.avg_u_final is not None else "-"
        table.add_row(row.method, str(row.solved), str(row.total), avg)
    console.print(table)
    _info("💾", f"CSV: {args.out}")
    _footer()
    return EXIT_OK


def cmd_export_model(args) -> int:
    instance = load_instance(args.instance)
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    Path(args.out).write_text(export_bin_model(instance), encoding="utf-8")
    _info("💾", f"Model yazıldı: {args.out}")
    return EXIT_OK


def cmd_render(args) -> int:
    instance = load_instance(args.instance)
    schedule = load_schedule(args.schedule, instance)
    packing = schedule_to_packing(instance, schedule, validate=not args.partial)
    render_packing(instance, packing, path=args.out, partial=args.partial)
    _info("🖼️", f"Çizim yazıldı: {args.out}")
    return EXIT_OK


def cmd_info(args) -> int:
    instance = load_instance(args.instance)
    ps = instance.period_set
    _header("Örnek Bilgisi")
    _info("📋", f"Ad: {instance.name}")
    _info("⏲️", f"Periyotlar: {list(ps.periods)} (b = {list(ps.base_vector)})")
    _info("📐", f"Kutu: w = {ps.width}, H = {ps.bin_height}, hiperperiyot = {ps.hyperperiod}")
    _info("🧮", f"İş sayısı: {len(instance)}")
    _info("📊", f"U = {format_fraction(instance.utilization)}")
    too_wide = [j.id for j in instance.jobs if j.processing_time > ps.width]
    if too_wide:
        _info("⚠️", f"c > w olan işler (çizelgelenemez): {truncate_text(str(too_wide))}")
    _footer()
    return EXIT_OK


# ============================================================
# Argümanlar
# ============================================================

def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="run.py",
        description="Harmonik periyotlu, kesintisiz, kesin periyodik çizelgeleme",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    gen = sub.add_parser("generate", help="Rastgele örnek üret")
    gen.add_argument("--scheme", choices=["split", "modified", "difficult"], required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True, help="Örnek dosyası (JSON)")
    gen.add_argument("--name", default="")
    gen.add_argument("--base-period", type=int, default=None, help="T_0 (split: 10, difficult: 800)")
    gen.add_argument("--base-vector", default="2,2,2,2", help="Virgüllü taban vektörü")
    gen.add_argument("--iterations", type=int, default=60)
    gen.add_argument("--divide-prob", type=float, default=0.5)
    gen.add_argument("--save-prob", type=float, default=0.3)
    gen.add_argument("--min-c", type=int, default=1)
    gen.add_argument("--split-mode", choices=["even", "random"], default="even")
    gen.add_argument("--preset", choices=list(DIFFICULT_PRESETS), default=None)
    gen.add_argument("--ratio", type=int, default=2)
    gen.add_argument("--levels", type=int, default=6)
    gen.add_argument("--certificate", default=None, help="Zor örneğin sertifika çizelgesi")
    gen.set_defaults(func=cmd_generate)

    solve = sub.add_parser("solve", help="Örneği çöz")
    solve.add_argument("instance")
    solve.add_argument("--method", default="rgff-opt", help="tff|sff|sbf|lpt|rgff-pes|rgff-opt|exact|portfolio")
    solve.add_argument("--portfolio", default="MA", help="Portföy adı (M1, M2, M3, MA) veya yöntem listesi")
    solve.add_argument("--budget-s", type=float, default=None)
    solve.add_argument("--schedule-out", default=None)
    solve.add_argument("--svg", default=None)
    solve.set_defaults(func=cmd_solve)

    val = sub.add_parser("validate", help="Çizelgeyi doğrula")
    val.add_argument("--instance", required=True)
    val.add_argument("--schedule", required=True)
    val.add_argument("--oracle", action="store_true", help="Simülasyon hakemini de çalıştır")
    val.set_defaults(func=cmd_validate)

    exp = sub.add_parser("experiment", help="Başarı veya kullanım deneyi")
    exp.add_argument("kind", choices=["success", "utilization"])
    exp.add_argument("--instances", required=True, help="Örnek dosyası deseni (glob)")
    exp.add_argument("--methods", required=True, help="Virgüllü yöntem listesi veya portföy adı")
    exp.add_argument("--out", required=True, help="CSV çıktısı")
    exp.add_argument("--budget-s", type=float, default=None)
    exp.add_argument("--workers", type=int, default=None)
    exp.add_argument("--floor", default=None, help="Kullanım alt sınırı (örn. 0.7 veya 7/10)")
    exp.set_defaults(func=cmd_experiment)

    export = sub.add_parser("export-model", help="Kutu modelini metin olarak yaz")
    export.add_argument("instance")
    export.add_argument("out")
    export.set_defaults(func=cmd_export_model)

    render = sub.add_parser("render", help="Var olan çizelgeyi SVG olarak çiz")
    render.add_argument("instance")
    render.add_argument("--schedule", required=True)
    render.add_argument("--out", required=True)
    render.add_argument("--partial", action="store_true", help="Doğrulamadan çiz")
    render.set_defaults(func=cmd_render)

    info = sub.add_parser("info", help="Örnek hakkında bilgi")
    info.add_argument("instance")
    info.set_defaults(func=cmd_info)
    return parser


def main(argv=None) -> int:
    """Komutu çalıştır ve çıkış kodunu döndür."""
    args = build_parser().parse_args(argv)
    if getattr(args, "base_period", 0) is None:
        args.base_period = 800 if args.scheme == "difficult" else 10
    try:
        return args.func(args)
    except InstanceParseError as e:
        logger.error(f"Dosya okunamadı: {e}")
        print(f"❌ Ayrıştırma hatası {e}", file=sys.stderr)
        return EXIT_USAGE
    except (SchemaViolationError, ConfigInvalidError, UsageError) as e:
        logger.error(str(e))
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as e:
        logger.error(f"Dosya bulunamadı: {e.filename}")
        print(f"❌ Dosya bulunamadı: {e.filename}", file=sys.stderr)
        return EXIT_USAGE
    except HarmonicSchedulingError as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILED


# ============================================================
# Giriş Noktası
# ============================================================

if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\n\n⚠️  İptal edildi (Ctrl+C)")
        sys.exit(EXIT_USAGE)
