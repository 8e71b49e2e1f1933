"""
Lab - Örnek Üreteçleri, Deneyler ve Dosyalar
=============================================
Kullanım:
    from lab import generate_split_scheme, run_success_experiment, load_instance
"""

from lab.experiments import (
    ExperimentRecord,
    SuccessTable,
    SummaryRow,
    read_records,
    run_success_experiment,
    run_utilization_experiment,
    summarize_records,
    write_records,
)
from lab.files import load_instance, load_schedule, parse_instance, save_instance, save_schedule
from lab.gen_config import DIFFICULT_PRESETS, DifficultConfig, SplitSchemeConfig, difficult_preset
from lab.generators import (
    generate_difficult,
    generate_difficult_certified,
    generate_modified_scheme,
    generate_split_scheme,
)
from lab.render import render_packing

__all__ = [
    "SplitSchemeConfig",
    "DifficultConfig",
    "DIFFICULT_PRESETS",
    "difficult_preset",
    "generate_split_scheme",
    "generate_modified_scheme",
    "generate_difficult",
    "generate_difficult_certified",
    "parse_instance",
    "load_instance",
    "save_instance",
    "load_schedule",
    "save_schedule",
    "ExperimentRecord",
    "SuccessTable",
    "SummaryRow",
    "run_success_experiment",
    "run_utilization_experiment",
    "summarize_records",
    "write_records",
    "read_records",
    "render_packing",
]
