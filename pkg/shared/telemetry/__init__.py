"""
Telemetry - Loglama ve İzleme
===============================
Çözücülerin çalışmasını izlememizi sağlar.

Kullanım:
    from shared.telemetry.logger import get_logger, SolveTracer

    logger = get_logger("heuristics.rgff")
    logger.info("RG-FF başlatıldı")

    tracer = SolveTracer("S-FF")
    tracer.start_run("ornek-01", job_count=12)
"""

from shared.telemetry.logger import SolveTracer, TraceStep, get_logger

__all__ = ["get_logger", "SolveTracer", "TraceStep"]
