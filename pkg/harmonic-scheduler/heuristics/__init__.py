"""
Heuristics - Yerleştirme Sezgiselleri
======================================
Kullanım:
    from heuristics import solve_sff, solve_rgff, run_portfolio, PORTFOLIOS
"""

from heuristics.dummies import (
    Bag,
    BagItem,
    Constituent,
    DummyRectangle,
    build_dummies_optimistic,
    build_dummies_pessimistic,
)
from heuristics.first_fit import (
    LongestProcessingTime,
    SpatialBestFit,
    SpatialFirstFit,
    TimeFirstFit,
    solve_lpt,
    solve_sbf,
    solve_sff,
    solve_tff,
)
from heuristics.ordering import order_jobs
from heuristics.outcome import HeuristicOutcome, HeuristicStatus
from heuristics.portfolio import PORTFOLIOS, PortfolioOutcome, run_portfolio
from heuristics.registry import HEURISTIC_METHODS, MethodRegistry, default_registry
from heuristics.rgff import DummyMode, RectangleGuidedFirstFit, solve_rgff

__all__ = [
    "order_jobs",
    "HeuristicOutcome",
    "HeuristicStatus",
    "TimeFirstFit",
    "SpatialFirstFit",
    "SpatialBestFit",
    "LongestProcessingTime",
    "solve_tff",
    "solve_sff",
    "solve_sbf",
    "solve_lpt",
    "Bag",
    "BagItem",
    "Constituent",
    "DummyRectangle",
    "build_dummies_pessimistic",
    "build_dummies_optimistic",
    "DummyMode",
    "RectangleGuidedFirstFit",
    "solve_rgff",
    "MethodRegistry",
    "default_registry",
    "HEURISTIC_METHODS",
    "PORTFOLIOS",
    "PortfolioOutcome",
    "run_portfolio",
]
