"""
Exact - Kesin Çözücüler
========================
Kullanım:
    from exact import solve_exact, SearchBudget, brute_force_enumerate, export_bin_model
"""

from exact.brute_force import brute_force_enumerate
from exact.budget import BudgetClock, SearchBudget
from exact.model_export import export_bin_model
from exact.search import BinSearch, ExactOutcome, ExactStatus, solve_exact

__all__ = [
    "SearchBudget",
    "BudgetClock",
    "BinSearch",
    "ExactOutcome",
    "ExactStatus",
    "solve_exact",
    "brute_force_enumerate",
    "export_bin_model",
]
