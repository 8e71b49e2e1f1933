"""
Ordering - Yerleştirme Sırası
==============================
Bütün sezgiseller işleri aynı sırayla ele alır:
periyot artan (dikdörtgen yüksekliği azalan), süre azalan, kimlik artan.

Kukla dikdörtgenler de aynı sıraya girer; tam eşitlikte gerçek olan önce.
"""

from typing import Any

from domain.instance import Instance, Job


def order_jobs(instance: Instance) -> list[Job]:
    """
    İşleri yerleştirme sırasına diz.

    Örnek:
        (T=4, c=1, id=2), (T=2, c=1, id=3), (T=2, c=2, id=1)
        → id 1, id 3, id 2
    """
    return instance.rate_monotonic_jobs()


def rectangle_sort_key(height: int, width: int, is_dummy: bool, tiebreak: Any) -> tuple:
    """Yükseklik azalan, genişlik azalan, gerçek önce, sonra kimlik/sıra."""
    return (-height, -width, is_dummy, tiebreak)
