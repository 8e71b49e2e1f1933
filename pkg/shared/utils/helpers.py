"""
Helpers - Yardımcı Fonksiyonlar
================================
Projede sıkça kullanılan küçük ama faydalı fonksiyonlar.

Kullanım:
    from shared.utils.helpers import load_env, parse_int_list, format_fraction
"""

import os
from fractions import Fraction

from dotenv import load_dotenv


def load_env():
    """
    .env dosyasını yükle.

    Bu fonksiyon, projenin kök dizinindeki .env dosyasını okur
    ve ortam değişkenlerini ayarlar.

    Kullanım:
        load_env()
        budget = os.getenv("HSCHED_EXACT_BUDGET_S", "180")
    """
    # Proje kök dizinini bul
    current = os.path.dirname(os.path.abspath(__file__))
    # shared/utils/ → shared/ → proje kökü
    root = os.path.dirname(os.path.dirname(current))

    env_path = os.path.join(root, ".env")
    if os.path.exists(env_path):
        load_dotenv(env_path)
    else:
        load_dotenv()  # Mevcut dizinde veya üst dizinlerde ara


def parse_int_list(text: str) -> list[int]:
    """
    Virgülle ayrılmış tamsayı listesini çöz.

    Komut satırında periyot ve taban vektörü böyle verilir.

    Örnek:
        parse_int_list("2, 2,3")  # → [2, 2, 3]
        parse_int_list("")        # → []

    Fırlatır:
        ValueError: Tamsayı olmayan bir parça varsa
    """
    parts = [p.strip() for p in text.split(",")]
    return [int(p) for p in parts if p]


def truncate_text(text: str, max_length: int = 80, suffix: str = "...") -> str:
    """
    Uzun metni kırp.

    Hata mesajlarında bozuk satırın tamamını değil başını gösteririz.

    Örnek:
        truncate_text("A" * 200, max_length=10)  # → "AAAAAAAAAA..."
    """
    if len(text) <= max_length:
        return text
    return text[:max_length] + suffix


def format_fraction(value: Fraction, digits: int = 4) -> str:
    """
    Kesri hem tam hem ondalık haliyle yaz.

    Örnek:
        format_fraction(Fraction(7, 8))  # → "7/8 (0.8750)"
    """
    return f"{value.numerator}/{value.denominator} ({float(value):.{digits}f})"
