"""
Hata Sınıfları - Tüm modüllerin ortak hata hiyerarşisi

CLI çıkış kodları burada belirlenir: 2 = girdi/konfigürasyon/limit hatası,
1 = kontrol edilen bir özellik sağlanmadı.
"""

from typing import Any, Iterable, Optional, Tuple


class AlgebraError(Exception):
    """Tüm çalışma tezgahı hatalarının temeli"""

    exit_code = 2


class ConfigError(AlgebraError):
    """Geçersiz çalışma konfigürasyonu"""


class SizeCapExceeded(AlgebraError):
    """Eleman (veya tablo) sayısı limiti aşıldı"""

    def __init__(self, requested: int, cap: int, what: str = "eleman"):
        super().__init__(f"{what} limiti aşıldı: {requested} > {cap}")
        self.requested = requested
        self.cap = cap


class InvalidSpec(AlgebraError):
    """Halka tanımı (RingSpec) hatalı"""


class TableNotARing(AlgebraError):
    """Cayley tabloları bir halka oluşturmuyor"""

    def __init__(self, axiom: str, witness: Tuple[int, ...]):
        super().__init__(f"Halka aksiyomu sağlanmadı: {axiom}, tanık={witness}")
        self.axiom = axiom
        self.witness = tuple(int(w) for w in witness)


class NotAnIdeal(AlgebraError):
    """Verilen küme iki taraflı ideal değil"""


class IdealCountCapExceeded(AlgebraError):
    """İdeal sayısı limiti aşıldı"""

    def __init__(self, cap: int):
        super().__init__(f"İdeal sayısı limiti aşıldı: > {cap}")
        self.cap = cap


class SemiringIdealCountCapExceeded(AlgebraError):
    """Yarı-halka ideali sayısı limiti aşıldı"""

    def __init__(self, cap: int):
        super().__init__(f"Yarı-halka ideali limiti aşıldı: > {cap}")
        self.cap = cap


class ParseError(AlgebraError):
    """Halka DSL ayrıştırma hatası"""

    def __init__(self, offset: int, expected: Iterable[str], text: str = ""):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        found = repr(text[offset:offset + 8]) if offset < len(text) else "girdi sonu"
        super().__init__(
            f"Ayrıştırma hatası (bayt {offset}): beklenen {', '.join(self.expected)}; bulunan {found}"
        )


class PropertyFailure(AlgebraError):
    """Kontrol edilen bir özellik sağlanmadı (çıkış kodu 1)"""

    exit_code = 1

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class GLAxiomsFailed(PropertyFailure):
    """Genelleştirilmiş Łukasiewicz yarı-halka aksiyomları sağlanmadı"""


class GLRCheckFailed(PropertyFailure):
    """Halka bir GLR değil"""


class CertificationFailed(PropertyFailure):
    """Ayrıştırma sertifikası doğrulanamadı (uygulama hatası belirtisi)"""


class PreconditionFailed(PropertyFailure):
    """İşlemin ön koşulu sağlanmadı"""
