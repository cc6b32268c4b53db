"""
GLR Çalışma Tezgahı Konfigürasyon Dosyası
"""

import json
import os
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import psutil

from errors import ConfigError

# Proje kök dizini
PROJECT_ROOT = Path(__file__).parent

# Veri dizinleri
DATA_DIR = PROJECT_ROOT / "data"
SCHEMAS_DIR = PROJECT_ROOT / "schemas"
LOGS_DIR = PROJECT_ROOT / "logs"
REPORTS_DIR = PROJECT_ROOT / "reports"

TOOL_VERSION = "1.0.0"

# Boyut limitleri
LIMITS_CONFIG = {
    "max_elements": 4096,          # Halka eleman limiti (yoğun çarpım tablosu)
    "max_ideals": 2 ** 16,         # İdeal sayısı limiti
    "max_semiring_ideals": 2 ** 16,
    "validate_max_elements": 256,  # İnşa edilen halkalarda kapsamlı aksiyom kontrolü sınırı
    "brute_force_max_elements": 16,
    "table_max_elements": 2 ** 15,  # int16 tablo indeksinin üst sınırı
}

# Rapor ayarları
REPORT_CONFIG = {
    "schema_version": "1",
    "default_format": "json",
    "formats": ("json", "text", "dot"),
}

# Dağılma kontrolü (aileler)
DISTRIBUTIVITY_CONFIG = {
    "full_family_max_ideals": 12,  # Bu sayıya kadar tüm alt aileler denenir
    "sampled_families": 512,
    "seed": 0,
}

# Korpus ayarları
CORPUS_CONFIG = {
    "cyclic_max": 64,
    "poly_primes": (2, 3, 5),
    "poly_max_degree": 4,
    "poly_max_elements": 625,
    "matrix_base_max_elements": 8,     # M2(taban): |taban|^4 eleman, eleman limitine de tabi
    "product_max_elements": 4096,
    "galois_max_ideals": 64,
    "closure_product_max_elements": 4096,  # Küçük korpus GLR çiftlerinin çarpım sınırı
    "chain_law_max": 64,               # make_chain(n) aksiyom taraması
    # Küçük korpus (testler ve hızlı CI koşuları)
    "small_cyclic_max": 36,
    "small_poly_max_elements": 81,
    "small_product_max_elements": 256,
    "small_matrix_base_max_elements": 4,
}

# Logging ayarları
LOGGING_CONFIG = {
    "level": "INFO",
    "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    "file": str(LOGS_DIR / "glr.log"),
}

# Ortam değişkenleri -> RunConfig alanları
ENV_OVERRIDES = {
    "GLR_MAX_ELEMENTS": "max_elements",
    "GLR_MAX_IDEALS": "max_ideals",
    "GLR_MAX_SEMIRING_IDEALS": "max_semiring_ideals",
    "GLR_JOBS": "jobs",
}

DEFAULT_CONFIG_FILE = "glr_config.json"


@dataclass(frozen=True)
class RunConfig:
    """Çözümlenmiş çalışma konfigürasyonu (raporlara gömülür)"""
    max_elements: int = LIMITS_CONFIG["max_elements"]
    max_ideals: int = LIMITS_CONFIG["max_ideals"]
    max_semiring_ideals: int = LIMITS_CONFIG["max_semiring_ideals"]
    format: str = REPORT_CONFIG["default_format"]
    jobs: int = 1
    seed: int = DISTRIBUTIVITY_CONFIG["seed"]

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def default_jobs() -> int:
    """Varsayılan işçi sayısı"""
    return max(1, psutil.cpu_count(logical=False) or 1)


def _load_config_file(path: Optional[Path]) -> Dict[str, Any]:
    """JSON konfigürasyon dosyasını oku"""
    if path is None:
        candidate = Path.cwd() / DEFAULT_CONFIG_FILE
        if not candidate.exists():
            return {}
        path = candidate
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Konfigürasyon dosyası okunamadı {path}: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"Konfigürasyon dosyası bir JSON nesnesi olmalı: {path}")
    return data


def resolve_run_config(flags: Dict[str, Any], config_file: Optional[Path] = None,
                       environ: Optional[Dict[str, str]] = None) -> RunConfig:
    """
    Çalışma konfigürasyonunu çözümle.

    Öncelik: açık bayrak > ortam değişkeni > konfigürasyon dosyası > varsayılan.
    `flags` içinde değeri None olan anahtarlar verilmemiş sayılır.
    """
    environ = os.environ if environ is None else environ
    values: Dict[str, Any] = RunConfig().to_dict()
    values["jobs"] = default_jobs()

    file_values = _load_config_file(config_file)
    for key, value in file_values.items():
        if key not in values:
            raise ConfigError(f"Bilinmeyen konfigürasyon anahtarı: {key}")
        values[key] = value

    for env_name, key in ENV_OVERRIDES.items():
        if env_name in environ:
            try:
                values[key] = int(environ[env_name])
            except ValueError:
                raise ConfigError(f"{env_name} bir tam sayı olmalı: {environ[env_name]!r}")

    for key, value in flags.items():
        if value is not None and key in values:
            values[key] = value

    config = RunConfig(**values)
    for key in ("max_elements", "max_ideals", "max_semiring_ideals", "jobs"):
        if not isinstance(getattr(config, key), int) or getattr(config, key) < 1:
            raise ConfigError(f"{key} pozitif bir tam sayı olmalı: {getattr(config, key)!r}")
    if config.max_elements > LIMITS_CONFIG["table_max_elements"]:
        raise ConfigError(f"max_elements en fazla {LIMITS_CONFIG['table_max_elements']} olabilir: "
                          f"{config.max_elements}")
    if config.format not in REPORT_CONFIG["formats"]:
        raise ConfigError(f"Geçersiz çıktı formatı: {config.format}")
    return config


def ensure_directories():
    """Gerekli dizinlerin varlığını kontrol et ve oluştur"""
    directories = [DATA_DIR, LOGS_DIR, REPORTS_DIR]
    for directory in directories:
        directory.mkdir(parents=True, exist_ok=True)


def get_data_path(name: str) -> Path:
    """Veri dosyası yolunu döndür"""
    return DATA_DIR / name
