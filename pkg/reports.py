"""
Rapor Modülü - Kontrol raporları ve deterministik JSON/metin/DOT çıktıları

Aynı girdi ve konfigürasyon bayt bayt aynı raporu üretir: anahtarlar
sıralanır, zaman damgası veya makineye özgü alan eklenmez.
"""

import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np
import pandas as pd

import config
from ideal_lattice import IdealLattice, covering_edges

logger = logging.getLogger(__name__)


@dataclass
class CheckReport:
    """Adlandırılmış kontroller; her biri için ilk tanık (sağlanıyorsa None)"""
    witnesses: Dict[str, Optional[Tuple[Any, ...]]] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)

    def record(self, name: str, witness: Optional[Iterable[Any]]) -> None:
        self.witnesses[name] = None if witness is None else tuple(witness)

    def holds(self, name: str) -> bool:
        return self.witnesses.get(name) is None

    @property
    def passed(self) -> bool:
        return all(w is None for w in self.witnesses.values())

    @property
    def failed(self) -> List[str]:
        return [name for name, w in self.witnesses.items() if w is not None]

    def to_json(self) -> Dict[str, Any]:
        doc = {
            "passed": self.passed,
            "checks": {name: {"holds": w is None, "witness": None if w is None else list(w)}
                       for name, w in self.witnesses.items()},
        }
        if self.details:
            doc["details"] = self.details
        return doc


def to_plain(value: Any) -> Any:
    """numpy/tuple/dataclass değerlerini JSON uyumlu tiplere çevir"""
    if hasattr(value, "to_json"):
        return to_plain(value.to_json())
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_plain(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    return value


def envelope(command: str, result: Any, run_config: config.RunConfig) -> Dict[str, Any]:
    """Raporu araç sürümü, şema sürümü ve çözümlenmiş konfigürasyonla sar"""
    return {
        "tool": "glr-workbench",
        "tool_version": config.TOOL_VERSION,
        "schema_version": config.REPORT_CONFIG["schema_version"],
        "command": command,
        "config": run_config.to_dict(),
        "result": to_plain(result),
    }


def render_json(doc: Dict[str, Any]) -> str:
    return json.dumps(to_plain(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _text_lines(value: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    lines: List[str] = []
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item and not _is_flat(item):
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                lines.append(f"{pad}-")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _is_flat(value: Any) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) or (isinstance(v, list) and _is_flat(v))
                   for v in value)
    return False


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "evet" if value else "hayır"
    if value is None:
        return "-"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    return str(value)


def render_text(doc: Dict[str, Any], frames: Optional[Dict[str, pd.DataFrame]] = None) -> str:
    """JSON raporunu yansıtan okunabilir metin"""
    lines = _text_lines(to_plain(doc))
    for name in sorted(frames or {}):
        lines.append("")
        lines.append(f"{name}:")
        lines.append(frames[name].to_string())
    return "\n".join(lines) + "\n"


def render_dot(lattice: IdealLattice) -> str:
    """İdeal kafesinin Hasse diyagramı (kenarlar = örtü bağıntısı)"""
    lines = ["digraph ideals {", "  rankdir=BT;", "  node [shape=box];"]
    for i, ideal in enumerate(lattice.ideals):
        label = ideal.describe().replace('"', '\\"')
        lines.append(f'  {i} [label="{i}: {label}"];')
    for lower, upper in covering_edges(lattice):
        lines.append(f"  {lower} -> {upper};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit(text: str, out: Optional[Path] = None) -> None:
    """Raporu stdout'a veya dosyaya yaz"""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info(f"Rapor yazıldı: {out}")
