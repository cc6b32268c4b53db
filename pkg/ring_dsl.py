"""
Halka DSL Modülü - Metin halka tanımlarını RingSpec'e çevirir ve geri yazar

Dilbilgisi (öncelik: bölüm çarpımdan sıkı bağlar):

    ring    := quot ("x" quot)*
    quot    := atom ("/" "(" gens ")")*
    atom    := "Z" int
             | "GF(" int ")" ["[x]/(" poly ")"]
             | "M" int "(" ring ")"
             | "T" int "{" matrix "," matrix "}"
             | "(" ring ")"
             | "@" path
    gens    := designator ("," designator)*
    designator := int | poly | "(" designator ("," designator)* ")" | matrix
    matrix  := "[" row ("," row)* "]"
    poly    := monomial ("+" monomial)*

`GF(p)` tek başına GF(p)[x]/(x) kısaltmasıdır. `@path` JSON halka tanımı
dosyasını yükler (önce çalışma dizini, sonra data/ dizini).
"""

import json
import logging
import re
from pathlib import Path
from typing import Any, Optional, Tuple

import config
from errors import InvalidSpec, ParseError
from finite_ring import (Cyclic, Matrix, PolyQuotient, Product, Quotient, RingSpec, Table,
                         check_spec, format_poly, normalize_designator, parse_poly, spec_from_json)

logger = logging.getLogger(__name__)

_INT = re.compile(r"[0-9]+")
_POLY = re.compile(r"[0-9x^+]+")
_PATH = re.compile(r"[^\s()]+")
_SPACE = re.compile(r"\s*")


class _Parser:
    """Konum tabanlı özyinelemeli iniş ayrıştırıcısı"""

    def __init__(self, text: str, base_dir: Optional[Path] = None):
        self.text = text
        self.pos = 0
        self.base_dir = base_dir

    # --- yardımcılar ------------------------------------------------------

    def error(self, *expected: str) -> ParseError:
        offset = len(self.text[:self.pos].encode("utf-8"))
        return ParseError(offset, expected, self.text)

    def skip(self) -> None:
        self.pos = _SPACE.match(self.text, self.pos).end()

    def peek(self, literal: str) -> bool:
        self.skip()
        return self.text.startswith(literal, self.pos)

    def accept(self, literal: str) -> bool:
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.accept(literal):
            raise self.error(repr(literal))

    def match(self, pattern: re.Pattern, what: str) -> str:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise self.error(what)
        self.pos = m.end()
        return m.group(0)

    def integer(self) -> int:
        return int(self.match(_INT, "tamsayı"))

    # --- dilbilgisi -------------------------------------------------------

    def parse(self) -> RingSpec:
        spec = self.ring()
        self.skip()
        if self.pos != len(self.text):
            raise self.error("'x'", "'/'", "girdi sonu")
        return spec

    def ring(self) -> RingSpec:
        factors = [self.quot()]
        while self.accept("x"):
            factors.append(self.quot())
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors))

    def quot(self) -> RingSpec:
        spec = self.atom()
        while self.accept("/"):
            self.expect("(")
            gens = [self.designator()]
            while self.accept(","):
                gens.append(self.designator())
            self.expect(")")
            spec = self.semantic(lambda: Quotient(
                spec, tuple(normalize_designator(spec, g) for g in gens)))
        return spec

    def atom(self) -> RingSpec:
        if self.accept("Z"):
            return self.checked(Cyclic(self.integer()))
        if self.accept("GF("):
            p = self.integer()
            self.expect(")")
            if self.accept("[x]/("):
                start = self.pos
                text = self.match(_POLY, "polinom")
                self.expect(")")
                modulus = self.semantic(lambda: parse_poly(text, p), start)
                return self.checked(PolyQuotient(p, modulus))
            return self.checked(PolyQuotient(p, (0, 1)))
        if self.accept("M"):
            k = self.integer()
            self.expect("(")
            base = self.ring()
            self.expect(")")
            return self.checked(Matrix(k, base))
        if self.accept("T"):
            n = self.integer()
            self.expect("{")
            add = self.matrix()
            self.expect(",")
            mul = self.matrix()
            self.expect("}")
            return self.checked(self.semantic(lambda: Table(
                n, tuple(tuple(int(v) for v in r) for r in add),
                tuple(tuple(int(v) for v in r) for r in mul))))
        if self.accept("("):
            spec = self.ring()
            self.expect(")")
            return spec
        if self.accept("@"):
            start = self.pos
            path = self.match(_PATH, "dosya yolu")
            return self.semantic(lambda: load_spec_file(path, self.base_dir), start)
        raise self.error("'Z'", "'GF('", "'M'", "'T'", "'('", "'@'")

    def designator(self) -> Any:
        if self.accept("("):
            parts = [self.designator()]
            while self.accept(","):
                parts.append(self.designator())
            self.expect(")")
            return tuple(parts)
        if self.peek("["):
            return self.matrix()
        token = self.match(_POLY, "eleman belirteci")
        return int(token) if token.isdigit() else token

    def matrix(self) -> Tuple[Tuple[Any, ...], ...]:
        self.expect("[")
        rows = [self.row()]
        while self.accept(","):
            rows.append(self.row())
        self.expect("]")
        return tuple(rows)

    def row(self) -> Tuple[Any, ...]:
        self.expect("[")
        entries = [self.designator()]
        while self.accept(","):
            entries.append(self.designator())
        self.expect("]")
        return tuple(entries)

    # --- anlamsal kontroller ----------------------------------------------

    def checked(self, spec: RingSpec) -> RingSpec:
        return self.semantic(lambda: (check_spec(spec), spec)[1])

    def semantic(self, build, start: Optional[int] = None):
        """Anlamsal hatalar InvalidSpec olarak kalır; konum bilgisi mesaja eklenir"""
        try:
            return build()
        except (InvalidSpec, TypeError, ValueError) as e:
            offset = len(self.text[:self.pos if start is None else start].encode("utf-8"))
            raise InvalidSpec(f"{e} (bayt {offset})") from e


def parse_spec(text: str, base_dir: Optional[Path] = None) -> RingSpec:
    """DSL metnini RingSpec'e çevir"""
    spec = _Parser(text, base_dir).parse()
    logger.debug(f"Tanım ayrıştırıldı: {text!r}")
    return spec


def load_spec_file(path: str, base_dir: Optional[Path] = None) -> RingSpec:
    """JSON halka tanımı dosyasını oku"""
    candidates = [Path(path)]
    if base_dir is not None:
        candidates.append(Path(base_dir) / path)
    candidates.append(config.DATA_DIR / path)
    for candidate in candidates:
        if candidate.is_file():
            try:
                with open(candidate, "r", encoding="utf-8") as f:
                    doc = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                raise InvalidSpec(f"Tanım dosyası okunamadı ({candidate}): {e}")
            logger.info(f"Halka tanımı yüklendi: {candidate}")
            return spec_from_json(doc)
    raise InvalidSpec(f"Tanım dosyası bulunamadı: {path}")


# ---------------------------------------------------------------------------
# Geri yazma
# ---------------------------------------------------------------------------

def render(spec: RingSpec) -> str:
    """RingSpec -> DSL metni; parse_spec(render(s)) == s"""
    if isinstance(spec, Product):
        return " x ".join(_render_factor(f) for f in spec.factors)
    return _render_factor(spec)


def _render_factor(spec: RingSpec) -> str:
    if isinstance(spec, Product):
        return f"({render(spec)})"
    if isinstance(spec, Quotient):
        gens = ",".join(render_designator(spec.base, g) for g in spec.generators)
        return f"{_render_factor(spec.base)}/({gens})"
    return _render_atom(spec)


def _render_atom(spec: RingSpec) -> str:
    if isinstance(spec, Cyclic):
        return f"Z{spec.n}"
    if isinstance(spec, PolyQuotient):
        if tuple(spec.modulus) == (0, 1):
            return f"GF({spec.p})"
        return f"GF({spec.p})[x]/({format_poly(spec.modulus)})"
    if isinstance(spec, Matrix):
        return f"M{spec.k}({render(spec.base)})"
    if isinstance(spec, Table):
        return f"T{spec.n}{{{_render_rows(spec.add)},{_render_rows(spec.mul)}}}"
    raise InvalidSpec(f"Bilinmeyen halka tanımı: {spec!r}")


def _render_rows(rows) -> str:
    return "[" + ",".join("[" + ",".join(str(v) for v in row) + "]" for row in rows) + "]"


def render_designator(base: RingSpec, d: Any) -> str:
    """Eleman belirtecini taban tanıma göre yaz"""
    if isinstance(base, Quotient):
        return render_designator(base.base, d)
    if isinstance(base, Matrix):
        return "[" + ",".join("[" + ",".join(render_designator(base.base, e) for e in row) + "]"
                              for row in d) + "]"
    if isinstance(base, Product):
        return "(" + ",".join(render_designator(f, e) for f, e in zip(base.factors, d)) + ")"
    return str(d)
