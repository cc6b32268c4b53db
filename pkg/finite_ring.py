"""
Sonlu Halka Modülü - Yapılandırılmış tanımlardan sonlu halkalar inşa eder

Her halka toplama ve çarpma Cayley tablolarıyla temsil edilir; elemanlar
0..n-1 arası indekslerdir. Tablolar inşa sonrası salt okunurdur.
"""

import json
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from itertools import product as cartesian
from typing import Any, Callable, ClassVar, Dict, List, Optional, Sequence, Tuple, Union

import jsonschema
import numpy as np

import config
from errors import InvalidSpec, NotAnIdeal, SizeCapExceeded, TableNotARing

logger = logging.getLogger(__name__)

# Tablo saklama tipi: 4096 elemanda 32 MiB
TABLE_DTYPE = np.int16
TABLE_MAX_ELEMENTS = int(np.iinfo(TABLE_DTYPE).max) + 1
CHUNK_ROWS = 256


class RingKind(Enum):
    """Halka tanımı türleri"""
    CYCLIC = "cyclic"
    POLY_QUOTIENT = "poly_quotient"
    MATRIX = "matrix"
    PRODUCT = "product"
    QUOTIENT = "quotient"
    TABLE = "table"


@dataclass(frozen=True)
class Cyclic:
    """Z/nZ"""
    n: int
    kind: ClassVar[RingKind] = RingKind.CYCLIC


@dataclass(frozen=True)
class PolyQuotient:
    """GF(p)[x]/(modulus); katsayılar düşük dereceden yükseğe"""
    p: int
    modulus: Tuple[int, ...]
    kind: ClassVar[RingKind] = RingKind.POLY_QUOTIENT

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1


@dataclass(frozen=True)
class Matrix:
    """M_k(base)"""
    k: int
    base: "RingSpec"
    kind: ClassVar[RingKind] = RingKind.MATRIX


@dataclass(frozen=True)
class Product:
    """Çarpanların direkt çarpımı"""
    factors: Tuple["RingSpec", ...]
    kind: ClassVar[RingKind] = RingKind.PRODUCT


@dataclass(frozen=True)
class Quotient:
    """base / (üreteçlerin ürettiği iki taraflı ideal)"""
    base: "RingSpec"
    generators: Tuple[Any, ...]
    kind: ClassVar[RingKind] = RingKind.QUOTIENT


@dataclass(frozen=True)
class Table:
    """Açık Cayley tabloları"""
    n: int
    add: Tuple[Tuple[int, ...], ...]
    mul: Tuple[Tuple[int, ...], ...]
    kind: ClassVar[RingKind] = RingKind.TABLE


RingSpec = Union[Cyclic, PolyQuotient, Matrix, Product, Quotient, Table]


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """Sonlu halka: Cayley tabloları ve köken bilgisi"""
    size: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    zero: int
    unity: Optional[int]
    provenance: Optional[RingSpec] = None
    labels: Tuple[str, ...] = ()
    # Çarpım/matris halkalarında bileşenler, bölüm halkasında taban halka
    parts: Tuple["FiniteRing", ...] = field(default=(), repr=False)
    # Bölüm halkası için taban -> bölüm izdüşümü
    projection: Optional[np.ndarray] = field(default=None, repr=False)

    def __len__(self) -> int:
        return self.size

    def label(self, x: int) -> str:
        """Elemanın okunabilir adı"""
        if self.labels:
            return self.labels[int(x)]
        return str(int(x))

    @cached_property
    def elements(self) -> np.ndarray:
        return np.arange(self.size)

    @cached_property
    def is_commutative(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    @cached_property
    def additive_generators(self) -> Tuple[int, ...]:
        """Toplamsal grubun küçük bir üreteç kümesi"""
        full = np.ones(self.size, dtype=bool)
        return tuple(additive_generators(self, full))


# ---------------------------------------------------------------------------
# Toplamsal alt grup yardımcıları (bitset kapanışları bunların üzerine kurulur)
# ---------------------------------------------------------------------------

def additive_span(ring: FiniteRing, generators: Sequence[int],
                  base: Optional[np.ndarray] = None) -> np.ndarray:
    """
    `base` alt grubu ile üreteçlerin ürettiği toplamsal alt grubu döndür.

    H + <s>, H'nin s, 2s, ... ötelemelerinin birleşimi olarak kurulur;
    maliyet sonuç kümesinin boyutuyla orantılıdır.
    """
    if base is None:
        mask = np.zeros(ring.size, dtype=bool)
        mask[ring.zero] = True
    else:
        mask = base.copy()
    members = np.flatnonzero(mask)
    for s in generators:
        s = int(s)
        if mask[s]:
            continue
        t = s
        while not mask[t]:
            mask[ring.add[members, t]] = True
            t = int(ring.add[t, s])
        members = np.flatnonzero(mask)
    return mask


def additive_generators(ring: FiniteRing, mask: np.ndarray) -> List[int]:
    """Bir alt grubun açgözlü üreteç listesi (en fazla log2 |H| eleman)"""
    gens: List[int] = []
    span = np.zeros(ring.size, dtype=bool)
    span[ring.zero] = True
    for x in np.flatnonzero(mask):
        if not span[x]:
            gens.append(int(x))
            span = additive_span(ring, [x], base=span)
    return gens


def is_ideal_mask(ring: FiniteRing, mask: np.ndarray, left_only: bool = False) -> bool:
    """Maske (sol) ideal mi: 0 içerir, toplama/negatif ve halka çarpımına kapalı"""
    if mask.shape != (ring.size,) or not mask[ring.zero]:
        return False
    members = np.flatnonzero(mask)
    if not mask[ring.neg[members]].all():
        return False
    if not mask[ring.add[np.ix_(members, members)]].all():
        return False
    if not mask[ring.mul[:, members]].all():
        return False
    if not left_only and not mask[ring.mul[members, :]].all():
        return False
    return True


# ---------------------------------------------------------------------------
# Polinom yardımcıları
# ---------------------------------------------------------------------------

_MONOMIAL = re.compile(r"^(\d*)(x(\^(\d+))?)?$")


def format_poly(coeffs: Sequence[int]) -> str:
    """Katsayı listesini (düşük derece önce) metne çevir: [1,0,1] -> 'x^2+1'"""
    terms = []
    for degree in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[degree])
        if c == 0:
            continue
        if degree == 0:
            terms.append(str(c))
        else:
            var = "x" if degree == 1 else f"x^{degree}"
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms) if terms else "0"


def parse_poly(text: str, p: Optional[int] = None) -> Tuple[int, ...]:
    """'x^2+1' -> (1, 0, 1); p verilirse katsayılar mod p indirgenir"""
    coeffs: Dict[int, int] = {}
    compact = text.replace(" ", "")
    if not compact:
        raise InvalidSpec("Boş polinom")
    for term in compact.split("+"):
        m = _MONOMIAL.match(term)
        if not m or term == "":
            raise InvalidSpec(f"Geçersiz monom: {term!r}")
        if m.group(2) is None:
            if not m.group(1):
                raise InvalidSpec(f"Geçersiz monom: {term!r}")
            degree, c = 0, int(m.group(1))
        else:
            degree = int(m.group(4)) if m.group(4) else 1
            c = int(m.group(1)) if m.group(1) else 1
        coeffs[degree] = coeffs.get(degree, 0) + c
    top = max(coeffs)
    result = [coeffs.get(d, 0) for d in range(top + 1)]
    if p is not None:
        result = [c % p for c in result]
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return tuple(result)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# ---------------------------------------------------------------------------
# Tanım doğrulama ve boyut tahmini
# ---------------------------------------------------------------------------

def check_spec(spec: RingSpec) -> None:
    """Tanımın biçimsel geçerliliğini kontrol et"""
    if isinstance(spec, Cyclic):
        if not isinstance(spec.n, int) or spec.n < 1:
            raise InvalidSpec(f"Z_n için n pozitif olmalı: {spec.n!r}")
    elif isinstance(spec, PolyQuotient):
        if not is_prime(spec.p):
            raise InvalidSpec(f"p asal değil: {spec.p}")
        if len(spec.modulus) < 2:
            raise InvalidSpec("Modül polinomunun derecesi en az 1 olmalı")
        if any(not isinstance(c, int) or not 0 <= c < spec.p for c in spec.modulus):
            raise InvalidSpec(f"Katsayılar GF({spec.p}) içinde olmalı: {spec.modulus}")
        if spec.modulus[-1] % spec.p == 0:
            raise InvalidSpec("Modül polinomunun baş katsayısı sıfır olamaz")
    elif isinstance(spec, Matrix):
        if not isinstance(spec.k, int) or spec.k < 1:
            raise InvalidSpec(f"Matris boyutu k >= 1 olmalı: {spec.k!r}")
        check_spec(spec.base)
    elif isinstance(spec, Product):
        if not spec.factors:
            raise InvalidSpec("Çarpım en az bir çarpan içermeli")
        for factor in spec.factors:
            check_spec(factor)
    elif isinstance(spec, Quotient):
        check_spec(spec.base)
    elif isinstance(spec, Table):
        if spec.n < 1 or len(spec.add) != spec.n or len(spec.mul) != spec.n:
            raise InvalidSpec(f"Tablo boyutları n={spec.n} ile uyuşmuyor")
        for row in list(spec.add) + list(spec.mul):
            if len(row) != spec.n or any(not 0 <= int(v) < spec.n for v in row):
                raise InvalidSpec("Tablo satırları n uzunluğunda ve 0..n-1 aralığında olmalı")
    else:
        raise InvalidSpec(f"Bilinmeyen halka tanımı: {spec!r}")


def spec_size(spec: RingSpec) -> int:
    """İnşa etmeden eleman sayısı (bölümde taban boyutu üst sınırdır)"""
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, PolyQuotient):
        return spec.p ** spec.degree
    if isinstance(spec, Matrix):
        return spec_size(spec.base) ** (spec.k * spec.k)
    if isinstance(spec, Product):
        size = 1
        for factor in spec.factors:
            size *= spec_size(factor)
        return size
    if isinstance(spec, Quotient):
        return spec_size(spec.base)
    if isinstance(spec, Table):
        return spec.n
    raise InvalidSpec(f"Bilinmeyen halka tanımı: {spec!r}")


# ---------------------------------------------------------------------------
# Aksiyom doğrulama
# ---------------------------------------------------------------------------

def _first_mismatch(lhs: np.ndarray, rhs: np.ndarray) -> Optional[Tuple[int, ...]]:
    bad = np.argwhere(lhs != rhs)
    if len(bad) == 0:
        return None
    return tuple(int(v) for v in bad[0])


def validate_ring_axioms(add: np.ndarray, mul: np.ndarray) -> None:
    """
    Halka aksiyomlarını tüm üçlüler üzerinde kapsamlı kontrol et.

    Başarısızlıkta ilk aksiyomu ve sözlük sırasındaki ilk tanığı taşıyan
    TableNotARing fırlatılır.
    """
    n = add.shape[0]
    if add.shape != (n, n) or mul.shape != (n, n):
        raise TableNotARing("square tables", ())
    if (add < 0).any() or (add >= n).any() or (mul < 0).any() or (mul >= n).any():
        raise TableNotARing("closure", ())
    ar = np.arange(n)
    zeros = np.flatnonzero((add == ar[None, :]).all(axis=1) & (add == ar[:, None]).all(axis=0))
    if len(zeros) == 0:
        raise TableNotARing("additive identity", ())
    zero = int(zeros[0])

    witness = _first_mismatch(add, add.T)
    if witness:
        raise TableNotARing("additive commutativity", witness)
    for a in range(n):
        witness = _first_mismatch(add[add[a, :], :], add[a, :][add])
        if witness:
            raise TableNotARing("additive associativity", (a,) + witness)
    has_inverse = (add == zero).any(axis=1)
    if not has_inverse.all():
        raise TableNotARing("additive inverse", (int(np.flatnonzero(~has_inverse)[0]),))
    for a in range(n):
        witness = _first_mismatch(mul[mul[a, :], :], mul[a, :][mul])
        if witness:
            raise TableNotARing("multiplicative associativity", (a,) + witness)
    for a in range(n):
        row = mul[a, :]
        witness = _first_mismatch(row[add], add[row[:, None], row[None, :]])
        if witness:
            raise TableNotARing("left distributivity", (a,) + witness)
    for a in range(n):
        col = mul[:, a]
        witness = _first_mismatch(col[add], add[col[:, None], col[None, :]])
        if witness:
            raise TableNotARing("right distributivity", (a,) + witness)


def _element_cap(max_elements: Optional[int]) -> int:
    return min(max_elements or config.LIMITS_CONFIG["max_elements"], TABLE_MAX_ELEMENTS)


def _freeze(table: np.ndarray) -> np.ndarray:
    frozen = np.ascontiguousarray(table, dtype=TABLE_DTYPE)
    frozen.setflags(write=False)
    return frozen


def ring_from_tables(add: np.ndarray, mul: np.ndarray, provenance: Optional[RingSpec] = None,
                     labels: Sequence[str] = (), validate: bool = True,
                     parts: Tuple[FiniteRing, ...] = (),
                     projection: Optional[np.ndarray] = None) -> FiniteRing:
    """Tablolardan halka oluştur; sıfır, negatif ve birim türetilir"""
    add = np.asarray(add)
    mul = np.asarray(mul)
    if validate:
        validate_ring_axioms(add, mul)
    n = add.shape[0]
    if n > TABLE_MAX_ELEMENTS:
        raise SizeCapExceeded(n, TABLE_MAX_ELEMENTS, "tablo elemanı")
    ar = np.arange(n)
    zero = int(np.flatnonzero((add == ar[None, :]).all(axis=1))[0])
    neg = np.argmax(add == zero, axis=1)
    ring = FiniteRing(
        size=n,
        add=_freeze(add),
        mul=_freeze(mul),
        neg=_freeze(neg),
        zero=zero,
        unity=_unity_of(mul),
        provenance=provenance,
        labels=tuple(labels),
        parts=parts,
        projection=projection,
    )
    return ring


def _unity_of(mul: np.ndarray) -> Optional[int]:
    n = mul.shape[0]
    ar = np.arange(n)
    left = (mul == ar[None, :]).all(axis=1)
    right = (mul == ar[:, None]).all(axis=0)
    candidates = np.flatnonzero(left & right)
    return int(candidates[0]) if len(candidates) else None


def find_unity(ring: FiniteRing) -> Optional[int]:
    """İki taraflı çarpımsal birim (varsa tek)"""
    return ring.unity


# ---------------------------------------------------------------------------
# Tablo kurucuları
# ---------------------------------------------------------------------------

def _digits(values: np.ndarray, base: int, width: int) -> np.ndarray:
    """values -> (len, width) basamaklar; sütun i, base**i basamağı"""
    values = np.asarray(values, dtype=np.int64)
    powers = base ** np.arange(width, dtype=np.int64)
    return (values[:, None] // powers[None, :]) % base


def _chunked_table(n: int, rows_fn: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Büyük tabloları satır blokları halinde doldur"""
    table = np.empty((n, n), dtype=TABLE_DTYPE)
    for start in range(0, n, CHUNK_ROWS):
        rows = np.arange(start, min(n, start + CHUNK_ROWS))
        table[rows, :] = rows_fn(rows)
    return table


def _cyclic_ring(spec: Cyclic) -> FiniteRing:
    n = spec.n
    r = np.arange(n, dtype=np.int64)
    add = (r[:, None] + r[None, :]) % n
    mul = (r[:, None] * r[None, :]) % n
    return ring_from_tables(add, mul, provenance=spec, labels=[str(i) for i in range(n)],
                            validate=False)


def _poly_ring(spec: PolyQuotient) -> FiniteRing:
    p, d = spec.p, spec.degree
    n = p ** d
    coeffs = _digits(np.arange(n), p, d)
    weights = p ** np.arange(d, dtype=np.int64)
    add = ((coeffs[:, None, :] + coeffs[None, :, :]) % p) @ weights

    inv_lead = pow(int(spec.modulus[-1]), p - 2, p)
    monic = [(int(c) * inv_lead) % p for c in spec.modulus]

    def mul_rows(rows: np.ndarray) -> np.ndarray:
        prod = np.zeros((len(rows), n, 2 * d - 1), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                prod[:, :, i + j] += np.outer(coeffs[rows, i], coeffs[:, j])
        prod %= p
        # x^d = -(monic[0] + ... + monic[d-1] x^{d-1})
        for k in range(2 * d - 2, d - 1, -1):
            top = prod[:, :, k].copy()
            for t in range(d):
                if monic[t]:
                    prod[:, :, k - d + t] -= top * monic[t]
            prod[:, :, k] = 0
            prod %= p
        return prod[:, :, :d] @ weights

    mul = _chunked_table(n, mul_rows)
    labels = [format_poly(coeffs[i]) for i in range(n)]
    return ring_from_tables(add, mul, provenance=spec, labels=labels, validate=False)


def _matrix_ring(spec: Matrix, base: FiniteRing) -> FiniteRing:
    k, m = spec.k, base.size
    cells = k * k
    n = m ** cells
    # Hücre 0 = (0,0) en anlamlı basamak
    coords = _digits(np.arange(n), m, cells)[:, ::-1]
    weights = (m ** np.arange(cells, dtype=np.int64))[::-1]
    base_add = base.add.astype(np.int64)
    base_mul = base.mul.astype(np.int64)

    def add_rows(rows: np.ndarray) -> np.ndarray:
        out = np.zeros((len(rows), n), dtype=np.int64)
        for e in range(cells):
            out += base_add[coords[rows, e][:, None], coords[None, :, e]] * weights[e]
        return out

    def mul_rows(rows: np.ndarray) -> np.ndarray:
        out = np.zeros((len(rows), n), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                acc = None
                for l in range(k):
                    term = base_mul[coords[rows, i * k + l][:, None], coords[None, :, l * k + j]]
                    acc = term if acc is None else base_add[acc, term]
                out += acc * weights[i * k + j]
        return out

    add = _chunked_table(n, add_rows)
    mul = _chunked_table(n, mul_rows)
    labels = []
    for idx in range(n):
        rows = [",".join(base.label(coords[idx, i * k + j]) for j in range(k)) for i in range(k)]
        labels.append("[" + ",".join(f"[{r}]" for r in rows) + "]")
    return ring_from_tables(add, mul, provenance=spec, labels=labels, validate=False,
                            parts=(base,))


def product_ring(rings: Sequence[FiniteRing], max_elements: Optional[int] = None) -> FiniteRing:
    """Halkaların direkt çarpımı (satır öncelikli kodlama: ilk çarpan en anlamlı)"""
    if not rings:
        raise InvalidSpec("Çarpım en az bir çarpan içermeli")
    cap = _element_cap(max_elements)
    sizes = [r.size for r in rings]
    n = int(np.prod(sizes, dtype=np.int64))
    if n > cap:
        raise SizeCapExceeded(n, cap)
    strides = [int(np.prod(sizes[i + 1:], dtype=np.int64)) for i in range(len(sizes))]
    coords = np.stack([(np.arange(n) // s) % m for s, m in zip(strides, sizes)], axis=1)

    def op_rows(tables: List[np.ndarray]) -> Callable[[np.ndarray], np.ndarray]:
        def rows_fn(rows: np.ndarray) -> np.ndarray:
            out = np.zeros((len(rows), n), dtype=np.int64)
            for f, (table, stride) in enumerate(zip(tables, strides)):
                out += table[coords[rows, f][:, None], coords[None, :, f]].astype(np.int64) * stride
            return out
        return rows_fn

    add = _chunked_table(n, op_rows([r.add for r in rings]))
    mul = _chunked_table(n, op_rows([r.mul for r in rings]))
    labels = ["(" + ",".join(r.label(c) for r, c in zip(rings, combo)) + ")"
              for combo in cartesian(*[range(m) for m in sizes])]
    provenance = None
    if all(r.provenance is not None for r in rings):
        provenance = Product(tuple(r.provenance for r in rings))
    return ring_from_tables(add, mul, provenance=provenance, labels=labels, validate=False,
                            parts=tuple(rings))


def _table_ring(spec: Table) -> FiniteRing:
    add = np.array(spec.add, dtype=np.int64)
    mul = np.array(spec.mul, dtype=np.int64)
    return ring_from_tables(add, mul, provenance=spec, labels=[str(i) for i in range(spec.n)],
                            validate=True)


def build_ring(spec: RingSpec, max_elements: Optional[int] = None) -> FiniteRing:
    """Tanımdan doğrulanmış sonlu halka inşa et"""
    cap = _element_cap(max_elements)
    check_spec(spec)
    size = spec_size(spec)
    if size > cap:
        raise SizeCapExceeded(size, cap)

    if isinstance(spec, Cyclic):
        ring = _cyclic_ring(spec)
    elif isinstance(spec, PolyQuotient):
        ring = _poly_ring(spec)
    elif isinstance(spec, Matrix):
        ring = _matrix_ring(spec, build_ring(spec.base, cap))
    elif isinstance(spec, Product):
        ring = product_ring([build_ring(f, cap) for f in spec.factors], cap)
        ring = _with_provenance(ring, spec)
    elif isinstance(spec, Quotient):
        base = build_ring(spec.base, cap)
        gens = [element_of(base, g) for g in spec.generators]
        from ideal_lattice import ideal_generated
        ideal = ideal_generated(base, gens)
        ring, _ = quotient_ring(base, ideal, provenance=spec)
    else:
        ring = _table_ring(spec)

    if ring.size <= config.LIMITS_CONFIG["validate_max_elements"] and not isinstance(spec, Table):
        validate_ring_axioms(ring.add, ring.mul)
    logger.debug(f"Halka inşa edildi: {spec.kind.value}, {ring.size} eleman")
    return ring


def _with_provenance(ring: FiniteRing, spec: RingSpec) -> FiniteRing:
    return FiniteRing(size=ring.size, add=ring.add, mul=ring.mul, neg=ring.neg, zero=ring.zero,
                      unity=ring.unity, provenance=spec, labels=ring.labels, parts=ring.parts,
                      projection=ring.projection)


# ---------------------------------------------------------------------------
# Eleman belirteçleri
# ---------------------------------------------------------------------------

def element_of(ring: FiniteRing, designator: Any) -> int:
    """Bir eleman belirtecini halkanın köken tanımına göre indekse çevir"""
    spec = ring.provenance
    try:
        if isinstance(spec, Cyclic):
            return int(designator) % spec.n
        if isinstance(spec, PolyQuotient):
            if isinstance(designator, str):
                coeffs = parse_poly(designator, spec.p)
            elif isinstance(designator, int):
                coeffs = (designator % spec.p,)
            else:
                coeffs = tuple(int(c) % spec.p for c in designator)
            return _evaluate_poly(ring, spec, coeffs)
        if isinstance(spec, Matrix):
            base = ring.parts[0]
            rows = list(designator)
            if len(rows) != spec.k or any(len(r) != spec.k for r in rows):
                raise InvalidSpec(f"{spec.k}x{spec.k} matris bekleniyordu: {designator!r}")
            index = 0
            for row in rows:
                for entry in row:
                    index = index * base.size + element_of(base, entry)
            return index
        if isinstance(spec, Product):
            parts = list(designator)
            if len(parts) != len(ring.parts):
                raise InvalidSpec(f"{len(ring.parts)} bileşenli eleman bekleniyordu: {designator!r}")
            index = 0
            for factor, entry in zip(ring.parts, parts):
                index = index * factor.size + element_of(factor, entry)
            return index
        if isinstance(spec, Quotient):
            return int(ring.projection[element_of(ring.parts[0], designator)])
        if isinstance(spec, Table) or spec is None:
            value = int(designator)
            if not 0 <= value < ring.size:
                raise InvalidSpec(f"Eleman indeksi aralık dışında: {value}")
            return value
    except (TypeError, ValueError) as e:
        raise InvalidSpec(f"Geçersiz eleman belirteci {designator!r}: {e}")
    raise InvalidSpec(f"Bilinmeyen halka tanımı: {spec!r}")


def _evaluate_poly(ring: FiniteRing, spec: PolyQuotient, coeffs: Sequence[int]) -> int:
    """Horner ile polinomu halka içinde değerlendir"""
    if spec.degree >= 2:
        x = spec.p
    else:
        # GF(p)[x]/(m1 x + m0): x = -m0/m1
        m0, m1 = spec.modulus
        x = (-m0 * pow(m1, spec.p - 2, spec.p)) % spec.p
    acc = ring.zero
    for c in reversed(list(coeffs)):
        acc = int(ring.add[ring.mul[acc, x], int(c) % spec.p])
    return acc


# ---------------------------------------------------------------------------
# Merkezi idempotentler, bölüm ve alt halkalar
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CentralIdempotentReport:
    """'Merkezi idempotentlerle üretilme' kontrol sonucu"""
    holds: bool
    central_idempotents: Tuple[int, ...]
    witness_map: Optional[Tuple[int, ...]] = None
    failing_element: Optional[int] = None


def central_idempotents(ring: FiniteRing) -> Tuple[int, ...]:
    ar = ring.elements
    idempotent = np.flatnonzero(ring.mul[ar, ar] == ar)
    return tuple(int(e) for e in idempotent if (ring.mul[e, :] == ring.mul[:, e]).all())


def is_central_idempotent_generated(ring: FiniteRing) -> CentralIdempotentReport:
    """Her x için ex = x olan merkezi idempotent e var mı"""
    central = central_idempotents(ring)
    if ring.unity is not None:
        return CentralIdempotentReport(True, central, witness_map=(ring.unity,) * ring.size)
    fixes = ring.mul[list(central), :] == ring.elements[None, :]
    covered = fixes.any(axis=0)
    if not covered.all():
        failing = int(np.flatnonzero(~covered)[0])
        logger.debug(f"Merkezi idempotent bulunamadı: x={failing}")
        return CentralIdempotentReport(False, central, failing_element=failing)
    witness = tuple(int(central[i]) for i in np.argmax(fixes, axis=0))
    return CentralIdempotentReport(True, central, witness_map=witness)


def quotient_ring(ring: FiniteRing, ideal: "Any", provenance: Optional[RingSpec] = None
                  ) -> Tuple[FiniteRing, np.ndarray]:
    """
    R/I: elemanlar en küçük indeksli koset temsilcileridir.

    İzdüşüm, taban elemanını bölüm halkasındaki indekse götüren dizidir.
    """
    mask = ideal.mask if hasattr(ideal, "mask") else np.asarray(ideal, dtype=bool)
    if not is_ideal_mask(ring, mask):
        raise NotAnIdeal("Bölüm için verilen küme iki taraflı ideal değil")
    members = np.flatnonzero(mask)
    rep_of = ring.add[:, members].min(axis=1)
    reps = np.unique(rep_of)
    projection = np.searchsorted(reps, rep_of)
    add = projection[ring.add[np.ix_(reps, reps)]]
    mul = projection[ring.mul[np.ix_(reps, reps)]]
    projection = _freeze(projection)
    labels = [ring.label(r) for r in reps]
    quotient = ring_from_tables(add, mul, provenance=provenance, labels=labels, validate=False,
                                parts=(ring,), projection=projection)
    return quotient, projection


def subring(ring: FiniteRing, mask: np.ndarray) -> Tuple[FiniteRing, np.ndarray]:
    """Toplama, negatif ve çarpıma kapalı alt kümeyi bağımsız halka olarak üret"""
    members = np.flatnonzero(mask)
    closed = (mask[ring.add[np.ix_(members, members)]].all()
              and mask[ring.mul[np.ix_(members, members)]].all()
              and mask[ring.zero])
    if not closed:
        raise InvalidSpec("Alt küme halka işlemlerine kapalı değil")
    position = np.full(ring.size, -1, dtype=np.int64)
    position[members] = np.arange(len(members))
    add = position[ring.add[np.ix_(members, members)]]
    mul = position[ring.mul[np.ix_(members, members)]]
    labels = [ring.label(m) for m in members]
    sub = ring_from_tables(add, mul, labels=labels, validate=False)
    return sub, members


def upper_triangular_ring(base: FiniteRing) -> FiniteRing:
    """2x2 üst üçgen matrisler [[a,b],[0,c]] (Table kökenli)"""
    m = base.size
    n = m ** 3
    abc = _digits(np.arange(n), m, 3)[:, ::-1]
    a, b, c = abc[:, 0], abc[:, 1], abc[:, 2]
    A, M = base.add.astype(np.int64), base.mul.astype(np.int64)
    add = (A[a[:, None], a[None, :]] * m * m + A[b[:, None], b[None, :]] * m
           + A[c[:, None], c[None, :]])
    # [[a,b],[0,c]][[a',b'],[0,c']] = [[aa', ab'+bc'],[0,cc']]
    top_right = A[M[a[:, None], b[None, :]], M[b[:, None], c[None, :]]]
    mul = M[a[:, None], a[None, :]] * m * m + top_right * m + M[c[:, None], c[None, :]]
    spec = table_spec(add, mul)
    labels = [f"[[{base.label(x)},{base.label(y)}],[0,{base.label(z)}]]" for x, y, z in abc]
    return ring_from_tables(add, mul, provenance=spec, labels=labels, validate=True)


def table_spec(add: np.ndarray, mul: np.ndarray) -> Table:
    """Numpy tablolarından Table tanımı"""
    add = np.asarray(add)
    mul = np.asarray(mul)
    return Table(
        n=int(add.shape[0]),
        add=tuple(tuple(int(v) for v in row) for row in add),
        mul=tuple(tuple(int(v) for v in row) for row in mul),
    )


# ---------------------------------------------------------------------------
# JSON dönüşümleri
# ---------------------------------------------------------------------------

def spec_to_json(spec: RingSpec) -> Dict[str, Any]:
    """RingSpec -> kanonik JSON belgesi"""
    if isinstance(spec, Cyclic):
        return {"kind": spec.kind.value, "n": spec.n}
    if isinstance(spec, PolyQuotient):
        return {"kind": spec.kind.value, "p": spec.p, "modulus": list(spec.modulus)}
    if isinstance(spec, Matrix):
        return {"kind": spec.kind.value, "k": spec.k, "base": spec_to_json(spec.base)}
    if isinstance(spec, Product):
        return {"kind": spec.kind.value, "factors": [spec_to_json(f) for f in spec.factors]}
    if isinstance(spec, Quotient):
        return {"kind": spec.kind.value, "base": spec_to_json(spec.base),
                "generators": [_designator_to_json(g) for g in spec.generators]}
    if isinstance(spec, Table):
        return {"kind": spec.kind.value, "n": spec.n,
                "add": [list(r) for r in spec.add], "mul": [list(r) for r in spec.mul]}
    raise InvalidSpec(f"Bilinmeyen halka tanımı: {spec!r}")


def _designator_to_json(d: Any) -> Any:
    if isinstance(d, (tuple, list)):
        return [_designator_to_json(x) for x in d]
    return d


def normalize_designator(base: RingSpec, d: Any) -> Any:
    """Belirteci taban tanıma göre kanonik biçime getir (tuple'lar, kanonik polinom metni)"""
    if isinstance(base, Cyclic):
        return int(d) % base.n
    if isinstance(base, PolyQuotient):
        if isinstance(d, str):
            return format_poly(parse_poly(d, base.p))
        if isinstance(d, int):
            return format_poly((d % base.p,))
        return format_poly([int(c) % base.p for c in d])
    if isinstance(base, Matrix):
        return tuple(tuple(normalize_designator(base.base, e) for e in row) for row in d)
    if isinstance(base, Product):
        if len(d) != len(base.factors):
            raise InvalidSpec(f"{len(base.factors)} bileşenli eleman bekleniyordu: {d!r}")
        return tuple(normalize_designator(f, e) for f, e in zip(base.factors, d))
    if isinstance(base, Quotient):
        return normalize_designator(base.base, d)
    if isinstance(base, Table):
        return int(d)
    raise InvalidSpec(f"Bilinmeyen halka tanımı: {base!r}")


@lru_cache(maxsize=1)
def _spec_validator() -> jsonschema.Draft7Validator:
    with open(config.SCHEMAS_DIR / "ring_spec.schema.json", encoding="utf-8") as f:
        return jsonschema.Draft7Validator(json.load(f))


def spec_from_json(doc: Dict[str, Any]) -> RingSpec:
    """Kanonik JSON belgesi -> RingSpec (önce ring_spec şemasına göre doğrulanır)"""
    if not isinstance(doc, dict) or "kind" not in doc:
        raise InvalidSpec("Halka tanımı 'kind' alanı içeren bir nesne olmalı")
    try:
        _spec_validator().validate(doc)
    except jsonschema.ValidationError as e:
        path = "/".join(str(p) for p in e.absolute_path) or "<kök>"
        raise InvalidSpec(f"Halka tanımı şemaya uymuyor ({path}): {e.message}")
    return _spec_from_doc(doc)


def _spec_from_doc(doc: Dict[str, Any]) -> RingSpec:
    try:
        kind = RingKind(doc["kind"])
        if kind is RingKind.CYCLIC:
            spec = Cyclic(int(doc["n"]))
        elif kind is RingKind.POLY_QUOTIENT:
            spec = PolyQuotient(int(doc["p"]), tuple(int(c) for c in doc["modulus"]))
        elif kind is RingKind.MATRIX:
            spec = Matrix(int(doc["k"]), _spec_from_doc(doc["base"]))
        elif kind is RingKind.PRODUCT:
            spec = Product(tuple(_spec_from_doc(f) for f in doc["factors"]))
        elif kind is RingKind.QUOTIENT:
            base = _spec_from_doc(doc["base"])
            spec = Quotient(base, tuple(normalize_designator(base, g) for g in doc["generators"]))
        else:
            spec = Table(int(doc["n"]), tuple(tuple(int(v) for v in r) for r in doc["add"]),
                         tuple(tuple(int(v) for v in r) for r in doc["mul"]))
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidSpec(f"Halka tanımı okunamadı: {e}")
    check_spec(spec)
    return spec


def ring_summary(ring: FiniteRing) -> Dict[str, Any]:
    """Halka özeti (JSON)"""
    return {
        "size": ring.size,
        "zero": ring.zero,
        "unity": ring.unity,
        "commutative": ring.is_commutative,
        "provenance": spec_to_json(ring.provenance) if ring.provenance is not None else None,
        "labels": list(ring.labels) if ring.size <= 64 else None,
    }
