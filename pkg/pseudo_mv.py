"""
Pseudo MV-Cebiri Modülü - Sonlu pseudo MV-cebirlerini işlem tabloları olarak tutar

⊕ tablosu ve iki negasyon (x⁻, x~) verilir; ⊙, sıralama, birleşim ve kesişim
türetilir. Aksiyom kontrolleri kapsamlıdır ve ilk karşı örneği sözlük
sırasında raporlar.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product as cartesian
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

import config
from errors import InvalidSpec, SizeCapExceeded
from reports import CheckReport

logger = logging.getLogger(__name__)

AXIOMS = ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "order", "join", "meet")


@dataclass(frozen=True, eq=False)
class MVTable:
    """Sonlu pseudo MV-cebiri: ⊕, ⁻, ~, 0, 1"""
    size: int
    oplus: np.ndarray
    neg_minus: np.ndarray
    neg_tilde: np.ndarray
    zero: int
    one: int
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        n = self.size
        if n < 1:
            raise InvalidSpec("MV tablosu en az bir eleman içermeli")
        if self.oplus.shape != (n, n) or self.neg_minus.shape != (n,) or self.neg_tilde.shape != (n,):
            raise InvalidSpec(f"MV tablo boyutları {n} ile uyuşmuyor")
        for table in (self.oplus, self.neg_minus, self.neg_tilde):
            if (table < 0).any() or (table >= n).any():
                raise InvalidSpec("MV tablo değerleri 0..n-1 aralığında olmalı")
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise InvalidSpec("0 ve 1 geçerli eleman olmalı")

    def label(self, x: int) -> str:
        return self.labels[int(x)] if self.labels else str(int(x))

    @cached_property
    def odot(self) -> np.ndarray:
        """x⊙y = (y⁻ ⊕ x⁻)~"""
        m = self.neg_minus
        return self.neg_tilde[self.oplus[m[None, :], m[:, None]]]

    @cached_property
    def leq(self) -> np.ndarray:
        """x ≤ y ⇔ x⁻ ⊕ y = 1"""
        return self.oplus[self.neg_minus[:, None], np.arange(self.size)[None, :]] == self.one

    @cached_property
    def join(self) -> np.ndarray:
        """x ∨ y = x ⊕ (x~ ⊙ y)"""
        ar = np.arange(self.size)
        return self.oplus[ar[:, None], self.odot[self.neg_tilde[:, None], ar[None, :]]]

    @cached_property
    def meet(self) -> np.ndarray:
        """x ∧ y = x ⊙ (x⁻ ⊕ y)"""
        ar = np.arange(self.size)
        return self.odot[ar[:, None], self.oplus[self.neg_minus[:, None], ar[None, :]]]


def _mv(oplus, neg_minus, neg_tilde, zero, one, labels=()) -> MVTable:
    return MVTable(
        size=len(neg_minus),
        oplus=np.asarray(oplus, dtype=np.int64),
        neg_minus=np.asarray(neg_minus, dtype=np.int64),
        neg_tilde=np.asarray(neg_tilde, dtype=np.int64),
        zero=int(zero),
        one=int(one),
        labels=tuple(labels),
    )


def make_chain(n: int) -> MVTable:
    """Łukasiewicz zinciri Łₙ = Γ(Z, n−1): x⊕y = min(x+y, n−1), x⁻ = x~ = n−1−x"""
    if n < 1:
        raise InvalidSpec(f"Zincir uzunluğu en az 1 olmalı: {n}")
    u = n - 1
    ar = np.arange(n)
    oplus = np.minimum(ar[:, None] + ar[None, :], u)
    return _mv(oplus, u - ar, u - ar, 0, u, [str(x) for x in range(n)])


def product_mv(factors: Sequence[MVTable], max_elements: Optional[int] = None) -> MVTable:
    """Bileşen bazında direkt çarpım (satır öncelikli kodlama)"""
    if not factors:
        return make_chain(1)
    cap = max_elements or config.LIMITS_CONFIG["max_elements"]
    sizes = [A.size for A in factors]
    n = int(np.prod(sizes, dtype=np.int64))
    if n > cap:
        raise SizeCapExceeded(n, cap)
    strides = [int(np.prod(sizes[i + 1:], dtype=np.int64)) for i in range(len(sizes))]
    coords = np.stack([(np.arange(n) // s) % m for s, m in zip(strides, sizes)], axis=1)

    oplus = np.zeros((n, n), dtype=np.int64)
    neg_minus = np.zeros(n, dtype=np.int64)
    neg_tilde = np.zeros(n, dtype=np.int64)
    zero = one = 0
    for f, (A, stride) in enumerate(zip(factors, strides)):
        c = coords[:, f]
        oplus += A.oplus[c[:, None], c[None, :]] * stride
        neg_minus += A.neg_minus[c] * stride
        neg_tilde += A.neg_tilde[c] * stride
        zero += A.zero * stride
        one += A.one * stride
    labels = ["(" + ",".join(A.label(x) for A, x in zip(factors, combo)) + ")"
              for combo in cartesian(*[range(m) for m in sizes])]
    return _mv(oplus, neg_minus, neg_tilde, zero, one, labels)


# ---------------------------------------------------------------------------
# Aksiyom raporu
# ---------------------------------------------------------------------------

class AxiomReport(CheckReport):
    """Aksiyom başına ilk karşı örnek (geçen aksiyomda None)"""


def first_witness(bad: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(bad)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def _all_equal(*tables: np.ndarray) -> np.ndarray:
    same = np.ones(tables[0].shape, dtype=bool)
    for t in tables[1:]:
        same &= tables[0] == t
    return same


def supremum_from_order(leq: np.ndarray) -> np.ndarray:
    """Sıralamadan en küçük üst sınır tablosu (-1: yok)"""
    n = leq.shape[0]
    order = leq.astype(np.int64)
    not_leq = 1 - order
    sup = np.full((n, n), -1, dtype=np.int64)
    for x in range(n):
        upper = order[x][None, :] * order
        # s üst sınır ve tüm üst sınırların altında
        violations = upper @ not_leq.T
        ok = (upper == 1) & (violations == 0)
        has = ok.any(axis=1)
        sup[x, has] = np.argmax(ok[has], axis=1)
    return sup


def infimum_from_order(leq: np.ndarray) -> np.ndarray:
    """Sıralamadan en büyük alt sınır tablosu (-1: yok)"""
    return supremum_from_order(np.asarray(leq).T)


def order_witness(leq: np.ndarray) -> Optional[Tuple[int, ...]]:
    """Yansıma, ters simetri ve geçişme; ilk ihlal"""
    n = leq.shape[0]
    witness = first_witness(~np.diag(leq))
    if witness is None:
        witness = first_witness(leq & leq.T & ~np.eye(n, dtype=bool))
    if witness is None:
        composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
        bad = first_witness(composed & ~leq)
        if bad:
            x, z = bad
            y = int(np.flatnonzero(leq[x] & leq[:, z])[0])
            witness = (x, y, z)
    return witness


def check_axioms(A: MVTable) -> AxiomReport:
    """(A1)–(A8), sıralamanın kısmi sıra oluşu ve birleşim/kesişim formülleri"""
    n = A.size
    op, od = A.oplus, A.odot
    mi, ti = A.neg_minus, A.neg_tilde
    X = np.arange(n)[:, None]
    Y = np.arange(n)[None, :]
    report = AxiomReport()

    witness = None
    for x in range(n):
        witness = first_witness(op[op[x, :], :] != op[x, :][op])
        if witness:
            witness = (x,) + witness
            break
    report.record("A1", witness)

    a2 = (op[:, A.zero] != np.arange(n)) | (op[A.zero, :] != np.arange(n))
    report.record("A2", first_witness(a2))
    a3 = (op[:, A.one] != A.one) | (op[A.one, :] != A.one)
    report.record("A3", first_witness(a3))
    report.record("A4", None if (ti[A.one] == A.zero and mi[A.one] == A.zero) else ())
    report.record("A5", first_witness(ti[op[mi[X], mi[Y]]] != mi[op[ti[X], ti[Y]]]))

    e1 = op[X, od[ti[X], Y]]
    e2 = op[Y, od[ti[Y], X]]
    e3 = op[od[X, mi[Y]], Y]
    e4 = op[od[Y, mi[X]], X]
    report.record("A6", first_witness(~_all_equal(e1, e2, e3, e4)))

    f1 = od[X, op[mi[X], Y]]
    f2 = od[Y, op[mi[Y], X]]
    f3 = od[op[X, ti[Y]], Y]
    f4 = od[op[Y, ti[X]], X]
    report.record("A7", first_witness(f1 != f3))
    report.record("A8", first_witness(ti[mi] != np.arange(n)))

    report.record("order", order_witness(A.leq))
    report.record("join", first_witness(~_all_equal(e1, e2, e3, e4, supremum_from_order(A.leq))))
    report.record("meet", first_witness(~_all_equal(f1, f2, f3, f4, infimum_from_order(A.leq))))

    if not report.passed:
        logger.debug(f"Başarısız aksiyomlar: {report.failed}")
    return report


@dataclass(frozen=True)
class CommutativityReport:
    commutative: bool
    witness: Optional[Tuple[int, int]]
    negations_agree: bool
    negation_witness: Optional[int]

    def to_json(self) -> Dict[str, Any]:
        return {
            "commutative": self.commutative,
            "witness": list(self.witness) if self.witness else None,
            "negations_agree": self.negations_agree,
            "negation_witness": self.negation_witness,
        }


def is_commutative(A: MVTable) -> CommutativityReport:
    """x⊕y = y⊕x tüm çiftlerde mi; ayrıca x⁻ = x~ mi"""
    witness = first_witness(A.oplus != A.oplus.T)
    neg_bad = np.flatnonzero(A.neg_minus != A.neg_tilde)
    return CommutativityReport(
        commutative=witness is None,
        witness=witness,
        negations_agree=len(neg_bad) == 0,
        negation_witness=int(neg_bad[0]) if len(neg_bad) else None,
    )


def atoms(A: MVTable) -> List[int]:
    """0 ile arasında başka eleman olmayan sıfırdan farklı elemanlar"""
    result = []
    for a in range(A.size):
        if a == A.zero:
            continue
        below = np.flatnonzero(A.leq[:, a])
        if set(below.tolist()) == {A.zero, a}:
            result.append(a)
    return result


def idempotents(A: MVTable) -> List[int]:
    """x⊙x = x olan elemanlar"""
    ar = np.arange(A.size)
    return np.flatnonzero(A.odot[ar, ar] == ar).tolist()


def is_chain(A: MVTable) -> bool:
    return bool((A.leq | A.leq.T).all())


# ---------------------------------------------------------------------------
# Zincir çarpımına izomorfizma
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainDecomposition:
    """A ≅ ∏ Ł_{n_x}: atomlar, idempotent örtüler ve koordinat haritası"""
    atoms: Tuple[int, ...]
    hulls: Tuple[int, ...]
    chain_lengths: Tuple[int, ...]
    coordinates: Tuple[Tuple[int, ...], ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "atoms": list(self.atoms),
            "hulls": list(self.hulls),
            "chain_lengths": list(self.chain_lengths),
            "map": [list(c) for c in self.coordinates],
        }


def multiples(A: MVTable, a: int) -> List[int]:
    """0, a, a⊕a, ... sabitlenene kadar"""
    seq = [A.zero]
    current = A.zero
    while True:
        nxt = int(A.oplus[current, a])
        if nxt == current:
            return seq
        seq.append(nxt)
        current = nxt


def iso_to_chain_product(A: MVTable) -> Optional[ChainDecomposition]:
    """Atomlar üzerinden kanonik haritayı kur ve kapsamlı homomorfizma kontrolü yap"""
    atom_list = atoms(A)
    steps = [multiples(A, a) for a in atom_list]
    hulls = [s[-1] for s in steps]
    lengths = [len(s) for s in steps]

    coords = np.zeros((A.size, len(atom_list)), dtype=np.int64)
    for f, (hull, seq) in enumerate(zip(hulls, steps)):
        position = {v: k for k, v in enumerate(seq)}
        for b in range(A.size):
            k = position.get(int(A.meet[b, hull]))
            if k is None:
                logger.debug(f"Kanonik harita tanımsız: b={b}, atom={atom_list[f]}")
                return None
            coords[b, f] = k

    if int(np.prod(lengths, dtype=np.int64)) != A.size:
        return None
    target = product_mv([make_chain(n) for n in lengths], max_elements=A.size)
    strides = [int(np.prod(lengths[i + 1:], dtype=np.int64)) for i in range(len(lengths))]
    phi = coords @ np.array(strides, dtype=np.int64) if lengths else np.zeros(A.size, dtype=np.int64)

    if len(np.unique(phi)) != A.size:
        return None
    homomorphic = (
        (target.oplus[phi[:, None], phi[None, :]] == phi[A.oplus]).all()
        and (target.neg_minus[phi] == phi[A.neg_minus]).all()
        and (target.neg_tilde[phi] == phi[A.neg_tilde]).all()
    )
    if not homomorphic:
        return None
    return ChainDecomposition(
        atoms=tuple(atom_list),
        hulls=tuple(int(h) for h in hulls),
        chain_lengths=tuple(lengths),
        coordinates=tuple(tuple(int(v) for v in row) for row in coords),
    )


# ---------------------------------------------------------------------------
# JSON ve tablolar
# ---------------------------------------------------------------------------

def mv_to_json(A: MVTable) -> Dict[str, Any]:
    return {
        "size": A.size,
        "oplus": A.oplus.tolist(),
        "neg_minus": A.neg_minus.tolist(),
        "neg_tilde": A.neg_tilde.tolist(),
        "zero": A.zero,
        "one": A.one,
        "labels": list(A.labels),
    }


def mv_from_json(doc: Dict[str, Any]) -> MVTable:
    try:
        return _mv(doc["oplus"], doc["neg_minus"], doc["neg_tilde"], doc["zero"], doc["one"],
                   doc.get("labels", ()))
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidSpec(f"MV tablosu okunamadı: {e}")


def mv_tables_equal(A: MVTable, B: MVTable) -> bool:
    """Tablo tablo eşitlik"""
    return (A.size == B.size and A.zero == B.zero and A.one == B.one
            and np.array_equal(A.oplus, B.oplus)
            and np.array_equal(A.neg_minus, B.neg_minus)
            and np.array_equal(A.neg_tilde, B.neg_tilde))


def cayley_frame(A: MVTable, op: str = "oplus") -> pd.DataFrame:
    """Metin raporları için Cayley tablosu"""
    tables = {"oplus": A.oplus, "odot": A.odot, "join": A.join, "meet": A.meet}
    if op not in tables:
        raise ValueError(f"Bilinmeyen işlem: {op}")
    names = [A.label(x) for x in range(A.size)]
    frame = pd.DataFrame(tables[op], index=names, columns=names)
    frame = frame.apply(lambda col: col.map(A.label))
    frame.index.name = op
    return frame
