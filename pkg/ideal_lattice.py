"""
İdeal Kafesi Modülü - Sonlu bir halkanın tüm iki taraflı (ve sol) ideallerini
numaralandırır; toplam, çarpım, kesişim, anihilatörler ve kuvvetleri hesaplar.

İdealler bitset (IdealMask) olarak tutulur. Numaralandırma, temel ideallerin
toplam-kapanışıdır (join-closure).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

import config
from errors import IdealCountCapExceeded, NotAnIdeal, SizeCapExceeded
from finite_ring import FiniteRing, additive_generators, additive_span, is_ideal_mask

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealMask:
    """Halka elemanlarının bir alt kümesi (bitset)"""
    ring: FiniteRing = field(repr=False)
    bits: int

    @classmethod
    def from_mask(cls, ring: FiniteRing, mask: np.ndarray) -> "IdealMask":
        packed = np.packbits(np.asarray(mask, dtype=bool), bitorder="little")
        return cls(ring, int.from_bytes(packed.tobytes(), "little"))

    @classmethod
    def from_elements(cls, ring: FiniteRing, elements: Iterable[int]) -> "IdealMask":
        mask = np.zeros(ring.size, dtype=bool)
        mask[list(elements)] = True
        return cls.from_mask(ring, mask)

    @cached_property
    def mask(self) -> np.ndarray:
        n = self.ring.size
        raw = self.bits.to_bytes((n + 7) // 8, "little")
        unpacked = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        mask = unpacked[:n].astype(bool)
        mask.setflags(write=False)
        return mask

    @cached_property
    def members(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    @cached_property
    def generators(self) -> np.ndarray:
        """Toplamsal üreteçler"""
        return np.array(additive_generators(self.ring, self.mask), dtype=np.int64)

    @property
    def size(self) -> int:
        return bin(self.bits).count("1")

    @property
    def hex(self) -> str:
        return format(self.bits, "x")

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (self.size, self.bits)

    def __contains__(self, x: int) -> bool:
        return bool((self.bits >> int(x)) & 1)

    def __le__(self, other: "IdealMask") -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "IdealMask") -> bool:
        return self <= other and self.bits != other.bits

    def is_zero(self) -> bool:
        return self.bits == 1 << self.ring.zero

    def is_full(self) -> bool:
        return self.bits == (1 << self.ring.size) - 1

    def describe(self) -> str:
        """Kısa okunabilir gösterim"""
        if self.size <= 8:
            return "{" + ",".join(self.ring.label(x) for x in self.members) + "}"
        return f"<{self.size} eleman, 0x{self.hex}>"


def zero_ideal(ring: FiniteRing) -> IdealMask:
    return IdealMask(ring, 1 << ring.zero)


def full_ideal(ring: FiniteRing) -> IdealMask:
    return IdealMask(ring, (1 << ring.size) - 1)


# ---------------------------------------------------------------------------
# Kapanışlar
# ---------------------------------------------------------------------------

def _closure(ring: FiniteRing, seeds: Sequence[int], left_only: bool = False) -> np.ndarray:
    """Tohumları içeren en küçük (sol) ideal; sabit noktaya kadar genişletilir"""
    mask = additive_span(ring, seeds)
    ring_gens = np.array(ring.additive_generators, dtype=np.int64)
    while True:
        gens = np.array(additive_generators(ring, mask), dtype=np.int64)
        products = ring.mul[np.ix_(ring_gens, gens)].ravel()
        if not left_only:
            products = np.concatenate([products, ring.mul[np.ix_(gens, ring_gens)].ravel()])
        grown = additive_span(ring, products, base=mask)
        if (grown == mask).all():
            return grown
        mask = grown


def ideal_generated(ring: FiniteRing, elements: Iterable[int]) -> IdealMask:
    """Verilen elemanları içeren en küçük iki taraflı ideal"""
    return IdealMask.from_mask(ring, _closure(ring, [int(x) for x in elements]))


def principal_ideal(ring: FiniteRing, x: int) -> IdealMask:
    """RxR: x'in ürettiği iki taraflı ideal"""
    return ideal_generated(ring, [x])


def left_principal_ideal(ring: FiniteRing, x: int) -> IdealMask:
    """x'in ürettiği sol ideal (toplama, negatif ve soldan çarpım kapanışı)"""
    return IdealMask.from_mask(ring, _closure(ring, [int(x)], left_only=True))


def is_ideal(ring: FiniteRing, mask: np.ndarray) -> bool:
    return is_ideal_mask(ring, np.asarray(mask, dtype=bool))


def as_ideal(ring: FiniteRing, elements: Iterable[int]) -> IdealMask:
    """Eleman kümesini doğrulanmış ideale çevir"""
    ideal = IdealMask.from_elements(ring, elements)
    if not is_ideal(ring, ideal.mask):
        raise NotAnIdeal(f"İki taraflı ideal değil: {ideal.describe()}")
    return ideal


# ---------------------------------------------------------------------------
# İdeal aritmetiği
# ---------------------------------------------------------------------------

def ideal_sum(I: IdealMask, J: IdealMask) -> IdealMask:
    ring = I.ring
    if J <= I:
        return I
    if I <= J:
        return J
    return IdealMask.from_mask(ring, additive_span(ring, J.generators, base=I.mask))


def ideal_product(I: IdealMask, J: IdealMask) -> IdealMask:
    """I·J: ikili çarpımların toplamsal kapanışı (üreteçler üzerinden)"""
    ring = I.ring
    products = ring.mul[np.ix_(I.generators, J.generators)].ravel()
    return IdealMask.from_mask(ring, additive_span(ring, products))


def ideal_intersection(I: IdealMask, J: IdealMask) -> IdealMask:
    return IdealMask(I.ring, I.bits & J.bits)


def right_annihilator(I: IdealMask) -> IdealMask:
    """I⁻ = {x : Ix = 0}"""
    ring = I.ring
    if len(I.generators) == 0:
        return full_ideal(ring)
    mask = (ring.mul[I.generators, :] == ring.zero).all(axis=0)
    return IdealMask.from_mask(ring, mask)


def left_annihilator(I: IdealMask) -> IdealMask:
    """I~ = {x : xI = 0}"""
    ring = I.ring
    if len(I.generators) == 0:
        return full_ideal(ring)
    mask = (ring.mul[:, I.generators] == ring.zero).all(axis=1)
    return IdealMask.from_mask(ring, mask)


def right_residual(I: IdealMask, J: IdealMask) -> IdealMask:
    """{x : I·x ⊆ J}"""
    ring = I.ring
    if len(I.generators) == 0:
        return full_ideal(ring)
    mask = J.mask[ring.mul[I.generators, :]].all(axis=0)
    return IdealMask.from_mask(ring, mask)


def left_residual(I: IdealMask, J: IdealMask) -> IdealMask:
    """{x : x·I ⊆ J}"""
    ring = I.ring
    if len(I.generators) == 0:
        return full_ideal(ring)
    mask = J.mask[ring.mul[:, I.generators]].all(axis=1)
    return IdealMask.from_mask(ring, mask)


def ideal_power(I: IdealMask, k: int) -> IdealMask:
    """I^k; I^0 = R (birimsiz halkada da)"""
    if k < 0:
        raise ValueError(f"Kuvvet negatif olamaz: {k}")
    result = full_ideal(I.ring)
    for _ in range(k):
        result = I if result.is_full() else ideal_product(result, I)
    return result


# ---------------------------------------------------------------------------
# Kafes
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class IdealLattice:
    """İki taraflı ideallerin sıralı listesi ve işlem tabloları (id -> id)"""
    ring: FiniteRing
    ideals: Tuple[IdealMask, ...]
    zero_id: int
    top_id: int
    sum: np.ndarray
    product: np.ndarray
    intersection: np.ndarray
    left_ann: np.ndarray
    right_ann: np.ndarray
    principal: np.ndarray = field(repr=False)
    index: Dict[int, int] = field(repr=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.ideals)

    def id_of(self, ideal: IdealMask) -> int:
        try:
            return self.index[ideal.bits]
        except KeyError:
            raise NotAnIdeal(f"Kafeste olmayan küme: {ideal.describe()}")

    @cached_property
    def leq(self) -> np.ndarray:
        """leq[i, j] = ideal i ⊆ ideal j"""
        return _inclusion_matrix(self.ideals)

    def to_json(self) -> Dict:
        return {
            "ideal_count": len(self.ideals),
            "ideals": [I.hex for I in self.ideals],
            "sizes": [I.size for I in self.ideals],
            "zero_id": self.zero_id,
            "top_id": self.top_id,
            "sum": self.sum.tolist(),
            "product": self.product.tolist(),
            "intersection": self.intersection.tolist(),
            "left_ann": self.left_ann.tolist(),
            "right_ann": self.right_ann.tolist(),
        }


def _inclusion_matrix(ideals: Sequence[IdealMask]) -> np.ndarray:
    masks = np.array([I.mask for I in ideals], dtype=np.float32)
    outside = masks @ (1.0 - masks).T
    leq = outside == 0
    leq.setflags(write=False)
    return leq


def _join_closure(ring: FiniteRing, principals: Sequence[IdealMask], cap: int) -> List[IdealMask]:
    """{0} ve temel ideallerden toplam-kapanışı ile tüm idealleri bul"""
    distinct: Dict[int, IdealMask] = {}
    for P in principals:
        distinct.setdefault(P.bits, P)
    basis = sorted(distinct.values(), key=lambda P: P.sort_key)

    start = zero_ideal(ring)
    seen: Dict[int, IdealMask] = {start.bits: start}
    queue = [start]
    while queue:
        current = queue.pop()
        for P in basis:
            if P <= current:
                continue
            joined = IdealMask.from_mask(ring, additive_span(ring, P.generators, base=current.mask))
            if joined.bits in seen:
                continue
            seen[joined.bits] = joined
            if len(seen) > cap:
                raise IdealCountCapExceeded(cap)
            queue.append(joined)
    return sorted(seen.values(), key=lambda I: I.sort_key)


def _map(fn: Callable, items: Sequence, jobs: int) -> List:
    if jobs <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def enumerate_ideals(ring: FiniteRing, max_ideals: Optional[int] = None, jobs: int = 1
                     ) -> IdealLattice:
    """Tüm iki taraflı idealleri ve kafes tablolarını hesapla"""
    cap = max_ideals or config.LIMITS_CONFIG["max_ideals"]
    principal_list = _map(lambda x: principal_ideal(ring, x), list(range(ring.size)), jobs)
    ideals = _join_closure(ring, principal_list, cap)
    index = {I.bits: i for i, I in enumerate(ideals)}
    m = len(ideals)
    logger.info(f"{ring.size} elemanlı halkada {m} ideal bulundu")

    leq = _inclusion_matrix(ideals)
    # Popcount sıralamasında ilk ortak üst sınır = toplam, son ortak alt sınır = kesişim
    sum_table = np.empty((m, m), dtype=np.int64)
    meet_table = np.empty((m, m), dtype=np.int64)
    geq = leq.T
    for i in range(m):
        above = leq[i][None, :] & leq
        sum_table[i] = np.argmax(above, axis=1)
        below = geq[i][None, :] & geq
        meet_table[i] = m - 1 - np.argmax(below[:, ::-1], axis=1)

    def product_row(i: int) -> List[int]:
        return [index[ideal_product(ideals[i], J).bits] for J in ideals]

    product_table = np.array(_map(product_row, list(range(m)), jobs), dtype=np.int64).reshape(m, m)
    left_ann = np.array([index[left_annihilator(I).bits] for I in ideals], dtype=np.int64)
    right_ann = np.array([index[right_annihilator(I).bits] for I in ideals], dtype=np.int64)
    principal = np.array([index[P.bits] for P in principal_list], dtype=np.int64)

    for table in (sum_table, meet_table, product_table, left_ann, right_ann, principal):
        table.setflags(write=False)
    lattice = IdealLattice(
        ring=ring,
        ideals=tuple(ideals),
        zero_id=0,
        top_id=m - 1,
        sum=sum_table,
        product=product_table,
        intersection=meet_table,
        left_ann=left_ann,
        right_ann=right_ann,
        principal=principal,
        index=index,
    )
    lattice.__dict__["leq"] = leq
    return lattice


def maximal_ideals(lattice: IdealLattice) -> List[int]:
    """Kendisi ile R arasında başka ideal olmayan öz idealler"""
    result = []
    for i in range(len(lattice)):
        if i == lattice.top_id:
            continue
        supers = np.flatnonzero(lattice.leq[i])
        if set(supers.tolist()) == {i, lattice.top_id}:
            result.append(i)
    return result


def prime_ideals(lattice: IdealLattice) -> List[int]:
    """AB ⊆ P iken A ⊆ P veya B ⊆ P olan öz idealler (tüm çiftler taranır)"""
    result = []
    for p in range(len(lattice)):
        if p == lattice.top_id:
            continue
        inside = lattice.leq[:, p]
        product_inside = inside[lattice.product]
        violation = product_inside & ~inside[:, None] & ~inside[None, :]
        if not violation.any():
            result.append(p)
    return result


def minimal_ideals(lattice: IdealLattice) -> List[int]:
    """Minimal sıfırdan farklı idealler"""
    result = []
    for i in range(len(lattice)):
        if i == lattice.zero_id:
            continue
        subs = np.flatnonzero(lattice.leq[:, i])
        if set(subs.tolist()) == {i, lattice.zero_id}:
            result.append(i)
    return result


def covering_edges(lattice: IdealLattice) -> List[Tuple[int, int]]:
    """Kapsama bağıntısının örtü (Hasse) kenarları"""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(lattice)))
    strict = lattice.leq & ~np.eye(len(lattice), dtype=bool)
    graph.add_edges_from((int(i), int(j)) for i, j in np.argwhere(strict))
    reduced = nx.transitive_reduction(graph)
    return sorted(reduced.edges)


# ---------------------------------------------------------------------------
# Sol idealler
# ---------------------------------------------------------------------------

def enumerate_left_ideals(ring: FiniteRing, max_ideals: Optional[int] = None, jobs: int = 1
                          ) -> List[IdealMask]:
    """Sol idealler: sol temel ideallerin toplam-kapanışı"""
    cap = max_ideals or config.LIMITS_CONFIG["max_ideals"]
    principals = _map(lambda x: left_principal_ideal(ring, x), list(range(ring.size)), jobs)
    left_ideals = _join_closure(ring, principals, cap)
    logger.debug(f"{len(left_ideals)} sol ideal bulundu")
    return left_ideals


def is_left_chain_ring(ring: FiniteRing, max_ideals: Optional[int] = None) -> bool:
    """Sol idealler kapsama ile doğrusal sıralı mı"""
    left_ideals = enumerate_left_ideals(ring, max_ideals)
    return all(a <= b for a, b in zip(left_ideals, left_ideals[1:]))


# ---------------------------------------------------------------------------
# Kaba kuvvet kahini
# ---------------------------------------------------------------------------

def brute_force_ideals(ring: FiniteRing) -> List[IdealMask]:
    """2^n alt kümenin hepsini filtreleyerek idealleri bul (küçük halkalar)"""
    n = ring.size
    limit = config.LIMITS_CONFIG["brute_force_max_elements"]
    if n > limit:
        raise SizeCapExceeded(n, limit)
    others = [x for x in range(n) if x != ring.zero]
    codes = np.arange(2 ** len(others), dtype=np.int64)
    subsets = np.zeros((len(codes), n), dtype=bool)
    subsets[:, ring.zero] = True
    for bit, x in enumerate(others):
        subsets[:, x] = (codes >> bit) & 1 == 1

    # Sonlu ve toplamaya kapalı boş olmayan küme alt gruptur
    valid = np.ones(len(codes), dtype=bool)
    for a in range(n):
        for b in range(n):
            both = subsets[:, a] & subsets[:, b]
            valid &= ~both | subsets[:, ring.add[a, b]]
            valid &= ~subsets[:, b] | subsets[:, ring.mul[a, b]]
            valid &= ~subsets[:, a] | subsets[:, ring.mul[a, b]]
    found = [IdealMask.from_mask(ring, subsets[i]) for i in np.flatnonzero(valid)]
    return sorted(found, key=lambda I: I.sort_key)
