"""
GL Yarı-Halka Modülü - Genelleştirilmiş Łukasiewicz yarı-halkaları

Sem(R) yapısı, S(A) ve A(S) dönüşümleri, dualite gidiş-dönüşleri ve
halka idealleri ile yarı-halka idealleri arasındaki S(·), S⁻¹(·) eşlemeleri.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

import config
from errors import GLAxiomsFailed, InvalidSpec, SemiringIdealCountCapExceeded, SizeCapExceeded
from ideal_lattice import IdealLattice, IdealMask, is_ideal
from pseudo_mv import MVTable, first_witness, infimum_from_order, mv_tables_equal, order_witness
from reports import CheckReport

logger = logging.getLogger(__name__)

SEMIRING_AXIOMS = (
    "plus_idempotent", "plus_commutative", "plus_associative", "plus_identity",
    "times_associative", "times_identity", "times_absorbing",
    "left_distributive", "right_distributive",
)
GL_CLAUSES = ("zero_product_order", "plus_formula", "negation_swap", "order_compatible",
              "negation_complements", "negation_antitone", "negations_inverse",
              "meet_is_infimum", "meets_agree")


@dataclass(frozen=True, eq=False)
class GLSemiring:
    """Toplamsal idempotent yarı-halka ve iki negasyon"""
    size: int
    plus: np.ndarray
    times: np.ndarray
    neg_minus: np.ndarray
    neg_tilde: np.ndarray
    zero: int
    one: int
    labels: Tuple[str, ...] = ()

    def label(self, x: int) -> str:
        return self.labels[int(x)] if self.labels else str(int(x))

    @cached_property
    def leq(self) -> np.ndarray:
        """x ≤ y ⇔ x + y = y"""
        return self.plus == np.arange(self.size)[None, :]

    def to_json(self) -> Dict[str, Any]:
        return {
            "size": self.size,
            "plus": self.plus.tolist(),
            "times": self.times.tolist(),
            "neg_minus": self.neg_minus.tolist(),
            "neg_tilde": self.neg_tilde.tolist(),
            "zero": self.zero,
            "one": self.one,
            "labels": list(self.labels),
        }


def _semiring(plus, times, neg_minus, neg_tilde, zero, one, labels=()) -> GLSemiring:
    plus = np.asarray(plus, dtype=np.int64)
    n = plus.shape[0]
    semiring = GLSemiring(
        size=n,
        plus=plus,
        times=np.asarray(times, dtype=np.int64),
        neg_minus=np.asarray(neg_minus, dtype=np.int64),
        neg_tilde=np.asarray(neg_tilde, dtype=np.int64),
        zero=int(zero),
        one=int(one),
        labels=tuple(labels),
    )
    if semiring.times.shape != (n, n) or semiring.neg_minus.shape != (n,) \
            or semiring.neg_tilde.shape != (n,):
        raise InvalidSpec(f"Yarı-halka tablo boyutları {n} ile uyuşmuyor")
    return semiring


def semiring_of_ideals(lattice: IdealLattice) -> GLSemiring:
    """Sem(R) = ⟨Id(R), +, ·, {0}, R⟩, negasyonlar sağ/sol anihilatörler"""
    return _semiring(
        plus=lattice.sum,
        times=lattice.product,
        neg_minus=lattice.right_ann,
        neg_tilde=lattice.left_ann,
        zero=lattice.zero_id,
        one=lattice.top_id,
        labels=[I.describe() for I in lattice.ideals],
    )


def semiring_from_json(doc: Dict[str, Any]) -> GLSemiring:
    try:
        return _semiring(doc["plus"], doc["times"], doc["neg_minus"], doc["neg_tilde"],
                         doc["zero"], doc["one"], doc.get("labels", ()))
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidSpec(f"Yarı-halka tablosu okunamadı: {e}")


# ---------------------------------------------------------------------------
# Aksiyomlar
# ---------------------------------------------------------------------------

def check_semiring_axioms(S: GLSemiring) -> CheckReport:
    """Toplamsal idempotent yarı-halka aksiyomları (kapsamlı)"""
    n = S.size
    p, t = S.plus, S.times
    ar = np.arange(n)
    report = CheckReport()
    report.record("plus_idempotent", first_witness(p[ar, ar] != ar))
    report.record("plus_commutative", first_witness(p != p.T))
    report.record("plus_associative", _triple_witness(p))
    report.record("plus_identity", first_witness((p[:, S.zero] != ar) | (p[S.zero, :] != ar)))
    report.record("times_associative", _triple_witness(t))
    report.record("times_identity", first_witness((t[:, S.one] != ar) | (t[S.one, :] != ar)))
    report.record("times_absorbing", first_witness((t[:, S.zero] != S.zero) | (t[S.zero, :] != S.zero)))
    left = None
    right = None
    for x in range(n):
        if left is None:
            w = first_witness(t[x, :][p] != p[t[x, :][:, None], t[x, :][None, :]])
            left = (x,) + w if w else None
        if right is None:
            w = first_witness(t[:, x][p] != p[t[:, x][:, None], t[:, x][None, :]])
            right = (x,) + w if w else None
    report.record("left_distributive", left)
    report.record("right_distributive", right)
    return report


def _triple_witness(op: np.ndarray) -> Optional[Tuple[int, ...]]:
    for x in range(op.shape[0]):
        w = first_witness(op[op[x, :], :] != op[x, :][op])
        if w:
            return (x,) + w
    return None


def check_gl_axioms(S: GLSemiring) -> CheckReport:
    """GL yarı-halka tanımının üç maddesi ve türetilmiş özellikler"""
    n = S.size
    t, p = S.times, S.plus
    mi, ti = S.neg_minus, S.neg_tilde
    leq = S.leq
    X = np.arange(n)[:, None]
    Y = np.arange(n)[None, :]
    report = CheckReport()

    zero_product = t == S.zero
    below_minus = leq[Y, mi[X]]
    below_tilde = leq[X, ti[Y]]
    report.record("zero_product_order", first_witness((zero_product != below_minus) | (zero_product != below_tilde)))

    first = mi[t[ti[t[ti[X], Y]], ti[X]]]
    second = mi[t[ti[X], ti[t[Y, mi[X]]]]]
    report.record("plus_formula", first_witness((p != first) | (p != second)))
    report.record("negation_swap", first_witness(mi[t[ti[Y], ti[X]]] != ti[t[mi[Y], mi[X]]]))

    order = order_witness(leq)
    if order is None:
        # Sıralama + ve · ile uyumlu: x ≤ y ⇒ x+z ≤ y+z, xz ≤ yz, zx ≤ zy
        for x, y in np.argwhere(leq):
            bad = (~leq[p[x, :], p[y, :]]) | (~leq[t[x, :], t[y, :]]) | (~leq[t[:, x], t[:, y]])
            if bad.any():
                order = (int(x), int(y), int(np.flatnonzero(bad)[0]))
                break
    report.record("order_compatible", order)

    ar = np.arange(n)
    complements = first_witness((t[ti, ar] != S.zero) | (t[ar, mi] != S.zero))
    if complements is None and not (ti[S.zero] == S.one and mi[S.zero] == S.one
                                 and ti[S.one] == S.zero and mi[S.one] == S.zero):
        complements = ()
    report.record("negation_complements", complements)

    antitone = leq & ~(leq[ti[Y], ti[X]] & leq[mi[Y], mi[X]])
    report.record("negation_antitone", first_witness(antitone))
    report.record("negations_inverse", first_witness((mi[ti] != ar) | (ti[mi] != ar)))

    meet_minus = ti[p[mi[X], mi[Y]]]
    meet_tilde = mi[p[ti[X], ti[Y]]]
    report.record("meet_is_infimum", first_witness(meet_minus != infimum_from_order(leq)))
    report.record("meets_agree", first_witness(meet_minus != meet_tilde))

    if not report.passed:
        logger.debug(f"GL maddeleri sağlanmadı: {report.failed}")
    return report


# ---------------------------------------------------------------------------
# Dualite
# ---------------------------------------------------------------------------

def mv_from_semiring(S: GLSemiring, check: bool = True) -> MVTable:
    """A(S): x⊕y = (y~·x~)⁻, x⊙y = x·y"""
    if check:
        report = check_gl_axioms(S)
        if not report.passed:
            raise GLAxiomsFailed(f"GL yarı-halka aksiyomları sağlanmadı: {report.failed}", report)
    ti = S.neg_tilde
    oplus = S.neg_minus[S.times[ti[None, :], ti[:, None]]]
    return MVTable(size=S.size, oplus=oplus, neg_minus=S.neg_minus.copy(),
                   neg_tilde=S.neg_tilde.copy(), zero=S.zero, one=S.one, labels=S.labels)


def semiring_from_mv(A: MVTable) -> GLSemiring:
    """S(A): x+y = x∨y, x·y = x⊙y"""
    return _semiring(A.join, A.odot, A.neg_minus, A.neg_tilde, A.zero, A.one, A.labels)


def semirings_equal(S: GLSemiring, T: GLSemiring) -> bool:
    return (S.size == T.size and S.zero == T.zero and S.one == T.one
            and np.array_equal(S.plus, T.plus) and np.array_equal(S.times, T.times)
            and np.array_equal(S.neg_minus, T.neg_minus)
            and np.array_equal(S.neg_tilde, T.neg_tilde))


def check_duality(A: Optional[MVTable] = None, S: Optional[GLSemiring] = None) -> CheckReport:
    """S(A(S)) = S ve A(S(A)) = A tablo tablo"""
    report = CheckReport()
    if S is not None:
        round_trip = semiring_from_mv(mv_from_semiring(S, check=False))
        same = semirings_equal(round_trip, S)
        report.record("semiring_round_trip", None if same else _table_diff(S.plus, round_trip.plus))
    if A is not None:
        round_trip = mv_from_semiring(semiring_from_mv(A), check=False)
        same = mv_tables_equal(round_trip, A)
        report.record("mv_round_trip", None if same else _table_diff(A.oplus, round_trip.oplus))
    return report


def _table_diff(a: np.ndarray, b: np.ndarray) -> Tuple[int, ...]:
    return first_witness(a != b) or ()


# ---------------------------------------------------------------------------
# Yarı-halka idealleri
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SemiringIdeal:
    """Yarı-halka elemanlarının (ideal id'leri) bitset alt kümesi"""
    size: int
    bits: int

    @classmethod
    def from_ids(cls, size: int, ids) -> "SemiringIdeal":
        bits = 0
        for i in ids:
            bits |= 1 << int(i)
        return cls(size, bits)

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "SemiringIdeal":
        return cls.from_ids(len(mask), np.flatnonzero(mask))

    @property
    def members(self) -> List[int]:
        return [i for i in range(self.size) if (self.bits >> i) & 1]

    @property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        mask[self.members] = True
        return mask

    def __contains__(self, i: int) -> bool:
        return bool((self.bits >> int(i)) & 1)

    def __le__(self, other: "SemiringIdeal") -> bool:
        return self.bits & ~other.bits == 0

    def to_json(self) -> List[int]:
        return self.members


def _ideal_closure(S: GLSemiring, seed: np.ndarray) -> np.ndarray:
    """Toplamaya ve aşağıya kapalı en küçük küme"""
    mask = seed.copy()
    while True:
        down = (S.leq[:, mask]).any(axis=1) | mask
        members = np.flatnonzero(down)
        grown = down.copy()
        grown[S.plus[np.ix_(members, members)].ravel()] = True
        if (grown == mask).all():
            return grown
        mask = grown


def is_semiring_ideal(S: GLSemiring, mask: np.ndarray) -> bool:
    """Boş değil, + kapalı ve aşağı kapalı"""
    members = np.flatnonzero(mask)
    if len(members) == 0:
        return False
    if not mask[S.plus[np.ix_(members, members)]].all():
        return False
    return bool(mask[np.flatnonzero(S.leq[:, members].any(axis=1))].all())


def enumerate_semiring_ideals(S: GLSemiring, max_ideals: Optional[int] = None
                              ) -> List[SemiringIdeal]:
    """Kapanış sistemi üzerinde BFS: her ideal bir öncekine bir eleman eklenerek bulunur"""
    cap = max_ideals or config.LIMITS_CONFIG["max_semiring_ideals"]
    seed = np.zeros(S.size, dtype=bool)
    seed[S.zero] = True
    start = _ideal_closure(S, seed)
    seen: Dict[int, SemiringIdeal] = {}
    first = SemiringIdeal.from_mask(start)
    seen[first.bits] = first
    queue = [start]
    while queue:
        current = queue.pop()
        for x in np.flatnonzero(~current):
            extended = current.copy()
            extended[x] = True
            closed = _ideal_closure(S, extended)
            ideal = SemiringIdeal.from_mask(closed)
            if ideal.bits in seen:
                continue
            seen[ideal.bits] = ideal
            if len(seen) > cap:
                raise SemiringIdealCountCapExceeded(cap)
            queue.append(closed)
    return sorted(seen.values(), key=lambda I: (bin(I.bits).count("1"), I.bits))


def check_semiring_ideal_equivalence(S: GLSemiring) -> CheckReport:
    """Her boş olmayan alt kümede: (+ kapalı ve çarpımı emen) ⇔ (+ kapalı ve aşağı kapalı)"""
    limit = config.LIMITS_CONFIG["brute_force_max_elements"]
    if S.size > limit:
        raise SizeCapExceeded(S.size, limit, what="yarı-halka elemanı")
    report = CheckReport()
    witness = None
    for code in range(1, 2 ** S.size):
        mask = np.array([(code >> i) & 1 == 1 for i in range(S.size)])
        members = np.flatnonzero(mask)
        plus_closed = bool(mask[S.plus[np.ix_(members, members)]].all())
        absorbing = bool(mask[S.times[:, members]].all() and mask[S.times[members, :]].all())
        down_closed = bool(mask[np.flatnonzero(S.leq[:, members].any(axis=1))].all())
        if (plus_closed and absorbing) != (plus_closed and down_closed):
            witness = tuple(int(m) for m in members)
            break
    report.record("ideal_definitions_agree", witness)
    return report


# ---------------------------------------------------------------------------
# S(·) ve S⁻¹(·)
# ---------------------------------------------------------------------------

def semiring_ideal_S(lattice: IdealLattice, ideal: IdealMask) -> SemiringIdeal:
    """S(I): kafeste I'nin aşağı kümesi"""
    i = lattice.id_of(ideal)
    return SemiringIdeal.from_mask(lattice.leq[:, i])


def semiring_ideal_S_by_generators(lattice: IdealLattice, ideal: IdealMask) -> SemiringIdeal:
    """S(I) tanımdan: I'nin elemanlarının temel ideallerinin sonlu toplamlarının altındakiler"""
    generated = {lattice.zero_id}
    frontier = list(generated)
    principals = sorted({int(lattice.principal[x]) for x in ideal.members})
    while frontier:
        current = frontier.pop()
        for p in principals:
            s = int(lattice.sum[current, p])
            if s not in generated:
                generated.add(s)
                frontier.append(s)
    mask = lattice.leq[:, sorted(generated)].any(axis=1)
    return SemiringIdeal.from_mask(mask)


def semiring_ideal_Sinv(lattice: IdealLattice, semiring_ideal: SemiringIdeal) -> IdealMask:
    """S⁻¹(𝐈) = {x ∈ R : RxR ∈ 𝐈}"""
    mask = semiring_ideal.mask[lattice.principal]
    return IdealMask.from_mask(lattice.ring, mask)


def check_galois(lattice: IdealLattice, max_ideals: Optional[int] = None) -> CheckReport:
    """Halka idealleri ile Sem(R) idealleri arasındaki yazışmanın kapsamlı kontrolü"""
    S = semiring_of_ideals(lattice)
    semiring_ideals = enumerate_semiring_ideals(S, max_ideals)
    m = len(lattice)
    report = CheckReport()
    report.details["semiring_ideal_count"] = len(semiring_ideals)
    report.details["ring_ideal_count"] = m

    preimages = [semiring_ideal_Sinv(lattice, J) for J in semiring_ideals]
    report.record("preimage_is_ideal", _first_index(
        not is_ideal(lattice.ring, P.mask) for P in preimages))
    report.record("S_of_preimage", _first_index(
        not is_ideal(lattice.ring, P.mask) or semiring_ideal_S(lattice, P) != J
        for P, J in zip(preimages, semiring_ideals)))

    images = [semiring_ideal_S(lattice, I) for I in lattice.ideals]
    report.record("preimage_of_S", _first_index(
        semiring_ideal_Sinv(lattice, image) != I for image, I in zip(images, lattice.ideals)))

    witness = None
    for a, J in enumerate(semiring_ideals):
        for b, K in enumerate(semiring_ideals):
            if J <= K and not preimages[a] <= preimages[b]:
                witness = ("Sinv", a, b)
                break
        if witness:
            break
    if witness is None:
        bad = np.argwhere(lattice.leq & ~_image_inclusions(images))
        if len(bad):
            witness = ("S", int(bad[0][0]), int(bad[0][1]))
    report.record("monotone", witness)

    report.record("proper_preserved", _first_index(
        i != lattice.top_id and lattice.top_id in image for i, image in enumerate(images)))

    if m <= config.CORPUS_CONFIG["galois_max_ideals"]:
        report.record("down_set_matches_generators", _first_index(
            semiring_ideal_S_by_generators(lattice, I) != image
            for I, image in zip(lattice.ideals, images)))
    return report


def _image_inclusions(images: Sequence[SemiringIdeal]) -> np.ndarray:
    m = len(images)
    inclusions = np.zeros((m, m), dtype=bool)
    for a in range(m):
        for b in range(m):
            inclusions[a, b] = images[a] <= images[b]
    return inclusions


def _first_index(flags) -> Optional[Tuple[int]]:
    for i, flag in enumerate(flags):
        if flag:
            return (i,)
    return None
