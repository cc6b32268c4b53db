"""
GLR Analiz Modülü - Genelleştirilmiş Łukasiewicz halkalarının sınıflandırılması

GLR kontrolü (tanıklarla), SPIR tespiti, bölüm/çarpım kapanışı, dağılma,
asal-maksimal ilişkisi ve bir GLR'nin birimli özel asal halkaların direkt
toplamına ayrıştırılması (kanonik haritanın kapsamlı sertifikasıyla).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

import config
from errors import CertificationFailed, GLRCheckFailed, PreconditionFailed
from finite_ring import (Cyclic, FiniteRing, build_ring, is_central_idempotent_generated,
                         product_ring, quotient_ring, ring_summary, subring)
from gl_semiring import check_galois, mv_from_semiring, semiring_of_ideals
from ideal_lattice import (IdealLattice, IdealMask, enumerate_ideals, full_ideal,
                           ideal_product, ideal_sum, is_left_chain_ring, left_annihilator,
                           left_residual, maximal_ideals, minimal_ideals, prime_ideals,
                           right_annihilator, right_residual, zero_ideal)
from pseudo_mv import (MVTable, atoms, check_axioms, is_chain, is_commutative,
                       iso_to_chain_product, multiples)
from reports import CheckReport

logger = logging.getLogger(__name__)


def _lattice(ring: FiniteRing, lattice: Optional[IdealLattice], max_ideals: Optional[int] = None,
             jobs: int = 1) -> IdealLattice:
    if lattice is not None:
        return lattice
    return enumerate_ideals(ring, max_ideals=max_ideals, jobs=jobs)


def _first_pair(bad: np.ndarray) -> Optional[Tuple[int, int]]:
    hits = np.argwhere(bad)
    return (int(hits[0][0]), int(hits[0][1])) if len(hits) else None


def _first_id(bad: np.ndarray) -> Optional[int]:
    hits = np.flatnonzero(bad)
    return int(hits[0]) if len(hits) else None


# ---------------------------------------------------------------------------
# GLR kontrolü
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GLRReport:
    """GLR sınıflandırması; tanıklar ideal id'leridir"""
    central_idempotent_generated: bool
    central_witness: Optional[int]
    an_holds: bool
    an_witness: Optional[int]
    co_holds: bool
    co_witness: Optional[Tuple[int, int]]
    lr_holds: bool
    lr_witness: Optional[Tuple[int, int]]
    glr1_holds: bool
    glr1_witness: Optional[Tuple[int, int]]
    glr2_holds: bool
    glr2_witness: Optional[Tuple[int, int]]
    double_annihilator_holds: bool
    double_annihilator_witness: Optional[int]
    double_annihilator_value: Optional[int]
    is_glr: bool
    definitions_agree: bool
    ideal_hex: Tuple[str, ...] = field(default=(), repr=False)

    def to_json(self) -> Dict[str, Any]:
        def hexes(ids):
            if ids is None:
                return None
            if isinstance(ids, int):
                return self.ideal_hex[ids]
            return [self.ideal_hex[i] for i in ids]

        return {
            "is_glr": self.is_glr,
            "definitions_agree": self.definitions_agree,
            "ideal_count": len(self.ideal_hex),
            "central_idempotent_generated": {"holds": self.central_idempotent_generated,
                                             "failing_element": self.central_witness},
            "AN": {"holds": self.an_holds, "witness": self.an_witness,
                   "witness_ideal": hexes(self.an_witness)},
            "CO": {"holds": self.co_holds, "witness": _listed(self.co_witness),
                   "witness_ideals": hexes(self.co_witness)},
            "LR": {"holds": self.lr_holds, "witness": _listed(self.lr_witness),
                   "witness_ideals": hexes(self.lr_witness)},
            "GLR1": {"holds": self.glr1_holds, "witness": _listed(self.glr1_witness),
                     "witness_ideals": hexes(self.glr1_witness)},
            "GLR2": {"holds": self.glr2_holds, "witness": _listed(self.glr2_witness),
                     "witness_ideals": hexes(self.glr2_witness)},
            "double_annihilator": {
                "holds": self.double_annihilator_holds,
                "witness": self.double_annihilator_witness,
                "witness_ideal": hexes(self.double_annihilator_witness),
                "double_annihilator": hexes(self.double_annihilator_value),
            },
        }


def _listed(pair: Optional[Tuple[int, ...]]) -> Optional[List[int]]:
    return list(pair) if pair is not None else None


def check_glr(ring: FiniteRing, lattice: Optional[IdealLattice] = None,
              max_ideals: Optional[int] = None, jobs: int = 1) -> GLRReport:
    """
    GLR kontrolü: merkezi idempotent üretimi ile (GLR-1)/(GLR-2).

    (AN), (CO), (LR) bayrakları tanısaldır; (AN) sağlanmazsa (LR) iki
    anihilatörlü (GLR-1)/(GLR-2) biçimiyle değerlendirilir.
    """
    L = _lattice(ring, lattice, max_ideals, jobs)
    central = is_central_idempotent_generated(ring)
    s, p = L.sum, L.product
    ra, la = L.right_ann, L.left_ann
    I = np.arange(len(L))[:, None]
    J = np.arange(len(L))[None, :]

    an_witness = _first_id(ra != la)
    co_witness = _first_pair(p != p.T)

    glr1_a = ra[p[la[p[la[I], J]], la[I]]]
    glr1_b = ra[p[la[I], la[p[J, ra[I]]]]]
    glr1_witness = _first_pair((s != glr1_a) | (s != glr1_b))
    glr2_witness = _first_pair(ra[p[la[J], la[I]]] != la[p[ra[J], ra[I]]])

    if an_witness is None:
        star = ra
        lr_witness = _first_pair(s != star[p[star[I], star[p[star[I], J]]]])
    else:
        lr_witness = glr1_witness if glr1_witness is not None else glr2_witness

    ids = np.arange(len(L))
    da_right = ra[la] != ids
    da_left = la[ra] != ids
    da_witness = _first_id(da_right | da_left)
    da_value = None
    if da_witness is not None:
        da_value = int(ra[la[da_witness]]) if da_right[da_witness] else int(la[ra[da_witness]])

    is_glr = central.holds and glr1_witness is None and glr2_witness is None
    characterization = (central.holds and an_witness is None and co_witness is None
                        and lr_witness is None)
    report = GLRReport(
        central_idempotent_generated=central.holds,
        central_witness=central.failing_element,
        an_holds=an_witness is None,
        an_witness=an_witness,
        co_holds=co_witness is None,
        co_witness=co_witness,
        lr_holds=lr_witness is None,
        lr_witness=lr_witness,
        glr1_holds=glr1_witness is None,
        glr1_witness=glr1_witness,
        glr2_holds=glr2_witness is None,
        glr2_witness=glr2_witness,
        double_annihilator_holds=da_witness is None,
        double_annihilator_witness=da_witness,
        double_annihilator_value=da_value,
        is_glr=is_glr,
        definitions_agree=is_glr == characterization,
        ideal_hex=tuple(ideal.hex for ideal in L.ideals),
    )
    if not report.definitions_agree:
        logger.error("GLR tanımı ile (AN)+(CO)+(LR) karakterizasyonu farklı sonuç verdi")
    if is_glr and da_witness is not None:
        logger.error(f"GLR halkada I** = I sağlanmadı: ideal {da_witness}")
    logger.info(f"GLR kontrolü: {ring.size} eleman, {len(L)} ideal, is_glr={is_glr}")
    return report


def ideal_mv_algebra(lattice: IdealLattice) -> MVTable:
    """A(R): I ⊕ J = (J~ · I~)⁻, I ⊙ J = I·J"""
    return mv_from_semiring(semiring_of_ideals(lattice), check=False)


def check_pmv_of_ring(ring: FiniteRing, lattice: Optional[IdealLattice] = None,
                      glr: Optional[GLRReport] = None) -> CheckReport:
    """A(R) pseudo MV-cebiri mi ve değişmeli mi"""
    L = _lattice(ring, lattice)
    glr = glr or check_glr(ring, L)
    if not glr.is_glr:
        raise GLRCheckFailed("Halka GLR değil; A(R) kurulamaz", glr)
    A = ideal_mv_algebra(L)
    axioms = check_axioms(A)
    commutativity = is_commutative(A)
    chains = iso_to_chain_product(A)
    report = CheckReport()
    report.record("pmv_axioms", None if axioms.passed else axioms.failed)
    report.record("commutative", commutativity.witness if not commutativity.commutative else None)
    report.record("negations_agree", None if commutativity.negations_agree
                  else (commutativity.negation_witness,))
    report.record("chain_product", None if chains is not None else ())
    report.details["size"] = A.size
    report.details["axioms"] = axioms.to_json()
    report.details["chain_lengths"] = list(chains.chain_lengths) if chains else None
    return report


# ---------------------------------------------------------------------------
# SPIR
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SPIRCertificate:
    """Tek maksimal ideal M ve kuvvet zinciri R ⊋ M ⊋ M² ⊋ ... ⊋ 0"""
    maximal_ideal: Optional[int]
    nilpotency: int
    powers: Tuple[int, ...]
    unitary: bool
    maximal_hex: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "maximal_ideal": self.maximal_ideal,
            "maximal_ideal_hex": self.maximal_hex,
            "nilpotency": self.nilpotency,
            "powers": list(self.powers),
            "unitary": self.unitary,
            "chain_length": self.nilpotency + 1,
        }


def is_spir(ring: FiniteRing, lattice: Optional[IdealLattice] = None,
            max_ideals: Optional[int] = None) -> Optional[SPIRCertificate]:
    """Özel asal halka sertifikası (yoksa None)"""
    L = _lattice(ring, lattice, max_ideals)
    unitary = ring.unity is not None
    if ring.size == 1:
        return SPIRCertificate(None, 0, (L.top_id,), unitary)
    maxes = maximal_ideals(L)
    if len(maxes) != 1:
        return None
    M = maxes[0]
    powers = [L.top_id, M]
    while powers[-1] != L.zero_id:
        nxt = int(L.product[powers[-1], M])
        if nxt == powers[-1]:
            return None
        powers.append(nxt)
    if len(set(powers)) != len(powers) or set(powers) != set(range(len(L))):
        return None
    return SPIRCertificate(M, len(powers) - 1, tuple(powers), unitary, L.ideals[M].hex)


def check_spir_annihilator_law(cert: SPIRCertificate, lattice: IdealLattice) -> bool:
    """1 ≤ k < n için M^k'nin sol ve sağ anihilatörü M^(n−k)"""
    n = cert.nilpotency
    for k in range(1, n):
        target = cert.powers[n - k]
        power = cert.powers[k]
        if lattice.left_ann[power] != target or lattice.right_ann[power] != target:
            logger.debug(f"M^{k} anihilatörü M^{n - k} değil")
            return False
    return True


# ---------------------------------------------------------------------------
# Kapanış, sonsuz çarpım tanığı, dağılma
# ---------------------------------------------------------------------------

def closure_pairs(sizes: Sequence[int], cap: int) -> List[Tuple[int, int]]:
    """Çarpımı cap'i aşmayan (i ≤ j) çiftleri, sözlük sırasında"""
    return [(i, j) for i in range(len(sizes)) for j in range(i, len(sizes))
            if sizes[i] * sizes[j] <= cap]


def _glr_indices(rings: Sequence[FiniteRing], lattices: Sequence[IdealLattice]) -> List[int]:
    return [i for i, (R, L) in enumerate(zip(rings, lattices)) if check_glr(R, L).is_glr]


def check_product_closure(rings: Sequence[FiniteRing], max_elements: Optional[int] = None,
                          max_ideals: Optional[int] = None,
                          lattices: Optional[Sequence[IdealLattice]] = None,
                          full_product: bool = True, jobs: int = 1) -> CheckReport:
    """GLR girdilerinin ikili (ve isteğe bağlı tüm) çarpımları yine GLR mi"""
    cap = max_elements or config.LIMITS_CONFIG["max_elements"]
    if lattices is None:
        lattices = [enumerate_ideals(R, max_ideals) for R in rings]
    glr_indices = _glr_indices(rings, lattices)
    sizes = [rings[i].size for i in glr_indices]
    pairs = [(glr_indices[a], glr_indices[b]) for a, b in closure_pairs(sizes, cap)]
    products_skipped = len(glr_indices) * (len(glr_indices) + 1) // 2 - len(pairs)

    def pair_is_glr(pair: Tuple[int, int]) -> bool:
        i, j = pair
        return check_glr(product_ring([rings[i], rings[j]], cap), max_ideals=max_ideals).is_glr

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        verdicts = list(pool.map(pair_is_glr, pairs))
    witness = next((("product",) + pair for pair, ok in zip(pairs, verdicts) if not ok), None)
    products_checked = len(pairs)

    if full_product and len(glr_indices) > 2:
        size = int(np.prod(sizes, dtype=np.int64))
        if size <= cap:
            products_checked += 1
            product = product_ring([rings[i] for i in glr_indices], cap)
            if not check_glr(product, max_ideals=max_ideals).is_glr:
                witness = witness or ("product", *glr_indices)
        else:
            products_skipped += 1

    report = CheckReport()
    report.record("products_are_glr", witness)
    report.details.update({
        "glr_inputs": glr_indices,
        "products_checked": products_checked,
        "products_skipped": products_skipped,
    })
    if witness:
        logger.error(f"GLR olmayan çarpım: {witness}")
    return report


def check_quotient_closure(rings: Sequence[FiniteRing], max_ideals: Optional[int] = None,
                           lattices: Optional[Sequence[IdealLattice]] = None) -> CheckReport:
    """GLR girdilerinin öz ideallere göre tüm bölümleri yine GLR mi"""
    if lattices is None:
        lattices = [enumerate_ideals(R, max_ideals) for R in rings]
    glr_indices = _glr_indices(rings, lattices)
    witness = None
    quotients_checked = 0
    for i in glr_indices:
        for ideal_id, ideal in enumerate(lattices[i].ideals):
            if ideal_id == lattices[i].top_id:
                continue
            quotient, _ = quotient_ring(rings[i], ideal)
            quotients_checked += 1
            if not check_glr(quotient, max_ideals=max_ideals).is_glr:
                witness = witness or ("quotient", i, ideal_id)
    report = CheckReport()
    report.record("quotients_are_glr", witness)
    report.details.update({"glr_inputs": glr_indices, "quotients_checked": quotients_checked})
    if witness:
        logger.error(f"GLR olmayan bölüm: {witness}")
    return report


def check_closure_suite(rings: Sequence[FiniteRing], max_elements: Optional[int] = None,
                        max_ideals: Optional[int] = None, jobs: int = 1) -> CheckReport:
    """GLR'lerin sonlu çarpımları ve öz ideallere göre bölümleri yine GLR mi"""
    lattices = [enumerate_ideals(R, max_ideals) for R in rings]
    products = check_product_closure(rings, max_elements, max_ideals, lattices, jobs=jobs)
    quotients = check_quotient_closure(rings, max_ideals, lattices)
    report = CheckReport()
    for part in (products, quotients):
        for name, witness in part.witnesses.items():
            report.record(name, witness)
        report.details.update(part.details)
    return report


def check_infinite_product_witness(ks: Sequence[int] = (1, 2, 4, 8)) -> CheckReport:
    """
    ∏ F sonsuz çarpımı GLR değildir; burada yalnızca F^k kesilmelerinde
    I = {x : x_(2n) = 0}, J = F^k, K = {x : x_(2n+1) = 0} için (LR) hesaplanır.
    """
    report = CheckReport()
    report.details["infinite_case"] = (
        "I = {x : x_2n = 0}, J = sonlu destekli diziler, K = {x : x_2n+1 = 0} ile "
        "(I+J)* = 0 ama (I*·J)*·I* = K; sonsuz halka hesaplanmaz, masa ölçeği dışında"
    )
    field_ring = build_ring(Cyclic(2))
    truncations = []
    for k in ks:
        ring = product_ring([field_ring] * k)
        coords = (np.arange(ring.size)[:, None] >> np.arange(k - 1, -1, -1)[None, :]) & 1
        positions = np.arange(1, k + 1)
        even = positions % 2 == 0
        I = IdealMask.from_mask(ring, (coords[:, even] == 0).all(axis=1))
        K = IdealMask.from_mask(ring, (coords[:, ~even] == 0).all(axis=1))
        J = full_ideal(ring)

        I_star = right_annihilator(I)
        lhs = right_annihilator(ideal_sum(I, J))
        rhs = ideal_product(right_annihilator(ideal_product(I_star, J)), I_star)
        lr = ideal_sum(I, J) == right_annihilator(
            ideal_product(I_star, right_annihilator(ideal_product(I_star, J))))
        entry = {
            "k": k,
            "I_star_is_K": I_star == K,
            "sum_star_is_zero": lhs.is_zero(),
            "sum_star_equals_rhs": lhs == rhs,
            "lr_holds": bool(lr),
        }
        truncations.append(entry)
        report.record(f"lr_truncated_k{k}", None if lr and lhs == rhs else (k,))
    report.details["truncations"] = truncations
    return report


def check_distributivity(lattice: IdealLattice, seed: Optional[int] = None,
                         sampled_families: Optional[int] = None) -> CheckReport:
    """I∩(J+K) = I∩J + I∩K ve I + ⋂J_i = ⋂(I+J_i)"""
    m = len(lattice)
    s, meet = lattice.sum, lattice.intersection
    report = CheckReport()

    witness = None
    J = np.arange(m)[:, None]
    K = np.arange(m)[None, :]
    for i in range(m):
        bad = meet[i, s[J, K]] != s[meet[i, J], meet[i, K]]
        pair = _first_pair(bad)
        if pair:
            witness = (i,) + pair
            break
    report.record("meet_distributes", witness)

    full_cap = config.DISTRIBUTIVITY_CONFIG["full_family_max_ideals"]
    if m <= full_cap:
        families = [tuple(c) for r in range(1, m + 1) for c in combinations(range(m), r)]
        sampled = False
    else:
        seed = config.DISTRIBUTIVITY_CONFIG["seed"] if seed is None else seed
        count = sampled_families or config.DISTRIBUTIVITY_CONFIG["sampled_families"]
        rng = np.random.default_rng(seed)
        families = []
        for _ in range(count):
            size = int(rng.integers(2, min(m, 6) + 1))
            families.append(tuple(sorted(int(x) for x in rng.choice(m, size, replace=False))))
        sampled = True

    witness = None
    ids = np.arange(m)
    for family in families:
        family_meet = family[0]
        joined = s[ids, family[0]]
        for j in family[1:]:
            family_meet = meet[family_meet, j]
            joined = meet[joined, s[ids, j]]
        bad = s[ids, family_meet] != joined
        if bad.any():
            witness = (int(np.flatnonzero(bad)[0]),) + family
            break
    report.record("join_distributes", witness)
    report.details.update({"families_checked": len(families), "sampled": sampled})
    if sampled:
        report.details["seed"] = seed
    return report


def check_prime_maximal(lattice: IdealLattice, glr: GLRReport) -> CheckReport:
    """GLR'lerde asal idealler maksimaldir"""
    primes = prime_ideals(lattice)
    maxes = maximal_ideals(lattice)
    report = CheckReport()
    report.details.update({"primes": primes, "maximals": maxes, "asserted": glr.is_glr})
    if glr.is_glr:
        outside = [p for p in primes if p not in maxes]
        report.record("primes_are_maximal", (outside[0],) if outside else None)
    return report


def check_maximal_containment(lattice: IdealLattice) -> CheckReport:
    """Her öz ideal bir maksimal idealin içinde"""
    maxes = maximal_ideals(lattice)
    report = CheckReport()
    witness = None
    for i in range(len(lattice)):
        if i != lattice.top_id and not lattice.leq[i, maxes].any():
            witness = (i,)
            break
    report.record("proper_under_maximal", witness)
    return report


def check_residuation(lattice: IdealLattice) -> CheckReport:
    """I·K ⊆ J ⇔ K ⊆ I→J ve K·I ⊆ J ⇔ K ⊆ I⇝J"""
    m = len(lattice)
    leq, p = lattice.leq, lattice.product
    ks = np.arange(m)
    report = CheckReport()
    right_witness = left_witness = None
    for i, I in enumerate(lattice.ideals):
        for j, Jm in enumerate(lattice.ideals):
            r = lattice.id_of(right_residual(I, Jm))
            l = lattice.id_of(left_residual(I, Jm))
            if right_witness is None:
                bad = leq[p[i, ks], j] != leq[ks, r]
                if bad.any():
                    right_witness = (i, j, int(np.flatnonzero(bad)[0]))
            if left_witness is None:
                bad = leq[p[ks, i], j] != leq[ks, l]
                if bad.any():
                    left_witness = (i, j, int(np.flatnonzero(bad)[0]))
    report.record("right_residuation", right_witness)
    report.record("left_residuation", left_witness)
    return report


def check_annihilator_laws(lattice: IdealLattice) -> CheckReport:
    """
    Her halkada geçerli anihilatör yasaları (I⁻ sağ, I~ sol anihilatör):

    I ⊆ J ⇒ J⁻ ⊆ I⁻ ve J~ ⊆ I~; (I+J)⁻ = I⁻ ∩ J⁻ ve (I+J)~ = I~ ∩ J~;
    I ⊆ (I~)⁻ ve I ⊆ (I⁻)~; I+J ⊆ ((I~·J)~·I~)⁻; IJ = 0 ⇔ J ⊆ I⁻ ⇔ I ⊆ J~.
    """
    m = len(lattice)
    leq, s, p, meet = lattice.leq, lattice.sum, lattice.product, lattice.intersection
    ra, la = lattice.right_ann, lattice.left_ann
    ids = np.arange(m)
    I, J = ids[:, None], ids[None, :]
    report = CheckReport()

    antitone = leq[I, J] & ~(leq[ra[J], ra[I]] & leq[la[J], la[I]])
    report.record("annihilators_antitone", _first_pair(antitone))

    of_sum = (ra[s] != meet[ra[I], ra[J]]) | (la[s] != meet[la[I], la[J]])
    report.record("annihilator_of_sum", _first_pair(of_sum))

    double = _first_id(~(leq[ids, ra[la]] & leq[ids, la[ra]]))
    report.record("double_annihilator_contains", None if double is None else (double,))

    bound = ra[p[la[p[la[I], J]], la[I]]]
    report.record("sum_below_annihilator_bound", _first_pair(~leq[s, bound]))

    zero = p == lattice.zero_id
    mismatch = (zero != leq[J, ra[I]]) | (zero != leq[I, la[J]])
    report.record("zero_product_annihilators", _first_pair(mismatch))

    if not report.passed:
        logger.error(f"Anihilatör yasaları sağlanmadı: {report.failed}")
    return report


def check_quotient_annihilators(lattice: IdealLattice) -> CheckReport:
    """
    I ⊆ J için R/I içinde (J/I)⁻ = π((I~·J)⁻) ve (J/I)~ = π((J·I⁻)~).

    Kapsamalar her halkada sağlanır; eşitlikler I = (I~)⁻ gerektirir ve
    GLR'lerde kontrol edilir.
    """
    ring = lattice.ring
    report = CheckReport()
    contain = right_eq = left_eq = None
    pairs = 0
    for i, I in enumerate(lattice.ideals):
        quotient, proj = quotient_ring(ring, I)
        I_left, I_right = left_annihilator(I), right_annihilator(I)
        for j, J in enumerate(lattice.ideals):
            if not I <= J:
                continue
            pairs += 1
            a = right_annihilator(ideal_product(I_left, J))
            b = left_annihilator(ideal_product(J, I_right))
            if contain is None and not (I <= a and I <= b):
                contain = (i, j)
            J_bar = IdealMask.from_elements(quotient, np.unique(proj[J.members]))
            if right_eq is None and right_annihilator(J_bar) != \
                    IdealMask.from_elements(quotient, np.unique(proj[a.members])):
                right_eq = (i, j)
            if left_eq is None and left_annihilator(J_bar) != \
                    IdealMask.from_elements(quotient, np.unique(proj[b.members])):
                left_eq = (i, j)
    report.record("containment", contain)
    report.record("right_quotient_formula", right_eq)
    report.record("left_quotient_formula", left_eq)
    report.details["nested_pairs"] = pairs
    return report


def check_ideal_summand(ring: FiniteRing, M: IdealMask, lattice: Optional[IdealLattice] = None
                        ) -> CheckReport:
    """M ∩ M⁻ = M ∩ M~ = 0 ise M (kendi başına) bir GLR ve M + M* = R"""
    L = _lattice(ring, lattice)
    glr = check_glr(ring, L)
    if not glr.is_glr:
        raise PreconditionFailed("Halka GLR değil", glr)
    M_right, M_left = right_annihilator(M), left_annihilator(M)
    if not ((M.bits & M_right.bits) == zero_ideal(ring).bits
            and (M.bits & M_left.bits) == zero_ideal(ring).bits):
        raise PreconditionFailed(f"M ∩ M* sıfır değil: {M.describe()}")
    summand, members = subring(ring, M.mask)
    summand_report = check_glr(summand)
    report = CheckReport()
    report.record("summand_is_glr", None if summand_report.is_glr else ())
    report.record("summand_plus_annihilator", None if ideal_sum(M, M_right).is_full() else ())
    report.details.update({"summand_size": summand.size,
                           "summand_unity": None if summand.unity is None
                           else int(members[summand.unity])})
    return report


def check_finiteness_and_unitarity(ring: FiniteRing, lattice: Optional[IdealLattice] = None
                                   ) -> CheckReport:
    """A(R) sonlu; zincirse R birimli; maksimal idealler M ↦ M* ile atomlara birebir"""
    L = _lattice(ring, lattice)
    glr = check_glr(ring, L)
    if not glr.is_glr:
        raise GLRCheckFailed("Halka GLR değil", glr)
    A = ideal_mv_algebra(L)
    atom_ids = atoms(A)
    maxes = maximal_ideals(L)
    stars = [int(L.right_ann[M]) for M in maxes]
    report = CheckReport()
    if is_chain(A):
        report.record("chain_implies_unitary", None if ring.unity is not None else ())
    report.record("atom_count_matches", None if len(atom_ids) == len(maxes) else
                  (len(atom_ids), len(maxes)))
    bijective = len(set(stars)) == len(stars) and sorted(stars) == sorted(atom_ids)
    report.record("maximal_star_bijection", None if bijective else tuple(stars))
    report.details.update({
        "ideal_count": len(L),
        "is_chain": is_chain(A),
        "atoms": atom_ids,
        "maximals": maxes,
        "maximal_stars": stars,
    })
    return report


def check_artinian_chain_criterion(ring: FiniteRing, lattice: Optional[IdealLattice] = None
                                   ) -> CheckReport:
    """Birimli ve sol idealleri zincir olan halka SPIR ve GLR"""
    report = CheckReport()
    applicable = ring.unity is not None and is_left_chain_ring(ring)
    report.details["applicable"] = applicable
    if applicable:
        L = _lattice(ring, lattice)
        report.record("is_spir", None if is_spir(ring, L) is not None else ())
        report.record("is_glr", None if check_glr(ring, L).is_glr else ())
    return report


# ---------------------------------------------------------------------------
# Ayrıştırma
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Decomposition:
    """R ≅ ⊕ R/R*_x: atomlar, R_x, R*_x, zincir uzunlukları ve kanonik harita"""
    atoms: Tuple[int, ...]
    summand_ideals: Tuple[IdealMask, ...]
    complements: Tuple[IdealMask, ...]
    chain_lengths: Tuple[int, ...]
    factor_rings: Tuple[FiniteRing, ...]
    certificates: Tuple[SPIRCertificate, ...]
    canonical_map: np.ndarray = field(repr=False)
    certified: bool = False
    checks: CheckReport = field(default_factory=CheckReport, repr=False)

    def to_json(self) -> Dict[str, Any]:
        return {
            "certified": self.certified,
            "atoms": list(self.atoms),
            "summand_ideals": [I.hex for I in self.summand_ideals],
            "complements": [I.hex for I in self.complements],
            "chain_lengths": list(self.chain_lengths),
            "factors": [
                {"size": Q.size, "unity": Q.unity, "spir": cert.to_json(),
                 "summand_size": R_x.size}
                for Q, cert, R_x in zip(self.factor_rings, self.certificates, self.summand_ideals)
            ],
            "checks": self.checks.to_json(),
        }


def _is_homomorphism(ring: FiniteRing, target: FiniteRing, proj: np.ndarray) -> bool:
    """proj(a+b) = proj(a)+proj(b), proj(ab) = proj(a)proj(b) (satır blokları halinde)"""
    step = 256
    for start in range(0, ring.size, step):
        rows = np.arange(start, min(ring.size, start + step))
        pa = proj[rows][:, None]
        pb = proj[None, :]
        if not (proj[ring.add[rows, :]] == target.add[pa, pb]).all():
            return False
        if not (proj[ring.mul[rows, :]] == target.mul[pa, pb]).all():
            return False
    return True


def check_summand_isomorphisms(ring: FiniteRing, summands: Sequence[IdealMask],
                               factors: Sequence[FiniteRing],
                               projections: Sequence[np.ndarray]) -> CheckReport:
    """t ↦ t + R*_x, R_x'ten R/R*_x'e birebir ve örten"""
    report = CheckReport()
    witness = None
    for x, (R_x, Q, proj) in enumerate(zip(summands, factors, projections)):
        images = proj[R_x.members]
        if len(np.unique(images)) != len(images) or len(images) != Q.size:
            witness = (x,)
            break
    report.record("summand_isomorphic_to_factor", witness)
    return report


def check_direct_sum(lattice: IdealLattice, summand_ids: Sequence[int]) -> CheckReport:
    """Σ R_x = R ve R_y ∩ Σ_{x≠y} R_x = 0"""
    report = CheckReport()
    total = lattice.zero_id
    for u in summand_ids:
        total = int(lattice.sum[total, u])
    report.record("sum_is_ring", None if total == lattice.top_id else ())
    witness = None
    for y, u in enumerate(summand_ids):
        rest = lattice.zero_id
        for x, v in enumerate(summand_ids):
            if x != y:
                rest = int(lattice.sum[rest, v])
        if lattice.intersection[u, rest] != lattice.zero_id:
            witness = (y,)
            break
    report.record("independent", witness)
    return report


def decompose(ring: FiniteRing, lattice: Optional[IdealLattice] = None,
              max_ideals: Optional[int] = None, jobs: int = 1) -> Decomposition:
    """Bir GLR'yi birimli SPIR'lerin direkt toplamına ayır ve kanonik haritayı sertifikala"""
    L = _lattice(ring, lattice, max_ideals, jobs)
    glr = check_glr(ring, L)
    if not glr.is_glr:
        raise GLRCheckFailed("Halka GLR değil; ayrıştırma yapılamaz", glr)

    A = ideal_mv_algebra(L)
    atom_ids = atoms(A)
    if atom_ids != minimal_ideals(L):
        raise CertificationFailed("A(R) atomları minimal ideallerle uyuşmuyor")
    star_of_maximals = sorted(int(L.right_ann[M]) for M in maximal_ideals(L))
    if star_of_maximals != sorted(atom_ids):
        raise CertificationFailed("M ↦ M* atomları vermiyor")

    hulls = [multiples(A, a)[-1] for a in atom_ids]
    complements = [int(L.right_ann[u]) for u in hulls]
    checks = CheckReport()

    fact1 = next(((x,) for x, (u, c) in enumerate(zip(hulls, complements))
                  if L.sum[u, c] != L.top_id), None)
    fact2 = next(((x,) for x, (u, c) in enumerate(zip(hulls, complements))
                  if L.intersection[u, c] != L.zero_id), None)
    fact3 = next(((x, y) for x, y in combinations(range(len(hulls)), 2)
                  if L.intersection[hulls[x], hulls[y]] != L.zero_id), None)
    fact4 = next(((x,) for x, u in enumerate(hulls) if L.product[u, u] != u), None)
    checks.record("fact1_sum", fact1)
    checks.record("fact2_intersection", fact2)
    checks.record("fact3_disjoint", fact3)
    checks.record("fact4_idempotent", fact4)

    factors, projections, certificates, lengths = [], [], [], []
    for x, c in enumerate(complements):
        quotient, proj = quotient_ring(ring, L.ideals[c])
        factor_lattice = enumerate_ideals(quotient, max_ideals=max_ideals)
        cert = is_spir(quotient, factor_lattice)
        if cert is None or not cert.unitary:
            raise CertificationFailed(f"R/R*_{x} birimli özel asal halka değil")
        factors.append(quotient)
        projections.append(proj)
        certificates.append(cert)
        lengths.append(len(factor_lattice))
        if not check_spir_annihilator_law(cert, factor_lattice):
            checks.record(f"factor{x}_annihilator_law", (x,))

    chains = iso_to_chain_product(A)
    expected = sorted(chains.chain_lengths) if chains is not None else None
    checks.record("chain_lengths_match", None if expected == sorted(lengths) else tuple(lengths))

    if factors:
        strides = [int(np.prod([Q.size for Q in factors[x + 1:]], dtype=np.int64))
                   for x in range(len(factors))]
        coords = np.stack(projections, axis=1).astype(np.int64)
        codes = coords @ np.array(strides, dtype=np.int64)
        target_size = int(np.prod([Q.size for Q in factors], dtype=np.int64))
    else:
        coords = np.zeros((ring.size, 0), dtype=np.int64)
        codes = np.zeros(ring.size, dtype=np.int64)
        target_size = 1
    bijective = target_size == ring.size and len(np.unique(codes)) == ring.size
    checks.record("canonical_map_bijective", None if bijective else ())
    homomorphic = all(_is_homomorphism(ring, Q, proj) for Q, proj in zip(factors, projections))
    checks.record("canonical_map_homomorphism", None if homomorphic else ())

    summands = [L.ideals[u] for u in hulls]
    iso = check_summand_isomorphisms(ring, summands, factors, projections)
    direct = check_direct_sum(L, hulls)
    for name, witness in list(iso.witnesses.items()) + list(direct.witnesses.items()):
        checks.record(name, witness)

    if not checks.passed:
        logger.error(f"Ayrıştırma sertifikası başarısız: {checks.failed}")
        raise CertificationFailed(f"Ayrıştırma sertifikası başarısız: {checks.failed}", checks)
    coords.setflags(write=False)
    logger.info(f"Ayrıştırma sertifikalandı: {len(factors)} çarpan, zincirler {lengths}")
    return Decomposition(
        atoms=tuple(atom_ids),
        summand_ideals=tuple(summands),
        complements=tuple(L.ideals[c] for c in complements),
        chain_lengths=tuple(lengths),
        factor_rings=tuple(factors),
        certificates=tuple(certificates),
        canonical_map=coords,
        certified=True,
        checks=checks,
    )


# ---------------------------------------------------------------------------
# Toplu sınıflandırma
# ---------------------------------------------------------------------------

def classify(ring: FiniteRing, lattice: Optional[IdealLattice] = None,
             max_ideals: Optional[int] = None,
             max_semiring_ideals: Optional[int] = None, jobs: int = 1,
             seed: Optional[int] = None) -> Dict[str, Any]:
    """GLR raporu, SPIR sertifikası, A(R) aksiyomları, Galois raporu ve ayrıştırma"""
    L = _lattice(ring, lattice, max_ideals, jobs)
    glr = check_glr(ring, L)
    cert = is_spir(ring, L)
    result: Dict[str, Any] = {
        "ring": ring_summary(ring),
        "ideal_count": len(L),
        "glr": glr.to_json(),
        "spir": cert.to_json() if cert else None,
    }
    if cert is not None and cert.nilpotency >= 1:
        result["spir_annihilator_law"] = check_spir_annihilator_law(cert, L)
    result["prime_maximal"] = check_prime_maximal(L, glr).to_json()
    result["annihilator_laws"] = check_annihilator_laws(L).to_json()
    if glr.is_glr:
        result["pmv"] = check_pmv_of_ring(ring, L, glr).to_json()
        result["distributivity"] = check_distributivity(L, seed=seed).to_json()
        result["quotient_annihilators"] = check_quotient_annihilators(L).to_json()
        result["residuation"] = check_residuation(L).to_json()
        result["finiteness_unitarity"] = check_finiteness_and_unitarity(ring, L).to_json()
        if len(L) <= config.CORPUS_CONFIG["galois_max_ideals"]:
            result["galois"] = check_galois(L, max_semiring_ideals).to_json()
        result["decomposition"] = decompose(ring, L, max_ideals).to_json()
    return result
