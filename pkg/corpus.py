"""
Korpus Modülü - Üretilmiş halka ailesi üzerinde tam özellik takımını çalıştırır

Aileler: Z_n, GF(p)[x]/(m), M2(taban), ikili çarpımlar, bölümler ve GLR
olmayan karşı örnekler. Her örnek bağımsız kontrol edilir; sonuçlar korpus
sırasıyla raporlanır.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

import config
from errors import AlgebraError
from finite_ring import (Cyclic, Matrix, PolyQuotient, Product, Quotient, RingSpec, Table,
                         build_ring, spec_size, table_spec, upper_triangular_ring)
from gl_semiring import check_duality, semiring_of_ideals
from glr_analysis import (check_infinite_product_witness, check_product_closure,
                          check_quotient_closure, classify, ideal_mv_algebra)
from ideal_lattice import brute_force_ideals, enumerate_ideals
from pseudo_mv import MVTable, check_axioms, make_chain
from reports import CheckReport
from ring_dsl import load_spec_file, parse_spec, render

logger = logging.getLogger(__name__)

LEVELS = ("small", "full")

# classify() çıktısında "passed" alanı doğrulanan bölümler
CHECKED_SECTIONS = ("prime_maximal", "annihilator_laws", "pmv", "distributivity",
                    "quotient_annihilators", "residuation", "finiteness_unitarity", "galois")


@dataclass(frozen=True)
class CorpusEntry:
    """Korpus örneği; expected_glr None ise sınıflandırma yalnızca raporlanır"""
    name: str
    spec: RingSpec
    family: str
    expected_glr: Optional[bool] = True


# ---------------------------------------------------------------------------
# Karşı örnekler
# ---------------------------------------------------------------------------

def f2xy_spec() -> Table:
    """GF(2)[x,y]/(x², xy, y²); eleman a + 2b + 4c = a + bx + cy"""
    ar = np.arange(8)
    a, b, c = ar & 1, (ar >> 1) & 1, (ar >> 2) & 1
    add = ar[:, None] ^ ar[None, :]
    prod_a = a[:, None] & a[None, :]
    prod_b = (a[:, None] & b[None, :]) ^ (b[:, None] & a[None, :])
    prod_c = (a[:, None] & c[None, :]) ^ (c[:, None] & a[None, :])
    mul = prod_a + 2 * prod_b + 4 * prod_c
    return table_spec(add, mul)


def zero_product_spec() -> Table:
    """2Z/4Z: iki eleman, tüm çarpımlar sıfır (birimsiz)"""
    return table_spec(np.array([[0, 1], [1, 0]]), np.zeros((2, 2), dtype=np.int64))


def upper_triangular_spec() -> Table:
    """GF(2) üzerinde 2x2 üst üçgen matrisler"""
    return upper_triangular_ring(build_ring(Cyclic(2))).provenance


# ---------------------------------------------------------------------------
# Korpus üretimi
# ---------------------------------------------------------------------------

def _poly_moduli(p: int, degree: int) -> List[tuple]:
    """x^k, x^k − 1 ve (k = 2 için) x² + 1"""
    moduli = [tuple([0] * degree + [1])]
    if degree >= 2:
        moduli.append(tuple([p - 1] + [0] * (degree - 1) + [1]))
    if degree == 2:
        moduli.append((1, 0, 1))
    unique = []
    for m in moduli:
        if m not in unique:
            unique.append(m)
    return unique


def corpus_specs(level: str = "small") -> List[CorpusEntry]:
    """Seviyeye göre deterministik korpus listesi"""
    if level not in LEVELS:
        raise ValueError(f"Bilinmeyen korpus seviyesi: {level}")
    cfg = config.CORPUS_CONFIG
    full = level == "full"
    cyclic_max = cfg["cyclic_max"] if full else cfg["small_cyclic_max"]
    poly_max = cfg["poly_max_elements"] if full else cfg["small_poly_max_elements"]
    product_max = cfg["product_max_elements"] if full else cfg["small_product_max_elements"]
    matrix_base_max = cfg["matrix_base_max_elements"] if full else cfg["small_matrix_base_max_elements"]

    entries: List[CorpusEntry] = []
    seen = set()

    def add(spec: RingSpec, family: str, expected: Optional[bool] = True, name: Optional[str] = None):
        if spec in seen:
            return
        seen.add(spec)
        entries.append(CorpusEntry(name or render(spec), spec, family, expected))

    for n in range(1, cyclic_max + 1):
        add(Cyclic(n), "cyclic")

    for p in cfg["poly_primes"]:
        for degree in range(1, cfg["poly_max_degree"] + 1):
            if p ** degree > poly_max:
                continue
            for modulus in _poly_moduli(p, degree):
                add(PolyQuotient(p, modulus), "poly")

    bases: List[RingSpec] = [Cyclic(m) for m in range(2, matrix_base_max + 1)]
    bases.append(PolyQuotient(2, (0, 0, 1)))
    if full:
        bases.extend([PolyQuotient(2, (1, 1, 1)), Product((Cyclic(2), Cyclic(2)))])
    for base in bases:
        if (spec_size(base) <= matrix_base_max
                and spec_size(Matrix(2, base)) <= config.LIMITS_CONFIG["max_elements"]):
            add(Matrix(2, base), "matrix")

    factors = [Cyclic(2), Cyclic(3), Cyclic(4), Cyclic(9), PolyQuotient(2, (0, 0, 1)),
               Matrix(2, Cyclic(2))]
    if full:
        factors.extend([Cyclic(5), Cyclic(8), Cyclic(16), Cyclic(25), Cyclic(27),
                        PolyQuotient(3, (0, 0, 1))])
    for left, right in combinations_with_replacement(factors, 2):
        product = Product((left, right))
        if spec_size(product) <= product_max:
            add(product, "product")

    quotients = [
        Quotient(Cyclic(24), (8,)),
        Quotient(PolyQuotient(2, (0, 0, 0, 0, 1)), ("x^2",)),
        Quotient(Product((Cyclic(4), Cyclic(9))), ((2, 0),)),
        Quotient(Matrix(2, Cyclic(4)), (((2, 0), (0, 0)),)),
    ]
    if full:
        quotients.append(Quotient(Product((Cyclic(8), PolyQuotient(3, (0, 0, 1)))), ((4, "x"),)))
    for spec in quotients:
        add(spec, "quotient")

    add(f2xy_spec(), "counterexample", False, name="GF(2)[x,y]/(x^2,xy,y^2)")
    add(zero_product_spec(), "counterexample", False, name="2Z/4Z")
    add(upper_triangular_spec(), "counterexample", None, name="T2(GF(2))")
    logger.info(f"Korpus ({level}): {len(entries)} örnek")
    return entries


# ---------------------------------------------------------------------------
# Örnek başına kontroller
# ---------------------------------------------------------------------------

def check_entry(index: int, entry: CorpusEntry, run_config: config.RunConfig) -> Dict[str, Any]:
    """Tek örnek: sınıflandırma, kahinler ve değişmezler; hatalar satıra yazılır"""
    row: Dict[str, Any] = {"index": index, "name": entry.name, "family": entry.family,
                           "failures": []}
    failures: List[str] = row["failures"]
    try:
        ring = build_ring(entry.spec, run_config.max_elements)
        lattice = enumerate_ideals(ring, max_ideals=run_config.max_ideals)
        result = classify(ring, lattice, max_ideals=run_config.max_ideals,
                          max_semiring_ideals=run_config.max_semiring_ideals,
                          seed=run_config.seed)
    except AlgebraError as e:
        logger.error(f"Korpus örneği başarısız [{index}] {entry.name}: {e}")
        row.update({"error": str(e), "error_type": type(e).__name__})
        failures.append(type(e).__name__)
        return row

    glr = result["glr"]
    spir = result["spir"]
    row.update({
        "size": ring.size,
        "unitary": ring.unity is not None,
        "ideal_count": len(lattice),
        "is_glr": glr["is_glr"],
        "is_spir": spir is not None,
        "chain_lengths": (result.get("decomposition") or {}).get("chain_lengths"),
    })

    if not glr["definitions_agree"]:
        failures.append("definitions_agree")
    if entry.expected_glr is not None and glr["is_glr"] != entry.expected_glr:
        failures.append("expected_glr")
    if spir is not None and spir["unitary"] and not glr["is_glr"]:
        failures.append("spir_implies_glr")
    if result.get("spir_annihilator_law") is False:
        failures.append("spir_annihilator_law")
    for section in CHECKED_SECTIONS:
        if section in result and not result[section]["passed"]:
            failures.append(section)

    if ring.unity is not None and not glr["central_idempotent_generated"]["holds"]:
        failures.append("unity_generates")
    if ring.size <= config.LIMITS_CONFIG["brute_force_max_elements"]:
        oracle = [I.bits for I in brute_force_ideals(ring)]
        if oracle != [I.bits for I in lattice.ideals]:
            failures.append("brute_force_oracle")
    if glr["is_glr"]:
        duality = check_duality(A=ideal_mv_algebra(lattice), S=semiring_of_ideals(lattice))
        if not duality.passed:
            failures.append("duality")
    if isinstance(entry.spec, Matrix):
        base_count = len(enumerate_ideals(build_ring(entry.spec.base, run_config.max_elements)))
        if base_count != len(lattice):
            failures.append("matrix_ideal_count")
    if parse_spec(render(entry.spec)) != entry.spec:
        failures.append("render_round_trip")

    if failures:
        logger.warning(f"[{index}] {entry.name}: {failures}")
    else:
        logger.debug(f"[{index}] {entry.name}: tamam")
    return row


def check_chain_laws(max_n: Optional[int] = None) -> CheckReport:
    """Łₙ aksiyomları (1 ≤ n ≤ max_n) ve Ł₃, Ł₄ tek hücre mutasyonlarının yakalanması"""
    max_n = max_n or config.CORPUS_CONFIG["chain_law_max"]
    report = CheckReport()
    failing = next((n for n in range(1, max_n + 1) if not check_axioms(make_chain(n)).passed), None)
    report.record("chain_axioms", None if failing is None else (failing,))

    survivor = None
    mutations = 0
    for n in (3, 4):
        for mutant, cell in _mutants(make_chain(n)):
            mutations += 1
            if check_axioms(mutant).passed:
                survivor = (n,) + cell
                break
        if survivor:
            break
    report.record("mutations_caught", survivor)
    report.details.update({"chains_checked": max_n, "mutations": mutations})
    return report


def _mutants(A: MVTable):
    """⊕ veya negasyon tablolarında tek hücresi değiştirilmiş kopyalar"""
    n = A.size
    for i in range(n):
        for j in range(n):
            for v in range(n):
                if v != A.oplus[i, j]:
                    oplus = A.oplus.copy()
                    oplus[i, j] = v
                    yield MVTable(n, oplus, A.neg_minus, A.neg_tilde, A.zero, A.one), ("oplus", i, j, v)
    for name in ("neg_minus", "neg_tilde"):
        for i in range(n):
            for v in range(n):
                table = getattr(A, name)
                if v != table[i]:
                    changed = table.copy()
                    changed[i] = v
                    tables = {"neg_minus": A.neg_minus, "neg_tilde": A.neg_tilde, name: changed}
                    yield (MVTable(n, A.oplus, tables["neg_minus"], tables["neg_tilde"], A.zero, A.one),
                           (name, i, v))


def f2xy_matches_data_file() -> bool:
    """Formülle kurulan tablo data/ dosyasıyla aynı mı"""
    return load_spec_file("counterexample_f2xy.json") == f2xy_spec()


# ---------------------------------------------------------------------------
# Korpus koşusu
# ---------------------------------------------------------------------------

def run_corpus(level: str, run_config: config.RunConfig, progress: bool = True) -> Dict[str, Any]:
    """Tüm korpusu çalıştır; satırlar korpus sırasında döner"""
    entries = corpus_specs(level)
    jobs = max(1, run_config.jobs)
    logger.info(f"Korpus koşusu başlıyor: {len(entries)} örnek, {jobs} işçi")

    def task(item):
        return check_entry(item[0], item[1], run_config)

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        rows = list(tqdm(pool.map(task, enumerate(entries)), total=len(entries),
                         desc="Korpus", unit="halka", disable=not progress))

    pair_specs = None if level == "small" else {e.spec for e in corpus_specs("small")}
    pair_inputs, quotient_inputs = closure_inputs(entries, rows, pair_specs)
    closure = _closure_report(pair_inputs, quotient_inputs, run_config)

    suites = {
        "chain_laws": check_chain_laws(),
        "closure": closure,
        "infinite_product": check_infinite_product_witness(),
    }
    data_file = CheckReport()
    data_file.record("f2xy_matches_data_file", None if f2xy_matches_data_file() else ())
    suites["data_files"] = data_file

    failed_rows = [row["index"] for row in rows if row["failures"]]
    failed_suites = sorted(name for name, report in suites.items() if not report.passed)
    passed = not failed_rows and not failed_suites
    if passed:
        logger.info("Korpus: tüm özellikler sağlandı")
    else:
        logger.error(f"Korpus: başarısız örnekler {failed_rows}, takımlar {failed_suites}")
    return {
        "level": level,
        "passed": passed,
        "entry_count": len(entries),
        "failed_entries": failed_rows,
        "failed_suites": failed_suites,
        "entries": rows,
        "suites": {name: report.to_json() for name, report in suites.items()},
    }


def closure_inputs(entries: Sequence[CorpusEntry], rows: Sequence[Dict[str, Any]],
                   pair_specs: Optional[Set[RingSpec]] = None
                   ) -> Tuple[List[CorpusEntry], List[CorpusEntry]]:
    """
    Kapanış takımının girdileri: (çarpım çiftleri için GLR'ler, bölümler için GLR'ler).

    Bölümler korpustaki her GLR için kontrol edilir; çiftler `pair_specs`
    verilmişse yalnızca o tanımlardan (küçük korpus) seçilir.
    """
    glrs = [e for e, row in zip(entries, rows) if row.get("is_glr")]
    pair_inputs = [e for e in glrs if pair_specs is None or e.spec in pair_specs]
    return pair_inputs, glrs


def _closure_report(pair_inputs: Sequence[CorpusEntry], quotient_inputs: Sequence[CorpusEntry],
                    run_config: config.RunConfig) -> CheckReport:
    cap = config.CORPUS_CONFIG["closure_product_max_elements"]
    products = check_product_closure(
        [build_ring(e.spec, run_config.max_elements) for e in pair_inputs], max_elements=cap,
        max_ideals=run_config.max_ideals, full_product=False, jobs=run_config.jobs)
    quotients = check_quotient_closure(
        [build_ring(e.spec, run_config.max_elements) for e in quotient_inputs],
        max_ideals=run_config.max_ideals)
    report = CheckReport()
    report.record("products_are_glr", products.witnesses["products_are_glr"])
    report.record("quotients_are_glr", quotients.witnesses["quotients_are_glr"])
    report.details.update({
        "pair_inputs": [e.name for e in pair_inputs],
        "quotient_inputs": [e.name for e in quotient_inputs],
        "products_checked": products.details["products_checked"],
        "products_skipped": products.details["products_skipped"],
        "quotients_checked": quotients.details["quotients_checked"],
    })
    logger.info(f"Kapanış: {report.details['products_checked']} çarpım, "
                f"{report.details['quotients_checked']} bölüm kontrol edildi")
    return report


def summary_frame(result: Dict[str, Any]) -> pd.DataFrame:
    """Metin raporu için korpus özet tablosu"""
    columns = ["index", "name", "family", "size", "ideal_count", "is_glr", "is_spir", "failures"]
    frame = pd.DataFrame(result["entries"]).reindex(columns=columns)
    frame["failures"] = frame["failures"].map(lambda f: ",".join(f) if f else "")
    return frame.set_index("index")
