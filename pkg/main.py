"""
Ana Komut Satırı - Halka DSL'ini ayrıştırır, analizleri çalıştırır ve rapor üretir

Çıkış kodları: 0 = kontrol edilen özellikler sağlandı / sınıflandırma yapıldı,
1 = kontrol edilen bir özellik sağlanmadı (tanık raporda), 2 = ayrıştırma,
konfigürasyon veya limit hatası.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from colorama import Fore, Style, just_fix_windows_console

import config
from corpus import LEVELS, run_corpus, summary_frame
from errors import AlgebraError, ConfigError, InvalidSpec, PropertyFailure
from finite_ring import FiniteRing, build_ring, ring_summary
from gl_semiring import (check_duality, check_galois, check_gl_axioms, check_semiring_axioms,
                         semiring_of_ideals)
from glr_analysis import (check_glr, check_pmv_of_ring, check_spir_annihilator_law, classify,
                          decompose, ideal_mv_algebra, is_spir)
from ideal_lattice import (IdealLattice, covering_edges, enumerate_ideals, maximal_ideals,
                           minimal_ideals, prime_ideals)
from pseudo_mv import MVTable, cayley_frame, check_axioms, is_commutative, iso_to_chain_product, mv_from_json
from reports import emit, envelope, render_dot, render_json, render_text
from ring_dsl import parse_spec, render

logger = logging.getLogger(__name__)

CHECK_CHOICES = ("glr", "spir", "axioms", "duality", "all")

# --which all altında sonucu doğrulanan bölümler
ASSERTED_SECTIONS = ("prime_maximal", "annihilator_laws", "pmv", "distributivity",
                     "quotient_annihilators", "residuation", "finiteness_unitarity", "galois")


class GLRWorkbench:
    """Komutları çalıştıran ana sınıf; her komut (rapor, çıkış kodu) döndürür"""

    def __init__(self, run_config: config.RunConfig, out: Optional[Path] = None):
        self.run_config = run_config
        self.out = out
        self._setup_logging()

    def _setup_logging(self):
        """Logging ayarlarını yapılandır (stdout raporlara ayrılmıştır)"""
        log_config = config.LOGGING_CONFIG
        config.ensure_directories()
        logging.basicConfig(
            level=getattr(logging, log_config["level"]),
            format=log_config["format"],
            handlers=[
                logging.FileHandler(log_config["file"], encoding="utf-8"),
                logging.StreamHandler(sys.stderr),
            ],
            force=True,
        )

    # --- ortak yardımcılar -------------------------------------------------

    def _ring(self, text: str) -> Tuple[FiniteRing, IdealLattice]:
        spec = parse_spec(text)
        ring = build_ring(spec, self.run_config.max_elements)
        lattice = enumerate_ideals(ring, max_ideals=self.run_config.max_ideals,
                                   jobs=self.run_config.jobs)
        logger.info(f"{render(spec)}: {ring.size} eleman, {len(lattice)} ideal")
        return ring, lattice

    def _publish(self, command: str, result: Dict[str, Any], frames=None,
                 lattice: Optional[IdealLattice] = None) -> None:
        fmt = self.run_config.format
        if fmt == "dot":
            if lattice is None:
                raise ConfigError(f"dot formatı yalnızca ideal kafesi için geçerli ({command})")
            text = render_dot(lattice)
        elif fmt == "text":
            text = render_text(envelope(command, result, self.run_config), frames)
        else:
            text = render_json(envelope(command, result, self.run_config))
        emit(text, self.out)

    # --- komutlar ----------------------------------------------------------

    def cmd_ideals(self, spec_text: str) -> int:
        """İdeal kafesi, maksimal/asal/minimal idealler ve örtü kenarları"""
        ring, L = self._ring(spec_text)
        result = {
            "ring": ring_summary(ring),
            "lattice": L.to_json(),
            "descriptions": [I.describe() for I in L.ideals],
            "maximal": maximal_ideals(L),
            "prime": prime_ideals(L),
            "minimal": minimal_ideals(L),
            "covering_edges": [list(e) for e in covering_edges(L)],
        }
        self._publish("ideals", result, lattice=L)
        return 0

    def cmd_check(self, spec_text: str, which: str) -> int:
        """glr | spir | axioms | duality | all"""
        ring, L = self._ring(spec_text)
        if which == "glr":
            report = check_glr(ring, L)
            self._publish("check", {"which": which, "glr": report.to_json()})
            return 0 if report.is_glr else 1
        if which == "spir":
            cert = is_spir(ring, L)
            result: Dict[str, Any] = {"which": which, "spir": cert.to_json() if cert else None}
            law = True
            if cert is not None and cert.nilpotency >= 1:
                law = check_spir_annihilator_law(cert, L)
                result["annihilator_law"] = law
            self._publish("check", result)
            return 0 if cert is not None and law else 1
        if which == "axioms":
            report = check_pmv_of_ring(ring, L)
            self._publish("check", {"which": which, "pmv": report.to_json()},
                          frames=self._frames(ideal_mv_algebra(L)))
            return 0 if report.passed else 1
        if which == "duality":
            S = semiring_of_ideals(L)
            gl = check_gl_axioms(S)
            duality = check_duality(S=S)
            result = {"which": which, "gl_axioms": gl.to_json(), "duality": duality.to_json()}
            if len(L) <= config.CORPUS_CONFIG["galois_max_ideals"]:
                result["galois"] = check_galois(L, self.run_config.max_semiring_ideals).to_json()
            self._publish("check", result)
            passed = gl.passed and duality.passed and result.get("galois", {"passed": True})["passed"]
            return 0 if passed else 1
        result = classify(ring, L, max_ideals=self.run_config.max_ideals,
                          max_semiring_ideals=self.run_config.max_semiring_ideals,
                          jobs=self.run_config.jobs, seed=self.run_config.seed)
        result["which"] = which
        self._publish("check", result)
        failed = [s for s in ASSERTED_SECTIONS if s in result and not result[s]["passed"]]
        if failed:
            logger.error(f"Sağlanmayan kontroller: {failed}")
        return 1 if failed else 0

    def cmd_decompose(self, spec_text: str) -> int:
        """GLR'yi birimli SPIR'lerin direkt toplamına ayır"""
        ring, L = self._ring(spec_text)
        decomposition = decompose(ring, L, max_ideals=self.run_config.max_ideals,
                                  jobs=self.run_config.jobs)
        result = {"ring": ring_summary(ring), "decomposition": decomposition.to_json()}
        self._publish("decompose", result)
        return 0

    def cmd_mv(self, spec_text: Optional[str], table: Optional[Path]) -> int:
        """A(R) veya verilen MV tablosu: aksiyomlar, değişmelilik, zincir çarpımı"""
        if table is not None:
            A = _load_mv_table(table)
            source: Dict[str, Any] = {"table": str(table)}
        elif spec_text is not None:
            ring, L = self._ring(spec_text)
            glr = check_glr(ring, L)
            if not glr.is_glr:
                raise PropertyFailure("Halka GLR değil; A(R) pseudo MV-cebiri değil", glr)
            A = ideal_mv_algebra(L)
            source = {"ring": ring_summary(ring)}
        else:
            raise ConfigError("mv için bir halka tanımı veya --table gerekli")
        axioms = check_axioms(A)
        chains = iso_to_chain_product(A)
        result = {
            "source": source,
            "size": A.size,
            "axioms": axioms.to_json(),
            "commutativity": is_commutative(A).to_json(),
            "chain_product": chains.to_json() if chains else None,
        }
        self._publish("mv", result, frames=self._frames(A))
        return 0 if axioms.passed else 1

    def cmd_semiring(self, spec_text: str) -> int:
        """Sem(R), GL maddeleri, dualite ve Galois yazışması"""
        ring, L = self._ring(spec_text)
        S = semiring_of_ideals(L)
        axioms = check_semiring_axioms(S)
        gl = check_gl_axioms(S)
        result: Dict[str, Any] = {
            "ring": ring_summary(ring),
            "semiring": S.to_json(),
            "semiring_axioms": axioms.to_json(),
            "gl_axioms": gl.to_json(),
        }
        reports = [axioms, gl]
        if gl.passed:
            duality = check_duality(S=S)
            result["duality"] = duality.to_json()
            reports.append(duality)
        if len(L) <= config.CORPUS_CONFIG["galois_max_ideals"]:
            galois = check_galois(L, self.run_config.max_semiring_ideals)
            result["galois"] = galois.to_json()
            reports.append(galois)
        self._publish("semiring", result)
        return 0 if all(r.passed for r in reports) else 1

    def cmd_corpus(self, level: str) -> int:
        """Tüm özellik takımını üretilmiş korpus üzerinde çalıştır"""
        result = run_corpus(level, self.run_config, progress=sys.stderr.isatty())
        frames = {"korpus": summary_frame(result)} if self.run_config.format == "text" else None
        self._publish("corpus", result, frames=frames)
        return 0 if result["passed"] else 1

    def _frames(self, A: MVTable):
        if self.run_config.format != "text" or A.size > 32:
            return None
        return {"oplus": cayley_frame(A, "oplus"), "odot": cayley_frame(A, "odot")}


def _load_mv_table(path: Path) -> MVTable:
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidSpec(f"MV tablosu okunamadı ({path}): {e}")
    return mv_from_json(doc)


def _verdict(code: int, message: str) -> None:
    """Renkli sonuç satırı (stderr)"""
    color = {0: Fore.GREEN, 1: Fore.YELLOW}.get(code, Fore.RED)
    sys.stderr.write(f"{color}{message}{Style.RESET_ALL}\n")


def build_parser() -> argparse.ArgumentParser:
    """Komut satırı ayrıştırıcısı"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=config.REPORT_CONFIG["formats"], help="Çıktı formatı")
    common.add_argument("--max-elements", type=int, help="Halka eleman limiti")
    common.add_argument("--max-ideals", type=int, help="İdeal sayısı limiti")
    common.add_argument("--max-semiring-ideals", type=int, help="Yarı-halka ideali limiti")
    common.add_argument("--jobs", type=int, help="İşçi sayısı")
    common.add_argument("--seed", type=int, help="Örneklenen dağılma aileleri için tohum")
    common.add_argument("--out", type=Path, help="Raporu stdout yerine dosyaya yaz")
    common.add_argument("--config", type=Path, help="JSON konfigürasyon dosyası")

    parser = argparse.ArgumentParser(description="GLR Çalışma Tezgahı - sonlu halkalar ve pseudo MV-cebirleri")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideals", parents=[common], help="İdeal kafesi")
    p.add_argument("spec", help="Halka tanımı (DSL)")

    p = sub.add_parser("check", parents=[common], help="Özellik kontrolü")
    p.add_argument("spec", help="Halka tanımı (DSL)")
    p.add_argument("--which", choices=CHECK_CHOICES, default="all", help="Kontrol türü")

    p = sub.add_parser("decompose", parents=[common], help="SPIR direkt toplam ayrıştırması")
    p.add_argument("spec", help="Halka tanımı (DSL)")

    p = sub.add_parser("mv", parents=[common], help="Pseudo MV-cebiri raporu")
    p.add_argument("spec", nargs="?", help="Halka tanımı (DSL)")
    p.add_argument("--table", type=Path, help="MV tablosu JSON dosyası")

    p = sub.add_parser("semiring", parents=[common], help="GL yarı-halka raporu")
    p.add_argument("spec", help="Halka tanımı (DSL)")

    p = sub.add_parser("corpus", parents=[common], help="Korpus özellik takımı")
    p.add_argument("--level", choices=LEVELS, default="small", help="Korpus seviyesi")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Ana fonksiyon; çıkış kodunu döndürür"""
    just_fix_windows_console()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    flags = {
        "format": args.format,
        "max_elements": args.max_elements,
        "max_ideals": args.max_ideals,
        "max_semiring_ideals": args.max_semiring_ideals,
        "jobs": args.jobs,
        "seed": args.seed,
    }
    try:
        run_config = config.resolve_run_config(flags, args.config)
    except ConfigError as e:
        _verdict(e.exit_code, f"❌ Konfigürasyon hatası: {e}")
        return e.exit_code

    workbench = GLRWorkbench(run_config, out=args.out)
    try:
        if args.command == "ideals":
            code = workbench.cmd_ideals(args.spec)
        elif args.command == "check":
            code = workbench.cmd_check(args.spec, args.which)
        elif args.command == "decompose":
            code = workbench.cmd_decompose(args.spec)
        elif args.command == "mv":
            code = workbench.cmd_mv(args.spec, args.table)
        elif args.command == "semiring":
            code = workbench.cmd_semiring(args.spec)
        else:
            code = workbench.cmd_corpus(args.level)
    except PropertyFailure as e:
        logger.error(f"Özellik sağlanmadı: {e}")
        result: Dict[str, Any] = {"error": str(e), "error_type": type(e).__name__}
        if e.report is not None:
            result["report"] = e.report
        emit(render_json(envelope(args.command, result, run_config)), workbench.out)
        _verdict(e.exit_code, f"⚠️  {e}")
        return e.exit_code
    except AlgebraError as e:
        logger.error(f"{type(e).__name__}: {e}")
        _verdict(e.exit_code, f"❌ {e}")
        return e.exit_code

    _verdict(code, "✅ Tamam" if code == 0 else "⚠️  Kontrol edilen bir özellik sağlanmadı")
    return code


if __name__ == "__main__":
    sys.exit(main())
