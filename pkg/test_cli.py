"""
Komut satırı testleri - çıkış kodları, rapor zarfı, formatlar ve konfigürasyon önceliği
"""

import json
from functools import lru_cache

import jsonschema
import pytest

import config
from errors import ConfigError
from main import main
from pseudo_mv import make_chain, mv_to_json


@pytest.fixture(autouse=True)
def clean_environment(tmp_path, monkeypatch):
    """Çalışma dizinindeki konfigürasyon dosyası ve GLR_* değişkenleri testleri etkilemesin"""
    monkeypatch.chdir(tmp_path)
    for name in config.ENV_OVERRIDES:
        monkeypatch.delenv(name, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@lru_cache(maxsize=1)
def report_schema():
    return json.loads((config.SCHEMAS_DIR / "report.schema.json").read_text(encoding="utf-8"))


def run_json(capsys, *argv):
    """Komutu koştur; JSON zarfı rapor şemasına göre doğrula"""
    code, out = run(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(instance=doc, schema=report_schema())
    return code, doc


class TestExitCodes:
    """0 = sağlandı, 1 = özellik sağlanmadı, 2 = girdi/limit hatası"""

    def test_glr(self, capsys):
        code, doc = run_json(capsys, "check", "--which", "glr", "Z12")
        assert code == 0
        assert doc["command"] == "check"
        assert doc["result"]["glr"]["is_glr"] is True

    def test_counterexample(self, capsys):
        code, doc = run_json(capsys, "check", "--which", "glr", "@counterexample_f2xy.json")
        assert code == 1
        assert doc["result"]["glr"]["double_annihilator"]["witness_ideal"] == "5"

    def test_parse_error(self, capsys):
        code, out = run(capsys, "ideals", "Z")
        assert code == 2
        assert out == ""

    def test_size_cap(self, capsys):
        code, _ = run(capsys, "ideals", "Z64 x Z128")
        assert code == 2

    def test_bad_arguments(self, capsys):
        code, _ = run(capsys, "nonsense")
        assert code == 2

    def test_spir(self, capsys):
        assert run(capsys, "check", "--which", "spir", "Z8")[0] == 0
        assert run(capsys, "check", "--which", "spir", "Z6")[0] == 1

    def test_axioms(self, capsys):
        assert run(capsys, "check", "--which", "axioms", "Z12")[0] == 0
        code, doc = run_json(capsys, "check", "--which", "axioms", "@counterexample_f2xy.json")
        assert code == 1
        assert doc["result"]["error_type"] == "GLRCheckFailed"
        assert doc["result"]["report"]["is_glr"] is False

    def test_duality(self, capsys):
        code, doc = run_json(capsys, "check", "--which", "duality", "Z4 x Z9")
        assert code == 0
        assert doc["result"]["galois"]["passed"]

    def test_check_all(self, capsys):
        code, doc = run_json(capsys, "check", "Z12")
        assert code == 0
        assert doc["result"]["decomposition"]["certified"]
        # GLR olmayan halkada sınıflandırma yapılır, doğrulanan bölüm yoktur
        code, doc = run_json(capsys, "check", "--which", "all", "@counterexample_f2xy.json")
        assert code == 0
        assert doc["result"]["glr"]["is_glr"] is False


class TestCommands:
    """ideals, decompose, mv, semiring, corpus"""

    def test_ideals(self, capsys):
        code, doc = run_json(capsys, "ideals", "Z12")
        assert code == 0
        result = doc["result"]
        assert result["lattice"]["ideal_count"] == 6
        assert result["maximal"] == [3, 4]
        assert result["covering_edges"][0] == [0, 1]

    def test_decompose(self, capsys):
        code, doc = run_json(capsys, "decompose", "Z6")
        assert code == 0
        factors = doc["result"]["decomposition"]["factors"]
        assert len(factors) == 2
        assert all(f["unity"] is not None for f in factors)

    def test_decompose_non_glr(self, capsys):
        code, doc = run_json(capsys, "decompose", "@counterexample_f2xy.json")
        assert code == 1
        assert doc["result"]["error_type"] == "GLRCheckFailed"

    def test_mv_table(self, capsys, tmp_path):
        path = tmp_path / "l4.json"
        path.write_text(json.dumps(mv_to_json(make_chain(4))), encoding="utf-8")
        code, doc = run_json(capsys, "mv", "--table", str(path))
        assert code == 0
        assert doc["result"]["chain_product"]["chain_lengths"] == [4]

    def test_spec_file_with_unknown_field(self, capsys, tmp_path):
        path = tmp_path / "z6.json"
        path.write_text(json.dumps({"kind": "cyclic", "n": 6, "junk": True}), encoding="utf-8")
        code, out = run(capsys, "ideals", f"@{path}")
        assert code == 2
        assert out == ""

    def test_mv_broken_table(self, capsys, tmp_path):
        doc = mv_to_json(make_chain(3))
        doc["oplus"][1][1] = 1
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        assert run(capsys, "mv", "--table", str(path))[0] == 1

    def test_mv_of_ring(self, capsys):
        code, doc = run_json(capsys, "mv", "Z12")
        assert code == 0
        assert sorted(doc["result"]["chain_product"]["chain_lengths"]) == [2, 3]
        assert run(capsys, "mv", "@counterexample_f2xy.json")[0] == 1
        assert run(capsys, "mv")[0] == 2

    def test_semiring(self, capsys):
        code, doc = run_json(capsys, "semiring", "Z6")
        assert code == 0
        assert doc["result"]["galois"]["details"]["semiring_ideal_count"] == 4
        assert run(capsys, "semiring", "@counterexample_f2xy.json")[0] == 1


class TestOutput:
    """Deterministik zarf, metin ve DOT formatları"""

    def test_envelope_matches_schema(self, capsys):
        _, doc = run_json(capsys, "ideals", "Z6")
        assert doc["tool"] == "glr-workbench"
        assert doc["schema_version"] == "1"

    def test_schema_rejects_foreign_envelope(self, capsys):
        _, doc = run_json(capsys, "ideals", "Z6")
        doc["command"] = "play"
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(instance=doc, schema=report_schema())
        del doc["result"]
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(instance=doc, schema=report_schema())

    def test_byte_identical_reruns(self, capsys):
        first = run(capsys, "check", "--jobs", "1", "Z4 x Z9")[1]
        second = run(capsys, "check", "--jobs", "1", "Z4 x Z9")[1]
        assert first == second
        assert first.endswith("\n")

    def test_dot(self, capsys):
        code, out = run(capsys, "ideals", "--format", "dot", "Z12")
        assert code == 0
        assert out.startswith("digraph ideals {")
        assert out.count("->") == 7

    def test_dot_requires_lattice(self, capsys):
        assert run(capsys, "check", "--format", "dot", "Z12")[0] == 2

    def test_text(self, capsys):
        code, out = run(capsys, "mv", "--format", "text", "Z6")
        assert code == 0
        assert "command: mv" in out
        assert "oplus:" in out

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "reports" / "z6.json"
        code, out = run(capsys, "ideals", "--out", str(target), "Z6")
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["command"] == "ideals"


class TestConfiguration:
    """bayrak > ortam değişkeni > konfigürasyon dosyası > varsayılan"""

    def test_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("GLR_MAX_ELEMENTS", "4")
        assert run(capsys, "ideals", "Z8")[0] == 2

    def test_flag_beats_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("GLR_MAX_ELEMENTS", "4")
        code, doc = run_json(capsys, "ideals", "--max-elements", "16", "Z8")
        assert code == 0
        assert doc["config"]["max_elements"] == 16

    def test_config_file_in_working_directory(self, capsys, tmp_path):
        (tmp_path / config.DEFAULT_CONFIG_FILE).write_text('{"max_ideals": 3}', encoding="utf-8")
        assert run(capsys, "ideals", "Z12")[0] == 2
        assert run(capsys, "ideals", "--max-ideals", "8", "Z12")[0] == 0

    def test_explicit_config_file(self, capsys, tmp_path):
        path = tmp_path / "custom.json"
        path.write_text('{"seed": 11, "jobs": 1}', encoding="utf-8")
        code, doc = run_json(capsys, "ideals", "--config", str(path), "Z6")
        assert code == 0
        assert doc["config"]["seed"] == 11

    def test_unknown_key(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"colour": "red"}', encoding="utf-8")
        assert run(capsys, "ideals", "--config", str(path), "Z6")[0] == 2

    def test_resolution_order(self, tmp_path):
        path = tmp_path / "file.json"
        path.write_text('{"max_ideals": 10, "max_elements": 20, "jobs": 3}', encoding="utf-8")
        resolved = config.resolve_run_config(
            {"max_elements": 30, "jobs": None}, path, environ={"GLR_MAX_IDEALS": "40"})
        assert resolved.max_elements == 30
        assert resolved.max_ideals == 40
        assert resolved.jobs == 3

    def test_invalid_values(self):
        with pytest.raises(ConfigError):
            config.resolve_run_config({}, environ={"GLR_JOBS": "many"})
        with pytest.raises(ConfigError):
            config.resolve_run_config({"max_elements": 0}, environ={})

    def test_table_cap(self, capsys, monkeypatch):
        cap = config.LIMITS_CONFIG["table_max_elements"]
        assert config.resolve_run_config({"max_elements": cap}, environ={}).max_elements == cap
        with pytest.raises(ConfigError):
            config.resolve_run_config({"max_elements": 40000}, environ={})
        monkeypatch.setenv("GLR_MAX_ELEMENTS", "100000")
        assert run(capsys, "ideals", "Z6")[0] == 2
