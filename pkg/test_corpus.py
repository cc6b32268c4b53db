"""
Korpus testleri - korpus üretimi, örnek kontrolleri ve tam küçük koşu
"""

import pytest

import config
from corpus import (CorpusEntry, check_entry, closure_inputs, corpus_specs,
                    f2xy_matches_data_file, f2xy_spec, run_corpus, summary_frame,
                    zero_product_spec)
from finite_ring import Cyclic, Product
from glr_analysis import closure_pairs
from ring_dsl import parse_spec, render

RUN_CONFIG = config.RunConfig(jobs=1)


class TestCorpusSpecs:
    """Deterministik korpus listesi"""

    def test_small_corpus_contents(self):
        names = [e.name for e in corpus_specs("small")]
        for expected in ("Z1", "Z6", "Z12", "Z36", "M2(Z2)", "Z4 x Z9",
                         "M2(GF(2)[x]/(x^2))", "GF(3)[x]/(x^2+1)", "(Z4 x Z9)/((2,0))",
                         "GF(2)[x,y]/(x^2,xy,y^2)", "2Z/4Z", "T2(GF(2))"):
            assert expected in names
        assert "Z37" not in names
        assert len(names) == len(set(names))

    def test_full_is_larger(self):
        small = corpus_specs("small")
        full = corpus_specs("full")
        assert len(full) > len(small)
        assert {e.spec for e in small} <= {e.spec for e in full}

    def test_full_matrix_bases(self):
        names = {e.name for e in corpus_specs("full")}
        assert {"M2(Z6)", "M2(Z7)", "M2(Z8)"} <= names
        assert "M2(Z9)" not in names

    def test_deterministic(self):
        assert corpus_specs("small") == corpus_specs("small")

    def test_names_parse_back(self):
        for entry in corpus_specs("small"):
            if entry.family != "counterexample":
                assert parse_spec(entry.name) == entry.spec

    def test_unknown_level(self):
        with pytest.raises(ValueError):
            corpus_specs("huge")

    def test_expected_verdicts(self):
        expected = {e.name: e.expected_glr for e in corpus_specs("small")
                    if e.family == "counterexample"}
        assert expected == {"GF(2)[x,y]/(x^2,xy,y^2)": False, "2Z/4Z": False, "T2(GF(2))": None}

    def test_data_file_matches_formula(self):
        assert f2xy_matches_data_file()


class TestEntries:
    """Tek örnek kontrolleri"""

    def test_glr_entry(self):
        spec = Product((Cyclic(4), Cyclic(3)))
        row = check_entry(0, CorpusEntry(render(spec), spec, "product"), RUN_CONFIG)
        assert row["failures"] == []
        assert row["is_glr"]
        assert row["chain_lengths"] == [3, 2]

    def test_counterexamples(self):
        for index, spec in enumerate([f2xy_spec(), zero_product_spec()]):
            row = check_entry(index, CorpusEntry(f"ornek{index}", spec, "counterexample", False),
                              RUN_CONFIG)
            assert row["failures"] == []
            assert not row["is_glr"]

    def test_wrong_expectation_is_reported(self):
        row = check_entry(0, CorpusEntry("ters", f2xy_spec(), "counterexample", True), RUN_CONFIG)
        assert row["failures"] == ["expected_glr"]

    def test_errors_become_failures(self):
        small = config.RunConfig(max_elements=8, jobs=1)
        row = check_entry(3, CorpusEntry("Z16", Cyclic(16), "cyclic"), small)
        assert row["error_type"] == "SizeCapExceeded"
        assert row["failures"] == ["SizeCapExceeded"]


class TestClosureInputs:
    """Kapanış takımına giren GLR'ler"""

    def test_pairs_only_from_given_specs(self):
        entries = [CorpusEntry(f"Z{n}", Cyclic(n), "cyclic") for n in (2, 3, 4, 5)]
        rows = [{"is_glr": True}, {"is_glr": False}, {"is_glr": True}, {"failures": ["x"]}]
        pairs, quotients = closure_inputs(entries, rows, {Cyclic(2), Cyclic(3), Cyclic(5)})
        assert [e.name for e in pairs] == ["Z2"]
        assert [e.name for e in quotients] == ["Z2", "Z4"]

    def test_small_level_pairs_every_glr(self):
        entries = [CorpusEntry(f"Z{n}", Cyclic(n), "cyclic") for n in (2, 3, 4)]
        rows = [{"is_glr": True}] * 3
        pairs, quotients = closure_inputs(entries, rows)
        assert pairs == quotients == entries


@pytest.mark.slow
def test_small_corpus_passes():
    result = run_corpus("small", config.RunConfig(jobs=2), progress=False)
    assert result["failed_entries"] == []
    assert result["failed_suites"] == []
    assert result["passed"]
    frame = summary_frame(result)
    assert len(frame) == result["entry_count"]
    assert frame.loc[0, "name"] == "Z1"
    closure = result["suites"]["closure"]
    glr_rows = [row for row in result["entries"] if row.get("is_glr")]
    cap = config.CORPUS_CONFIG["closure_product_max_elements"]
    assert closure["details"]["quotient_inputs"] == [row["name"] for row in glr_rows]
    assert closure["details"]["pair_inputs"] == [row["name"] for row in glr_rows]
    assert closure["details"]["products_checked"] == \
        len(closure_pairs([row["size"] for row in glr_rows], cap))
    assert closure["details"]["quotients_checked"] == \
        sum(row["ideal_count"] - 1 for row in glr_rows)
