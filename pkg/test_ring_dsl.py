"""
Halka DSL testleri - ayrıştırma, hata konumları, geri yazma
"""

import json

import pytest
from hypothesis import given, settings, strategies as st

from corpus import f2xy_spec
from errors import InvalidSpec, ParseError
from finite_ring import (Cyclic, Matrix, PolyQuotient, Product, Quotient, Table, spec_to_json)
from ring_dsl import load_spec_file, parse_spec, render, render_designator


class TestParse:
    """Dilbilgisi ve öncelik"""

    @pytest.mark.parametrize("text,expected", [
        ("Z8", Cyclic(8)),
        ("GF(3)", PolyQuotient(3, (0, 1))),
        ("GF(2)[x]/(x^2)", PolyQuotient(2, (0, 0, 1))),
        ("GF(2)[x]/(x^2+x+1)", PolyQuotient(2, (1, 1, 1))),
        ("M2(GF(2)[x]/(x^2))", Matrix(2, PolyQuotient(2, (0, 0, 1)))),
        ("Z4 x Z9", Product((Cyclic(4), Cyclic(9)))),
        ("Z2 x Z3 x Z5", Product((Cyclic(2), Cyclic(3), Cyclic(5)))),
        ("(Z2 x Z3) x Z5", Product((Product((Cyclic(2), Cyclic(3))), Cyclic(5)))),
        ("Z24/(8)", Quotient(Cyclic(24), (8,))),
        ("Z4 x Z12/(4)", Product((Cyclic(4), Quotient(Cyclic(12), (4,))))),
        ("(Z4 x Z9)/((2,0))", Quotient(Product((Cyclic(4), Cyclic(9))), ((2, 0),))),
        ("M2(Z4)/([[2,0],[0,0]])", Quotient(Matrix(2, Cyclic(4)), (((2, 0), (0, 0)),))),
        ("GF(2)[x]/(x^4)/(x^2)", Quotient(PolyQuotient(2, (0, 0, 0, 0, 1)), ("x^2",))),
        ("T2{[[0,1],[1,0]],[[0,0],[0,1]]}", Table(2, ((0, 1), (1, 0)), ((0, 0), (0, 1)))),
    ])
    def test_examples(self, text, expected):
        assert parse_spec(text) == expected

    def test_whitespace(self):
        assert parse_spec("  Z4   x  Z9 ") == parse_spec("Z4 x Z9")

    def test_generators_are_normalized(self):
        assert parse_spec("Z12/(16)") == Quotient(Cyclic(12), (4,))
        assert parse_spec("GF(3)[x]/(x^3)/(4x+2)") == \
            Quotient(PolyQuotient(3, (0, 0, 0, 1)), ("x+2",))

    def test_data_file(self):
        assert parse_spec("@counterexample_f2xy.json") == f2xy_spec()

    def test_local_file(self, tmp_path):
        path = tmp_path / "ring.json"
        path.write_text(json.dumps(spec_to_json(Cyclic(6))), encoding="utf-8")
        assert parse_spec(f"@{path}") == Cyclic(6)
        assert parse_spec("@ring.json x Z2", base_dir=tmp_path) == \
            Product((Cyclic(6), Cyclic(2)))


class TestErrors:
    """Bayt konumlu ayrıştırma hataları"""

    def test_missing_integer(self):
        with pytest.raises(ParseError) as info:
            parse_spec("Z")
        assert info.value.offset == 1
        assert info.value.expected == ("tamsayı",)

    def test_unknown_atom(self):
        with pytest.raises(ParseError) as info:
            parse_spec("Q5")
        assert info.value.offset == 0
        assert "'Z'" in info.value.expected
        assert "'GF('" in info.value.expected

    def test_dangling_product(self):
        with pytest.raises(ParseError) as info:
            parse_spec("Z4 x")
        assert info.value.offset == 4

    def test_trailing_input(self):
        with pytest.raises(ParseError) as info:
            parse_spec("Z4 Z5")
        assert info.value.offset == 3
        assert "girdi sonu" in info.value.expected

    def test_unclosed_paren(self):
        with pytest.raises(ParseError) as info:
            parse_spec("M2(Z2")
        assert info.value.offset == 5
        assert info.value.expected == ("')'",)

    def test_offset_counts_bytes(self, tmp_path):
        path = tmp_path / "ç.json"
        path.write_text(json.dumps(spec_to_json(Cyclic(2))), encoding="utf-8")
        text = f"@{path} x Q"
        with pytest.raises(ParseError) as info:
            parse_spec(text)
        assert info.value.offset == len(text.encode("utf-8")) - 1
        assert info.value.offset == len(text)

    def test_semantic_errors(self):
        with pytest.raises(InvalidSpec):
            parse_spec("GF(4)")
        with pytest.raises(InvalidSpec):
            parse_spec("Z0")
        with pytest.raises(InvalidSpec):
            parse_spec("(Z4 x Z9)/((1,2,3))")
        with pytest.raises(InvalidSpec) as info:
            parse_spec("Z2 x GF(6)")
        assert "bayt" in str(info.value)

    def test_missing_file(self):
        with pytest.raises(InvalidSpec):
            load_spec_file("no_such_ring.json")


@st.composite
def poly_specs(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    degree = draw(st.integers(min_value=1, max_value=3))
    low = draw(st.lists(st.integers(min_value=0, max_value=p - 1),
                        min_size=degree, max_size=degree))
    lead = draw(st.integers(min_value=1, max_value=p - 1))
    return PolyQuotient(p, tuple(low) + (lead,))


@st.composite
def cyclic_quotients(draw):
    n = draw(st.integers(min_value=1, max_value=40))
    gens = draw(st.lists(st.integers(min_value=0, max_value=n - 1), min_size=1, max_size=3))
    return Quotient(Cyclic(n), tuple(gens))


leaves = st.builds(Cyclic, st.integers(min_value=1, max_value=40)) | poly_specs() | cyclic_quotients()
specs = st.recursive(
    leaves,
    lambda children: (st.builds(Matrix, st.integers(min_value=1, max_value=3), children)
                      | st.lists(children, min_size=2, max_size=3).map(lambda fs: Product(tuple(fs)))),
    max_leaves=6,
)


class TestRender:
    """parse_spec(render(s)) == s"""

    @given(specs)
    @settings(max_examples=200, deadline=None)
    def test_render_parses_back(self, spec):
        assert parse_spec(render(spec)) == spec

    def test_render_forms(self):
        assert render(Product((Cyclic(4), Cyclic(9)))) == "Z4 x Z9"
        assert render(Quotient(Product((Cyclic(4), Cyclic(9))), ((2, 0),))) == "(Z4 x Z9)/((2,0))"
        assert render(PolyQuotient(5, (0, 1))) == "GF(5)"
        assert render(Matrix(2, PolyQuotient(2, (0, 0, 1)))) == "M2(GF(2)[x]/(x^2))"
        assert render(Table(2, ((0, 1), (1, 0)), ((0, 0), (0, 0)))) == \
            "T2{[[0,1],[1,0]],[[0,0],[0,0]]}"

    def test_render_designators(self):
        base = Matrix(2, Product((Cyclic(2), Cyclic(3))))
        assert render_designator(base, (((1, 2), (0, 0)), ((0, 1), (1, 0)))) == \
            "[[(1,2),(0,0)],[(0,1),(1,0)]]"

    def test_table_round_trip(self):
        spec = f2xy_spec()
        assert parse_spec(render(spec)) == spec
