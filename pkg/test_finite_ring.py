"""
Sonlu halka testleri - tablo kurucuları, aksiyom doğrulama, bölüm halkaları
"""

import json

import numpy as np
import pytest

import config
from corpus import f2xy_spec, upper_triangular_spec, zero_product_spec
from errors import InvalidSpec, NotAnIdeal, SizeCapExceeded, TableNotARing
from finite_ring import (TABLE_MAX_ELEMENTS, Cyclic, Matrix, PolyQuotient, Product, Table,
                         build_ring, central_idempotents, element_of, find_unity, format_poly,
                         is_central_idempotent_generated, parse_poly, product_ring,
                         quotient_ring, ring_from_tables, ring_summary, spec_from_json,
                         spec_to_json, subring, upper_triangular_ring, validate_ring_axioms)
from ideal_lattice import IdealMask


class TestBuilders:
    """Tanımdan halka inşası"""

    def test_cyclic_unity(self):
        ring = build_ring(Cyclic(4))
        assert ring.size == 4
        assert ring.zero == 0
        assert ring.unity == 1
        assert ring.add[3, 2] == 1
        assert ring.mul[3, 3] == 1

    def test_trivial_ring_unity_is_zero(self):
        ring = build_ring(Cyclic(1))
        assert ring.size == 1
        assert ring.unity == 0

    def test_tables_are_read_only(self):
        ring = build_ring(Cyclic(6))
        with pytest.raises(ValueError):
            ring.mul[2, 3] = 1

    def test_product_encoding(self):
        ring = build_ring(Product((Cyclic(2), Cyclic(3))))
        assert ring.size == 6
        assert ring.unity == 4
        assert element_of(ring, (1, 2)) == 5
        assert ring.label(5) == "(1,2)"

    def test_poly_quotient_field(self):
        ring = build_ring(PolyQuotient(2, (1, 1, 1)))
        assert ring.size == 4
        assert ring.unity == 1
        nonzero = [x for x in range(4) if x != ring.zero]
        for x in nonzero:
            assert (ring.mul[x, nonzero] == ring.unity).any()

    def test_poly_variable_index(self):
        ring = build_ring(PolyQuotient(3, (0, 0, 1)))
        x = element_of(ring, "x")
        assert x == 3
        assert ring.mul[x, x] == ring.zero
        assert element_of(ring, "x+2") == 5

    def test_matrix_ring_unity(self):
        ring = build_ring(Matrix(2, Cyclic(2)))
        assert ring.size == 16
        assert ring.unity == element_of(ring, ((1, 0), (0, 1))) == 9
        assert not ring.is_commutative

    def test_matrix_over_dual_numbers(self):
        ring = build_ring(Matrix(2, PolyQuotient(2, (0, 0, 1))))
        assert ring.size == 256
        assert ring.unity == 65

    def test_size_cap(self):
        with pytest.raises(SizeCapExceeded):
            build_ring(Product((Cyclic(64), Cyclic(64), Cyclic(2))))

    def test_table_dtype_cap(self):
        assert TABLE_MAX_ELEMENTS == config.LIMITS_CONFIG["table_max_elements"]
        assert TABLE_MAX_ELEMENTS - 1 == np.iinfo(build_ring(Cyclic(2)).add.dtype).max
        with pytest.raises(SizeCapExceeded) as info:
            build_ring(Cyclic(40000), max_elements=10 ** 6)
        assert info.value.cap == TABLE_MAX_ELEMENTS
        z200 = build_ring(Cyclic(200))
        with pytest.raises(SizeCapExceeded):
            product_ring([z200, z200], max_elements=10 ** 6)

    def test_invalid_specs(self):
        with pytest.raises(InvalidSpec):
            build_ring(PolyQuotient(4, (1, 1)))
        with pytest.raises(InvalidSpec):
            build_ring(Cyclic(0))
        with pytest.raises(InvalidSpec):
            build_ring(PolyQuotient(2, (1, 0)))


class TestAxiomValidation:
    """Cayley tablolarının kapsamlı kontrolü"""

    def test_non_associative_multiplication(self):
        add = [[0, 1], [1, 0]]
        mul = [[1, 0], [0, 0]]
        with pytest.raises(TableNotARing) as info:
            build_ring(Table(2, tuple(map(tuple, add)), tuple(map(tuple, mul))))
        assert info.value.axiom == "multiplicative associativity"
        assert info.value.witness == (0, 0, 1)

    def test_non_distributive(self):
        with pytest.raises(TableNotARing) as info:
            validate_ring_axioms(np.array([[0, 1], [1, 0]]), np.array([[1, 1], [1, 1]]))
        assert info.value.axiom == "left distributivity"
        assert info.value.witness == (0, 0, 0)

    def test_missing_identity(self):
        with pytest.raises(TableNotARing) as info:
            validate_ring_axioms(np.array([[0, 1], [0, 1]]), np.zeros((2, 2), dtype=int))
        assert info.value.axiom == "additive identity"

    def test_closure(self):
        with pytest.raises(TableNotARing) as info:
            validate_ring_axioms(np.array([[0, 5], [1, 0]]), np.zeros((2, 2), dtype=int))
        assert info.value.axiom == "closure"

    def test_counterexample_tables_form_a_ring(self):
        spec = f2xy_spec()
        validate_ring_axioms(np.array(spec.add), np.array(spec.mul))
        ring = build_ring(spec)
        assert ring.size == 8
        assert ring.unity == 1


class TestUnity:
    """Birim ve merkezi idempotentler"""

    def test_zero_product_ring(self):
        ring = build_ring(zero_product_spec())
        assert ring.unity is None
        report = is_central_idempotent_generated(ring)
        assert not report.holds
        assert report.failing_element == 1

    def test_unitary_ring_is_generated(self):
        ring = build_ring(Cyclic(6))
        report = is_central_idempotent_generated(ring)
        assert report.holds
        assert central_idempotents(ring) == (0, 1, 3, 4)

    def test_summary(self):
        ring = build_ring(Cyclic(6))
        assert find_unity(ring) == 1
        summary = ring_summary(ring)
        assert summary["size"] == 6
        assert summary["unity"] == 1
        assert summary["commutative"]
        assert summary["provenance"] == spec_to_json(Cyclic(6))
        assert find_unity(build_ring(zero_product_spec())) is None

    def test_upper_triangular(self):
        base = build_ring(Cyclic(2))
        ring = upper_triangular_ring(base)
        assert ring.size == 8
        assert ring.unity is not None
        assert not ring.is_commutative
        assert build_ring(upper_triangular_spec()).size == 8


class TestQuotientsAndSubrings:
    """Bölüm halkaları ve alt halkalar"""

    def test_quotient_is_cyclic(self):
        base = build_ring(Cyclic(8))
        quotient, projection = quotient_ring(base, IdealMask.from_elements(base, [0, 4]))
        z4 = build_ring(Cyclic(4))
        assert quotient.size == 4
        assert np.array_equal(quotient.add, z4.add)
        assert np.array_equal(quotient.mul, z4.mul)
        assert projection.tolist() == [0, 1, 2, 3, 0, 1, 2, 3]

    def test_quotient_by_full_ring(self):
        base = build_ring(Cyclic(6))
        quotient, _ = quotient_ring(base, np.ones(6, dtype=bool))
        assert quotient.size == 1

    def test_quotient_spec(self, ring_of):
        ring = ring_of("Z24/(8)")
        assert ring.size == 8
        assert ring.unity is not None

    def test_quotient_needs_ideal(self):
        base = build_ring(Matrix(2, Cyclic(2)))
        mask = np.zeros(16, dtype=bool)
        mask[[0, 8]] = True
        with pytest.raises(NotAnIdeal):
            quotient_ring(base, mask)

    def test_subring(self):
        ring = build_ring(Cyclic(6))
        mask = np.zeros(6, dtype=bool)
        mask[[0, 2, 4]] = True
        sub, members = subring(ring, mask)
        assert sub.size == 3
        assert members.tolist() == [0, 2, 4]
        assert members[sub.unity] == 4

    def test_product_of_built_rings(self):
        z2 = build_ring(Cyclic(2))
        ring = product_ring([z2, z2, z2])
        assert ring.size == 8
        assert ring.unity == 7


class TestPolynomialsAndJson:
    """Polinom metinleri ve JSON tanımları"""

    def test_format_parse(self):
        assert format_poly((1, 0, 1)) == "x^2+1"
        assert format_poly((0, 2)) == "2x"
        assert format_poly((0,)) == "0"
        assert parse_poly("x^2+1") == (1, 0, 1)
        assert parse_poly("x^2+3x+4", 3) == (1, 0, 1)

    def test_bad_monomial(self):
        with pytest.raises(InvalidSpec):
            parse_poly("x^^2")

    def test_json_documents(self):
        spec = Matrix(2, Product((Cyclic(2), PolyQuotient(3, (0, 0, 1)))))
        doc = spec_to_json(spec)
        assert doc["kind"] == "matrix"
        assert spec_from_json(doc) == spec

    def test_json_missing_kind(self):
        with pytest.raises(InvalidSpec):
            spec_from_json({"n": 4})

    @pytest.mark.parametrize("doc", [
        {"kind": "cyclic", "n": 6.9, "junk": True},
        {"kind": "cyclic", "n": 6.9},
        {"kind": "cyclic", "n": 6, "junk": True},
        {"kind": "cyclic", "n": "6"},
        {"kind": "cyclic", "n": True},
        {"kind": "ring", "n": 6},
        {"kind": "matrix", "k": 2, "base": {"kind": "cyclic", "n": 2, "extra": 1}},
        {"kind": "product", "factors": []},
        {"kind": "poly_quotient", "p": 2, "modulus": [1]},
    ])
    def test_json_schema_violations(self, doc):
        with pytest.raises(InvalidSpec):
            spec_from_json(doc)

    def test_json_data_file_matches_schema(self):
        doc = json.loads((config.DATA_DIR / "counterexample_f2xy.json").read_text(encoding="utf-8"))
        assert spec_from_json(doc) == f2xy_spec()

    def test_tables_from_numpy(self):
        ring = ring_from_tables(np.array([[0, 1], [1, 0]]), np.array([[0, 0], [0, 1]]))
        assert ring.unity == 1
        assert ring.neg.tolist() == [0, 1]
