"""
İdeal kafesi testleri - numaralandırma, işlem tabloları, kaba kuvvet kahini
"""

from functools import lru_cache
from typing import Tuple

import pytest
from hypothesis import given, settings, strategies as st

from corpus import f2xy_spec, upper_triangular_spec, zero_product_spec
from errors import IdealCountCapExceeded, SizeCapExceeded
from finite_ring import Cyclic, Matrix, PolyQuotient, Product, build_ring
from ideal_lattice import (IdealMask, brute_force_ideals, covering_edges, enumerate_ideals,
                           enumerate_left_ideals, ideal_generated, ideal_intersection,
                           ideal_power, ideal_product, ideal_sum, is_ideal, is_left_chain_ring,
                           left_annihilator, left_residual, maximal_ideals, minimal_ideals,
                           prime_ideals, principal_ideal, right_annihilator, right_residual)

# Z12 ideal id'leri (popcount, bitler) sırasında: (0), (6), (4), (3), (2), R
Z12_SIZES = [1, 2, 3, 4, 6, 12]


class TestEnumeration:
    """İdeallerin sırası ve tablolar"""

    def test_z12_order(self, lattice_of):
        L = lattice_of("Z12")
        assert [I.size for I in L.ideals] == Z12_SIZES
        assert L.zero_id == 0
        assert L.top_id == 5
        assert L.ideals[2].members.tolist() == [0, 4, 8]
        assert L.ideals[3].members.tolist() == [0, 3, 6, 9]

    def test_z12_tables(self, lattice_of):
        L = lattice_of("Z12")
        assert L.sum[2, 1] == 4        # (4) + (6) = (2)
        assert L.intersection[2, 1] == 0
        assert L.intersection[4, 3] == 1   # (2) ∩ (3) = (6)
        assert L.product[4, 4] == 2    # (2)(2) = (4)
        assert L.right_ann[4] == 1     # ann((2)) = (6)
        assert L.left_ann[3] == 2      # ann((3)) = (4)

    def test_f2xy_ideals(self, f2xy):
        L = enumerate_ideals(f2xy)
        assert [I.bits for I in L.ideals] == [1, 5, 17, 65, 85, 255]
        assert L.ideals[1].hex == "5"
        assert L.ideals[4].hex == "55"
        assert L.right_ann[1] == 4
        assert L.right_ann[4] == 4

    def test_principal_table(self, lattice_of):
        L = lattice_of("Z12")
        assert L.principal[8] == 2
        assert L.principal[1] == L.top_id
        assert L.principal[0] == L.zero_id

    def test_ideal_cap(self):
        ring = build_ring(Cyclic(12))
        with pytest.raises(IdealCountCapExceeded):
            enumerate_ideals(ring, max_ideals=3)

    @pytest.mark.parametrize("text", ["Z12", "Z2 x Z2", "M2(Z2)", "GF(2)[x]/(x^4)",
                                      "@counterexample_f2xy.json", "Z4 x Z2"])
    def test_matches_brute_force(self, ring_of, lattice_of, text):
        ring = ring_of(text)
        assert [I.bits for I in brute_force_ideals(ring)] == \
            [I.bits for I in lattice_of(text).ideals]

    def test_is_ideal(self, ring_of):
        ring = ring_of("Z12")
        assert is_ideal(ring, IdealMask.from_elements(ring, [0, 4, 8]).mask)
        assert not is_ideal(ring, IdealMask.from_elements(ring, [0, 4]).mask)

    def test_brute_force_cap(self, ring_of):
        with pytest.raises(SizeCapExceeded):
            brute_force_ideals(ring_of("Z32"))

    def test_parallel_enumeration_is_identical(self, ring_of):
        ring = ring_of("Z4 x Z4 x Z4")
        serial = enumerate_ideals(ring, jobs=1)
        parallel = enumerate_ideals(ring, jobs=4)
        assert [I.bits for I in serial.ideals] == [I.bits for I in parallel.ideals]
        assert (serial.product == parallel.product).all()


class TestOperations:
    """Toplam, çarpım, kesişim, anihilatör ve rezidüeller"""

    def test_principal_and_generated(self, ring_of):
        ring = ring_of("Z12")
        assert principal_ideal(ring, 8).bits == 1 + (1 << 4) + (1 << 8)
        assert ideal_generated(ring, [4, 6]).size == 6

    def test_arithmetic(self, ring_of):
        ring = ring_of("Z12")
        two, three = principal_ideal(ring, 2), principal_ideal(ring, 3)
        four, six = principal_ideal(ring, 4), principal_ideal(ring, 6)
        assert ideal_sum(four, six) == two
        assert ideal_product(two, two) == four
        assert ideal_intersection(two, three) == six
        assert right_annihilator(two) == six
        assert left_annihilator(three) == four

    def test_powers(self, ring_of):
        ring = ring_of("Z8")
        two = principal_ideal(ring, 2)
        assert ideal_power(two, 0).is_full()
        assert ideal_power(two, 1) == two
        assert ideal_power(two, 2) == principal_ideal(ring, 4)
        assert ideal_power(two, 3).is_zero()

    def test_residuals(self, ring_of):
        ring = ring_of("Z12")
        two, four = principal_ideal(ring, 2), principal_ideal(ring, 4)
        # (2)·K ⊆ (4) ⇔ K ⊆ (2)
        assert right_residual(two, four) == two
        assert left_residual(two, four) == two
        assert right_residual(four, two).is_full()

    def test_noncommutative_annihilators(self, ring_of):
        ring = ring_of("M2(Z2)")
        L = enumerate_ideals(ring)
        assert len(L) == 2
        assert L.right_ann[L.zero_id] == L.top_id
        assert L.left_ann[L.top_id] == L.zero_id

    def test_mask_helpers(self, ring_of):
        ring = ring_of("Z12")
        I = IdealMask.from_elements(ring, [0, 6])
        assert 6 in I and 3 not in I
        assert I <= principal_ideal(ring, 3)
        assert I < principal_ideal(ring, 2)
        assert I.describe() == "{0,6}"
        assert I.sort_key == (2, I.bits)


class TestSpecialIdeals:
    """Maksimal, asal, minimal idealler ve örtü kenarları"""

    def test_z12(self, lattice_of):
        L = lattice_of("Z12")
        assert maximal_ideals(L) == [3, 4]
        assert prime_ideals(L) == [3, 4]
        assert minimal_ideals(L) == [1, 2]

    def test_covering_edges(self, lattice_of):
        L = lattice_of("Z12")
        assert covering_edges(L) == [(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)]

    def test_chain_ring(self, lattice_of):
        L = lattice_of("Z8")
        assert covering_edges(L) == [(0, 1), (1, 2), (2, 3)]
        assert maximal_ideals(L) == [2]
        assert minimal_ideals(L) == [1]

    def test_left_ideals(self, ring_of):
        assert is_left_chain_ring(ring_of("Z9"))
        assert not is_left_chain_ring(ring_of("M2(Z2)"))
        # M2(GF(2)) sol idealleri: 0, üç sütun ideali, tamamı
        assert len(enumerate_left_ideals(ring_of("M2(Z2)"))) == 5


ANNIHILATOR_LAW_RINGS = {
    "Z12": Cyclic(12),
    "Z8": Cyclic(8),
    "M2(Z2)": Matrix(2, Cyclic(2)),
    "Z2 x Z4": Product((Cyclic(2), Cyclic(4))),
    "GF(2)[x]/(x^3)": PolyQuotient(2, (0, 0, 0, 1)),
    "f2xy": f2xy_spec(),
    "T2(GF(2))": upper_triangular_spec(),
    "2Z/4Z": zero_product_spec(),
}


@lru_cache(maxsize=None)
def law_ideals(name: str) -> Tuple[IdealMask, ...]:
    return tuple(enumerate_ideals(build_ring(ANNIHILATOR_LAW_RINGS[name])).ideals)


class TestAnnihilatorLaws:
    """Her sonlu halkada geçerli anihilatör yasaları (GLR olmasa da)"""

    @pytest.mark.parametrize("name", sorted(ANNIHILATOR_LAW_RINGS))
    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_laws(self, name, data):
        ideals = law_ideals(name)
        pick = st.integers(min_value=0, max_value=len(ideals) - 1)
        I, J = ideals[data.draw(pick)], ideals[data.draw(pick)]

        if I <= J:
            assert right_annihilator(J) <= right_annihilator(I)
            assert left_annihilator(J) <= left_annihilator(I)

        both = ideal_sum(I, J)
        assert right_annihilator(both) == ideal_intersection(right_annihilator(I),
                                                             right_annihilator(J))
        assert left_annihilator(both) == ideal_intersection(left_annihilator(I),
                                                            left_annihilator(J))

        assert I <= right_annihilator(left_annihilator(I))
        assert I <= left_annihilator(right_annihilator(I))

        I_left = left_annihilator(I)
        bound = right_annihilator(ideal_product(left_annihilator(ideal_product(I_left, J)), I_left))
        assert both <= bound

        zero_product = ideal_product(I, J).is_zero()
        assert zero_product == (J <= right_annihilator(I))
        assert zero_product == (I <= left_annihilator(J))

    def test_f2xy_double_annihilator_is_strict(self):
        # (x) ⊊ ((x)~)⁻ : iki taraflı yasa yalnızca kapsama olarak geçerli
        ideals = law_ideals("f2xy")
        strict = [I for I in ideals if I != right_annihilator(left_annihilator(I))]
        assert strict
        assert all(I <= right_annihilator(left_annihilator(I)) for I in strict)
