"""Named families, order classifications, and the catalog sweep."""

import pytest

from cent_atlas.catalog import (
    build,
    FamilySpec,
    alternating,
    abelian,
    catalog_by_order,
    catalog_up_to,
    central_quotient_examples,
    covered_orders,
    cyclic,
    dicyclic,
    dihedral,
    elementary,
    groups_of_covered_order,
    groups_of_order_p2q,
    groups_of_order_p3,
    groups_of_order_pqr,
    heisenberg,
    heisenberg_cover,
    metacyclic,
    modular_p3,
    prime_square_pairs,
    prime_triples,
    sl23,
    symmetric,
    unit_of_order,
    witness_h,
)
from cent_atlas.core import direct_product, quotient
from cent_atlas.errors import BadParameters, NoInstanceAvailable, OrderCapExceeded
from cent_atlas.invariants import center, is_isomorphic

from oracles import squarefree_class_count

# class counts per covered order, frozen after independent verification
CLASS_COUNTS = {
    8: 5, 12: 5, 18: 5, 20: 5, 27: 5, 28: 4, 30: 4, 42: 6, 44: 4, 45: 2,
    50: 5, 52: 5, 63: 4, 66: 4, 68: 5, 70: 4, 75: 3, 76: 4, 78: 6, 92: 4,
    98: 5, 99: 2, 102: 4, 105: 2, 110: 6, 125: 5, 147: 6, 148: 5, 175: 2,
    242: 5, 245: 2, 275: 4,
}


class TestBuilders:
    def test_cyclic(self):
        g = cyclic(7)
        assert g.order == 7 and g.is_abelian() and g.label == "C7"

    def test_abelian_factors(self):
        g = abelian([2, 6])
        assert g.order == 12 and g.exponent() == 6

    def test_elementary(self):
        g = elementary(3, 2)
        assert g.order == 9 and g.exponent() == 3

    def test_dihedral(self):
        g = dihedral(12)
        assert g.order == 12 and not g.is_abelian()
        assert sorted(int(o) for o in g.element_orders).count(2) == 7

    def test_dihedral_rejects_odd(self):
        with pytest.raises(BadParameters):
            dihedral(7)

    def test_dicyclic_labels(self):
        assert dicyclic(8).label == "Q8"
        assert dicyclic(16).label == "Q16"
        assert dicyclic(12).label == "Dic12"
        assert dicyclic(24).label == "Dic24"

    def test_dicyclic_unique_involution(self):
        for n in (8, 12, 16, 20, 24):
            g = dicyclic(n)
            assert sorted(int(o) for o in g.element_orders).count(2) == 1

    def test_symmetric_alternating(self):
        assert symmetric(4).order == 24
        assert alternating(4).order == 12
        assert alternating(5).order == 60
        assert is_isomorphic(alternating(3), cyclic(3))

    def test_metacyclic_validates_congruence(self):
        with pytest.raises(BadParameters, match=r"k\^n = 1 \(mod m\) fails"):
            metacyclic(5, 3, 2)
        with pytest.raises(BadParameters):
            metacyclic(6, 2, 2)  # gcd(k, m) != 1

    def test_metacyclic_s3(self):
        assert is_isomorphic(metacyclic(3, 2, 2), symmetric(3))

    def test_heisenberg(self):
        g = heisenberg(3)
        assert g.order == 27 and g.exponent() == 3
        assert len(center(g)) == 3

    def test_modular_p3(self):
        g = modular_p3(3)
        assert g.label == "M27"
        assert g.order == 27 and g.exponent() == 9
        with pytest.raises(BadParameters):
            modular_p3(2)

    def test_modular_not_heisenberg(self):
        assert not is_isomorphic(modular_p3(3), heisenberg(3))

    def test_sl23(self):
        g = sl23()
        assert g.order == 24
        assert sorted(int(o) for o in g.element_orders).count(2) == 1
        assert is_isomorphic(quotient(g, center(g)), alternating(4))

    def test_prime_validation(self):
        with pytest.raises(BadParameters):
            heisenberg(4)
        with pytest.raises(BadParameters):
            elementary(6, 2)


class TestWitnessFamily:
    def test_parameters_validated(self):
        with pytest.raises(BadParameters):
            witness_h(2, 5, 2)  # 2^2 != 1 mod 5
        with pytest.raises(BadParameters):
            witness_h(2, 3, 1)  # trivial action excluded
        with pytest.raises(BadParameters):
            witness_h(3, 5, 2)  # 5 != 1 mod 3

    def test_small_witness_quotient(self):
        h = witness_h(2, 3, 2)
        assert h.order == 24 and h.label == "H(2,3,2)"
        target = direct_product(cyclic(2), metacyclic(3, 2, 2))
        assert is_isomorphic(quotient(h, center(h)), target)

    def test_witness_center_order(self):
        for p, q, i in ((2, 3, 2), (2, 5, 4), (3, 7, 2)):
            h = witness_h(p, q, i)
            assert h.order == p ** 3 * q
            assert len(center(h)) == p
            assert quotient(h, center(h)).order == p * p * q

    def test_heisenberg_cover(self):
        w = heisenberg_cover(3)
        assert w.order == 81 and w.label == "W(3)"
        assert is_isomorphic(quotient(w, center(w)), heisenberg(3))
        with pytest.raises(BadParameters):
            heisenberg_cover(2)


class TestFamilySpec:
    def test_build_dispatch(self):
        g = build(FamilySpec(family="dihedral", n=10))
        assert g.order == 10
        assert is_isomorphic(build(FamilySpec(family="sl23")), sl23())

    def test_missing_parameter(self):
        with pytest.raises(BadParameters, match="--n"):
            build(FamilySpec(family="cyclic"))

    def test_unknown_family(self):
        with pytest.raises(BadParameters):
            build(FamilySpec(family="sporadic"))


class TestNumberTheoryHelpers:
    def test_unit_of_order(self):
        u = unit_of_order(3, 7)
        assert pow(u, 3, 7) == 1 and u != 1

    def test_prime_triples(self):
        triples = prime_triples(105)
        assert (2, 3, 5) in triples and (2, 3, 7) in triples
        assert (3, 5, 7) in triples
        assert all(p < q < r and p * q * r <= 105 for p, q, r in triples)

    def test_prime_square_pairs(self):
        pairs = prime_square_pairs(50)
        assert (2, 3) in pairs and (3, 2) in pairs and (2, 11) in pairs
        assert all(p * p * q <= 50 for p, q in pairs)


class TestClassifications:
    @pytest.mark.parametrize("p,q,r", [(2, 3, 5), (2, 3, 7), (2, 5, 7),
                                       (3, 5, 7), (2, 3, 11), (2, 5, 11),
                                       (3, 7, 13), (2, 7, 11), (5, 7, 11)])
    def test_pqr_count_matches_divisor_formula(self, p, q, r):
        got = len(groups_of_order_pqr(p, q, r))
        assert got == squarefree_class_count(p * q * r)

    def test_pqr_pairwise_distinct(self):
        gs = groups_of_order_pqr(2, 3, 5)
        for i in range(len(gs)):
            for j in range(i + 1, len(gs)):
                assert not is_isomorphic(gs[i], gs[j])

    @pytest.mark.parametrize("order", sorted(CLASS_COUNTS))
    def test_frozen_class_counts(self, order):
        assert len(groups_of_covered_order(order)) == CLASS_COUNTS[order]

    @pytest.mark.parametrize("order", [8, 12, 18, 20, 27, 30, 42, 50])
    def test_pairwise_non_isomorphic(self, order):
        gs = groups_of_covered_order(order)
        for i in range(len(gs)):
            for j in range(i + 1, len(gs)):
                assert not is_isomorphic(gs[i], gs[j]), (gs[i].label, gs[j].label)

    def test_p3_families(self):
        labels8 = {g.label for g in groups_of_order_p3(2)}
        assert "D8" in labels8 and "Q8" in labels8
        gs27 = groups_of_order_p3(3)
        assert len(gs27) == 5
        assert sum(1 for g in gs27 if not g.is_abelian()) == 2

    def test_p2q_counts(self):
        assert len(groups_of_order_p2q(2, 3)) == 5   # order 12
        assert len(groups_of_order_p2q(3, 2)) == 5   # order 18
        assert len(groups_of_order_p2q(2, 5)) == 5   # order 20
        assert len(groups_of_order_p2q(5, 2)) == 5   # order 50

    def test_covered_orders_shapes(self):
        cov = covered_orders(130)
        assert cov[30][0] == "pqr"
        assert cov[12][0] == "p2q"
        assert cov[8][0] == "p3"
        assert 16 not in cov  # p^4 is out of scope
        assert 60 not in cov  # not of a covered shape


class TestCentralQuotientExamples:
    def test_p2q_members(self):
        gs = central_quotient_examples("p2q", (2, 3))
        labels = {g.label for g in gs}
        assert "SL(2,3)" in labels
        assert any(lbl.startswith("H(2,3,") for lbl in labels)
        for g in gs:
            q = quotient(g, center(g))
            assert q.order == 12

    def test_pq2_members(self):
        gs = central_quotient_examples("pq2", (2, 3))
        for g in gs:
            assert quotient(g, center(g)).order == 18

    def test_p3_members(self):
        gs = central_quotient_examples("p3", (2,))
        labels = {g.label for g in gs}
        assert {"D16", "SD16", "Q16"} <= labels
        gs3 = central_quotient_examples("p3", (3,))
        assert any(g.label == "W(3)" for g in gs3)

    def test_no_instances(self):
        # no group of order 105 has trivial center
        with pytest.raises(NoInstanceAvailable):
            central_quotient_examples("pqr", (3, 5, 7))

    def test_bad_shape(self):
        with pytest.raises(BadParameters):
            central_quotient_examples("p4", (2,))
        with pytest.raises(BadParameters):
            central_quotient_examples("pqr", (2, 3))
        with pytest.raises(BadParameters):
            central_quotient_examples("p2q", (4, 3))

    def test_order_cap_propagates(self):
        with pytest.raises(OrderCapExceeded):
            central_quotient_examples("p3", (7,), order_cap=1000)


class TestCatalog:
    def test_catalog_by_order_merges_extras(self):
        cat = catalog_by_order(100)
        assert {g.label for g in cat[16]} == {"D16", "SD16", "Q16", "M16"}
        assert len(cat[12]) == 5

    def test_catalog_up_to_100(self):
        groups = catalog_up_to(100)
        assert len(groups) == 111
        assert all(g.order <= 100 for g in groups)
        orders = sorted({g.order for g in groups})
        assert orders[0] == 8 and orders[-1] == 99

    def test_catalog_respects_cap(self):
        small = catalog_up_to(30)
        assert {g.order for g in small} == {8, 12, 16, 18, 20, 24, 27, 28, 30}
