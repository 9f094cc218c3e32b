"""Claim registry: sweeps, determinism, capability verdicts, witnesses."""

import json

import pytest

import cent_atlas.claims as claims
from cent_atlas.catalog import (
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    elementary,
    heisenberg,
    metacyclic,
    modular_p3,
    witness_h,
)
from cent_atlas.claims import (
    ClaimReport,
    capable,
    claim_ids,
    claim_index,
    report_to_jsonable,
    verify_claim,
    witness_check,
)
from cent_atlas.core import direct_product
from cent_atlas.errors import BadParameters, EmptySweep, UnknownClaim


def test_claim_ids_stable():
    ids = claim_ids()
    assert ids[0] == "C0"
    assert "C9w" in ids and "C13" in ids
    assert len(ids) == len(set(ids)) == 15


def test_claim_index_shape():
    idx = claim_index()
    assert [e["claim_id"] for e in idx] == claim_ids()
    for e in idx:
        assert set(e) == {"claim_id", "statement", "sweep_default"}
        assert e["statement"]


class TestVerify:
    def test_unknown_claim(self):
        with pytest.raises(UnknownClaim):
            verify_claim("C99")

    def test_bad_parameter_name(self):
        with pytest.raises(BadParameters):
            verify_claim("C0", max_order=50, bogus=1)

    def test_empty_sweep(self):
        with pytest.raises(EmptySweep):
            verify_claim("C0", max_order=7)

    def test_c0_reduced(self):
        rep = verify_claim("C0", max_order=50)
        assert isinstance(rep, ClaimReport)
        assert rep.passed and rep.counterexample is None
        assert rep.instances_checked > 10

    def test_c2_reduced(self):
        rep = verify_claim("C2", max_order=200)
        assert rep.passed
        assert all(r["ok"] for r in rep.rows)

    def test_c9w_small(self):
        rep = verify_claim("C9w", p_list=(2,), q_max=7, order_cap=4096)
        assert rep.passed
        assert rep.instances_checked >= 2

    def test_rows_sorted(self):
        rep = verify_claim("C0", max_order=50)
        keys = [(r["order"], r["label"]) for r in rep.rows]
        assert keys == sorted(keys)

    def test_determinism_across_jobs(self):
        a = report_to_jsonable(verify_claim("C7", max_order=100, jobs=1))
        b = report_to_jsonable(verify_claim("C7", max_order=100, jobs=2))
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)

    def test_jsonable_has_no_timing(self):
        rep = verify_claim("C12", p_list=(2,))
        d = report_to_jsonable(rep)
        assert "elapsed" not in json.dumps(d)
        assert d["claim_id"] == "C12"
        assert d["passed"] is True

    def test_counterexample_reported(self):
        # temporarily register a claim that always fails on one group
        def rows_fail(unit):
            g = cyclic(6)
            return [claims._row(g, False, "deliberately failing probe")]

        fake = claims._Claim(
            claim_id="Cfake",
            statement="always fails (test fixture)",
            sweep_default="one cyclic group",
            defaults={},
            units=lambda params: [("only",)],
            rows=rows_fail,
        )
        claims._CLAIMS["Cfake"] = fake
        try:
            rep = verify_claim("Cfake")
            assert not rep.passed
            assert rep.counterexample is not None
            assert "C6" in rep.counterexample
            assert "deliberately failing probe" in rep.counterexample
        finally:
            del claims._CLAIMS["Cfake"]


class TestCapability:
    # frozen verdict table
    TABLE = [
        (lambda: alternating(4), "capable"),
        (lambda: dicyclic(12), "not_capable"),
        (lambda: dihedral(12), "capable"),
        (lambda: dihedral(8), "capable"),
        (lambda: dicyclic(8), "not_capable"),
        (lambda: heisenberg(3), "capable"),
        (lambda: modular_p3(3), "not_capable"),
        (lambda: cyclic(8), "not_capable"),
        (lambda: elementary(2, 3), "capable"),
    ]

    @pytest.mark.parametrize("build,expected", TABLE,
                             ids=[b().label for b, _ in TABLE])
    def test_table(self, build, expected):
        verdict = capable(build())
        assert verdict.status == expected
        assert verdict.rule
        assert verdict.detail

    def test_unsupported_order(self):
        verdict = capable(cyclic(16))  # p^4: outside the decided families
        assert verdict.status == "unsupported"

    def test_special_class_detail(self):
        v = capable(dihedral(12))
        assert v.rule == "C9"


class TestWitnessCheck:
    def test_true_witness(self):
        target = direct_product(cyclic(2), metacyclic(3, 2, 2))
        res = witness_check(witness_h(2, 3, 2), target)
        assert res.ok
        assert res.isomorphism is not None
        assert len(res.cosets) == 12
        assert all(len(c) == 2 for c in res.cosets)

    def test_false_witness(self):
        res = witness_check(witness_h(2, 3, 2), alternating(4))
        assert not res.ok
        assert res.isomorphism is None

    def test_order_mismatch(self):
        res = witness_check(witness_h(2, 3, 2), cyclic(6))
        assert not res.ok


def test_all_claims_pass_reduced():
    """Every registered claim passes on a reduced sweep (smoke, not acceptance)."""
    reduced = {
        "C0": {"max_order": 50},
        "C1": {"shapes": (("p2q", (2, 3)),)},
        "C2": {"max_order": 150},
        "C3": {"max_order": 150},
        "C4": {"max_order": 150},
        "C5": {"triples": ((2, 3, 5),)},
        "C6": {"triples": ((2, 3, 5),)},
        "C7": {"max_order": 100},
        "C8": {"max_order": 50},
        "C9": {"max_order": 150},
        "C9w": {"p_list": (2,), "q_max": 7, "order_cap": 4096},
        "C10": {"shapes": (("p2q", (2, 3)), ("pq2", (2, 3)))},
        "C11": {"p_list": (2,)},
        "C12": {"p_list": (2,)},
        "C13": {"max_order": 100},
    }
    for cid in claim_ids():
        rep = verify_claim(cid, **reduced[cid])
        assert rep.passed, f"{cid}: {rep.counterexample}"
