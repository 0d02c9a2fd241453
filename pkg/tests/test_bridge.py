"""Moving between lens and optic views: round trips, counit, coherence."""

import random

import pytest

from cartoptics import (
    AdjunctionReport,
    Delete,
    Id,
    Lens,
    Optic,
    TwoCellError,
    check_adjunction,
    check_oplax_coherence,
    coherence_suite,
    counit,
    erase,
    graph,
    lens_compose,
    lens_id,
    lens_normal_eq,
    mk_two_cell,
    normal_eq,
    oplaxator,
    optic_compose,
    optic_id,
    optic_normal_eq,
    opunitor,
    reify,
)
from cartoptics.bridge import LawResult
from cartoptics.sampling import random_composable_lenses, random_lens, random_optic

ADJUNCTION_LAWS = {
    "RE_identity",
    "counit_validity",
    "counit_naturality",
    "triangle_R",
    "triangle_E",
    "mutation_sensitivity",
}
COHERENCE_LAWS = {
    "oplaxator_validity",
    "opunitor_validity",
    "lax_associativity",
    "lax_left_unity",
    "lax_right_unity",
}


class TestReifyErase:
    def test_reify_shape(self, f, h, A):
        o = reify(Lens(f, h))
        assert o.residual == A
        assert o.forward == graph(f)
        assert o.backward == h

    def test_erase_hand_values(self, f, h, A):
        l = erase(Optic(A, graph(f), h))
        assert normal_eq(l.get, f)
        assert normal_eq(l.put, h)

    def test_erase_reify_is_identity(self, sig, f, h):
        rng = random.Random(91)
        assert lens_normal_eq(erase(reify(Lens(f, h))), Lens(f, h))
        for _ in range(40):
            l = random_lens(rng, sig)
            assert lens_normal_eq(erase(reify(l)), l)


class TestCounit:
    def test_validity(self, sig, interp):
        rng = random.Random(92)
        for _ in range(40):
            o = random_optic(rng, sig)
            cell = counit(o, interp)
            assert cell.tgt is o

    def test_reified_lens_has_identity_witness(self, sig, interp):
        rng = random.Random(93)
        for _ in range(20):
            l = random_lens(rng, sig)
            cell = counit(reify(l), interp)
            a, _ = l.dom_pair
            assert normal_eq(cell.witness, Id(a))
            assert optic_normal_eq(cell.src, cell.tgt)

    def test_erase_collapses_counit_endpoints(self, sig, interp):
        rng = random.Random(94)
        for _ in range(20):
            o = random_optic(rng, sig)
            cell = counit(o, interp)
            assert lens_normal_eq(erase(cell.src), erase(cell.tgt))

    def test_corrupted_witness_is_rejected(self, f, h, e, A, interp):
        o = Optic(A, graph(f), h)
        hub = reify(erase(o))
        good = counit(o, interp).witness
        with pytest.raises(TwoCellError):
            mk_two_cell(hub, o, good >> e, interp)


class TestOplaxStructure:
    def test_oplaxator(self, sig, interp):
        rng = random.Random(95)
        for _ in range(20):
            l1, l2 = random_composable_lenses(rng, sig, 2)
            cell = oplaxator(l1, l2, interp)
            assert cell.src == reify(lens_compose(l1, l2))
            assert cell.tgt == optic_compose(reify(l1), reify(l2))
            assert normal_eq(cell.witness, graph(l1.get))

    def test_opunitor(self, A, B, interp):
        cell = opunitor((A, B), interp)
        assert cell.src == reify(lens_id((A, B)))
        assert cell.tgt == optic_id((A, B))
        assert cell.witness == Delete(A)

    def test_triple_coherence(self, sig, interp):
        rng = random.Random(96)
        for _ in range(10):
            l1, l2, l3 = random_composable_lenses(rng, sig, 3)
            report = check_oplax_coherence(l1, l2, l3, interp)
            assert report.passed, report.to_json()
            assert set(report.laws) == COHERENCE_LAWS


class TestSuites:
    def test_adjunction_suite(self, sig, interp):
        rng = random.Random(97)
        report = check_adjunction(sig, interp, rng, n_lenses=30, n_optics=30)
        assert report.passed, report.to_json()
        assert set(report.laws) == ADJUNCTION_LAWS
        for name, law in report.laws.items():
            assert law.checked > 0, name

    def test_coherence_suite(self, sig, interp):
        rng = random.Random(98)
        report = coherence_suite(sig, interp, rng, n_pairs=20, n_triples=10)
        assert report.passed, report.to_json()
        assert set(report.laws) == COHERENCE_LAWS

    def test_report_json_shape(self):
        report = AdjunctionReport()
        report.law("x").ok()
        report.law("y").fail({"index": 3})
        out = report.to_json()
        assert out["passed"] is False
        assert out["laws"]["x"] == {"passed": True, "checked": 1, "failures": []}
        assert out["laws"]["y"]["failures"] == [{"index": 3}]

    def test_law_result_bookkeeping(self):
        law = LawResult()
        law.ok()
        law.ok()
        assert law.passed and law.checked == 2
        law.fail("boom")
        assert not law.passed and law.checked == 3
