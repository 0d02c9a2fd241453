"""Cells between optics: validation, pasting, and connected components."""

import random

import pytest

from cartoptics import (
    Copy,
    Delete,
    FiniteCarrier,
    Generator,
    HomCatSample,
    Id,
    Obj,
    Optic,
    Signature,
    Sort,
    TermTypeError,
    TwoCellError,
    enumerate_morphisms,
    erase,
    find_witnesses,
    graph,
    hcompose,
    identity_cell,
    lens_id,
    mk_two_cell,
    normal_eq,
    optic_compose,
    optic_id,
    pi0_classes,
    reify,
    search_cells,
    vcompose,
)
from cartoptics.sampling import (
    random_cell_chain,
    random_composable_cells,
    random_obj,
    random_valid_cell,
)


@pytest.fixture
def rewired(f, h, e, A, B):
    """A valid cell: rewiring the residual by e, with both squares commuting."""
    src = Optic(A, graph(f), (e @ Id(B)) >> h)
    tgt = Optic(A, Copy(A) >> (e @ f), h)
    return src, tgt


class TestValidation:
    def test_valid_cell(self, rewired, e, interp):
        src, tgt = rewired
        cell = mk_two_cell(src, tgt, e, interp)
        assert cell.src is src and cell.tgt is tgt and cell.witness is e

    def test_forward_failure_with_counterexample(self, rewired, f, h, A, interp):
        _, tgt = rewired
        plain = Optic(A, graph(f), h)
        with pytest.raises(TwoCellError) as info:
            mk_two_cell(plain, tgt, Id(A), interp)
        assert info.value.side == "forward"
        assert info.value.counterexample == (0,)
        assert "separating input (0,)" in str(info.value)

    def test_backward_failure_with_counterexample(self, f, h, e, A, B, interp):
        src = Optic(A, graph(f), h)
        tgt = Optic(A, graph(f), (e @ Id(B)) >> h)
        with pytest.raises(TwoCellError) as info:
            mk_two_cell(src, tgt, Id(A), interp)
        assert info.value.side == "backward"
        assert info.value.counterexample == (0, 0)

    def test_rejection_without_interp_has_no_counterexample(self, rewired, f, h, A, interp):
        _, tgt = rewired
        plain = Optic(A, graph(f), h)
        with pytest.raises(TwoCellError) as info:
            mk_two_cell(plain, tgt, Id(A), None)
        assert info.value.counterexample is None
        assert "separating input" not in str(info.value)

    def test_witness_boundary_mismatch(self, rewired, f, interp):
        src, tgt = rewired
        with pytest.raises(TermTypeError, match="witness boundary"):
            mk_two_cell(src, tgt, f, interp)

    def test_endpoint_boundary_mismatch(self, rewired, A, interp):
        src, _ = rewired
        other = optic_id((A, A))  # cod pair (A, A), not (B, B)
        with pytest.raises(TermTypeError, match="different boundaries"):
            mk_two_cell(src, other, Delete(A), interp)

    def test_identity_cell(self, rewired, A, interp):
        src, _ = rewired
        cell = identity_cell(src, interp)
        assert cell.witness == Id(A)


class TestPasting:
    def test_vertical_composition(self, sig, interp):
        rng = random.Random(81)
        for _ in range(15):
            c1, c2 = random_cell_chain(rng, sig, interp, length=2)
            c = vcompose(c1, c2, interp)
            assert c.src == c1.src and c.tgt == c2.tgt
            assert normal_eq(c.witness, c1.witness >> c2.witness)

    def test_vertical_needs_shared_representative(self, sig, interp):
        rng = random.Random(82)
        c1 = random_valid_cell(rng, sig, interp)
        c2 = random_valid_cell(rng, sig, interp, dom_pair=c1.src.dom_pair)
        if c1.tgt != c2.src:
            with pytest.raises(TermTypeError, match="same representative"):
                vcompose(c1, c2, interp)

    def test_horizontal_composition(self, sig, interp):
        rng = random.Random(83)
        for _ in range(15):
            c1, c2 = random_composable_cells(rng, sig, interp)
            c = hcompose(c1, c2, interp)
            assert c.src == optic_compose(c1.src, c2.src)
            assert c.tgt == optic_compose(c1.tgt, c2.tgt)
            assert normal_eq(c.witness, c1.witness @ c2.witness)

    def test_interchange_on_a_grid(self, sig, interp):
        # two vertical chains side by side: pasting columns-then-rows equals
        # rows-then-columns
        rng = random.Random(84)
        for _ in range(10):
            mid = (random_obj(rng, sig), random_obj(rng, sig))
            a1, a2 = random_cell_chain(rng, sig, interp, length=2, cod_pair=mid)
            b1, b2 = random_cell_chain(rng, sig, interp, length=2, dom_pair=mid)
            cols = hcompose(vcompose(a1, a2, interp), vcompose(b1, b2, interp), interp)
            rows = vcompose(hcompose(a1, b1, interp), hcompose(a2, b2, interp), interp)
            assert cols.src == rows.src
            assert cols.tgt == rows.tgt
            assert normal_eq(cols.witness, rows.witness)


class TestComponents:
    def test_cells_merge_classes(self, f, h, A, interp):
        connected = [optic_id((A, A)), reify(lens_id((A, A)))]
        lone = Optic(A, graph(f), h)
        cell = mk_two_cell(connected[1], connected[0], Delete(A), interp)
        sample = HomCatSample((*connected, lone), (cell,))
        assert pi0_classes(sample) == [[0, 1], [2]]

    def test_structurally_equal_optics_are_identified(self, f, h, A):
        o = Optic(A, graph(f), h)
        sample = HomCatSample((o, Optic(A, graph(f), h)))
        assert pi0_classes(sample) == [[0, 1]]

    def test_unsampled_endpoint_is_an_error(self, rewired, e, A, interp):
        src, tgt = rewired
        cell = mk_two_cell(src, tgt, e, interp)
        with pytest.raises(ValueError, match="not among"):
            pi0_classes(HomCatSample((src,), (cell,)))


@pytest.fixture(scope="module")
def mono_sig():
    a = Sort("A", FiniteCarrier(2))
    obj = Obj((a,))
    return Signature((a,), (Generator("u", obj, obj, table=((1,), (0,))),))


class TestEnumeration:
    def test_endo_count_is_depth_bounded(self, mono_sig):
        obj = mono_sig.obj("A")
        assert len(list(enumerate_morphisms(mono_sig, obj, obj, 0))) == 1
        assert len(list(enumerate_morphisms(mono_sig, obj, obj, 2))) == 3
        assert len(list(enumerate_morphisms(mono_sig, obj, obj, 3))) == 4

    def test_pair_count_is_product(self, mono_sig):
        obj = mono_sig.obj("A")
        assert len(list(enumerate_morphisms(mono_sig, obj, obj @ obj, 1))) == 4


class TestWitnessSearch:
    def test_counit_witness_is_found(self, sig, f, h, A, interp):
        o = Optic(A, graph(f), h)
        hub = reify(erase(o))
        found = find_witnesses(hub, o, sig, depth=2, interp=interp)
        assert len(found) == 1
        assert normal_eq(found[0].witness, Id(A))

    def test_search_connects_hub_and_optic(self, sig, f, h, A, interp):
        o = Optic(A, graph(f), h)
        sample = search_cells([o, reify(erase(o))], sig, depth=2, interp=interp)
        assert len(sample.cells) >= 2  # both directions
        assert pi0_classes(sample) == [[0, 1]]
