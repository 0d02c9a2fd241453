"""Instrumented evaluation: values, cost counters, enumeration, real carriers."""

import numpy as np
import pytest

from cartoptics import (
    CarrierMismatch,
    Copy,
    EnumerationCapError,
    FiniteCarrier,
    Gen,
    Generator,
    Interp,
    Obj,
    RealVector,
    Signature,
    Sort,
    Swap,
    TermTypeError,
    UnsupportedInterpretation,
    enumerate_inputs,
    eq_extensional,
    evaluate,
    extensional_counterexample,
    graph,
)
from cartoptics.interp import CostReport
from cartoptics.primitives import resolve


class TestTableEvaluation:
    def test_single_generator(self, f, interp):
        assert evaluate(f, (0,), interp) == (1,)
        assert evaluate(f, (1,), interp) == (2,)

    def test_mixed_radix_lookup(self, h, interp):
        # h(1, 2) = (1 + 2) mod 2, found at row 1*3 + 2 of the table
        assert evaluate(h, (1, 2), interp) == (1,)
        assert evaluate(h, (0, 1), interp) == (1,)

    def test_multi_output(self, k, interp):
        assert evaluate(k, (0,), interp) == (0, 1)
        assert evaluate(k, (1,), interp) == (1, 0)

    def test_composite(self, f, g, interp):
        assert evaluate(f >> g, (0,), interp) == (1,)
        assert evaluate(f >> g, (1,), interp) == (0,)

    def test_structure_maps_shuffle_values(self, A, B, interp):
        assert evaluate(Swap(A, B), (1, 2), interp) == (2, 1)
        assert evaluate(Copy(A @ B), (1, 2), interp) == (1, 2, 1, 2)


class TestCostCounting:
    def test_generator_counts(self, f, g, interp):
        report = CostReport()
        evaluate(f >> g, (0,), interp, report)
        assert report.generator_counts == {"f": 1, "g": 1}
        assert report.copies == 0

    def test_copies_count_wires(self, A, B, interp):
        report = CostReport()
        evaluate(Copy(A @ B), (0, 0), interp, report)
        assert report.copies == 2

    def test_graph_costs_one_copy(self, f, interp):
        report = CostReport()
        assert evaluate(graph(f), (0,), interp, report) == (0, 1)
        assert report.copies == 1
        assert report.total_evals() == 1

    def test_total_evals_filter(self, f, g, interp):
        report = CostReport()
        evaluate(f >> g >> f, (0,), interp, report)
        assert report.total_evals() == 3
        assert report.total_evals({"f"}) == 2

    def test_report_json_shape(self, f, interp):
        report = CostReport()
        evaluate(f, (0,), interp, report)
        assert report.to_json() == {
            "generator_counts": {"f": 1},
            "copies": 0,
            "peak_residual_slots": 0,
            "peak_residual_bytes": 0,
        }


class TestValueChecking:
    def test_out_of_range(self, f, interp):
        with pytest.raises(CarrierMismatch):
            evaluate(f, (5,), interp)

    def test_wrong_arity(self, h, interp):
        with pytest.raises(CarrierMismatch):
            evaluate(h, (0,), interp)


class TestEnumeration:
    def test_row_major_order(self, A, B, interp):
        assert list(enumerate_inputs(A @ B, interp)) == [
            (0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2),
        ]

    def test_cap(self, A, B, interp):
        with pytest.raises(EnumerationCapError):
            enumerate_inputs(A @ B @ B, interp, cap=10)

    def test_unit_object_has_one_point(self, sig, interp):
        assert list(enumerate_inputs(Obj(), interp)) == [()]


class TestExtensionalComparison:
    def test_boundary_mismatch(self, f, g, interp):
        with pytest.raises(TermTypeError):
            extensional_counterexample(f, g, interp)

    def test_accidental_agreement(self, f, g, e, interp):
        # under the default tables f;g and e are the same function on {0,1}
        assert extensional_counterexample(f >> g, e, interp) is None
        assert eq_extensional(f >> g, e, interp)

    def test_first_counterexample(self, sig, f, g, e):
        # reinterpreting e as the identity separates them at the first input
        other = Interp(
            tables={
                "f": sig.generator("f").table,
                "g": sig.generator("g").table,
                "e": ((0,), (1,)),
            }
        )
        assert extensional_counterexample(f >> g, e, other) == (0,)

    def test_carrier_override(self, interp):
        assert interp.obj_bytes(Obj()) == 0


@pytest.fixture(scope="module")
def real_sig():
    r = Sort("R", RealVector(2))
    obj = Obj((r,))
    return Signature((r,), (Generator("sq", obj, obj, fn=resolve("tanh", obj, obj)),))


class TestRealCarriers:
    def test_tanh_matches_numpy(self, real_sig):
        interp = Interp.from_signature(real_sig)
        x = np.array([0.5, -0.3])
        (y,) = evaluate(Gen(real_sig.generator("sq")), (x,), interp)
        assert np.allclose(y, np.tanh(x))

    def test_enumeration_refused(self, real_sig):
        interp = Interp.from_signature(real_sig)
        t = Gen(real_sig.generator("sq"))
        with pytest.raises(UnsupportedInterpretation):
            eq_extensional(t, t, interp)

    def test_shape_mismatch_rejected(self, real_sig):
        interp = Interp.from_signature(real_sig)
        t = Gen(real_sig.generator("sq"))
        with pytest.raises(CarrierMismatch):
            evaluate(t, (np.zeros(3),), interp)

    def test_bytes_accounting(self, real_sig, A, interp):
        real_interp = Interp.from_signature(real_sig)
        r_obj = real_sig.obj("R")
        assert real_interp.obj_bytes(r_obj) == 16
        assert interp.obj_bytes(A @ A) == 2
