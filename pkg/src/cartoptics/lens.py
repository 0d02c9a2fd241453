"""Cartesian lenses: a forward pass plus a backward pass that recomputes.

A lens between boundary pairs (A, A') -> (B, B') is a pair of terms
get: A -> B and put: A x B' -> A'.  No laws relate get and put.  Composition
feeds the backward pass of the second lens with a recomputation of the first
forward pass (the graph of get1), so a chain of n lenses evaluates get maps
quadratically often while holding only the original input between passes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .interp import CostReport, Interp, check_values, evaluate
from .normal import normal_eq
from .signature import Obj
from .term import Id, Proj2, Ten, Term, TermTypeError, graph


@dataclass(frozen=True)
class Lens:
    get: Term
    put: Term
    # boundary pairs (A, A') and (B, B'), inferred in __post_init__
    dom_pair: tuple[Obj, Obj] = field(init=False, compare=False, repr=False)
    cod_pair: tuple[Obj, Obj] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        a = self.get.dom
        if self.put.dom[: len(a)] != a:
            raise TermTypeError(
                f"put domain {self.put.dom} does not start with get domain {a}",
                expected=a,
                actual=self.put.dom[: len(a)],
            )
        b_back = self.put.dom[len(a) :]
        object.__setattr__(self, "dom_pair", (a, self.put.cod))
        object.__setattr__(self, "cod_pair", (self.get.cod, b_back))


def lens_id(pair: tuple[Obj, Obj]) -> Lens:
    a, a_back = pair
    return Lens(Id(a), Proj2(a, a_back))


def lens_compose(l1: Lens, l2: Lens) -> Lens:
    """Sequential composition; the composite put recomputes get1 via its graph."""
    if l1.cod_pair != l2.dom_pair:
        raise TermTypeError(
            f"lens boundaries do not match: {l1.cod_pair[0]} / {l1.cod_pair[1]} "
            f"vs {l2.dom_pair[0]} / {l2.dom_pair[1]}"
        )
    a, _ = l1.dom_pair
    _, c_back = l2.cod_pair
    get = l1.get >> l2.get
    put = Ten(graph(l1.get), Id(c_back)) >> Ten(Id(a), l2.put) >> l1.put
    return Lens(get, put)


def compose_chain(lenses: list[Lens], assoc: str = "left") -> Lens:
    """Fold a chain of lenses; association changes cost, not meaning."""
    if not lenses:
        raise ValueError("empty lens chain")
    if assoc == "left":
        out = lenses[0]
        for l in lenses[1:]:
            out = lens_compose(out, l)
        return out
    if assoc == "right":
        out = lenses[-1]
        for l in reversed(lenses[:-1]):
            out = lens_compose(l, out)
        return out
    raise ValueError(f"unknown association {assoc!r}")


def lens_normal_eq(l1: Lens, l2: Lens) -> bool:
    return normal_eq(l1.get, l2.get) and normal_eq(l1.put, l2.put)


def lens_exec(
    lens: Lens,
    a: tuple,
    interp: Interp,
    env: Callable[[tuple], tuple] | None = None,
) -> tuple[tuple, tuple, CostReport]:
    """Run forward, hand the output to env, run backward on (input, response).

    Returns (b, a', report).  The input is held across the two passes; that
    counts as one copy per wire of A, and the held slots are the peak residual.
    """
    a_obj, _ = lens.dom_pair
    b_obj, b_back = lens.cod_pair
    report = CostReport()
    b = evaluate(lens.get, a, interp, report)
    if env is None:
        if b_obj != b_back:
            raise TermTypeError(
                f"default identity env needs matching boundary: {b_obj} vs {b_back}",
                expected=b_obj,
                actual=b_back,
            )
        b_resp = b
    else:
        b_resp = tuple(env(b))
    check_values(b_back, b_resp, interp, what="env response")
    a_prime = evaluate(lens.put, tuple(a) + b_resp, interp, report)
    report.copies += len(a_obj)
    report.peak_residual_slots = len(a_obj)
    report.peak_residual_bytes = interp.obj_bytes(a_obj)
    return b, a_prime, report
