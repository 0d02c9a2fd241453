"""Optics: a forward pass that stores a residual for the backward pass.

An optic between boundary pairs (A, A') -> (B, B') is a residual object M
with terms forward: A -> M x B and backward: M x B' -> A'.  Optics are
representatives, not equivalence classes, but composition is still strictly
associative and unital on the nose: components are stored as flat stage
chains (left-nested, identity stages dropped) and composition concatenates
those chains, wrapping the later optic's stages in an identity context that
coalesces with any identity context already present.  The executor
materializes the residual between passes, trading memory for the
recomputation a lens chain would do.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .interp import CostReport, Interp, check_values, evaluate
from .normal import normal_eq
from .signature import Obj, UNIT
from .term import Copy, Id, Proj1, Proj2, Swap, Ten, Term, TermTypeError, _mk_seq, _seq_parts


def _stages(t: Term) -> list[Term]:
    return [p for p in _seq_parts(t) if not isinstance(p, Id)]


def _reslot(t: Term) -> Term:
    """Left-nested chain of non-identity stages (identity if none are left)."""
    return _mk_seq(_stages(t), t.dom)


def _wrap(m: Obj, t: Term) -> Term:
    """Tensor an identity context onto a stage, merging adjacent contexts.

    wrap(m1, wrap(m2, t)) == wrap(m1 @ m2, t), which is what makes optic
    composition associative at the representative level.
    """
    if len(m) == 0:
        return t
    if isinstance(t, Ten) and isinstance(t.left, Id):
        return Ten(Id(m @ t.left.obj), t.right)
    return Ten(Id(m), t)


@dataclass(frozen=True)
class Optic:
    residual: Obj
    forward: Term  # A -> M x B
    backward: Term  # M x B' -> A'
    dom_pair: tuple[Obj, Obj] = field(init=False, compare=False, repr=False)
    cod_pair: tuple[Obj, Obj] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "forward", _reslot(self.forward))
        object.__setattr__(self, "backward", _reslot(self.backward))
        m = self.residual
        if self.forward.cod[: len(m)] != m:
            raise TermTypeError(
                f"forward codomain {self.forward.cod} does not start with residual {m}",
                expected=m,
                actual=self.forward.cod[: len(m)],
            )
        if self.backward.dom[: len(m)] != m:
            raise TermTypeError(
                f"backward domain {self.backward.dom} does not start with residual {m}",
                expected=m,
                actual=self.backward.dom[: len(m)],
            )
        b = self.forward.cod[len(m) :]
        b_back = self.backward.dom[len(m) :]
        object.__setattr__(self, "dom_pair", (self.forward.dom, self.backward.cod))
        object.__setattr__(self, "cod_pair", (b, b_back))


def optic_id(pair: tuple[Obj, Obj]) -> Optic:
    a, a_back = pair
    return Optic(UNIT, Id(a), Id(a_back))


def optic_compose(o1: Optic, o2: Optic) -> Optic:
    """Sequential composition: residuals concatenate, nothing is recomputed.

    The composite components are stage-chain concatenations, so composition
    is strictly associative and unital at the level of representatives.
    """
    if o1.cod_pair != o2.dom_pair:
        raise TermTypeError(
            f"optic boundaries do not match: {o1.cod_pair[0]} / {o1.cod_pair[1]} "
            f"vs {o2.dom_pair[0]} / {o2.dom_pair[1]}"
        )
    m1 = o1.residual
    m2 = o2.residual
    fw_stages = _stages(o1.forward) + [_wrap(m1, s) for s in _stages(o2.forward)]
    bw_stages = [_wrap(m1, s) for s in _stages(o2.backward)] + _stages(o1.backward)
    forward = _mk_seq(fw_stages, o1.forward.dom)
    backward = _mk_seq(bw_stages, m1 @ o2.backward.dom)
    return Optic(m1 @ m2, forward, backward)


def compose_optic_chain(optics: list[Optic]) -> Optic:
    if not optics:
        raise ValueError("empty optic chain")
    out = optics[0]
    for o in optics[1:]:
        out = optic_compose(out, o)
    return out


def optic_normal_eq(o1: Optic, o2: Optic) -> bool:
    """Same residual object and componentwise equal up to normalization."""
    return (
        o1.residual == o2.residual
        and normal_eq(o1.forward, o2.forward)
        and normal_eq(o1.backward, o2.backward)
    )


def optic_exec(
    optic: Optic,
    a: tuple,
    interp: Interp,
    env: Callable[[tuple], tuple] | None = None,
) -> tuple[tuple, tuple, CostReport]:
    """Run forward, hold the residual, run backward on (residual, response)."""
    m = optic.residual
    b_obj, b_back = optic.cod_pair
    report = CostReport()
    out = evaluate(optic.forward, a, interp, report)
    m_vals, b = out[: len(m)], out[len(m) :]
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
    a_prime = evaluate(optic.backward, m_vals + b_resp, interp, report)
    report.peak_residual_slots = len(m)
    report.peak_residual_bytes = interp.obj_bytes(m)
    return b, a_prime, report


def loop_term(optic: Optic) -> Term:
    """forward ; backward as one term (identity environment, b discarded)."""
    b_obj, b_back = optic.cod_pair
    if b_obj != b_back:
        raise TermTypeError(
            f"loop term needs matching boundary: {b_obj} vs {b_back}",
            expected=b_obj,
            actual=b_back,
        )
    return optic.forward >> optic.backward


def round_trip_term(optic: Optic) -> Term:
    """A -> B x A' with an identity environment: emits b and a' together."""
    m = optic.residual
    b_obj, b_back = optic.cod_pair
    if b_obj != b_back:
        raise TermTypeError(
            f"round trip needs matching boundary: {b_obj} vs {b_back}",
            expected=b_obj,
            actual=b_back,
        )
    return (
        optic.forward
        >> Ten(Id(m), Copy(b_obj))
        >> Ten(Swap(m, b_obj), Id(b_obj))
        >> Ten(Id(b_obj), optic.backward)
    )


def response_term(optic: Optic) -> Term:
    """A x B' -> B x A': the environment response is an explicit input."""
    m = optic.residual
    b_obj, b_back = optic.cod_pair
    return (
        Ten(optic.forward, Id(b_back))
        >> Ten(Swap(m, b_obj), Id(b_back))
        >> Ten(Id(b_obj), optic.backward)
    )
