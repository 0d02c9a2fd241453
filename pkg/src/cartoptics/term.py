"""Symbolic morphism terms over a signature.

A term is a tree built from generators, identities, sequential and parallel
composition, and the cartesian structure maps (copy, delete, swap, and the two
projections).  Every node is well-typed at construction; `dom`/`cod` are
computed once and stored.  Terms are immutable and hashable.

Composition is written `f >> g` (left to right) and tensor `f @ g`, matching
the textual syntax `f ; g` and `f * g` accepted by the expression parser.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .signature import Generator, Obj, UNIT


class TermTypeError(TypeError):
    """A term constructor was given boundary-incompatible pieces."""

    def __init__(self, message: str, expected: Obj | None = None, actual: Obj | None = None):
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class Term:
    """Base class; subclasses are frozen dataclasses with dom/cod fields."""

    dom: Obj
    cod: Obj

    def __rshift__(self, other: "Term") -> "Term":
        return Seq(self, other)

    def __matmul__(self, other: "Term") -> "Term":
        return Ten(self, other)

    def __str__(self) -> str:
        return term_to_expr(self)


def _set(t: Term, dom: Obj, cod: Obj) -> None:
    object.__setattr__(t, "dom", dom)
    object.__setattr__(t, "cod", cod)


def _derived():
    return field(init=False, compare=False, repr=False)


@dataclass(frozen=True)
class Gen(Term):
    gen: Generator
    dom: Obj = _derived()
    cod: Obj = _derived()

    def __post_init__(self) -> None:
        _set(self, self.gen.dom, self.gen.cod)


@dataclass(frozen=True)
class Id(Term):
    obj: Obj
    dom: Obj = _derived()
    cod: Obj = _derived()

    def __post_init__(self) -> None:
        _set(self, self.obj, self.obj)


@dataclass(frozen=True)
class Seq(Term):
    left: Term
    right: Term
    dom: Obj = _derived()
    cod: Obj = _derived()

    def __post_init__(self) -> None:
        if self.left.cod != self.right.dom:
            raise TermTypeError(
                f"cannot compose: left codomain {self.left.cod} != right domain {self.right.dom}",
                expected=self.left.cod,
                actual=self.right.dom,
            )
        _set(self, self.left.dom, self.right.cod)


@dataclass(frozen=True)
class Ten(Term):
    left: Term
    right: Term
    dom: Obj = _derived()
    cod: Obj = _derived()

    def __post_init__(self) -> None:
        _set(self, self.left.dom @ self.right.dom, self.left.cod @ self.right.cod)


@dataclass(frozen=True)
class Copy(Term):
    obj: Obj
    dom: Obj = _derived()
    cod: Obj = _derived()

    def __post_init__(self) -> None:
        _set(self, self.obj, self.obj @ self.obj)


@dataclass(frozen=True)
class Delete(Term):
    obj: Obj
    dom: Obj = _derived()
    cod: Obj = _derived()

    def __post_init__(self) -> None:
        _set(self, self.obj, UNIT)


@dataclass(frozen=True)
class Swap(Term):
    first: Obj
    second: Obj
    dom: Obj = _derived()
    cod: Obj = _derived()

    def __post_init__(self) -> None:
        _set(self, self.first @ self.second, self.second @ self.first)


@dataclass(frozen=True)
class Proj1(Term):
    first: Obj
    second: Obj
    dom: Obj = _derived()
    cod: Obj = _derived()

    def __post_init__(self) -> None:
        _set(self, self.first @ self.second, self.first)


@dataclass(frozen=True)
class Proj2(Term):
    first: Obj
    second: Obj
    dom: Obj = _derived()
    cod: Obj = _derived()

    def __post_init__(self) -> None:
        _set(self, self.first @ self.second, self.second)


def compose(f: Term, g: Term) -> Term:
    return Seq(f, g)


def tensor(f: Term, g: Term) -> Term:
    return Ten(f, g)


def graph(f: Term) -> Term:
    """The graph of f: copy the input and apply f to the second leg.

    Satisfies graph(f) >> Proj2 == f and graph(f) >> Proj1 == Id up to
    normalization.
    """
    return Copy(f.dom) >> (Id(f.dom) @ f)


def pairing(parts: list[Term], dom: Obj) -> Term:
    """Tuple morphisms sharing a domain into one morphism into the product."""
    for p in parts:
        if p.dom != dom:
            raise TermTypeError(
                f"pairing: component domain {p.dom} != {dom}", expected=dom, actual=p.dom
            )
    if not parts:
        return Delete(dom)
    if len(parts) == 1:
        return parts[0]
    return Copy(dom) >> (parts[0] @ pairing(parts[1:], dom))


def select_wire(obj: Obj, i: int) -> Term:
    """Projection obj -> [obj[i]] built from Proj1/Proj2."""
    n = len(obj)
    if not 0 <= i < n:
        raise TermTypeError(f"select_wire: index {i} out of range for {obj}")
    if n == 1:
        return Id(obj)
    if i == 0:
        return Proj1(obj[:1], obj[1:])
    t: Term = Proj2(obj[:i], obj[i:])
    if i < n - 1:
        t = t >> Proj1(obj[i : i + 1], obj[i + 1 :])
    return t


# --- structural normal form ------------------------------------------------
#
# Normalizes only the strict-monoidal bookkeeping: flattens nested Seq/Ten,
# drops identities, merges adjacent Id factors, and pushes a tensor of
# identities into a sequential composite (whiskering).  It never touches
# copy/delete/swap/proj, so two terms with equal structural forms are equal
# by strictness and functoriality alone.


def _seq_parts(t: Term) -> list[Term]:
    if isinstance(t, Seq):
        return _seq_parts(t.left) + _seq_parts(t.right)
    return [t]


def _ten_factors(t: Term) -> list[Term]:
    if isinstance(t, Ten):
        return _ten_factors(t.left) + _ten_factors(t.right)
    return [t]


def _mk_seq(parts: list[Term], dom: Obj) -> Term:
    parts = [p for p in parts if not isinstance(p, Id)]
    if not parts:
        return Id(dom)
    out = parts[0]
    for p in parts[1:]:
        out = Seq(out, p)
    return out


def _mk_ten(factors: list[Term]) -> Term:
    merged: list[Term] = []
    for f in (x for g in factors for x in _ten_factors(g)):
        if isinstance(f, Id) and len(f.obj) == 0:
            continue
        if isinstance(f, Id) and merged and isinstance(merged[-1], Id):
            merged[-1] = Id(merged[-1].obj @ f.obj)
        else:
            merged.append(f)
    if not merged:
        return Id(UNIT)
    out = merged[0]
    for f in merged[1:]:
        out = Ten(out, f)
    return out


def structural_form(t: Term) -> Term:
    if isinstance(t, Seq):
        parts: list[Term] = []
        for side in (t.left, t.right):
            parts.extend(_seq_parts(structural_form(side)))
        return _mk_seq(parts, t.dom)
    if isinstance(t, Ten):
        factors: list[Term] = []
        for side in (t.left, t.right):
            factors.extend(_ten_factors(structural_form(side)))
        seq_positions = [i for i, f in enumerate(factors) if isinstance(f, Seq)]
        non_id = [i for i, f in enumerate(factors) if not isinstance(f, Id)]
        if len(non_id) == 1 and seq_positions == non_id:
            # whisker a lone composite through the identity context
            i = non_id[0]
            stages = []
            for p in _seq_parts(factors[i]):
                stage = list(factors)
                stage[i] = p
                stages.append(_mk_ten(stage))
            return _mk_seq(stages, Obj(tuple(s for f in factors for s in f.dom)))
        return _mk_ten(factors)
    return t


def structurally_equal(a: Term, b: Term) -> bool:
    return structural_form(a) == structural_form(b)


# --- printing ---------------------------------------------------------------


def _obj_expr(obj: Obj) -> str:
    return " ".join(s.name for s in obj)


def term_to_expr(t: Term) -> str:
    """Render a term in the textual expression syntax (parseable back)."""
    if isinstance(t, Gen):
        return t.gen.name
    if isinstance(t, Id):
        return f"id[{_obj_expr(t.obj)}]"
    if isinstance(t, Copy):
        return f"copy[{_obj_expr(t.obj)}]"
    if isinstance(t, Delete):
        return f"del[{_obj_expr(t.obj)}]"
    if isinstance(t, Swap):
        return f"swap[{_obj_expr(t.first)},{_obj_expr(t.second)}]"
    if isinstance(t, Proj1):
        return f"pi1[{_obj_expr(t.first)},{_obj_expr(t.second)}]"
    if isinstance(t, Proj2):
        return f"pi2[{_obj_expr(t.first)},{_obj_expr(t.second)}]"
    if isinstance(t, Seq):
        return f"({term_to_expr(t.left)} ; {term_to_expr(t.right)})"
    if isinstance(t, Ten):
        return f"({term_to_expr(t.left)} * {term_to_expr(t.right)})"
    raise TypeError(f"not a term: {t!r}")
