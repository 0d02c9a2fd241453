"""Canonical forms: the decision procedure for term equality.

A morphism into a product is determined by its components, and each component
of a term over a free cartesian structure is an ordinary first-order term in
the input wires.  So the canonical form of a morphism is one tree per output
wire, whose leaves are input wire indices and whose internal nodes are
(generator, output-index) applications.  Copy, delete, swap and projections
all disappear into wire bookkeeping, which is why equality of canonical forms
is sound and complete for the equational theory generated by the cartesian
structure.

`normalize` computes the canonical form by symbolically pushing a tuple of
wire variables through the term; `read_back` rebuilds a term (with explicit
copies and projections) from a canonical form, and normalizing the read-back
returns the same canonical form.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .signature import Generator, Obj
from .term import (
    Copy,
    Delete,
    Gen,
    Id,
    Proj1,
    Proj2,
    Seq,
    Swap,
    Ten,
    Term,
    pairing,
    select_wire,
)


@dataclass(frozen=True)
class Var:
    """An input wire."""

    index: int


@dataclass(frozen=True)
class App:
    """Output `out_index` of a generator applied to argument wires."""

    gen: Generator
    out_index: int
    args: tuple["WireTerm", ...]


WireTerm = Var | App


@dataclass(frozen=True)
class CanonicalForm:
    dom: Obj
    cod: Obj
    wires: tuple[WireTerm, ...]


def normalize(t: Term) -> CanonicalForm:
    wires = _push(t, tuple(Var(i) for i in range(len(t.dom))))
    return CanonicalForm(t.dom, t.cod, wires)


def _push(t: Term, xs: tuple[WireTerm, ...]) -> tuple[WireTerm, ...]:
    if isinstance(t, Gen):
        return tuple(App(t.gen, j, xs) for j in range(len(t.gen.cod)))
    if isinstance(t, Id):
        return xs
    if isinstance(t, Seq):
        return _push(t.right, _push(t.left, xs))
    if isinstance(t, Ten):
        k = len(t.left.dom)
        return _push(t.left, xs[:k]) + _push(t.right, xs[k:])
    if isinstance(t, Copy):
        return xs + xs
    if isinstance(t, Delete):
        return ()
    if isinstance(t, Swap):
        k = len(t.first)
        return xs[k:] + xs[:k]
    if isinstance(t, Proj1):
        return xs[: len(t.first)]
    if isinstance(t, Proj2):
        return xs[len(t.first) :]
    raise TypeError(f"not a term: {t!r}")


def normal_eq(f: Term, g: Term) -> bool:
    """Equality in the free cartesian category (boundaries included)."""
    return normalize(f) == normalize(g)


def read_back(cf: CanonicalForm) -> Term:
    """A term denoting the canonical form (shared subtrees are duplicated)."""
    return pairing([_wire_term(w, cf.dom) for w in cf.wires], cf.dom)


def _wire_term(w: WireTerm, dom: Obj) -> Term:
    if isinstance(w, Var):
        return select_wire(dom, w.index)
    args = pairing([_wire_term(a, dom) for a in w.args], dom)
    t = args >> Gen(w.gen)
    if len(w.gen.cod) > 1:
        t = t >> select_wire(w.gen.cod, w.out_index)
    return t


def gen_occurrences(cf: CanonicalForm) -> Counter:
    """Generator occurrence counts in the canonical form, with multiplicity.

    Shared subtree objects are counted as many times as they occur, but the
    walk memoizes on subterm identity so heavily shared forms stay cheap.
    """
    cache: dict[WireTerm, Counter] = {}

    def count(w: WireTerm) -> Counter:
        if isinstance(w, Var):
            return Counter()
        hit = cache.get(w)
        if hit is not None:
            return hit
        total = Counter({w.gen.name: 1})
        for a in w.args:
            total.update(count(a))
        cache[w] = total
        return total

    out: Counter = Counter()
    for w in cf.wires:
        out.update(count(w))
    return out
