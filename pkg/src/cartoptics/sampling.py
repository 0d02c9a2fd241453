"""Seeded random generation of signatures, terms, lenses, optics and cells.

Everything takes an explicit random.Random so test runs are reproducible.
Random signatures are built strongly connected: a conversion generator cycle
touches every sort, so any sort is producible from any non-empty object and
boundary choices for lenses, optics and cells are unconstrained.  Morphisms
are sampled as canonical wire trees and read back into terms, which makes
them well-typed by construction.
"""

from __future__ import annotations

import random

import numpy as np

from .interp import Interp
from .lens import Lens
from .normal import App, CanonicalForm, Var, WireTerm, normalize, read_back
from .optic import Optic
from .signature import FiniteCarrier, Generator, Obj, Signature, Sort, UNIT
from .term import Id, Seq, Ten, Term
from .twocell import TwoCell, mk_two_cell

SORT_NAMES = ("A", "B", "C", "D")


def random_table(rng: random.Random, dom: Obj, cod: Obj) -> tuple[tuple[int, ...], ...]:
    total = 1
    for s in dom:
        total *= s.carrier.size
    return tuple(
        tuple(rng.randrange(s.carrier.size) for s in cod) for _ in range(total)
    )


def _nonidentity_endo_table(rng: random.Random, sort: Sort) -> tuple[tuple[int, ...], ...]:
    size = sort.carrier.size
    identity = tuple((v,) for v in range(size))
    while True:
        table = random_table(rng, Obj((sort,)), Obj((sort,)))
        if table != identity:
            return table


def random_signature(
    rng: random.Random,
    n_sorts: int | None = None,
    n_extra: int | None = None,
    multi_output_prob: float = 0.25,
) -> Signature:
    """A finite signature with random tables, strongly connected by construction."""
    if n_sorts is None:
        n_sorts = rng.randint(1, 3)
    sorts = [
        Sort(SORT_NAMES[i], FiniteCarrier(rng.choice((2, 3)))) for i in range(n_sorts)
    ]
    gens: list[Generator] = []
    endo_dom = Obj((sorts[0],))
    gens.append(
        Generator("f0", endo_dom, endo_dom, table=_nonidentity_endo_table(rng, sorts[0]))
    )
    if n_sorts > 1:
        for i in range(n_sorts):
            dom = Obj((sorts[i],))
            cod = Obj((sorts[(i + 1) % n_sorts],))
            gens.append(Generator(f"c{i}", dom, cod, table=random_table(rng, dom, cod)))
    if n_extra is None:
        n_extra = rng.randint(1, 3)
    for i in range(n_extra):
        dom = Obj(tuple(rng.choice(sorts) for _ in range(rng.randint(1, 2))))
        n_out = 2 if rng.random() < multi_output_prob else 1
        cod = Obj(tuple(rng.choice(sorts) for _ in range(n_out)))
        gens.append(Generator(f"g{i}", dom, cod, table=random_table(rng, dom, cod)))
    return Signature(tuple(sorts), tuple(gens))


def random_interp(rng: random.Random, sig: Signature) -> Interp:
    """Fresh random tables over the declared carriers; fn semantics pass through."""
    tables = {
        g.name: random_table(rng, g.dom, g.cod)
        for g in sig.generators
        if g.table is not None
    }
    fns = {g.name: g.fn for g in sig.generators if g.fn is not None}
    return Interp(carriers={}, tables=tables, fns=fns)


def min_depths(sig: Signature, dom: Obj) -> dict[Sort, int]:
    """Least wire-tree depth at which each sort is producible from dom."""
    depth: dict[Sort, int] = {s: 0 for s in dom}
    changed = True
    while changed:
        changed = False
        for g in sig.generators:
            if all(s in depth for s in g.dom):
                d = 1 + max((depth[s] for s in g.dom), default=0)
                for s in g.cod:
                    if depth.get(s, d + 1) > d:
                        depth[s] = d
                        changed = True
    return depth


def random_obj(rng: random.Random, sig: Signature, lo: int = 1, hi: int = 2) -> Obj:
    return Obj(tuple(rng.choice(sig.sorts) for _ in range(rng.randint(lo, hi))))


def random_wire(
    rng: random.Random,
    sig: Signature,
    dom_sorts: tuple[Sort, ...],
    mind: dict[Sort, int],
    target: Sort,
    budget: int,
    var_bias: float = 0.6,
) -> WireTerm:
    var_ids = [i for i, s in enumerate(dom_sorts) if s == target]
    apps: list[tuple[Generator, int]] = []
    if budget > 0:
        for g in sig.generators:
            if all(mind.get(s, budget + 1) <= budget - 1 for s in g.dom):
                for j, c in enumerate(g.cod):
                    if c == target:
                        apps.append((g, j))
    if var_ids and (not apps or rng.random() < var_bias):
        return Var(rng.choice(var_ids))
    if not apps:
        raise ValueError(f"sort {target.name} not producible within budget {budget}")
    g, j = rng.choice(apps)
    args = tuple(
        random_wire(rng, sig, dom_sorts, mind, s, budget - 1, var_bias) for s in g.dom
    )
    return App(g, j, args)


def random_morphism(
    rng: random.Random, sig: Signature, dom: Obj, cod: Obj, budget: int = 2
) -> Term:
    """A random well-typed term dom -> cod, one sampled wire tree per output."""
    mind = min_depths(sig, dom)
    wires = []
    for s in cod:
        if s not in mind:
            raise ValueError(f"sort {s.name} not producible from {dom}")
        wires.append(random_wire(rng, sig, dom.sorts, mind, s, max(budget, mind[s])))
    return read_back(CanonicalForm(dom, cod, tuple(wires)))


def canon(t: Term) -> Term:
    """Replace a term by the read-back of its normal form."""
    return read_back(normalize(t))


def padded_variants(rng: random.Random, t: Term, count: int = 4) -> list[Term]:
    """Terms with the same normal form, padded by identity and unit rewrites."""

    def pad_once(u: Term) -> Term:
        pick = rng.randrange(5)
        if pick == 0:
            return Seq(Id(u.dom), u)
        if pick == 1:
            return Seq(u, Id(u.cod))
        if pick == 2:
            return Ten(u, Id(UNIT))
        if pick == 3:
            return Ten(Id(UNIT), u)
        if isinstance(u, Seq) and isinstance(u.left, Seq):
            return Seq(u.left.left, Seq(u.left.right, u.right))
        return Seq(Id(u.dom), u)

    out = []
    for _ in range(count):
        v = t
        for _ in range(rng.randint(1, 3)):
            v = pad_once(v)
        out.append(v)
    return out


def random_lens(
    rng: random.Random,
    sig: Signature,
    dom_pair: tuple[Obj, Obj] | None = None,
    cod_pair: tuple[Obj, Obj] | None = None,
) -> Lens:
    a, a_back = dom_pair or (random_obj(rng, sig), random_obj(rng, sig))
    b, b_back = cod_pair or (random_obj(rng, sig), random_obj(rng, sig))
    get = random_morphism(rng, sig, a, b)
    put = random_morphism(rng, sig, a @ b_back, a_back)
    return Lens(get, put)


def random_composable_lenses(rng: random.Random, sig: Signature, n: int) -> tuple[Lens, ...]:
    lenses = [random_lens(rng, sig)]
    for _ in range(n - 1):
        lenses.append(random_lens(rng, sig, dom_pair=lenses[-1].cod_pair))
    return tuple(lenses)


def random_optic(
    rng: random.Random,
    sig: Signature,
    dom_pair: tuple[Obj, Obj] | None = None,
    cod_pair: tuple[Obj, Obj] | None = None,
) -> Optic:
    a, a_back = dom_pair or (random_obj(rng, sig), random_obj(rng, sig))
    b, b_back = cod_pair or (random_obj(rng, sig), random_obj(rng, sig))
    m = random_obj(rng, sig, lo=0, hi=2)
    forward = random_morphism(rng, sig, a, m @ b)
    backward = random_morphism(rng, sig, m @ b_back, a_back)
    return Optic(m, forward, backward)


def random_valid_cell(
    rng: random.Random,
    sig: Signature,
    interp: Interp | None = None,
    dom_pair: tuple[Obj, Obj] | None = None,
    cod_pair: tuple[Obj, Obj] | None = None,
) -> TwoCell:
    """A cell valid by construction: its target components are derived from
    the witness, then re-canonicalized so the validator has real work to do."""
    a, a_back = dom_pair or (random_obj(rng, sig), random_obj(rng, sig))
    b, b_back = cod_pair or (random_obj(rng, sig), random_obj(rng, sig))
    m1 = random_obj(rng, sig, lo=1, hi=2)
    m2 = random_obj(rng, sig, lo=0, hi=2)
    r = random_morphism(rng, sig, m1, m2)
    fw1 = random_morphism(rng, sig, a, m1 @ b)
    bw2 = random_morphism(rng, sig, m2 @ b_back, a_back)
    fw2 = canon(fw1 >> Ten(r, Id(b)))
    bw1 = canon(Ten(r, Id(b_back)) >> bw2)
    src = Optic(m1, fw1, bw1)
    tgt = Optic(m2, fw2, bw2)
    return mk_two_cell(src, tgt, r, interp)


def random_cell_chain(
    rng: random.Random,
    sig: Signature,
    interp: Interp | None = None,
    length: int = 2,
    dom_pair: tuple[Obj, Obj] | None = None,
    cod_pair: tuple[Obj, Obj] | None = None,
) -> list[TwoCell]:
    """Vertically composable cells o_0 -> o_1 -> ... sharing boundary pairs."""
    a, a_back = dom_pair or (random_obj(rng, sig), random_obj(rng, sig))
    b, b_back = cod_pair or (random_obj(rng, sig), random_obj(rng, sig))
    ms = [random_obj(rng, sig, lo=1, hi=2) for _ in range(length + 1)]
    rs = [random_morphism(rng, sig, ms[i], ms[i + 1]) for i in range(length)]
    fws = [random_morphism(rng, sig, a, ms[0] @ b)]
    for i in range(length):
        fws.append(canon(fws[-1] >> Ten(rs[i], Id(b))))
    bws = [None] * (length + 1)
    bws[length] = random_morphism(rng, sig, ms[length] @ b_back, a_back)
    for i in range(length - 1, -1, -1):
        bws[i] = canon(Ten(rs[i], Id(b_back)) >> bws[i + 1])
    optics = [Optic(ms[i], fws[i], bws[i]) for i in range(length + 1)]
    return [
        mk_two_cell(optics[i], optics[i + 1], rs[i], interp) for i in range(length)
    ]


def random_composable_cells(
    rng: random.Random, sig: Signature, interp: Interp | None = None
) -> tuple[TwoCell, TwoCell]:
    """Two cells whose endpoints compose end to end (for horizontal pasting)."""
    c1 = random_valid_cell(rng, sig, interp)
    c2 = random_valid_cell(rng, sig, interp, dom_pair=c1.src.cod_pair)
    return c1, c2


def random_values(rng: random.Random, interp: Interp, obj: Obj) -> tuple:
    """One random point of an object's carrier product."""
    vals = []
    for s in obj:
        c = interp.carrier_of(s)
        if isinstance(c, FiniteCarrier):
            vals.append(rng.randrange(c.size))
        else:
            vals.append(np.array([rng.gauss(0.0, 1.0) for _ in range(c.dimension)]))
    return tuple(vals)
