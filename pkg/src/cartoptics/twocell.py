"""Reparameterizations between optics, and the connectivity quotient.

A 2-cell from optic (M1, fw1, bw1) to (M2, fw2, bw2) is a residual map
r: M1 -> M2 making both squares commute:

    fw1 ; (r x B)  ==  fw2          (forward square)
    (r x B') ; bw2 ==  bw1          (backward square)

Equality is decided by the normalizer; when a finite interpretation is given
the accepted squares are cross-checked by exhaustive evaluation, and a
rejected square is reported together with a concrete separating input when
one exists under that interpretation.

`pi0_classes` computes connected components of a sampled hom-category,
treating cells as undirected edges.  Witness search is a separate, bounded
enumeration over canonical forms; it can miss deep zigzags, so experiments
report the search depth alongside their results.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .interp import Interp, eq_extensional, extensional_counterexample
from .normal import App, CanonicalForm, Var, WireTerm, normal_eq, read_back
from .optic import Optic
from .signature import Obj, Signature, Sort
from .term import Id, Ten, Term, TermTypeError


class TwoCellError(ValueError):
    """A candidate residual map fails one of the two squares."""

    def __init__(self, side: str, message: str, counterexample: tuple | None = None):
        super().__init__(message)
        self.side = side
        self.counterexample = counterexample


class NormalizerDisagreement(AssertionError):
    """Normalizer said equal but exhaustive evaluation disagreed (a bug)."""


@dataclass(frozen=True)
class TwoCell:
    src: Optic
    tgt: Optic
    witness: Term


def _check_square(side: str, lhs: Term, rhs: Term, interp: Interp | None) -> None:
    if normal_eq(lhs, rhs):
        if interp is not None and interp.is_finite(lhs.dom):
            bad = extensional_counterexample(lhs, rhs, interp)
            if bad is not None:
                raise NormalizerDisagreement(
                    f"{side} square: normalizer accepted but input {bad} separates"
                )
        return
    example = None
    if interp is not None and interp.is_finite(lhs.dom):
        example = extensional_counterexample(lhs, rhs, interp)
    raise TwoCellError(
        side,
        f"{side} square does not commute"
        + (f"; separating input {example}" if example is not None else ""),
        counterexample=example,
    )


def mk_two_cell(src: Optic, tgt: Optic, witness: Term, interp: Interp | None = None) -> TwoCell:
    """Validate both squares and build the cell; raises TwoCellError if invalid."""
    if src.dom_pair != tgt.dom_pair or src.cod_pair != tgt.cod_pair:
        raise TermTypeError(
            f"cell endpoints have different boundaries: "
            f"{src.dom_pair}->{src.cod_pair} vs {tgt.dom_pair}->{tgt.cod_pair}"
        )
    if witness.dom != src.residual or witness.cod != tgt.residual:
        raise TermTypeError(
            f"witness boundary {witness.dom} -> {witness.cod} does not match "
            f"residuals {src.residual} -> {tgt.residual}",
            expected=src.residual,
            actual=witness.dom,
        )
    b_obj, b_back = src.cod_pair
    _check_square("forward", src.forward >> Ten(witness, Id(b_obj)), tgt.forward, interp)
    _check_square("backward", Ten(witness, Id(b_back)) >> tgt.backward, src.backward, interp)
    return TwoCell(src, tgt, witness)


def identity_cell(o: Optic, interp: Interp | None = None) -> TwoCell:
    return mk_two_cell(o, o, Id(o.residual), interp)


def vcompose(c1: TwoCell, c2: TwoCell, interp: Interp | None = None) -> TwoCell:
    """Compose along a shared middle optic (same representative required)."""
    if c1.tgt != c2.src:
        raise TermTypeError("vertical composition needs c1.tgt and c2.src to be the same representative")
    return mk_two_cell(c1.src, c2.tgt, c1.witness >> c2.witness, interp)


def hcompose(c1: TwoCell, c2: TwoCell, interp: Interp | None = None) -> TwoCell:
    """Compose side by side; the witness is the tensor of the witnesses."""
    from .optic import optic_compose

    src = optic_compose(c1.src, c2.src)
    tgt = optic_compose(c1.tgt, c2.tgt)
    return mk_two_cell(src, tgt, Ten(c1.witness, c2.witness), interp)


@dataclass(frozen=True)
class HomCatSample:
    """A finite sample of a hom-category: optics plus validated cells."""

    optics: tuple[Optic, ...]
    cells: tuple[TwoCell, ...] = ()


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        self.parent[self.find(i)] = self.find(j)


def pi0_classes(sample: HomCatSample) -> list[list[int]]:
    """Connected components of the sample, as sorted lists of optic indices.

    Cells are undirected edges; structurally equal optics listed twice are
    identified; identity cells are implicit.
    """
    uf = UnionFind(len(sample.optics))
    seen: dict[Optic, int] = {}
    for i, o in enumerate(sample.optics):
        if o in seen:
            uf.union(i, seen[o])
        else:
            seen[o] = i

    def index_of(o: Optic) -> int:
        if o not in seen:
            raise ValueError("cell endpoint is not among the sampled optics")
        return seen[o]

    for c in sample.cells:
        uf.union(index_of(c.src), index_of(c.tgt))
    groups: dict[int, list[int]] = {}
    for i in range(len(sample.optics)):
        groups.setdefault(uf.find(i), []).append(i)
    return sorted(groups.values())


# --- bounded enumeration and witness search ---------------------------------


def enumerate_wire_terms(
    sig: Signature, var_sorts: tuple[Sort, ...], target: Sort, depth: int
) -> list[WireTerm]:
    """All canonical wire terms of a sort over the given variables, depth-bounded."""
    memo: dict[tuple[Sort, int], list[WireTerm]] = {}

    def go(sort: Sort, d: int) -> list[WireTerm]:
        key = (sort, d)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out: list[WireTerm] = [Var(i) for i, s in enumerate(var_sorts) if s == sort]
        if d > 0:
            for g in sig.generators:
                for j, c in enumerate(g.cod):
                    if c != sort:
                        continue
                    pools = [go(s, d - 1) for s in g.dom]
                    for args in itertools.product(*pools):
                        out.append(App(g, j, tuple(args)))
        memo[key] = out
        return out

    return go(target, depth)


def enumerate_morphisms(sig: Signature, dom: Obj, cod: Obj, depth: int) -> Iterator[Term]:
    """Distinct-by-canonical-form representatives dom -> cod up to term depth."""
    pools = [enumerate_wire_terms(sig, dom.sorts, s, depth) for s in cod]
    for wires in itertools.product(*pools):
        yield read_back(CanonicalForm(dom, cod, tuple(wires)))


def find_witnesses(
    src: Optic, tgt: Optic, sig: Signature, depth: int, interp: Interp | None = None
) -> list[TwoCell]:
    """Try every bounded-depth residual map as a witness; keep the valid ones."""
    found = []
    for r in enumerate_morphisms(sig, src.residual, tgt.residual, depth):
        try:
            found.append(mk_two_cell(src, tgt, r, interp))
        except TwoCellError:
            continue
    return found


def search_cells(
    optics: list[Optic], sig: Signature, depth: int, interp: Interp | None = None
) -> HomCatSample:
    """Connect a family of optics by exhaustive bounded-depth witness search."""
    cells: list[TwoCell] = []
    for src, tgt in itertools.permutations(optics, 2):
        if src.dom_pair != tgt.dom_pair or src.cod_pair != tgt.cod_pair:
            continue
        cells.extend(find_witnesses(src, tgt, sig, depth, interp))
    return HomCatSample(tuple(optics), tuple(cells))
