"""Interpretations, instrumented evaluation, and extensional equality.

An interpretation assigns a carrier to every sort and a total semantics to
every generator.  The default interpretation of a signature reads both off the
declarations; law suites also sample random finite interpretations over the
same syntax.

`evaluate` runs a term on a concrete input tuple and counts work: one counter
bump per generator application, one copy per duplicated wire.  Identities,
deletions, swaps and projections are free.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .signature import Carrier, FiniteCarrier, Generator, Obj, RealVector, Signature, Sort
from .term import Copy, Delete, Gen, Id, Proj1, Proj2, Seq, Swap, Ten, Term, TermTypeError

TUPLE_CAP = 10**6


class EnumerationCapError(RuntimeError):
    """Exhaustive enumeration would exceed the input-tuple cap."""


class UnsupportedInterpretation(RuntimeError):
    """The requested operation needs finite carriers."""


class CarrierMismatch(ValueError):
    """A value does not inhabit the carrier it was used at."""


@dataclass
class CostReport:
    generator_counts: Counter = field(default_factory=Counter)
    copies: int = 0
    peak_residual_slots: int = 0
    peak_residual_bytes: int = 0

    def total_evals(self, names=None) -> int:
        if names is None:
            return sum(self.generator_counts.values())
        return sum(v for k, v in self.generator_counts.items() if k in names)

    def to_json(self) -> dict:
        return {
            "generator_counts": dict(sorted(self.generator_counts.items())),
            "copies": self.copies,
            "peak_residual_slots": self.peak_residual_slots,
            "peak_residual_bytes": self.peak_residual_bytes,
        }


def carrier_bytes(c: Carrier) -> int:
    if isinstance(c, FiniteCarrier):
        return 1
    return 8 * c.dimension


class Interp:
    """Carrier and semantics assignment, possibly overriding declarations."""

    def __init__(
        self,
        carriers: dict[str, Carrier] | None = None,
        tables: dict[str, tuple[tuple[int, ...], ...]] | None = None,
        fns: dict[str, Callable[[tuple], tuple]] | None = None,
    ):
        self.carriers = dict(carriers or {})
        self.tables = dict(tables or {})
        self.fns = dict(fns or {})

    @staticmethod
    def from_signature(sig: Signature) -> "Interp":
        tables = {g.name: g.table for g in sig.generators if g.table is not None}
        fns = {g.name: g.fn for g in sig.generators if g.fn is not None}
        return Interp(carriers={}, tables=tables, fns=fns)

    def carrier_of(self, sort: Sort) -> Carrier:
        return self.carriers.get(sort.name, sort.carrier)

    def size_of(self, sort: Sort) -> int:
        c = self.carrier_of(sort)
        if not isinstance(c, FiniteCarrier):
            raise UnsupportedInterpretation(f"sort {sort.name} is not finite here")
        return c.size

    def is_finite(self, obj: Obj) -> bool:
        return all(isinstance(self.carrier_of(s), FiniteCarrier) for s in obj)

    def apply(self, gen: Generator, args: tuple) -> tuple:
        table = self.tables.get(gen.name)
        if table is not None:
            idx = 0
            for v, s in zip(args, gen.dom):
                idx = idx * self.size_of(s) + v
            return tuple(table[idx])
        fn = self.fns.get(gen.name)
        if fn is None:
            raise UnsupportedInterpretation(f"no semantics for generator {gen.name}")
        return tuple(fn(args))

    def obj_bytes(self, obj: Obj) -> int:
        return sum(carrier_bytes(self.carrier_of(s)) for s in obj)


def check_values(obj: Obj, values: tuple, interp: Interp, what: str = "input") -> None:
    """Validate a value tuple against an object's carriers."""
    if len(values) != len(obj):
        raise CarrierMismatch(f"{what}: expected {len(obj)} values for {obj}, got {len(values)}")
    for v, s in zip(values, obj):
        c = interp.carrier_of(s)
        if isinstance(c, FiniteCarrier):
            if not (isinstance(v, (int, np.integer)) and 0 <= v < c.size):
                raise CarrierMismatch(f"{what}: value {v!r} not in finite carrier of {s.name}")
        else:
            arr = np.asarray(v)
            if arr.shape != (c.dimension,):
                raise CarrierMismatch(
                    f"{what}: value for {s.name} has shape {arr.shape}, expected ({c.dimension},)"
                )


def evaluate(t: Term, values: tuple, interp: Interp, report: CostReport | None = None) -> tuple:
    """Run a term on a value tuple, counting generator applications and copies."""
    if report is None:
        report = CostReport()
    check_values(t.dom, values, interp)
    return _eval(t, tuple(values), interp, report)


def _eval(t: Term, xs: tuple, interp: Interp, report: CostReport) -> tuple:
    if isinstance(t, Gen):
        report.generator_counts[t.gen.name] += 1
        out = interp.apply(t.gen, xs)
        if len(out) != len(t.gen.cod):
            raise CarrierMismatch(
                f"generator {t.gen.name} returned {len(out)} values, expected {len(t.gen.cod)}"
            )
        return out
    if isinstance(t, Id):
        return xs
    if isinstance(t, Seq):
        return _eval(t.right, _eval(t.left, xs, interp, report), interp, report)
    if isinstance(t, Ten):
        k = len(t.left.dom)
        return _eval(t.left, xs[:k], interp, report) + _eval(t.right, xs[k:], interp, report)
    if isinstance(t, Copy):
        report.copies += len(t.obj)
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


def enumerate_inputs(obj: Obj, interp: Interp, cap: int = TUPLE_CAP) -> Iterator[tuple]:
    """All value tuples of a finite object, row-major, capped."""
    sizes = []
    for s in obj:
        c = interp.carrier_of(s)
        if not isinstance(c, FiniteCarrier):
            raise UnsupportedInterpretation(f"sort {s.name} is not finite here")
        sizes.append(c.size)
    count = math.prod(sizes)
    if count > cap:
        raise EnumerationCapError(f"{count} input tuples for {obj} exceeds the cap of {cap}")
    return itertools.product(*[range(n) for n in sizes])


def extensional_counterexample(f: Term, g: Term, interp: Interp) -> tuple | None:
    """First input where f and g disagree under a finite interpretation."""
    if f.dom != g.dom or f.cod != g.cod:
        raise TermTypeError(
            f"extensional comparison needs equal boundaries: "
            f"({f.dom} -> {f.cod}) vs ({g.dom} -> {g.cod})"
        )
    throwaway = CostReport()
    for xs in enumerate_inputs(f.dom, interp):
        if _eval(f, xs, interp, throwaway) != _eval(g, xs, interp, throwaway):
            return xs
    return None


def eq_extensional(f: Term, g: Term, interp: Interp) -> bool:
    """Exhaustive extensional equality over finite carriers (never sampled)."""
    return extensional_counterexample(f, g, interp) is None
