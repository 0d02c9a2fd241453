"""Sorts, objects, generators and signatures of the term language.

An object is a finite list of sorts and the monoidal product is list
concatenation, so associativity and unitality of the tensor hold on the nose.
Generators declare their boundary objects together with default semantics:
a total lookup table for finite carriers, or a vector function for real
carriers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Iterable

SIGNATURE_FORMAT_VERSION = "1"


class SignatureError(ValueError):
    """Raised for malformed signatures or signature files."""


@dataclass(frozen=True)
class FiniteCarrier:
    """A finite set {0, ..., size-1}."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise SignatureError(f"finite carrier size must be >= 1, got {self.size}")


@dataclass(frozen=True)
class RealVector:
    """A real vector space of fixed dimension, values are float64 arrays."""

    dimension: int

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise SignatureError(f"real carrier dimension must be >= 1, got {self.dimension}")


Carrier = FiniteCarrier | RealVector


@dataclass(frozen=True)
class Sort:
    name: str
    carrier: Carrier


@dataclass(frozen=True)
class Obj:
    """An ordered list of sorts; `a @ b` concatenates."""

    sorts: tuple[Sort, ...] = ()

    @staticmethod
    def of(*sorts: Sort) -> "Obj":
        return Obj(tuple(sorts))

    def __matmul__(self, other: "Obj") -> "Obj":
        return Obj(self.sorts + other.sorts)

    def __len__(self) -> int:
        return len(self.sorts)

    def __iter__(self):
        return iter(self.sorts)

    def __getitem__(self, ix):
        if isinstance(ix, slice):
            return Obj(self.sorts[ix])
        return self.sorts[ix]

    def __str__(self) -> str:
        if not self.sorts:
            return "1"
        return " * ".join(s.name for s in self.sorts)


UNIT = Obj()


@dataclass(frozen=True)
class Generator:
    """A primitive morphism dom -> cod.

    Exactly one of `table` and `fn` gives the default semantics.  A table has
    one row per input tuple, enumerated in row-major order over the declared
    finite carriers (last coordinate fastest); each row lists one value per
    output sort.  `fn` takes a tuple of float64 arrays and returns one.
    """

    name: str
    dom: Obj
    cod: Obj
    table: tuple[tuple[int, ...], ...] | None = None
    fn: Callable[[tuple], tuple] | None = None

    def __post_init__(self) -> None:
        if len(self.cod) == 0:
            raise SignatureError(f"generator {self.name}: codomain must be non-empty")
        if (self.table is None) == (self.fn is None):
            raise SignatureError(f"generator {self.name}: exactly one of table/fn required")
        if self.table is not None:
            check_table(self.name, self.dom, self.cod, self.table)


def check_table(name: str, dom: Obj, cod: Obj, table: tuple[tuple[int, ...], ...]) -> None:
    """Check a finite lookup table for totality and well-typedness."""
    sizes = []
    for s in dom:
        if not isinstance(s.carrier, FiniteCarrier):
            raise SignatureError(f"generator {name}: table given but sort {s.name} is not finite")
        sizes.append(s.carrier.size)
    for s in cod:
        if not isinstance(s.carrier, FiniteCarrier):
            raise SignatureError(f"generator {name}: table given but sort {s.name} is not finite")
    want = math.prod(sizes)
    if len(table) != want:
        raise SignatureError(f"generator {name}: table has {len(table)} rows, expected {want}")
    for i, row in enumerate(table):
        if len(row) != len(cod):
            raise SignatureError(
                f"generator {name}: table row {i} has {len(row)} entries, expected {len(cod)}"
            )
        for v, s in zip(row, cod):
            assert isinstance(s.carrier, FiniteCarrier)
            if not (isinstance(v, int) and 0 <= v < s.carrier.size):
                raise SignatureError(
                    f"generator {name}: table row {i} value {v!r} out of range for sort {s.name}"
                )


@dataclass(frozen=True)
class Signature:
    sorts: tuple[Sort, ...]
    generators: tuple[Generator, ...]

    def __post_init__(self) -> None:
        by_sort: dict[str, Sort] = {}
        for s in self.sorts:
            if s.name in by_sort:
                raise SignatureError(f"duplicate sort name {s.name}")
            by_sort[s.name] = s
        by_gen: dict[str, Generator] = {}
        for g in self.generators:
            if g.name in by_gen:
                raise SignatureError(f"duplicate generator name {g.name}")
            for s in tuple(g.dom) + tuple(g.cod):
                if by_sort.get(s.name) != s:
                    raise SignatureError(f"generator {g.name}: unknown sort {s.name}")
            by_gen[g.name] = g
        object.__setattr__(self, "_sorts_by_name", by_sort)
        object.__setattr__(self, "_gens_by_name", by_gen)

    def sort(self, name: str) -> Sort:
        try:
            return self._sorts_by_name[name]  # type: ignore[attr-defined]
        except KeyError:
            raise SignatureError(f"unknown sort {name}") from None

    def generator(self, name: str) -> Generator:
        try:
            return self._gens_by_name[name]  # type: ignore[attr-defined]
        except KeyError:
            raise SignatureError(f"unknown generator {name}") from None

    def has_generator(self, name: str) -> bool:
        return name in self._gens_by_name  # type: ignore[attr-defined]

    def obj(self, *names: str) -> Obj:
        return Obj(tuple(self.sort(n) for n in names))


def _parse_carrier(raw: object, where: str) -> Carrier:
    if not isinstance(raw, dict) or len(raw) != 1:
        raise SignatureError(f"{where}: carrier must be {{\"finite\": n}} or {{\"real\": n}}")
    (kind, value), = raw.items()
    if not isinstance(value, int):
        raise SignatureError(f"{where}: carrier size/dimension must be an integer")
    if kind == "finite":
        return FiniteCarrier(value)
    if kind == "real":
        return RealVector(value)
    raise SignatureError(f"{where}: unknown carrier kind {kind!r}")


def parse_signature(data: dict) -> Signature:
    """Build a Signature from decoded JSON, with location-bearing errors."""
    if not isinstance(data, dict):
        raise SignatureError("signature: top level must be an object")
    sorts = []
    for i, raw in enumerate(data.get("sorts", [])):
        where = f"sorts[{i}]"
        if not isinstance(raw, dict) or "name" not in raw or "carrier" not in raw:
            raise SignatureError(f"{where}: expected {{name, carrier}}")
        sorts.append(Sort(str(raw["name"]), _parse_carrier(raw["carrier"], where)))
    by_name = {s.name: s for s in sorts}

    def lookup_obj(names: object, where: str) -> Obj:
        if not isinstance(names, list):
            raise SignatureError(f"{where}: expected a list of sort names")
        out = []
        for n in names:
            if n not in by_name:
                raise SignatureError(f"{where}: unknown sort {n!r}")
            out.append(by_name[n])
        return Obj(tuple(out))

    gens = []
    for i, raw in enumerate(data.get("generators", [])):
        where = f"generators[{i}]"
        if not isinstance(raw, dict) or "name" not in raw:
            raise SignatureError(f"{where}: expected a generator object with a name")
        name = str(raw["name"])
        dom = lookup_obj(raw.get("dom", []), f"{where}.dom")
        cod = lookup_obj(raw.get("cod", []), f"{where}.cod")
        if "table" in raw:
            t = raw["table"]
            if not isinstance(t, list) or not all(isinstance(r, list) for r in t):
                raise SignatureError(f"{where}.table: expected a list of rows")
            table = tuple(tuple(int(v) for v in row) for row in t)
            try:
                gens.append(Generator(name, dom, cod, table=table))
            except SignatureError as e:
                raise SignatureError(f"{where}: {e}") from None
        elif "builtin" in raw:
            from . import primitives

            try:
                fn = primitives.resolve(str(raw["builtin"]), dom, cod)
            except SignatureError as e:
                raise SignatureError(f"{where}: {e}") from None
            gens.append(Generator(name, dom, cod, fn=fn))
        else:
            raise SignatureError(f"{where}: one of table/builtin required")
    return Signature(tuple(sorts), tuple(gens))


def load_signature(path: str) -> Signature:
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise SignatureError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None
    return parse_signature(data)


def carrier_to_json(c: Carrier) -> dict:
    if isinstance(c, FiniteCarrier):
        return {"finite": c.size}
    return {"real": c.dimension}


def signature_to_json(sig: Signature) -> dict:
    gens = []
    for g in sig.generators:
        entry: dict = {"name": g.name, "dom": [s.name for s in g.dom], "cod": [s.name for s in g.cod]}
        if g.table is not None:
            entry["table"] = [list(r) for r in g.table]
        else:
            entry["builtin"] = getattr(g.fn, "builtin_name", "<fn>")
        gens.append(entry)
    return {
        "sorts": [{"name": s.name, "carrier": carrier_to_json(s.carrier)} for s in sig.sorts],
        "generators": gens,
    }


def dump_signature(sig: Signature, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(signature_to_json(sig), f, indent=2, sort_keys=True)
        f.write("\n")
