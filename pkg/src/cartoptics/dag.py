"""Hash-consed evaluation DAGs: compute once, copy the result.

`share` normalizes a term and then interns every (generator, arguments)
application, so syntactically repeated work in the canonical form collapses to
a single node.  This is the exhaustive form of the rewrite that pushes a copy
past a morphism (duplicate the output instead of running the morphism twice):
the node count never exceeds the number of generator occurrences in the
canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .interp import CarrierMismatch, CostReport, Interp, check_values
from .normal import App, CanonicalForm, Var, WireTerm, normalize
from .signature import Generator, Obj
from .term import Term


@dataclass(frozen=True)
class InputRef:
    wire: int


@dataclass(frozen=True)
class NodeRef:
    node: int
    out: int


Ref = InputRef | NodeRef


@dataclass(frozen=True)
class DagNode:
    gen: Generator
    args: tuple[Ref, ...]


@dataclass(frozen=True)
class SharedDag:
    dom: Obj
    cod: Obj
    nodes: tuple[DagNode, ...]
    outputs: tuple[Ref, ...]

    def gen_node_count(self, names=None) -> int:
        if names is None:
            return len(self.nodes)
        return sum(1 for n in self.nodes if n.gen.name in names)

    def to_json(self) -> dict:
        def ref(r: Ref):
            if isinstance(r, InputRef):
                return {"input": r.wire}
            return {"node": r.node, "out": r.out}

        return {
            "nodes": [{"gen": n.gen.name, "args": [ref(a) for a in n.args]} for n in self.nodes],
            "outputs": [ref(r) for r in self.outputs],
        }


def share_cf(cf: CanonicalForm) -> SharedDag:
    nodes: list[DagNode] = []
    node_ids: dict[DagNode, int] = {}
    memo: dict[WireTerm, Ref] = {}

    def intern(w: WireTerm) -> Ref:
        hit = memo.get(w)
        if hit is not None:
            return hit
        if isinstance(w, Var):
            ref: Ref = InputRef(w.index)
        else:
            key = DagNode(w.gen, tuple(intern(a) for a in w.args))
            node_id = node_ids.get(key)
            if node_id is None:
                node_id = len(nodes)
                nodes.append(key)
                node_ids[key] = node_id
            ref = NodeRef(node_id, w.out_index)
        memo[w] = ref
        return ref

    outputs = tuple(intern(w) for w in cf.wires)
    return SharedDag(cf.dom, cf.cod, tuple(nodes), outputs)


def share(t: Term) -> SharedDag:
    return share_cf(normalize(t))


def evaluate_dag(dag: SharedDag, values: tuple, interp: Interp, report: CostReport | None = None) -> tuple:
    """Evaluate every node exactly once, in interning order."""
    if report is None:
        report = CostReport()
    check_values(dag.dom, values, interp)
    values = tuple(values)
    results: list[tuple] = []

    def deref(r: Ref):
        if isinstance(r, InputRef):
            return values[r.wire]
        return results[r.node][r.out]

    for node in dag.nodes:
        args = tuple(deref(a) for a in node.args)
        report.generator_counts[node.gen.name] += 1
        out = interp.apply(node.gen, args)
        if len(out) != len(node.gen.cod):
            raise CarrierMismatch(
                f"generator {node.gen.name} returned {len(out)} values, "
                f"expected {len(node.gen.cod)}"
            )
        results.append(out)
    return tuple(deref(r) for r in dag.outputs)
