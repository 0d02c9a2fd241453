"""Bidirectional morphisms over free cartesian categories.

Terms over a finite signature form a cartesian category with a decidable
equality (canonical forms).  On top of that base this package provides two
presentations of bidirectional processes: lenses, which recompute their
forward pass inside the backward pass, and optics, which store a residual
instead.  Structure maps between optics compare the two, an erase/reify
bridge moves between presentations, and cost instrumentation measures the
space-time tradeoff that separates them.
"""

from .bridge import (
    AdjunctionReport,
    CoherenceReport,
    LawResult,
    check_adjunction,
    check_oplax_coherence,
    coherence_suite,
    counit,
    erase,
    oplaxator,
    opunitor,
    reify,
)
from .cli import VERSION as __version__
from .cli import main
from .cost import (
    Chain,
    TradeoffRow,
    build_chain,
    chain_input,
    loop_cf_get_occurrences,
    rows_to_csv,
    run_tradeoff,
    validate_chain_vjps,
)
from .dag import DagNode, InputRef, NodeRef, SharedDag, evaluate_dag, share, share_cf
from .expr import ExprError, parse_term
from .interp import (
    TUPLE_CAP,
    CarrierMismatch,
    CostReport,
    EnumerationCapError,
    Interp,
    UnsupportedInterpretation,
    check_values,
    enumerate_inputs,
    eq_extensional,
    evaluate,
    extensional_counterexample,
)
from .lens import Lens, compose_chain, lens_compose, lens_exec, lens_id, lens_normal_eq
from .normal import (
    App,
    CanonicalForm,
    Var,
    gen_occurrences,
    normal_eq,
    normalize,
    read_back,
)
from .optic import (
    Optic,
    compose_optic_chain,
    loop_term,
    optic_compose,
    optic_exec,
    optic_id,
    optic_normal_eq,
    response_term,
    round_trip_term,
)
from .signature import (
    SIGNATURE_FORMAT_VERSION,
    FiniteCarrier,
    Generator,
    Obj,
    RealVector,
    Signature,
    SignatureError,
    Sort,
    UNIT,
    dump_signature,
    load_signature,
    parse_signature,
    signature_to_json,
)
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
    TermTypeError,
    compose,
    graph,
    pairing,
    select_wire,
    structural_form,
    structurally_equal,
    tensor,
    term_to_expr,
)
from .twocell import (
    HomCatSample,
    NormalizerDisagreement,
    TwoCell,
    TwoCellError,
    enumerate_morphisms,
    find_witnesses,
    hcompose,
    identity_cell,
    mk_two_cell,
    pi0_classes,
    search_cells,
    vcompose,
)

__all__ = [
    "AdjunctionReport",
    "App",
    "CanonicalForm",
    "CarrierMismatch",
    "Chain",
    "CoherenceReport",
    "Copy",
    "CostReport",
    "DagNode",
    "Delete",
    "EnumerationCapError",
    "ExprError",
    "FiniteCarrier",
    "Gen",
    "Generator",
    "HomCatSample",
    "Id",
    "InputRef",
    "Interp",
    "LawResult",
    "Lens",
    "NodeRef",
    "NormalizerDisagreement",
    "Obj",
    "Optic",
    "Proj1",
    "Proj2",
    "RealVector",
    "Seq",
    "SharedDag",
    "Signature",
    "SignatureError",
    "Sort",
    "Swap",
    "Ten",
    "Term",
    "TermTypeError",
    "TradeoffRow",
    "TwoCell",
    "TwoCellError",
    "UNIT",
    "UnsupportedInterpretation",
    "SIGNATURE_FORMAT_VERSION",
    "TUPLE_CAP",
    "build_chain",
    "chain_input",
    "check_adjunction",
    "check_oplax_coherence",
    "check_values",
    "coherence_suite",
    "compose",
    "compose_chain",
    "compose_optic_chain",
    "counit",
    "dump_signature",
    "enumerate_inputs",
    "enumerate_morphisms",
    "eq_extensional",
    "erase",
    "evaluate",
    "evaluate_dag",
    "extensional_counterexample",
    "find_witnesses",
    "gen_occurrences",
    "graph",
    "hcompose",
    "identity_cell",
    "lens_compose",
    "lens_exec",
    "lens_id",
    "lens_normal_eq",
    "load_signature",
    "loop_cf_get_occurrences",
    "loop_term",
    "main",
    "mk_two_cell",
    "normal_eq",
    "normalize",
    "oplaxator",
    "optic_compose",
    "optic_exec",
    "optic_id",
    "optic_normal_eq",
    "opunitor",
    "pairing",
    "parse_signature",
    "parse_term",
    "pi0_classes",
    "read_back",
    "reify",
    "response_term",
    "rows_to_csv",
    "round_trip_term",
    "run_tradeoff",
    "search_cells",
    "select_wire",
    "share",
    "share_cf",
    "signature_to_json",
    "structural_form",
    "structurally_equal",
    "tensor",
    "term_to_expr",
    "validate_chain_vjps",
    "vcompose",
    "Var",
    "__version__",
]
