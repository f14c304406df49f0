"""lckit: local complementation on simple graphs, local-equivalence
decisions over GF(2), and compilation of restricted Boolean circuits into
graph-sequence structures evaluated through local complementations."""

from .backend import backend_name
from .circuit import (
    Circuit,
    Gate,
    GateKind,
    LayeredCircuit,
    LayerKind,
    LayerNode,
    emit_netlist,
    evaluate,
    evaluate_layered,
    levelize,
    normalize,
    parse_netlist,
)
from .errors import LckitError
from .gadgets import (
    Gadget,
    and_gadget,
    copy_gadget,
    dup_gadget,
    gadget_by_name,
    is_circle_graph,
    not_gadget,
    run_gadget,
    run_gadget_graph,
    word_interleaving_graph,
)
from .gf2 import BitMatrix, BitVector, matvec, nullspace_basis, rank, rref, vec_add
from .graph import (
    Graph,
    MixedOp,
    QueryMode,
    StarCompleteState,
    StarKind,
    apply_mixed_sequence,
    apply_sequence,
    build_graph,
    delete_vertex,
    format_dot,
    format_graph_text,
    local_complement,
    orbit,
    parse_graph_text,
    query,
    star_complete_graph,
    star_complete_track,
    subgraph_complement,
    with_edges,
)
from .gss import (
    GSS,
    GssBuilder,
    compile_circuit,
    compile_circuit_trace,
    format_gss_text,
    lcp_decide,
    parse_gss_text,
    simulate_gss,
)
from .lep import (
    BouchetSystem,
    LepVerdict,
    build_system,
    satisfies_nonlinear,
    solve_lep,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BitVector",
    "BouchetSystem",
    "Circuit",
    "GSS",
    "Gadget",
    "Gate",
    "GateKind",
    "Graph",
    "GssBuilder",
    "LayerKind",
    "LayerNode",
    "LayeredCircuit",
    "LckitError",
    "LepVerdict",
    "MixedOp",
    "QueryMode",
    "StarCompleteState",
    "StarKind",
    "and_gadget",
    "apply_mixed_sequence",
    "apply_sequence",
    "backend_name",
    "build_graph",
    "build_system",
    "compile_circuit",
    "compile_circuit_trace",
    "copy_gadget",
    "delete_vertex",
    "dup_gadget",
    "emit_netlist",
    "evaluate",
    "evaluate_layered",
    "format_dot",
    "format_graph_text",
    "format_gss_text",
    "gadget_by_name",
    "is_circle_graph",
    "lcp_decide",
    "levelize",
    "local_complement",
    "matvec",
    "normalize",
    "not_gadget",
    "nullspace_basis",
    "orbit",
    "parse_graph_text",
    "parse_gss_text",
    "parse_netlist",
    "query",
    "rank",
    "rref",
    "run_gadget",
    "run_gadget_graph",
    "satisfies_nonlinear",
    "simulate_gss",
    "solve_lep",
    "star_complete_graph",
    "star_complete_track",
    "subgraph_complement",
    "vec_add",
    "verify_witness",
    "with_edges",
    "word_interleaving_graph",
]
