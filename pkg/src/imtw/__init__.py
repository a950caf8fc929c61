"""Exact tree-independence number and induced matching treewidth at desk
scale, the decomposition transformation for ``K_{t,t}``-free graphs, the
layered coloring algorithm, and the Ramsey extraction routines behind them."""

from .coloring import Coloring, Layering, TraceNode, bfs_layering, color_with_bound, combine, minimal_dominator, split_AB
from .config import Caps, caps_override, get_caps, set_caps
from .decomposition import (
    TreeDecomposition,
    Violation,
    alpha_of,
    from_elimination_ordering,
    is_valid,
    mu_of,
    restrict,
    single_bag,
    validate,
    vertex_subtree,
)
from .errors import (
    BaseCaseViolation,
    CapExceeded,
    FormatError,
    GraphError,
    ImtwError,
    InvalidDecomposition,
    PreconditionError,
)
from .formats import parse_gr, parse_td, write_gr, write_td
from .generators import (
    GenSpec,
    gen_biclique,
    gen_cycle,
    gen_path,
    gen_random_chordal,
    gen_random_graph,
    gen_subdivided_biclique,
    gen_t_obstruction,
    generate,
)
from .graph import (
    BicliqueWitness,
    Graph,
    ObstructionWitness,
    build_graph,
    chromatic_number_exact,
    clique_number,
    find_induced_biclique,
    find_t_obstruction,
    independence_number,
    is_induced_matching,
    max_bipartite_matching,
    max_independent_set,
    max_induced_matching_touching,
    neighborhood,
)
from .kernels import HAVE_COMPILED, backend, set_backend, use_backend
from .oracles import (
    OracleConfig,
    OracleResult,
    WitnessReport,
    induced_matching_treewidth,
    tree_independence_number,
    verify_mu_at_most,
)
from .ramsey import (
    BigCount,
    CompleteEdgeColoring,
    bound_C,
    bound_f,
    bound_K,
    bound_M,
    bound_N,
    extract_im_or_biclique,
    find_monochromatic_clique,
    joint_independent_set,
    ramsey_upper,
)
from .transform import build_tprime, check_claims, classify_light_heavy, refutation_witness, theorem3_pipeline

__version__ = "0.1.0"

__all__ = [
    "BaseCaseViolation",
    "BicliqueWitness",
    "BigCount",
    "CapExceeded",
    "Caps",
    "Coloring",
    "CompleteEdgeColoring",
    "FormatError",
    "GenSpec",
    "Graph",
    "GraphError",
    "HAVE_COMPILED",
    "ImtwError",
    "InvalidDecomposition",
    "Layering",
    "ObstructionWitness",
    "OracleConfig",
    "OracleResult",
    "PreconditionError",
    "TraceNode",
    "TreeDecomposition",
    "Violation",
    "WitnessReport",
    "alpha_of",
    "backend",
    "bfs_layering",
    "bound_C",
    "bound_K",
    "bound_M",
    "bound_N",
    "bound_f",
    "build_graph",
    "build_tprime",
    "caps_override",
    "check_claims",
    "chromatic_number_exact",
    "classify_light_heavy",
    "clique_number",
    "color_with_bound",
    "combine",
    "extract_im_or_biclique",
    "find_induced_biclique",
    "find_monochromatic_clique",
    "find_t_obstruction",
    "from_elimination_ordering",
    "gen_biclique",
    "gen_cycle",
    "gen_path",
    "gen_random_chordal",
    "gen_random_graph",
    "gen_subdivided_biclique",
    "gen_t_obstruction",
    "generate",
    "get_caps",
    "independence_number",
    "induced_matching_treewidth",
    "is_induced_matching",
    "is_valid",
    "joint_independent_set",
    "max_bipartite_matching",
    "max_independent_set",
    "max_induced_matching_touching",
    "minimal_dominator",
    "mu_of",
    "neighborhood",
    "parse_gr",
    "parse_td",
    "ramsey_upper",
    "refutation_witness",
    "restrict",
    "set_backend",
    "set_caps",
    "single_bag",
    "split_AB",
    "theorem3_pipeline",
    "tree_independence_number",
    "use_backend",
    "validate",
    "verify_mu_at_most",
    "vertex_subtree",
    "write_gr",
    "write_td",
]
