"""Exact tree-independence number and induced matching treewidth.

Why minimising over elimination orderings is exact: completing every bag of
an arbitrary decomposition T to a clique gives a chordal supergraph H of G.
A minimal triangulation H' of G with H' inside H has every maximal clique
contained in some bag of T (Helly property of subtrees).  Both functionals
are monotone under shrinking bags (an independent subset of a smaller bag is
independent in the larger one; a matching touching a subset touches the
superset), and every minimal triangulation is the fill-in graph of some
elimination ordering, whose canonical decomposition has the maximal cliques
of H' as its maximal bags.  So some ordering does at least as well as T.

The search itself lives in the kernels (``order_search``): lexicographic
depth-first over orderings with bound and eliminated-set pruning, returning
the first ordering in lexicographic order that attains the minimum.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .config import check_cap, get_caps
from .decomposition import (
    TreeDecomposition,
    alpha_of,
    from_elimination_ordering,
    mu_of,
    require_valid,
)
from .graph import Graph, bits, max_induced_matching_touching_mask
from .kernels import ALPHA, MU, backend, make_kernel


@dataclass(frozen=True)
class OracleConfig:
    max_n: int = 9
    workers: int = 1
    symmetry_pruning: bool = False

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: TreeDecomposition
    order: tuple
    explored_orderings: int


@dataclass(frozen=True)
class WitnessReport:
    """Certificate returned by checkers and extractors.

    ``kind`` is ``"induced_matching"``, ``"biclique"``, ``"axiom"`` or
    ``"bound"``.
    """

    kind: str
    node: Optional[int] = None
    matching: Optional[tuple] = None
    biclique: Optional[object] = None
    message: str = ""

    def to_json(self, offset: int = 0) -> dict:
        out = {"kind": self.kind, "message": self.message}
        if self.node is not None:
            out["node"] = self.node + offset
        if self.matching is not None:
            out["matching"] = [[u + offset, v + offset] for u, v in self.matching]
        if self.biclique is not None:
            out["biclique"] = self.biclique.to_json(offset)
        return out


def _orbit_representatives(G: Graph) -> int:
    """Mask of the smallest vertex of each automorphism orbit."""
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    reps = 0
    placed = set()
    for r in range(G.n):
        if r in placed:
            continue
        reps |= 1 << r
        placed.add(r)
        for v in range(r + 1, G.n):
            if v in placed or G.degree(v) != G.degree(r):
                continue
            A = H.copy()
            B = H.copy()
            nx.set_node_attributes(A, {r: 1}, "mark")
            nx.set_node_attributes(B, {v: 1}, "mark")
            gm = GraphMatcher(A, B, node_match=lambda a, b: a.get("mark") == b.get("mark"))
            if gm.is_isomorphic():
                placed.add(v)
    return reps


def _block_search(args):
    n, adj, param, first, name = args
    return make_kernel(n, adj, name).order_search(param, first)


def _search(G: Graph, param: int, cfg: OracleConfig):
    check_cap("ordering oracle", G.n, min(cfg.max_n, get_caps().oracle_n))
    firsts = G.full_mask
    if cfg.symmetry_pruning:
        firsts = _orbit_representatives(G)
    if cfg.workers == 1 or G.n <= 1:
        return G.kernel.order_search(param, firsts)
    # contiguous blocks: all orderings starting with a given vertex
    jobs = [(G.n, G.adj, param, 1 << v, backend()) for v in bits(firsts)]
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        results = list(pool.map(_block_search, jobs))
    value = min(r[0] for r in results)
    order = next(r[1] for r in results if r[0] == value)
    return value, order, sum(r[2] for r in results)


def _run(G: Graph, param: int, cfg: Optional[OracleConfig]) -> OracleResult:
    cfg = cfg or OracleConfig()
    value, order, explored = _search(G, param, cfg)
    witness = from_elimination_ordering(G, order)
    measured = alpha_of(G, witness) if param == ALPHA else mu_of(G, witness)
    if measured != value:
        raise AssertionError(f"oracle witness measures {measured}, search reported {value}")
    return OracleResult(value, witness, tuple(order), explored)


def tree_independence_number(G: Graph, cfg: Optional[OracleConfig] = None) -> OracleResult:
    return _run(G, ALPHA, cfg)


def induced_matching_treewidth(G: Graph, cfg: Optional[OracleConfig] = None) -> OracleResult:
    return _run(G, MU, cfg)


def verify_mu_at_most(G: Graph, T: TreeDecomposition, mu: int) -> Optional[WitnessReport]:
    """``None`` when ``mu(T) <= mu``; else the first offending node with a
    touching induced matching of exactly ``mu + 1`` edges."""
    require_valid(G, T)
    if 2 * mu >= G.n:
        return None
    for x, bag in enumerate(T.bags):
        size, matching = max_induced_matching_touching_mask(G, G.mask(bag))
        if size > mu:
            return WitnessReport(
                "induced_matching",
                node=x,
                matching=tuple(matching[: mu + 1]),
                message=f"bag {x} is touched by an induced matching of size {size} > {mu}",
            )
    return None
