"""Tree decompositions: validation, width functionals, restriction, and the
fill-in construction from elimination orderings.

Decompositions are never trusted.  The width functionals validate their input
first, so anything parsed from a third-party ``.td`` file goes through the
same checks.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InvalidDecomposition, PreconditionError
from .graph import Graph, alpha_mask, bits, mu_mask, max_induced_matching_touching_mask


@dataclass(frozen=True)
class TreeDecomposition:
    node_count: int
    tree_edges: tuple  # ((x, y), ...)
    bags: tuple  # (frozenset, ...) one per node

    @classmethod
    def make(cls, bags: Sequence[Iterable[int]], tree_edges: Iterable = ()) -> "TreeDecomposition":
        bags = tuple(frozenset(b) for b in bags)
        edges = tuple(tuple(e) for e in tree_edges)
        return cls(len(bags), edges, bags)

    def adjacency(self) -> list:
        nbrs = [[] for _ in range(self.node_count)]
        for x, y in self.tree_edges:
            nbrs[x].append(y)
            nbrs[y].append(x)
        return nbrs

    def max_bag_size(self) -> int:
        return max((len(b) for b in self.bags), default=0)


@dataclass(frozen=True)
class Violation:
    """Why a decomposition is invalid.

    ``axiom`` is 1 (vertex coverage), 2 (edge coverage) or 3 (subtree
    connectivity); 0 means the structure itself is broken (not a tree, bag
    outside the vertex set).  ``message`` is a template over the index
    fields so it can be rendered 0- or 1-indexed.
    """

    axiom: int
    message: str
    vertex: Optional[int] = None
    edge: Optional[tuple] = None
    node: Optional[int] = None
    other_node: Optional[int] = None

    def text(self, offset: int = 0) -> str:
        def shift(x):
            return None if x is None else x + offset

        u, v = self.edge if self.edge is not None else (None, None)
        return self.message.format(
            vertex=shift(self.vertex), u=shift(u), v=shift(v), node=shift(self.node), other=shift(self.other_node)
        )

    def __str__(self):
        return f"axiom {self.axiom}: {self.text()}"

    def to_json(self, offset: int = 0) -> dict:
        out = {"axiom": self.axiom, "message": self.text(offset)}
        if self.vertex is not None:
            out["vertex"] = self.vertex + offset
        if self.edge is not None:
            out["edge"] = [self.edge[0] + offset, self.edge[1] + offset]
        if self.node is not None:
            out["node"] = self.node + offset
        return out


def _tree_problem(T: TreeDecomposition) -> Optional[Violation]:
    k = T.node_count
    if k == 0:
        return Violation(0, "decomposition has no nodes")
    if len(T.bags) != k:
        return Violation(0, "bag count differs from node count")
    for x, y in T.tree_edges:
        if not (0 <= x < k and 0 <= y < k) or x == y:
            return Violation(0, "tree edge ({node}, {other}) is invalid", node=x, other_node=y)
    if len(set(frozenset(e) for e in T.tree_edges)) != len(T.tree_edges):
        return Violation(0, "duplicate tree edge")
    if len(T.tree_edges) != k - 1:
        return Violation(0, f"{len(T.tree_edges)} tree edges on {k} nodes do not form a tree")
    if len(_reach(T.adjacency(), 0, set(range(k)))) != k:
        return Violation(0, "tree edges do not connect all nodes")
    return None


def _reach(nbrs, start, allowed) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in nbrs[x]:
            if y in allowed and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def validate(G: Graph, T: TreeDecomposition, vertices: Optional[Iterable[int]] = None) -> Optional[Violation]:
    """``None`` when ``T`` decomposes ``G[vertices]`` (default: all of G)."""
    problem = _tree_problem(T)
    if problem is not None:
        return problem
    target = G.full_mask if vertices is None else G.mask(vertices)
    holders = {}
    for x, bag in enumerate(T.bags):
        for v in bag:
            if not (0 <= v < G.n) or not (target >> v) & 1:
                return Violation(0, "bag of node {node} contains {vertex}, outside the vertex set", vertex=v, node=x)
            holders.setdefault(v, []).append(x)
    for v in bits(target):
        if v not in holders:
            return Violation(1, "vertex {vertex} is in no bag", vertex=v)
    bag_masks = [G.mask(b) for b in T.bags]
    for u in bits(target):
        for v in bits(G.adj[u] & target & ~((1 << (u + 1)) - 1)):
            pair = (1 << u) | (1 << v)
            if not any(b & pair == pair for b in bag_masks):
                return Violation(2, "edge ({u}, {v}) is in no bag", edge=(u, v))
    nbrs = T.adjacency()
    for v in sorted(holders):
        nodes = set(holders[v])
        if len(_reach(nbrs, holders[v][0], nodes)) != len(nodes):
            return Violation(3, "nodes holding vertex {vertex} are not connected", vertex=v)
    return None


def is_valid(G: Graph, T: TreeDecomposition, vertices=None) -> bool:
    return validate(G, T, vertices) is None


def require_valid(G: Graph, T: TreeDecomposition, vertices=None) -> TreeDecomposition:
    problem = validate(G, T, vertices)
    if problem is not None:
        raise InvalidDecomposition(problem)
    return T


def vertex_subtree(T: TreeDecomposition, v: int) -> frozenset:
    nodes = frozenset(x for x, bag in enumerate(T.bags) if v in bag)
    if not nodes:
        raise InvalidDecomposition(Violation(1, "vertex {vertex} is in no bag", vertex=v))
    return nodes


def alpha_of(G: Graph, T: TreeDecomposition) -> int:
    require_valid(G, T)
    return max(alpha_mask(G, G.mask(b)) for b in T.bags)


def mu_of(G: Graph, T: TreeDecomposition) -> int:
    require_valid(G, T)
    return max(mu_mask(G, G.mask(b)) for b in T.bags)


def bag_touching_matchings(G: Graph, T: TreeDecomposition) -> list:
    """Per node ``(size, matching)`` of a maximum touching induced matching."""
    return [max_induced_matching_touching_mask(G, G.mask(b)) for b in T.bags]


def steiner_nodes(T: TreeDecomposition, required: Iterable[int]) -> frozenset:
    """Smallest subtree of ``T`` containing every node in ``required``."""
    keep = set(required)
    if not keep:
        return frozenset()
    nbrs = [set(a) for a in T.adjacency()]
    alive = set(range(T.node_count))
    changed = True
    while changed:
        changed = False
        for x in sorted(alive - keep):
            if len(nbrs[x] & alive) <= 1:
                alive.discard(x)
                changed = True
    return frozenset(alive)


def subtree_union(T: TreeDecomposition, vertices: Iterable[int]) -> frozenset:
    vs = set(vertices)
    return frozenset(x for x, bag in enumerate(T.bags) if bag & vs)


def restrict(G: Graph, T: TreeDecomposition, nodes: Iterable[int], X: Iterable[int]) -> TreeDecomposition:
    """Decomposition of ``G[X]`` on the node subtree ``nodes``, bags cut to X.

    Nodes are renumbered in ascending order of their original index.
    """
    keep = sorted(set(nodes))
    X = frozenset(X)
    if not keep:
        raise PreconditionError("restriction needs at least one node")
    keep_set = set(keep)
    if len(_reach(T.adjacency(), keep[0], keep_set)) != len(keep):
        raise PreconditionError("restriction nodes do not induce a subtree")
    for v in X:
        if not any(v in T.bags[x] for x in keep):
            raise PreconditionError(f"vertex {v} has no node in the restriction subtree")
    index = {x: i for i, x in enumerate(keep)}
    edges = tuple(
        (index[x], index[y]) for x, y in T.tree_edges if x in keep_set and y in keep_set
    )
    out = TreeDecomposition(len(keep), edges, tuple(T.bags[x] & X for x in keep))
    return require_valid(G, out, X)


def fill_in_bags(G: Graph, order: Sequence[int]) -> list:
    """Bag of each vertex: itself plus its later neighbours in the fill graph."""
    adj = list(G.adj)
    bags = {}
    for v in order:
        nb = adj[v]
        bags[v] = nb | (1 << v)
        for w in bits(nb):
            adj[w] = (adj[w] | nb) & ~((1 << w) | (1 << v))
        adj[v] = 0
    return [bags[v] for v in order]


def from_elimination_ordering(G: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Node ``i`` holds the bag of ``order[i]``; it is attached to the node of
    its earliest later fill-neighbour.  Roots of the resulting forest (one per
    component) are attached to the last node, which is itself a root.
    """
    order = list(order)
    if sorted(order) != list(range(G.n)):
        raise PreconditionError("elimination ordering is not a permutation of the vertices")
    if G.n == 0:
        return single_bag(G)
    pos = {v: i for i, v in enumerate(order)}
    bag_masks = fill_in_bags(G, order)
    edges = []
    last = G.n - 1
    for i, v in enumerate(order):
        later = bag_masks[i] & ~(1 << v)
        if later:
            parent = min(pos[w] for w in bits(later))
            edges.append((i, parent))
        elif i != last:
            edges.append((i, last))
    T = TreeDecomposition(G.n, tuple(edges), tuple(frozenset(bits(b)) for b in bag_masks))
    return require_valid(G, T)


def single_bag(G: Graph) -> TreeDecomposition:
    return TreeDecomposition(1, (), (frozenset(range(G.n)),))
