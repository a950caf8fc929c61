"""Coloring graphs of small induced matching treewidth with a bounded number
of colors, given the decomposition.

The recursion follows the layering argument: a BFS layering grown from an
edge, a parity-tagged combination of per-layer colorings, and for each layer
beyond the first two a split into the part seen by the earlier layers'
subtree (one less unit of ``mu``) and the fringe, dominated by few vertices
of the previous layer whose neighbourhoods have smaller clique number.

Properness never depends on the parameters.  Only the color count does, and
an edge in a base-case subgraph certifies that the caller's ``mu`` or
``omega`` was wrong (:class:`~imtw.errors.BaseCaseViolation`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence

from .decomposition import TreeDecomposition, require_valid, restrict, steiner_nodes, subtree_union
from .errors import BaseCaseViolation, PreconditionError
from .graph import Graph, bits, to_set


@dataclass(frozen=True)
class Layering:
    layers: tuple  # of frozenset

    def index_of(self) -> dict:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}

    def check(self, G: Graph, vertices: Optional[Iterable[int]] = None) -> bool:
        target = G.full_mask if vertices is None else G.mask(vertices)
        where = self.index_of()
        if sum(len(layer) for layer in self.layers) != len(where):
            return False
        if G.mask(where) != target:
            return False
        return all(abs(where[u] - where[v]) <= 1 for u, v in G.edges() if u in where and v in where)


@dataclass
class Coloring:
    assignment: Dict[int, int]

    @property
    def color_count(self) -> int:
        return len(set(self.assignment.values()))

    def is_proper(self, G: Graph) -> bool:
        a = self.assignment
        return all(a[u] != a[v] for u, v in G.edges() if u in a and v in a)

    def conflicts(self, G: Graph) -> list:
        a = self.assignment
        return [(u, v) for u, v in G.edges() if u in a and v in a and a[u] == a[v]]


@dataclass
class TraceNode:
    kind: str  # root | component | L0 | L1 | A | B-dominator | base
    mu: int
    omega: int
    size: int
    colors: int = 0
    children: List["TraceNode"] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "mu": self.mu,
            "omega": self.omega,
            "size": self.size,
            "colors": self.colors,
            "children": [c.to_json() for c in self.children],
        }

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


def bfs_layering(G: Graph, u0: int, v0: int, vertices: Optional[Iterable[int]] = None) -> Layering:
    """Layers ``L_0 = {u0, v0}``, ``L_i = N(L_0 u ... u L_{i-1})`` inside ``G[vertices]``."""
    target = G.full_mask if vertices is None else G.mask(vertices)
    if not G.has_edge(u0, v0) or not (target >> u0) & 1 or not (target >> v0) & 1:
        raise PreconditionError(f"({u0}, {v0}) is not an edge of the graph")
    return Layering(tuple(to_set(m) for m in _layer_masks(G, target, u0, v0)))


def _layer_masks(G: Graph, target: int, u0: int, v0: int) -> list:
    seen = (1 << u0) | (1 << v0)
    layers = [seen]
    frontier = seen
    while True:
        nxt = 0
        for v in bits(frontier):
            nxt |= G.adj[v]
        nxt &= target & ~seen
        if not nxt:
            break
        layers.append(nxt)
        seen |= nxt
        frontier = nxt
    if seen != target:
        raise PreconditionError("graph is not connected")
    return layers


def combine(G: Graph, layering: Layering, per_layer: Sequence[Coloring]) -> Coloring:
    """Layer color ``c`` in layer ``i`` becomes ``2c + (i mod 2)``."""
    if len(per_layer) != len(layering.layers):
        raise PreconditionError("one coloring per layer is required")
    out = {}
    for i, (layer, col) in enumerate(zip(layering.layers, per_layer)):
        for v in layer:
            if v not in col.assignment:
                raise PreconditionError(f"vertex {v} of layer {i} is uncolored")
            out[v] = 2 * col.assignment[v] + (i & 1)
        sub = {v: col.assignment[v] for v in layer}
        for u in layer:
            for w in bits(G.adj[u] & G.mask(layer)):
                if sub[u] == sub[w]:
                    raise PreconditionError(f"layer {i} coloring is improper at ({u}, {w})")
    return Coloring(out)


def split_AB(G: Graph, T: TreeDecomposition, layering: Layering, i: int):
    """``(A, B, prime_nodes)`` for layer ``i >= 2``."""
    if i < 2:
        raise PreconditionError("the A/B split is defined for layers i >= 2")
    earlier = set()
    for layer in layering.layers[: i - 1]:
        earlier |= layer
    prime = subtree_union(T, earlier)
    layer = layering.layers[i] if i < len(layering.layers) else frozenset()
    A = frozenset(v for v in layer if any(v in T.bags[x] for x in prime))
    return A, layer - A, prime


def minimal_dominator(G: Graph, C: Iterable[int], pool: Iterable[int]):
    """Inclusion-minimal ``D`` inside ``pool`` with ``C`` inside ``N(D)``.

    Starts from all of ``pool`` and drops vertices from the highest index
    down, so ties keep the lowest indices.  Returns ``(D, private)`` where
    ``private[d]`` is a vertex of ``C`` whose only neighbour in ``D`` is ``d``.
    """
    c_mask = G.mask(C)
    pool_mask = G.mask(pool)
    cover = 0
    for d in bits(pool_mask):
        cover |= G.adj[d]
    if c_mask & ~cover:
        raise PreconditionError("pool does not dominate C")
    D = mask_D = pool_mask
    for d in sorted(bits(pool_mask), reverse=True):
        trial = mask_D & ~(1 << d)
        cov = 0
        for e in bits(trial):
            cov |= G.adj[e]
        if not c_mask & ~cov:
            mask_D = trial
    D = to_set(mask_D)
    private = {}
    for d in sorted(D):
        for v in bits(c_mask):
            if G.adj[v] & mask_D == 1 << d:
                private[d] = v
                break
        else:  # pragma: no cover - minimality guarantees a private neighbour
            raise AssertionError(f"dominator {d} has no private neighbour")
    return D, private


class _Colorer:
    def __init__(self, G: Graph):
        self.G = G

    def color(self, X: int, T: TreeDecomposition, mu: int, omega: int, node: TraceNode) -> Dict[int, int]:
        G = self.G
        if not X:
            return {}
        if mu == 0 or omega == 1:
            e = G.edge_in(X)
            if e is not None:
                raise BaseCaseViolation(e, mu, omega)
            node.colors = 1
            return {v: 0 for v in bits(X)}
        out = {}
        for comp in G.components(X):
            child = TraceNode("component", mu, omega, comp.bit_count())
            node.children.append(child)
            if comp.bit_count() == 1:
                col = {next(bits(comp)): 0}
            else:
                T_c = self._sub(T, comp)
                col = self._component(comp, T_c, mu, omega, child)
            child.colors = len(set(col.values()))
            out.update(col)
        node.colors = len(set(out.values()))
        return out

    def _sub(self, T: TreeDecomposition, Y: int) -> TreeDecomposition:
        ys = to_set(Y)
        nodes = steiner_nodes(T, subtree_union(T, ys))
        return restrict(self.G, T, nodes, ys)

    def _recurse(self, kind, Y, T, mu, omega, parent):
        child = TraceNode(kind, mu, omega, Y.bit_count())
        parent.children.append(child)
        col = self.color(Y, self._sub(T, Y), mu, omega, child) if Y else {}
        child.colors = len(set(col.values()))
        return col

    def _component(self, comp: int, T: TreeDecomposition, mu: int, omega: int, node: TraceNode):
        G = self.G
        u0, v0 = G.edge_in(comp)
        layers = _layer_masks(G, comp, u0, v0)
        per_layer = [{u0: 0, v0: 1}]
        node.children.append(TraceNode("L0", mu, omega, 2, 2))
        if len(layers) > 1:
            per_layer.append(self._dominated(layers[1], [u0, v0], comp, T, mu, omega, node, "L1"))
        for i in range(2, len(layers)):
            earlier = 0
            for m in layers[: i - 1]:
                earlier |= m
            prime = subtree_union(T, to_set(earlier))
            A = 0
            for v in bits(layers[i]):
                if any(v in T.bags[x] for x in prime):
                    A |= 1 << v
            B = layers[i] & ~A
            col = {}
            if A:
                child = TraceNode("A", mu - 1, omega, A.bit_count())
                node.children.append(child)
                col = self.color(A, restrict(G, T, prime, to_set(A)), mu - 1, omega, child)
                child.colors = len(set(col.values()))
            offset = max(col.values(), default=-1) + 1
            for part in G.components(B):
                D, _ = minimal_dominator(G, to_set(part), to_set(layers[i - 1]))
                sub = self._dominated(part, sorted(D), comp, T, mu, omega, node, "B-dominator")
                for v, c in sub.items():
                    col[v] = offset + c
            per_layer.append(col)
        out = {}
        for i, col in enumerate(per_layer):
            for v, c in col.items():
                out[v] = 2 * c + (i & 1)
        return out

    def _dominated(self, target, dominators, within, T, mu, omega, node, kind):
        """Color ``target`` from the colorings of ``N(d)`` for each dominator,
        each vertex taking its first dominator's disjoint palette block."""
        G = self.G
        col = {}
        offset = 0
        assigned = 0
        for d in dominators:
            mine = G.adj[d] & target & ~assigned
            if not mine:
                continue
            sub = self._recurse(kind, G.adj[d] & within, T, mu, omega - 1, node)
            for v in bits(mine):
                col[v] = offset + sub[v]
            offset += max(sub.values(), default=-1) + 1
            assigned |= mine
        return col


def color_with_bound(G: Graph, T: TreeDecomposition, mu: int, omega: int):
    """Proper coloring of ``G`` using at most ``bound_f(mu, omega)`` colors
    when ``mu(T) <= mu`` and the clique number is at most ``omega``.

    Returns ``(Coloring, TraceNode)``.
    """
    if mu < 0 or omega < 1:
        raise PreconditionError("need mu >= 0 and omega >= 1")
    require_valid(G, T)
    root = TraceNode("root", mu, omega, G.n)
    assignment = _Colorer(G).color(G.full_mask, T, mu, omega, root)
    col = Coloring(dict(sorted(assignment.items())))
    bad = col.conflicts(G)
    if bad or len(col.assignment) != G.n:  # pragma: no cover - construction is proper
        raise AssertionError(f"coloring is improper at {bad[:3]}")
    return col, root
