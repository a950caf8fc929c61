"""Simple undirected graphs on vertices ``0..n-1`` and exact primitives.

Vertex subsets cross the public API as ``frozenset``; internally everything
is an ``int`` bitmask (one adjacency row per vertex).  All searches break
ties lexicographically on sorted vertex indices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .config import check_cap, get_caps
from .errors import GraphError, PreconditionError
from .kernels import make_kernel


def bits(mask: int):
    """Yield the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_set(mask: int) -> frozenset:
    return frozenset(bits(mask))


class Graph:
    """Immutable simple graph with dense bit-row adjacency."""

    __slots__ = ("n", "adj", "_kernel", "_edges")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError("adjacency length differs from vertex count")
        self.n = n
        self.adj = adj
        self._kernel = None
        self._edges = None

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        if self._edges is None:
            self._edges = [
                (u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))
            ]
        return list(self._edges)

    @property
    def m(self) -> int:
        return len(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> frozenset:
        return to_set(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def mask(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} not in graph on {self.n} vertices")
            m |= 1 << v
        return m

    def open_nbhd_mask(self, mask: int) -> int:
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def is_independent_mask(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def is_clique_mask(self, mask: int) -> bool:
        return all((self.adj[v] | (1 << v)) & mask == mask for v in bits(mask))

    def edge_in(self, mask: int) -> Optional[tuple]:
        """Lowest edge of ``G[mask]``, or ``None`` when it is edgeless."""
        for u in bits(mask):
            higher = self.adj[u] & mask & ~((1 << (u + 1)) - 1)
            if higher:
                return (u, (higher & -higher).bit_length() - 1)
        return None

    def components(self, mask: int) -> list:
        """Connected components of ``G[mask]`` as masks, by lowest vertex."""
        out = []
        rest = mask
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & rest & ~comp
                comp |= frontier
            out.append(comp)
            rest &= ~comp
        return out

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, (full & ~(a | (1 << v)) for v, a in enumerate(self.adj)))

    def induced_subgraph(self, vertices: Iterable[int]):
        """Relabelled ``G[X]`` and the list mapping new index -> old vertex."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return build_graph(len(order), edges), order

    @property
    def kernel(self):
        if self._kernel is None:
            self._kernel = make_kernel(self.n, self.adj)
        return self._kernel

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def neighborhood(G: Graph, X: Iterable[int], closed: bool = False) -> frozenset:
    mask = G.mask(X)
    out = G.open_nbhd_mask(mask)
    if closed:
        out |= mask
    return to_set(out)


# -- witness types -----------------------------------------------------------


@dataclass(frozen=True)
class BicliqueWitness:
    side_a: frozenset
    side_b: frozenset

    @property
    def t(self) -> int:
        return len(self.side_a)

    def check(self, G: Graph) -> bool:
        a = G.mask(self.side_a)
        b = G.mask(self.side_b)
        return (
            len(self.side_a) == len(self.side_b)
            and not (a & b)
            and G.is_independent_mask(a)
            and G.is_independent_mask(b)
            and all(G.adj[v] & b == b for v in bits(a))
        )

    def to_json(self, offset: int = 0) -> dict:
        return {
            "sideA": [v + offset for v in sorted(self.side_a)],
            "sideB": [v + offset for v in sorted(self.side_b)],
        }


@dataclass(frozen=True)
class ObstructionWitness:
    A: frozenset
    B: frozenset
    C: frozenset
    D: frozenset

    def check(self, G: Graph) -> bool:
        parts = [self.A, self.B, self.C, self.D]
        t = len(self.A)
        if any(len(p) != t for p in parts):
            return False
        masks = [G.mask(p) for p in parts]
        if sum(m.bit_count() for m in masks) != (masks[0] | masks[1] | masks[2] | masks[3]).bit_count():
            return False
        if not all(G.is_independent_mask(m) for m in masks):
            return False

        def perfect_matching(x, y):
            return all((G.adj[v] & y).bit_count() == 1 for v in bits(x)) and all(
                (G.adj[v] & x).bit_count() == 1 for v in bits(y)
            )

        return (
            perfect_matching(masks[0], masks[1])
            and perfect_matching(masks[2], masks[3])
            and all(G.adj[v] & masks[2] == masks[2] for v in bits(masks[1]))
        )

    def to_json(self, offset: int = 0) -> dict:
        return {k: [v + offset for v in sorted(getattr(self, k))] for k in "ABCD"}


# -- independent sets, cliques, coloring -------------------------------------


def independence_number(G: Graph, X: Optional[Iterable[int]] = None) -> int:
    """``alpha(G[X])`` (``X`` defaults to all vertices)."""
    mask = G.full_mask if X is None else G.mask(X)
    check_cap("independence number", mask.bit_count(), get_caps().n)
    return G.kernel.mis_size(mask)


def alpha_mask(G: Graph, mask: int) -> int:
    check_cap("independence number", mask.bit_count(), get_caps().n)
    return G.kernel.mis_size(mask)


def max_independent_set_mask(G: Graph, mask: int) -> int:
    """Lexicographically smallest maximum independent set inside ``mask``."""
    check_cap("max independent set", mask.bit_count(), get_caps().n)
    k = G.kernel
    need = k.mis_size(mask)
    chosen = 0
    cand = mask
    for v in bits(mask):
        if not need:
            break
        if not (cand >> v) & 1:
            continue
        bit = 1 << v
        after = cand & ~(G.adj[v] | bit) & ~((1 << v) - 1)
        if k.mis_size(after) == need - 1:
            chosen |= bit
            cand = after
            need -= 1
        else:
            cand &= ~bit
    return chosen


def max_independent_set(G: Graph, X: Optional[Iterable[int]] = None) -> frozenset:
    mask = G.full_mask if X is None else G.mask(X)
    return to_set(max_independent_set_mask(G, mask))


def clique_number(G: Graph) -> int:
    check_cap("clique number", G.n, get_caps().n)
    return G.complement().kernel.mis_size(G.full_mask)


def _k_colorable(G: Graph, k: int, mask: int) -> Optional[dict]:
    verts = list(bits(mask))
    colors = {}

    def pick():
        # DSATUR: most distinct neighbor colors, then degree, then index
        best = None
        for v in verts:
            if v in colors:
                continue
            sat = len({colors[u] for u in bits(G.adj[v] & mask) if u in colors})
            key = (sat, (G.adj[v] & mask).bit_count(), -v)
            if best is None or key > best[0]:
                best = (key, v)
        return best[1]

    def rec(used):
        if len(colors) == len(verts):
            return True
        v = pick()
        taken = {colors[u] for u in bits(G.adj[v] & mask) if u in colors}
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colors[v] = c
            if rec(max(used, c + 1)):
                return True
            del colors[v]
        return False

    return dict(colors) if rec(0) else None


def chromatic_number_exact(G: Graph, X: Optional[Iterable[int]] = None) -> int:
    mask = G.full_mask if X is None else G.mask(X)
    check_cap("chromatic number", mask.bit_count(), get_caps().n)
    if not mask:
        return 0
    sub, _ = G.induced_subgraph(bits(mask))
    k = clique_number(sub)
    while _k_colorable(G, k, mask) is None:
        k += 1
    return k


# -- matchings ---------------------------------------------------------------


def max_bipartite_matching(G: Graph, A: Iterable[int], B: Iterable[int]) -> list:
    """Maximum matching of ``G[A u B]`` by augmenting paths (Kuhn).

    Returns ``(a, b)`` pairs with ``a`` in ``A``, sorted by ``a``.
    """
    a_mask = G.mask(A)
    b_mask = G.mask(B)
    if a_mask & b_mask:
        raise PreconditionError("sides of a bipartite instance must be disjoint")
    for side, name in ((a_mask, "A"), (b_mask, "B")):
        e = G.edge_in(side)
        if e is not None:
            raise PreconditionError(f"edge {e} inside side {name}")
    mate_b = {}

    def augment(a, seen):
        for b in bits(G.adj[a] & b_mask):
            if b in seen:
                continue
            seen.add(b)
            if b not in mate_b or augment(mate_b[b], seen):
                mate_b[b] = a
                return True
        return False

    for a in bits(a_mask):
        augment(a, set())
    return sorted((a, b) for b, a in mate_b.items())


def _check_matching(G: Graph, M) -> list:
    pairs = [tuple(e) for e in M]
    used = set()
    for u, v in pairs:
        if not G.has_edge(u, v):
            raise PreconditionError(f"({u}, {v}) is not an edge")
        if u in used or v in used:
            raise PreconditionError(f"matching edges share a vertex at ({u}, {v})")
        used.update((u, v))
    return pairs


def is_induced_matching(G: Graph, M) -> bool:
    pairs = [tuple(e) for e in M]
    for u, v in pairs:
        if not G.has_edge(u, v):
            raise PreconditionError(f"({u}, {v}) is not an edge")
    seen = 0
    for u, v in pairs:
        here = (1 << u) | (1 << v)
        if seen & here:
            return False
        seen |= here
    for i, (u, v) in enumerate(pairs):
        others = seen & ~((1 << u) | (1 << v))
        if (G.adj[u] | G.adj[v]) & others:
            return False
    return True


def max_induced_matching_touching(G: Graph, X: Optional[Iterable[int]] = None):
    """``(size, matching)`` for a maximum induced matching touching ``X``."""
    mask = G.full_mask if X is None else G.mask(X)
    return max_induced_matching_touching_mask(G, mask)


def max_induced_matching_touching_mask(G: Graph, mask: int):
    check_cap("induced matching search", G.n, get_caps().n)
    size, edges = G.kernel.im_touching(mask)
    return size, [tuple(e) for e in edges]


def mu_mask(G: Graph, mask: int) -> int:
    check_cap("induced matching search", G.n, get_caps().n)
    return G.kernel.im_touching_size(mask)


# -- bicliques and obstructions ---------------------------------------------


def _independent_subsets(G: Graph, cand: int, t: int, start_after: int = -1):
    """Independent ``t``-subsets of ``cand`` as masks, lexicographic order."""
    if t == 0:
        yield 0
        return
    kern = G.kernel
    for v in bits(cand & ~((1 << (start_after + 1)) - 1)):
        bit = 1 << v
        rest = cand & ~(G.adj[v] | bit) & ~((1 << v) - 1)
        if t > 1 and (rest.bit_count() < t - 1 or kern.mis_size(rest) < t - 1):
            continue
        for sub in _independent_subsets(G, rest, t - 1, v):
            yield bit | sub


def iter_induced_bicliques(G: Graph, t: int, mask: Optional[int] = None):
    """All induced ``K_{t,t}`` in ``G[mask]`` as ``(side_a, side_b)`` masks.

    Side A is enumerated lexicographically (pruned by the independence number
    of the common neighbourhood); side B then ranges lexicographically over
    independent ``t``-subsets of that common neighbourhood.  Each unordered
    biclique appears twice, once per orientation.
    """
    if t < 1:
        raise PreconditionError("t must be at least 1")
    if mask is None:
        mask = G.full_mask
    kern = G.kernel

    def grow(a_mask, cand, common, size, last):
        if size == t:
            for b_mask in _independent_subsets(G, common, t):
                yield a_mask, b_mask
            return
        for v in bits(cand & ~((1 << (last + 1)) - 1)):
            common2 = common & G.adj[v]
            if common2.bit_count() < t or kern.mis_size(common2) < t:
                continue
            yield from grow(
                a_mask | (1 << v), cand & ~(G.adj[v] | (1 << v)), common2, size + 1, v
            )

    yield from grow(0, mask, mask, 0, -1)


def find_induced_biclique(G: Graph, t: int) -> Optional[BicliqueWitness]:
    check_cap("induced biclique search", G.n, get_caps().n)
    for a_mask, b_mask in iter_induced_bicliques(G, t):
        return BicliqueWitness(to_set(a_mask), to_set(b_mask))
    return None


def find_t_obstruction(G: Graph, t: int) -> Optional[ObstructionWitness]:
    """First induced t-obstruction: (B, C) bicliques in lexicographic order,
    then A matched into B and D matched into C by backtracking."""
    check_cap("t-obstruction search", G.n, get_caps().obstruction_n)
    if t < 1:
        raise PreconditionError("t must be at least 1")
    adj = G.adj

    def attach(targets, private_of, used, picked):
        # picked: mask of the side being built; each target gets one private partner
        if not targets:
            return picked
        c = targets[0]
        for a in bits(private_of[c] & ~used & ~picked):
            if adj[a] & picked:
                continue
            got = attach(targets[1:], private_of, used | (1 << a), picked | (1 << a))
            if got is not None:
                return got
        return None

    full = G.full_mask
    for b_mask, c_mask in iter_induced_bicliques(G, t):
        core = b_mask | c_mask
        b_list = list(bits(b_mask))
        c_list = list(bits(c_mask))
        priv_b = {}
        for b in b_list:
            m = 0
            for a in bits(full & ~core):
                if adj[a] & b_mask == 1 << b:
                    m |= 1 << a
            priv_b[b] = m
        priv_c = {}
        for c in c_list:
            m = 0
            for d in bits(full & ~core):
                if adj[d] & c_mask == 1 << c:
                    m |= 1 << d
            priv_c[c] = m
        if any(not priv_b[b] for b in b_list) or any(not priv_c[c] for c in c_list):
            continue
        a_side = _attach_all(b_list, priv_b, core, adj)
        for a_mask in a_side:
            d_mask = attach(c_list, priv_c, core | a_mask, 0)
            if d_mask is not None:
                return ObstructionWitness(to_set(a_mask), to_set(b_mask), to_set(c_mask), to_set(d_mask))
    return None


def _attach_all(targets, private_of, used, adj):
    """All independent systems of private partners, lexicographic."""
    if not targets:
        yield 0
        return
    c = targets[0]
    for a in bits(private_of[c] & ~used):
        bit = 1 << a
        for rest in _attach_all(targets[1:], private_of, used | bit, adj):
            if not (adj[a] & rest):
                yield bit | rest


def brute_force_bicliques(G: Graph, t: int):
    """Reference enumeration over all 2t-subsets (tests only; tiny n)."""
    found = []
    for combo in itertools.combinations(range(G.n), 2 * t):
        for side in itertools.combinations(combo, t):
            if side[0] != combo[0]:
                continue
            other = tuple(v for v in combo if v not in side)
            w = BicliqueWitness(frozenset(side), frozenset(other))
            if w.check(G):
                found.append(w)
    return found
