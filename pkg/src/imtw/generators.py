"""Seeded constructors for the graph families used in tests and experiments.

Randomness comes from ``random.Random`` (Mersenne Twister MT19937), seeded with
an integer, and is consumed in a fixed order, so a given spec gives the same
edge list on every platform.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import PreconditionError
from .graph import Graph, build_graph

PRNG_NAME = "mt19937"

# Optional block pairs of a t-obstruction, in the order their edges are drawn.
OPTIONAL_PAIRS = (("A", "C"), ("A", "D"), ("B", "D"))


def _need(cond: bool, message: str):
    if not cond:
        raise PreconditionError(message)


def gen_biclique(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "biclique sides must be at least 1")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def gen_cycle(n: int) -> Graph:
    _need(n >= 3, "a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    _need(n >= 1, "a path needs at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_subdivided_biclique(s: int, k: int) -> Graph:
    """``K_{s,s}`` with each edge replaced by a path through ``k`` new vertices.

    Branch vertices are ``0..2s-1`` (side A first); subdivision vertices
    follow, edge by edge in lexicographic order of ``(a, b)``.
    """
    _need(s >= 1 and k >= 1, "need s >= 1 and k >= 1")
    edges = []
    nxt = 2 * s
    for a in range(s):
        for b in range(s, 2 * s):
            path = [a] + list(range(nxt, nxt + k)) + [b]
            nxt += k
            edges.extend(zip(path, path[1:]))
    return build_graph(nxt, edges)


def obstruction_blocks(t: int) -> dict:
    return {name: list(range(i * t, (i + 1) * t)) for i, name in enumerate("ABCD")}


def gen_t_obstruction(t: int, policy: str = "none", p: float = 0.5, seed: int = 0) -> Graph:
    """Blocks ``A, B, C, D`` of size ``t`` numbered in that order.

    Mandatory edges are ``a_i b_i``, ``c_i d_i`` and all of ``B x C``.  The
    optional pairs ``(A,C), (A,D), (B,D)`` get no edges, all edges, or each
    edge independently with probability ``p``.
    """
    _need(t >= 1, "t must be at least 1")
    _need(policy in ("none", "random", "full"), f"unknown policy {policy!r}")
    _need(0.0 <= p <= 1.0, "p must lie in [0, 1]")
    blk = obstruction_blocks(t)
    edges = [(blk["A"][i], blk["B"][i]) for i in range(t)]
    edges += [(blk["C"][i], blk["D"][i]) for i in range(t)]
    edges += [(b, c) for b in blk["B"] for c in blk["C"]]
    rng = random.Random(seed)
    for x, y in OPTIONAL_PAIRS:
        for u in blk[x]:
            for v in blk[y]:
                if policy == "full" or (policy == "random" and rng.random() < p):
                    edges.append((u, v))
    return build_graph(4 * t, edges)


def gen_random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi ``G(n, p)``: one draw per pair in lexicographic order."""
    _need(n >= 0, "n must be nonnegative")
    _need(0.0 <= p <= 1.0, "p must lie in [0, 1]")
    rng = random.Random(seed)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def gen_random_chordal(n: int, seed: int = 0, p: float = 0.3) -> Graph:
    """Fill-in graph of a random ``G(n, p)`` under a random elimination order."""
    _need(n >= 0, "n must be nonnegative")
    rng = random.Random(seed)
    adj = [set() for _ in range(n)]
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            adj[u].add(v)
            adj[v].add(u)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for v in order:
        nb = adj[v]
        for u in nb:
            edges.add((min(u, v), max(u, v)))
        for a, b in combinations(sorted(nb), 2):
            adj[a].add(b)
            adj[b].add(a)
        for u in nb:
            adj[u].discard(v)
        adj[v] = set()
    return build_graph(n, sorted(edges))


FAMILIES = {
    "biclique": (gen_biclique, ("a", "b")),
    "cycle": (gen_cycle, ("n",)),
    "path": (gen_path, ("n",)),
    "subdivided-biclique": (gen_subdivided_biclique, ("s", "k")),
    "obstruction": (gen_t_obstruction, ("t", "policy", "p")),
    "random": (gen_random_graph, ("n", "p")),
    "chordal": (gen_random_chordal, ("n",)),
}
SEEDED = {"obstruction", "random", "chordal"}


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        _need(self.family in FAMILIES, f"unknown family {self.family!r}")
        _need(0 <= self.seed < 2**64, "seed must be a 64-bit unsigned integer")
        allowed = set(FAMILIES[self.family][1])
        extra = set(self.params) - allowed
        _need(not extra, f"unexpected parameters for {self.family}: {sorted(extra)}")

    def to_json(self) -> dict:
        return {"family": self.family, "params": dict(self.params), "seed": self.seed, "prng": PRNG_NAME}


def generate(spec: GenSpec) -> Graph:
    fn, _ = FAMILIES[spec.family]
    kwargs = dict(spec.params)
    if spec.family in SEEDED:
        kwargs["seed"] = spec.seed
    return fn(**kwargs)
