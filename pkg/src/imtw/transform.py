"""Rewriting a decomposition of small induced matching treewidth into one of
small independence number, for graphs without an induced ``K_{t,t}``.

A maximum independent set ``S`` is split into light vertices (small
``alpha(N(v))``) and heavy ones.  Light vertices leave every bag, their
neighbourhoods move in, and each light ``s`` gets its own leaf bag ``N[s]``.
The result is a valid decomposition for any independent ``S`` and any light
subset; only the width guarantee depends on the thresholds.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Union

from .decomposition import TreeDecomposition, alpha_of, require_valid, vertex_subtree
from .errors import ImtwError, PreconditionError
from .graph import (
    Graph,
    alpha_mask,
    find_induced_biclique,
    max_bipartite_matching,
    max_independent_set_mask,
    to_set,
)
from .oracles import WitnessReport, verify_mu_at_most
from .ramsey import (
    BicliqueFound,
    BigCount,
    CountLike,
    InducedMatchingFound,
    as_count,
    bound_C,
    bound_K,
    bound_M,
    extract_im_or_biclique,
)


@dataclass(frozen=True)
class LightHeavySplit:
    S: frozenset
    threshold: BigCount
    light: frozenset
    heavy: frozenset


@dataclass
class BagRow:
    node: int
    alpha_outside_S: int
    alpha_light_nbhd: int
    heavy_count: int

    def to_json(self, offset: int = 0) -> dict:
        return {
            "node": self.node + offset,
            "alphaBagMinusS": self.alpha_outside_S,
            "alphaNbhdLight": self.alpha_light_nbhd,
            "heavyInBag": self.heavy_count,
        }


@dataclass
class TransformReport:
    alpha_tprime: int
    bound_K: BigCount
    per_bag: list
    claims: dict  # name -> bool
    preconditions: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    guarantee_claimed: bool = False
    light_count: int = 0
    heavy_count: int = 0

    def to_json(self, offset: int = 0) -> dict:
        return {
            "alphaTPrime": self.alpha_tprime,
            "boundK": str(self.bound_K),
            "alphaBelowK": bool(self.bound_K > self.alpha_tprime),
            "guaranteeClaimed": self.guarantee_claimed,
            "preconditions": dict(self.preconditions),
            "claims": dict(self.claims),
            "lightCount": self.light_count,
            "heavyCount": self.heavy_count,
            "perBag": [row.to_json(offset) for row in self.per_bag],
            "warnings": list(self.warnings),
        }


def classify_light_heavy(G: Graph, S: Iterable[int], threshold: CountLike) -> LightHeavySplit:
    S = frozenset(S)
    s_mask = G.mask(S)
    if not G.is_independent_mask(s_mask):
        raise PreconditionError("S is not independent")
    threshold = as_count(threshold)
    light = frozenset(v for v in S if threshold > alpha_mask(G, G.adj[v]))
    return LightHeavySplit(S, threshold, light, S - light)


AttachRule = Union[str, Callable[[frozenset], int]]


def _attach_node(rule: AttachRule, subtree: frozenset) -> int:
    if rule == "lowest":
        return min(subtree)
    if rule == "highest":
        return max(subtree)
    if callable(rule):
        x = rule(subtree)
        if x not in subtree:
            raise PreconditionError("attachment rule picked a node outside T_s")
        return x
    raise ValueError(f"unknown attachment rule {rule!r}")


def build_tprime(G: Graph, T: TreeDecomposition, S: Iterable[int], light: Iterable[int],
                 attach: AttachRule = "lowest") -> TreeDecomposition:
    """Original nodes keep their indices; leaf ``y_s`` for the light vertices
    in ascending order are appended after them."""
    require_valid(G, T)
    S = frozenset(S)
    light = sorted(set(light))
    if not set(light) <= S:
        raise PreconditionError("light vertices must lie in S")
    if not G.is_independent_mask(G.mask(S)):
        raise PreconditionError("S is not independent")
    light_mask = G.mask(light)
    bags = []
    for bag in T.bags:
        b = G.mask(bag)
        bags.append((b & ~light_mask) | G.open_nbhd_mask(b & light_mask))
    edges = list(T.tree_edges)
    for s in light:
        y = len(bags)
        bags.append(G.adj[s] | (1 << s))
        edges.append((_attach_node(attach, vertex_subtree(T, s)), y))
    out = TreeDecomposition(len(bags), tuple(edges), tuple(to_set(b) for b in bags))
    try:
        return require_valid(G, out)
    except ImtwError as exc:  # pragma: no cover - the construction is always valid
        raise AssertionError(f"transformed decomposition failed validation: {exc}") from exc


def check_claims(G: Graph, T: TreeDecomposition, split: LightHeavySplit, mu: int,
                 m_bound: CountLike, c_bound: CountLike, attach: AttachRule = "lowest") -> TransformReport:
    """Measure, per bag, the three quantities the width argument bounds and
    compare them with the supplied thresholds."""
    require_valid(G, T)
    m_bound = as_count(m_bound)
    c_bound = as_count(c_bound)
    s_mask = G.mask(split.S)
    light_mask = G.mask(split.light)
    heavy_mask = G.mask(split.heavy)
    rows = []
    for x, bag in enumerate(T.bags):
        b = G.mask(bag)
        rows.append(
            BagRow(
                x,
                alpha_mask(G, b & ~s_mask),
                alpha_mask(G, G.open_nbhd_mask(b & light_mask)),
                (b & heavy_mask).bit_count(),
            )
        )
    claims = {
        "bagMinusS": all(m_bound > r.alpha_outside_S for r in rows),
        "lightNeighbourhood": all(mu * c_bound > r.alpha_light_nbhd for r in rows),
        "heavyCount": all(m_bound > r.heavy_count for r in rows),
    }
    tprime = build_tprime(G, T, split.S, split.light, attach)
    return TransformReport(
        alpha_tprime=alpha_of(G, tprime),
        bound_K=2 * m_bound + mu * c_bound,
        per_bag=rows,
        claims=claims,
        light_count=len(split.light),
        heavy_count=len(split.heavy),
    )


def refutation_witness(G: Graph, T: TreeDecomposition, x: int, S: Iterable[int], mu: int, t: int,
                       mode: str = "direct") -> Optional[WitnessReport]:
    """Run the bag-minus-S argument at node ``x``.

    ``I`` is a maximum independent set of ``beta(x) - S``; a matching of size
    ``|I|`` between ``S`` and ``I`` exists when ``S`` is maximum, and the
    extraction turns it into either an induced matching of ``mu + 1`` edges
    (touching ``beta(x)``, since every edge has its ``I`` end in the bag) or
    an induced ``K_{t,t}``.
    """
    require_valid(G, T)
    S = frozenset(S)
    bag = G.mask(T.bags[x])
    s_mask = G.mask(S)
    if not G.is_independent_mask(s_mask):
        raise PreconditionError("S is not independent")
    I_mask = max_independent_set_mask(G, bag & ~s_mask)
    if not I_mask:
        return None
    I = to_set(I_mask)
    M = max_bipartite_matching(G, S, I)
    if len(M) != len(I):
        raise PreconditionError(
            f"S is not a maximum independent set: matching of size {len(M)} < |I| = {len(I)}"
        )
    out = extract_im_or_biclique(G, S, I, M, mu, t, mode)
    if isinstance(out, InducedMatchingFound):
        return WitnessReport(
            "induced_matching",
            node=x,
            matching=out.matching,
            message=f"induced matching of size {len(out.matching)} touches bag {x}, so mu(T) > {mu}",
        )
    if isinstance(out, BicliqueFound):
        return WitnessReport(
            "biclique",
            node=x,
            biclique=out.witness,
            message=f"induced K_{{{t},{t}}} found, so G is not K_{{{t},{t}}}-free",
        )
    return None


def theorem3_pipeline(G: Graph, T: TreeDecomposition, mu: int, t: int,
                      threshold: Optional[CountLike] = None, attach: AttachRule = "lowest"):
    """Full transformation with verified preconditions.

    Returns ``(T_prime, report)``.  The width guarantee is claimed only when
    both ``mu(T) <= mu`` and ``K_{t,t}``-freeness were verified; the
    construction runs either way.
    """
    require_valid(G, T)
    S = to_set(max_independent_set_mask(G, G.full_mask))
    c_bound = bound_C(mu, t)
    split = classify_light_heavy(G, S, c_bound if threshold is None else threshold)
    report = check_claims(G, T, split, mu, bound_M(mu, t), c_bound, attach)
    report.bound_K = bound_K(mu, t)
    mu_witness = verify_mu_at_most(G, T, mu)
    biclique = find_induced_biclique(G, t)
    report.preconditions = {"muAtMost": mu_witness is None, "bicliqueFree": biclique is None}
    if mu_witness is not None:
        report.warnings.append(mu_witness.message)
    if biclique is not None:
        report.warnings.append(f"G contains an induced K_{{{t},{t}}}")
    report.guarantee_claimed = mu_witness is None and biclique is None
    tprime = build_tprime(G, T, split.S, split.light, attach)
    return tprime, report
