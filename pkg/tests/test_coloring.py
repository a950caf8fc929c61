import random

import pytest
from hypothesis import given

from imtw.coloring import (
    Coloring,
    Layering,
    bfs_layering,
    color_with_bound,
    combine,
    minimal_dominator,
    split_AB,
)
from imtw.decomposition import TreeDecomposition, from_elimination_ordering, mu_of, single_bag
from imtw.errors import BaseCaseViolation, InvalidDecomposition, PreconditionError
from imtw.generators import gen_biclique, gen_cycle, gen_path
from imtw.graph import build_graph, chromatic_number_exact, clique_number
from imtw.ramsey import bound_f

from .conftest import graph_and_order

C5 = gen_cycle(5)
K3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])


class TestLayering:
    def test_examples(self):
        assert bfs_layering(C5, 0, 1).layers == ({0, 1}, {2, 4}, {3})
        assert bfs_layering(gen_path(2), 0, 1).layers == ({0, 1},)
        assert bfs_layering(gen_path(4), 1, 2).layers == ({1, 2}, {0, 3})

    def test_errors(self):
        with pytest.raises(PreconditionError):
            bfs_layering(C5, 0, 2)
        with pytest.raises(PreconditionError):
            bfs_layering(build_graph(3, [(0, 1)]), 0, 1)

    @given(graph_and_order(min_n=2, max_n=10))
    def test_invariants(self, pair):
        G, _ = pair
        if not G.edges():
            return
        u, v = G.edges()[0]
        comp = next(c for c in G.components(G.full_mask) if (c >> u) & 1)
        X = [x for x in range(G.n) if (comp >> x) & 1]
        lay = bfs_layering(G, u, v, X)
        assert lay.check(G, X)
        prefix = 0
        for layer in lay.layers:
            prefix |= G.mask(layer)
            assert len(G.components(prefix)) == 1


def exact_layer_coloring(G, layer):
    sub, names = G.induced_subgraph(sorted(layer))
    k = chromatic_number_exact(sub)
    from imtw.graph import _k_colorable

    found = _k_colorable(sub, k, sub.full_mask) if k else {}
    return Coloring({names[v]: c for v, c in found.items()}), k


class TestCombine:
    def test_definition(self):
        G = build_graph(3, [(0, 2), (1, 2)])
        lay = Layering((frozenset({0, 1}), frozenset({2})))
        out = combine(G, lay, [Coloring({0: 1, 1: 2}), Coloring({2: 1})])
        assert out.assignment == {0: 2, 1: 4, 2: 3}

    def test_single_layer(self):
        G = gen_path(2)
        lay = bfs_layering(G, 0, 1)
        assert combine(G, lay, [Coloring({0: 0, 1: 1})]).assignment == {0: 0, 1: 2}

    def test_c5(self):
        lay = bfs_layering(C5, 0, 1)
        per = [exact_layer_coloring(C5, L)[0] for L in lay.layers]
        out = combine(C5, lay, per)
        assert out.is_proper(C5) and out.color_count <= 4

    def test_rejects_improper(self):
        lay = bfs_layering(C5, 0, 1)
        with pytest.raises(PreconditionError):
            combine(C5, lay, [Coloring({0: 0, 1: 0}), Coloring({2: 0, 4: 0}), Coloring({3: 0})])
        with pytest.raises(PreconditionError):
            combine(C5, lay, [Coloring({0: 0, 1: 1})])


class TestSplit:
    def test_single_bag_all_a(self):
        G = gen_path(5)
        lay = bfs_layering(G, 0, 1)
        A, B, _ = split_AB(G, single_bag(G), lay, 2)
        assert A == lay.layers[2] and not B

    def test_beyond_last_layer(self):
        G = gen_path(3)
        lay = bfs_layering(G, 0, 1)
        A, B, _ = split_AB(G, single_bag(G), lay, 5)
        assert not A and not B

    def test_path_decomposition(self):
        G = gen_path(5)
        T = TreeDecomposition.make([{0, 1, 2}, {2, 3, 4}], [(0, 1)])
        lay = bfs_layering(G, 0, 1)
        A, B, prime = split_AB(G, T, lay, 2)
        assert prime == {0} and B == {3} and not A
        A, B, prime = split_AB(G, T, lay, 3)
        assert prime == {0, 1} and A == {4}

    def test_rejects_small_i(self):
        G = gen_path(3)
        with pytest.raises(PreconditionError):
            split_AB(G, single_bag(G), bfs_layering(G, 0, 1), 1)


class TestDominator:
    def test_tie_keeps_lowest(self):
        G = build_graph(3, [(0, 2), (1, 2)])
        D, cert = minimal_dominator(G, {2}, {0, 1})
        assert D == {0} and cert == {0: 2}

    def test_single_dominator(self):
        G = build_graph(5, [(0, 2), (0, 3), (1, 4)])
        assert minimal_dominator(G, {2, 3}, {0, 1})[0] == {0}

    def test_matching_forces_all(self):
        G = build_graph(6, [(0, 3), (1, 4), (2, 5)])
        D, cert = minimal_dominator(G, {3, 4, 5}, {0, 1, 2})
        assert D == {0, 1, 2} and cert == {0: 3, 1: 4, 2: 5}

    def test_not_dominated(self):
        with pytest.raises(PreconditionError):
            minimal_dominator(build_graph(3, [(0, 1)]), {2}, {0})

    @given(graph_and_order(min_n=3, max_n=10))
    def test_certificate(self, pair):
        G, order = pair
        k = len(order) // 2
        pool, rest = set(order[:k]), set(order[k:])
        C = {c for c in rest if any(G.has_edge(c, d) for d in pool)}
        if not C:
            return
        D, cert = minimal_dominator(G, C, pool)
        assert D <= pool and all(any(G.has_edge(c, d) for d in D) for c in C)
        for d in D:
            v = cert[d]
            assert v in C and {e for e in D if G.has_edge(v, e)} == {d}


class TestColorWithBound:
    def test_edgeless(self):
        G = build_graph(4, [])
        col, _ = color_with_bound(G, single_bag(G), 0, 1)
        assert col.color_count == 1

    def test_k2(self):
        G = gen_path(2)
        col, trace = color_with_bound(G, single_bag(G), 1, 2)
        assert col.color_count == 2 and col.is_proper(G)
        assert bound_f(1, 2) == 12

    def test_c5(self):
        col, trace = color_with_bound(C5, single_bag(C5), 1, 2)
        assert col.is_proper(C5) and col.color_count <= 12
        kinds = {node.kind for node in trace.walk()}
        assert {"root", "component", "L0", "L1"} <= kinds

    def test_lying_triangle(self):
        with pytest.raises(BaseCaseViolation) as info:
            color_with_bound(K3, single_bag(K3), 1, 2)
        u, v = info.value.edge
        assert K3.has_edge(u, v)

    def test_rejects_invalid_decomposition(self):
        with pytest.raises(InvalidDecomposition):
            color_with_bound(gen_path(3), TreeDecomposition.make([{0}, {2}], [(0, 1)]), 1, 2)

    def test_rejects_bad_parameters(self):
        with pytest.raises(PreconditionError):
            color_with_bound(C5, single_bag(C5), 1, 0)

    def test_trace_parameters_decrease(self):
        G = gen_cycle(9)
        T = from_elimination_ordering(G, range(9))
        col, trace = color_with_bound(G, T, mu_of(G, T), 2)
        for node in trace.walk():
            for child in node.children:
                assert (child.mu + child.omega < node.mu + node.omega) or (
                    (child.mu, child.omega) == (node.mu, node.omega) and child.size <= node.size
                )

    def test_random_instances(self):
        rng = random.Random(8)
        for _ in range(120):
            n = rng.randint(1, 10)
            G = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.35])
            order = list(range(n))
            rng.shuffle(order)
            T = from_elimination_ordering(G, order)
            mu, omega = mu_of(G, T), clique_number(G)
            col, _ = color_with_bound(G, T, mu, omega)
            assert col.is_proper(G) and len(col.assignment) == n
            assert bound_f(mu, omega) >= col.color_count

    def test_disconnected_shares_palette(self):
        G = build_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
        col, _ = color_with_bound(G, single_bag(G), 1, 2)
        assert col.is_proper(G)
        assert {col.assignment[v] for v in (0, 1, 2)} == {col.assignment[v] for v in (3, 4, 5)}

    def test_biclique(self):
        G = gen_biclique(3, 3)
        col, _ = color_with_bound(G, single_bag(G), 1, 2)
        assert col.is_proper(G)
