import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from imtw import kernels
from imtw.decomposition import alpha_of, is_valid, mu_of, single_bag
from imtw.errors import CapExceeded
from imtw.generators import gen_biclique, gen_cycle, gen_path, gen_random_chordal
from imtw.graph import alpha_mask, build_graph, is_induced_matching, mu_mask
from imtw.oracles import (
    OracleConfig,
    induced_matching_treewidth,
    tree_independence_number,
    verify_mu_at_most,
)

from .conftest import graphs, random_graph


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def completion_oracle(G):
    """Minimise both functionals over every chordal supergraph on the same
    vertex set, with the maximal cliques as bags (a clique tree exists)."""
    non_edges = [e for e in combinations(range(G.n), 2) if not G.has_edge(*e)]
    best_alpha = best_mu = None
    for r in range(len(non_edges) + 1):
        for fill in combinations(non_edges, r):
            H = to_nx(G)
            H.add_edges_from(fill)
            if not nx.is_chordal(H):
                continue
            cliques = [G.mask(c) for c in nx.find_cliques(H)] or [0]
            a = max(alpha_mask(G, c) for c in cliques)
            m = max(mu_mask(G, c) for c in cliques)
            best_alpha = a if best_alpha is None else min(best_alpha, a)
            best_mu = m if best_mu is None else min(best_mu, m)
    return best_alpha, best_mu


class TestTreeAlpha:
    def test_bicliques(self):
        assert tree_independence_number(gen_biclique(3, 3)).value == 3
        assert tree_independence_number(gen_cycle(4)).value == 2

    def test_chordal_samples(self):
        K4 = build_graph(4, list(combinations(range(4), 2)))
        tree = build_graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
        assert tree_independence_number(K4).value == 1
        assert tree_independence_number(tree).value == 1

    def test_edgeless_and_empty(self):
        assert tree_independence_number(build_graph(0, [])).value == 0
        assert tree_independence_number(build_graph(3, [])).value == 1

    @given(graphs(max_n=8))
    def test_one_iff_chordal(self, G):
        if G.n == 0:
            return
        value = tree_independence_number(G).value
        assert (value == 1) == nx.is_chordal(to_nx(G))


class TestYolov:
    def test_examples(self):
        assert induced_matching_treewidth(gen_biclique(3, 3)).value == 1
        assert induced_matching_treewidth(gen_cycle(8)).value == 2
        assert induced_matching_treewidth(build_graph(1, [])).value == 0

    @given(graphs(max_n=8))
    def test_zero_iff_edgeless(self, G):
        assert (induced_matching_treewidth(G).value == 0) == (G.m == 0)


class TestCrossOracle:
    def test_against_chordal_completions(self):
        rng = random.Random(2024)
        checked = 0
        while checked < 40:
            n = rng.randint(1, 7)
            G = random_graph(rng, n, rng.choice([0.3, 0.5, 0.7]))
            if n * (n - 1) // 2 - G.m > 12:
                continue
            a, m = completion_oracle(G)
            assert tree_independence_number(G).value == a
            assert induced_matching_treewidth(G).value == m
            checked += 1


class TestResultContract:
    @given(graphs(max_n=8))
    def test_witness_attains_value(self, G):
        for fn, measure in ((tree_independence_number, alpha_of), (induced_matching_treewidth, mu_of)):
            r = fn(G)
            assert is_valid(G, r.witness)
            assert measure(G, r.witness) == r.value
            assert sorted(r.order) == list(range(G.n))
            assert r.explored_orderings >= 1

    def test_sandwich(self):
        rng = random.Random(5)
        for _ in range(60):
            G = random_graph(rng, rng.randint(1, 8), 0.4)
            assert induced_matching_treewidth(G).value <= tree_independence_number(G).value

    def test_first_lexicographic_witness(self):
        # P_3: every ordering ending in the middle vertex gives tree-alpha 1;
        # (0, 1, 2) already does, being lexicographically first
        assert tree_independence_number(gen_path(3)).order == (0, 1, 2)
        # C_4: eliminating 0 first puts 1,3 together; the oracle must still find 2
        assert tree_independence_number(gen_cycle(4)).order == (0, 1, 2, 3)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            tree_independence_number(gen_cycle(10))
        assert tree_independence_number(gen_cycle(10), OracleConfig(max_n=10)).value == 2

    def test_config_validation(self):
        with pytest.raises(ValueError):
            OracleConfig(max_n=0)
        with pytest.raises(ValueError):
            OracleConfig(workers=0)


class TestDeterminism:
    def cases(self):
        rng = random.Random(77)
        return [random_graph(rng, rng.randint(3, 8), 0.45) for _ in range(12)]

    def test_workers_agree(self):
        cfg = OracleConfig(workers=3)
        for G in self.cases()[:6]:
            for fn in (tree_independence_number, induced_matching_treewidth):
                a, b = fn(G), fn(G, cfg)
                assert (a.value, a.order) == (b.value, b.order)

    def test_symmetry_pruning_same_value(self):
        cfg = OracleConfig(symmetry_pruning=True)
        for G in self.cases() + [gen_cycle(8), gen_biclique(3, 3)]:
            for fn in (tree_independence_number, induced_matching_treewidth):
                assert fn(G).value == fn(G, cfg).value

    @pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="compiled kernel not built")
    def test_backends_agree(self):
        for G in self.cases():
            out = []
            for name in ("python", "cython"):
                with kernels.use_backend(name):
                    H = build_graph(G.n, G.edges())
                    r1, r2 = tree_independence_number(H), induced_matching_treewidth(H)
                    out.append((r1.value, r1.order, r1.explored_orderings, r2.value, r2.order, r2.explored_orderings))
            assert out[0] == out[1]


class TestVerifyMu:
    def test_examples(self):
        K33 = gen_biclique(3, 3)
        assert verify_mu_at_most(K33, single_bag(K33), 1) is None
        C6 = gen_cycle(6)
        w = verify_mu_at_most(C6, single_bag(C6), 1)
        assert w.kind == "induced_matching" and w.node == 0 and len(w.matching) == 2
        assert is_induced_matching(C6, w.matching)

    def test_large_mu_always_ok(self):
        C6 = gen_cycle(6)
        assert verify_mu_at_most(C6, single_bag(C6), 3) is None

    def test_chordal_generated(self):
        for seed in range(5):
            G = gen_random_chordal(7, seed)
            r = tree_independence_number(G)
            assert r.value <= 1
            assert verify_mu_at_most(G, r.witness, 1) is None
