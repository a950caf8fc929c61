import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from imtw.errors import PreconditionError
from imtw.generators import gen_biclique, gen_cycle
from imtw.graph import build_graph, is_induced_matching
from imtw.ramsey import (
    MAX_DIGITS,
    BicliqueFound,
    BigCount,
    CompleteEdgeColoring,
    Exhausted,
    IndependentSetFound,
    InducedMatchingFound,
    bound_C,
    bound_K,
    bound_M,
    bound_N,
    bound_f,
    extract_im_or_biclique,
    find_monochromatic_clique,
    joint_independent_set,
    ramsey_two,
    ramsey_upper,
)


def pascal_reference(a, b):
    """Independent evaluation of the Pascal recursion by dynamic programming."""
    table = {}
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            table[i, j] = 1 if i == 1 or j == 1 else table[i - 1, j] + table[i, j - 1]
    return table[a, b]


class TestBigCount:
    def test_exact_arithmetic(self):
        x = BigCount(10**50)
        assert x + 1 == 10**50 + 1
        assert 3 * x == 3 * 10**50
        assert x - 1 == 10**50 - 1
        assert int(x) == 10**50

    def test_saturation(self):
        huge = BigCount(10 ** (MAX_DIGITS + 5))
        assert huge.is_saturated
        assert huge > 10**100
        assert str(huge).startswith("saturated:>=10^")
        with pytest.raises(OverflowError):
            int(huge)

    def test_long_exact_string(self):
        x = 7**15000
        text = str(BigCount(x))
        assert len(text) == 12677
        assert text.endswith(str(x % 10**50).rjust(50, "0"))
        assert int(text[:30]) == x // 10 ** (12677 - 30)

    def test_undecidable_comparison(self):
        a = BigCount.saturated(MAX_DIGITS + 1)
        b = BigCount.saturated(MAX_DIGITS + 1)
        with pytest.raises(ValueError):
            _ = a < b


class TestRamseyUpper:
    def test_examples(self):
        assert ramsey_upper([3, 3]) == 6
        assert ramsey_upper([2, 2, 2]) == 2
        for k in range(1, 12):
            assert ramsey_upper([2, k]) == k

    def test_empty(self):
        with pytest.raises(PreconditionError):
            ramsey_upper([])

    @given(st.integers(1, 25), st.integers(1, 25))
    def test_pascal_closed_form(self, a, b):
        assert ramsey_two(a, b) == pascal_reference(a, b) == comb(a + b - 2, a - 1)

    @given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.integers(0, 3))
    def test_monotone(self, targets, i):
        i %= len(targets)
        bigger = list(targets)
        bigger[i] += 1
        assert ramsey_upper(bigger) >= ramsey_upper(targets)

    def test_valid_for_exhaustive_small_case(self):
        # every 2-coloring of K_6 has a monochromatic triangle
        pairs = list(combinations(range(6), 2))
        rng = random.Random(0)
        for _ in range(200):
            col = CompleteEdgeColoring(6, {p: rng.randint(0, 1) for p in pairs})
            assert find_monochromatic_clique(col, {0: 3, 1: 3}) is not None


class TestBoundFormulas:
    def test_m(self):
        assert bound_M(1, 1) == 2
        assert bound_M(2, 2) == 220

    def test_n_degenerate(self):
        for s in range(1, 6):
            assert bound_N(s, 2, 1) == s

    def test_n_t1(self):
        assert bound_N(3, 1, 4) == 12

    def test_c_and_k(self):
        for mu in range(1, 16):
            assert bound_C(mu, 1) == (mu + 1) ** 2
            assert bound_K(mu, 1) == 2 * (mu + 1) + mu * (mu + 1) ** 2
        assert bound_K(1, 1) == 8
        assert bound_C(1, 2).is_saturated and bound_K(2, 2).is_saturated

    def test_f(self):
        assert bound_f(0, 5) == 1
        assert bound_f(3, 1) == 1
        assert bound_f(1, 2) == 12

    def test_f_reference(self):
        def ref(mu, omega):
            if mu == 0 or omega == 1:
                return 1
            r = pascal_reference(omega + 1, pascal_reference(omega + 1, mu + 1))
            return 2 * (ref(mu - 1, omega) + (r - 1) * ref(mu, omega - 1))

        for mu in range(0, 4):
            for omega in range(1, 4):
                assert bound_f(mu, omega) == ref(mu, omega)

    @given(st.integers(1, 4), st.integers(2, 4))
    def test_f_doubles(self, mu, omega):
        assert bound_f(mu, omega) >= 2 * bound_f(mu, omega - 1)


class TestMonochromaticClique:
    def test_single_edge(self):
        assert find_monochromatic_clique(CompleteEdgeColoring(2, {(0, 1): "c"}), {"c": 2}) == ("c", {0, 1})

    def test_pentagon(self):
        C5 = gen_cycle(5)
        col = CompleteEdgeColoring(5, {p: int(C5.has_edge(*p)) for p in combinations(range(5), 2)})
        assert find_monochromatic_clique(col, {0: 3, 1: 3}) is None

    def test_missing_pair(self):
        with pytest.raises(PreconditionError):
            CompleteEdgeColoring(3, {(0, 1): 0, (0, 2): 0})


def sweep_instances(max_m=5):
    """Every bipartite graph on sides a_0..a_{k-1}, b_0..b_{k-1} that contains
    the matching a_i b_i, for k <= max_m (cross pairs other than the matching
    are free), sampled exhaustively for k <= 3 and randomly above."""
    rng = random.Random(9)
    for k in range(1, max_m + 1):
        free = [(i, k + j) for i in range(k) for j in range(k) if i != j]
        if len(free) <= 6:
            masks = range(1 << len(free))
        else:
            masks = [rng.getrandbits(len(free)) for _ in range(150)]
        for mask in masks:
            edges = [(i, k + i) for i in range(k)] + [e for b, e in enumerate(free) if (mask >> b) & 1]
            G = build_graph(2 * k, edges)
            yield G, range(k), range(k, 2 * k), [(i, k + i) for i in range(k)]


class TestExtraction:
    def test_examples(self):
        two_k2 = build_graph(4, [(0, 1), (2, 3)])
        out = extract_im_or_biclique(two_k2, {0, 2}, {1, 3}, [(0, 1), (2, 3)], 1, 2)
        assert isinstance(out, InducedMatchingFound) and len(out.matching) == 2
        K22 = gen_biclique(2, 2)
        direct = extract_im_or_biclique(K22, {0, 1}, {2, 3}, [(0, 2), (1, 3)], 1, 2, "direct")
        assert isinstance(direct, BicliqueFound) and direct.witness.check(K22)
        P4 = build_graph(4, [(0, 1), (2, 3), (0, 3)])
        for mode in ("faithful", "direct"):
            assert isinstance(extract_im_or_biclique(P4, {0, 2}, {1, 3}, [(0, 1), (2, 3)], 1, 2, mode), Exhausted)

    def test_faithful_below_threshold(self):
        # two matching edges cannot host a 4-clique of indices
        K22 = gen_biclique(2, 2)
        assert isinstance(extract_im_or_biclique(K22, {0, 1}, {2, 3}, [(0, 2), (1, 3)], 1, 2), Exhausted)
        assert isinstance(extract_im_or_biclique(K22, {0, 1}, {2, 3}, [(0, 2), (1, 3)], 1, 1), BicliqueFound)

    def test_errors(self):
        P3 = build_graph(3, [(0, 1), (1, 2)])
        with pytest.raises(PreconditionError):
            extract_im_or_biclique(P3, {0, 1}, {2}, [(1, 2)], 1, 1)
        with pytest.raises(PreconditionError):
            extract_im_or_biclique(P3, {0, 2}, {1}, [(0, 1), (1, 2)], 1, 1)

    def test_sweep_classification(self):
        for G, A, B, M in sweep_instances():
            for s in (1, 2):
                for t in (1, 2):
                    faithful = extract_im_or_biclique(G, A, B, M, s, t, "faithful")
                    direct = extract_im_or_biclique(G, A, B, M, s, t, "direct")
                    for out in (faithful, direct):
                        if isinstance(out, InducedMatchingFound):
                            assert len(out.matching) == s + 1 and is_induced_matching(G, out.matching)
                        if isinstance(out, BicliqueFound):
                            assert out.witness.check(G) and out.witness.t == t
                    if isinstance(direct, Exhausted):
                        assert isinstance(faithful, Exhausted)
                    if isinstance(faithful, BicliqueFound):
                        assert direct_has_biclique(G, A, B, t)


def direct_has_biclique(G, A, B, t):
    from imtw.graph import find_induced_biclique

    sub, _ = G.induced_subgraph(list(A) + list(B))
    return find_induced_biclique(sub, t) is not None


class TestJointIndependentSet:
    def test_edgeless(self):
        G = build_graph(9, [])
        sets = [{0, 1, 2}, {3, 4, 5}, {6, 7, 8}]
        out = joint_independent_set(G, sets, 2, 1, "direct")
        assert out == IndependentSetFound(frozenset({0, 1, 3, 4, 6, 7}))
        faithful = joint_independent_set(G, sets, 1, 1, "faithful")
        assert faithful == IndependentSetFound(frozenset({0, 4, 8}))

    def test_single_set(self):
        G = gen_cycle(6)
        out = joint_independent_set(G, [{0, 2, 4}], 2, 2, "faithful")
        assert isinstance(out, IndependentSetFound) and len(out.vertices) == 2 and out.vertices <= {0, 2, 4}

    def test_biclique_two_sides(self):
        K22 = gen_biclique(2, 2)
        out = joint_independent_set(K22, [{0, 1}, {2, 3}], 1, 1, "faithful")
        assert isinstance(out, BicliqueFound) and out.witness.check(K22)
        assert isinstance(joint_independent_set(K22, [{0, 1}, {2, 3}], 1, 2, "faithful"), Exhausted)

    def test_errors(self):
        with pytest.raises(PreconditionError):
            joint_independent_set(gen_cycle(4), [{0, 1}], 1, 1)
        with pytest.raises(PreconditionError):
            joint_independent_set(gen_cycle(4), [{0}], 2, 1)

    def test_direct_result_contract(self):
        rng = random.Random(4)
        for _ in range(150):
            n = rng.randint(4, 10)
            G = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.25])
            sets = []
            for _ in range(rng.randint(1, 3)):
                S = set()
                for v in rng.sample(range(n), n):
                    if all(not G.has_edge(v, w) for w in S):
                        S.add(v)
                sets.append(S)
            s = 1
            direct = joint_independent_set(G, sets, s, 2, "direct")
            faithful = joint_independent_set(G, sets, s, 2, "faithful")
            for out in (direct, faithful):
                if isinstance(out, IndependentSetFound):
                    assert G.is_independent_mask(G.mask(out.vertices))
                    assert all(len(out.vertices & S) >= s for S in sets)
                if isinstance(out, BicliqueFound):
                    assert out.witness.check(G)
            if isinstance(faithful, IndependentSetFound):
                assert isinstance(direct, IndependentSetFound)
