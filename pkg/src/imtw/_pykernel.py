"""Pure-Python bitset kernels.

This is the reference implementation of the hot loops; ``_ckernel.pyx``
mirrors it line for line on ``uint64`` masks.  Vertex sets are Python
``int`` bitmasks, adjacency is one mask per vertex.
"""

ALPHA = 0
MU = 1

_INF = 1 << 30


def _low_index(mask):
    return (mask & -mask).bit_length() - 1


class BitGraph:
    """Adjacency masks plus the three exact searches used everywhere."""

    backend = "python"

    def __init__(self, n, adj):
        self.n = n
        self.adj = list(adj)

    # -- independent sets -------------------------------------------------

    def mis_size(self, mask):
        adj = self.adj

        def rec(m):
            if not m:
                return 0
            best_v = -1
            best_d = -1
            rest = m
            while rest:
                low = rest & -rest
                rest ^= low
                v = low.bit_length() - 1
                d = (adj[v] & m).bit_count()
                if d <= 1:
                    # a vertex of degree <= 1 is always in some maximum set
                    return 1 + rec(m & ~(adj[v] | low))
                if d > best_d:
                    best_d = d
                    best_v = v
            bit = 1 << best_v
            with_v = 1 + rec(m & ~(adj[best_v] | bit))
            if with_v >= (m & ~bit).bit_count():
                return with_v
            return max(with_v, rec(m & ~bit))

        return rec(mask)

    # -- induced matchings touching a set ---------------------------------

    def touching_edges(self, touch):
        adj = self.adj
        out = []
        for u in range(self.n):
            ubit = 1 << u
            nb = adj[u] >> (u + 1)
            v = u + 1
            while nb:
                if nb & 1 and ((touch & ubit) or (touch >> v) & 1):
                    out.append((u, v))
                nb >>= 1
                v += 1
        return out

    def im_touching(self, touch):
        """Maximum induced matching whose edges all meet ``touch``.

        Returns ``(size, edges)``; the witness is the first maximum found
        when candidate edges are branched in lexicographic order, include
        before exclude.
        """
        edges = self.touching_edges(touch)
        adj = self.adj
        closed = [adj[v] | (1 << v) for v in range(self.n)]
        best = [0, []]
        chosen = []

        def rec(start, blocked, count):
            if count > best[0]:
                best[0] = count
                best[1] = list(chosen)
            if count + (touch & ~blocked).bit_count() <= best[0]:
                return
            for j in range(start, len(edges)):
                u, v = edges[j]
                if (blocked >> u) & 1 or (blocked >> v) & 1:
                    continue
                chosen.append(edges[j])
                rec(j + 1, blocked | closed[u] | closed[v], count + 1)
                chosen.pop()
                if count + (touch & ~blocked).bit_count() <= best[0]:
                    return

        rec(0, 0, 0)
        return best[0], best[1]

    def im_touching_size(self, touch):
        return self.im_touching(touch)[0]

    # -- elimination-ordering search --------------------------------------

    def order_search(self, param, first=None):
        """Minimise max bag cost over elimination orderings.

        Depth-first in lexicographic order with two prunings that never
        discard a strictly better ordering: partial cost >= best, and a
        revisited eliminated set whose earlier visit had partial cost <= now.
        The elimination graph after removing a set S does not depend on the
        order inside S, which is what makes the second pruning sound.

        ``first`` optionally restricts the first eliminated vertex.
        Returns ``(value, order, explored_leaves)``.
        """
        n = self.n
        full = (1 << n) - 1
        if n == 0:
            return 0, [], 1
        cost_cache = {}
        if param == ALPHA:
            cost_fn = self.mis_size
            lower = 1
        else:
            cost_fn = self.im_touching_size
            lower = 1 if any(self.adj) else 0
        memo = {}
        state = {"best": _INF, "order": None, "explored": 0}
        prefix = []
        firsts = full if first is None else first

        def cost(bag):
            c = cost_cache.get(bag)
            if c is None:
                c = cost_fn(bag)
                cost_cache[bag] = c
            return c

        def rec(eliminated, cur_adj, cur):
            if eliminated == full:
                state["explored"] += 1
                state["best"] = cur
                state["order"] = list(prefix)
                return
            seen = memo.get(eliminated)
            if seen is not None and seen <= cur:
                return
            memo[eliminated] = cur
            rest = full & ~eliminated
            if not eliminated:
                rest &= firsts
            while rest:
                low = rest & -rest
                rest ^= low
                v = low.bit_length() - 1
                nb = cur_adj[v]
                c = cost(nb | low)
                nxt = c if c > cur else cur
                if nxt >= state["best"]:
                    continue
                new_adj = list(cur_adj)
                new_adj[v] = 0
                w_mask = nb
                while w_mask:
                    wl = w_mask & -w_mask
                    w_mask ^= wl
                    w = wl.bit_length() - 1
                    new_adj[w] = (cur_adj[w] | nb) & ~(wl | low)
                prefix.append(v)
                rec(eliminated | low, new_adj, nxt)
                prefix.pop()
                if state["best"] <= lower:
                    return

        rec(0, list(self.adj), 0)
        return state["best"], state["order"], state["explored"]
