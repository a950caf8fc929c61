# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernel``: same algorithms on uint64 masks (n <= 64)."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64
    ORDER_MAXN = 12
    INF = 1 << 30

ALPHA = 0
MU = 1


cdef inline int popc(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef int _mis(const uint64_t* adj, uint64_t m) noexcept nogil:
    cdef uint64_t rest, low, bit
    cdef int v, d, best_v, best_d, with_v, without
    if m == 0:
        return 0
    best_v = -1
    best_d = -1
    rest = m
    while rest:
        low = rest & (~rest + 1)
        rest ^= low
        v = ctz(low)
        d = popc(adj[v] & m)
        if d <= 1:
            return 1 + _mis(adj, m & ~(adj[v] | low))
        if d > best_d:
            best_d = d
            best_v = v
    bit = (<uint64_t>1) << best_v
    with_v = 1 + _mis(adj, m & ~(adj[best_v] | bit))
    if with_v >= popc(m & ~bit):
        return with_v
    without = _mis(adj, m & ~bit)
    return with_v if with_v > without else without


cdef struct IMCtx:
    int n_edges
    int* eu
    int* ev
    uint64_t* closed
    uint64_t touch
    int best
    int* chosen
    int* best_chosen


cdef void _im_rec(IMCtx* ctx, int start, uint64_t blocked, int count) noexcept nogil:
    cdef int j, u, v, k
    if count > ctx.best:
        ctx.best = count
        for k in range(count):
            ctx.best_chosen[k] = ctx.chosen[k]
    if count + popc(ctx.touch & ~blocked) <= ctx.best:
        return
    for j in range(start, ctx.n_edges):
        u = ctx.eu[j]
        v = ctx.ev[j]
        if (blocked >> u) & 1 or (blocked >> v) & 1:
            continue
        ctx.chosen[count] = j
        _im_rec(ctx, j + 1, blocked | ctx.closed[u] | ctx.closed[v], count + 1)
        if count + popc(ctx.touch & ~blocked) <= ctx.best:
            return


cdef int _im_touching(const uint64_t* adj, int n, uint64_t touch, int* out_u, int* out_v) noexcept nogil:
    """Returns size; writes witness edges into out_u/out_v when non-NULL."""
    cdef IMCtx ctx
    cdef int u, v, cnt = 0, k
    cdef int cap = n * (n - 1) // 2 + 1
    cdef uint64_t closed[MAXN]
    ctx.eu = <int*>malloc(cap * sizeof(int))
    ctx.ev = <int*>malloc(cap * sizeof(int))
    ctx.chosen = <int*>malloc((n + 1) * sizeof(int))
    ctx.best_chosen = <int*>malloc((n + 1) * sizeof(int))
    for u in range(n):
        closed[u] = adj[u] | ((<uint64_t>1) << u)
        for v in range(u + 1, n):
            if (adj[u] >> v) & 1 and (((touch >> u) & 1) or ((touch >> v) & 1)):
                ctx.eu[cnt] = u
                ctx.ev[cnt] = v
                cnt += 1
    ctx.n_edges = cnt
    ctx.closed = closed
    ctx.touch = touch
    ctx.best = 0
    _im_rec(&ctx, 0, 0, 0)
    if out_u != NULL:
        for k in range(ctx.best):
            out_u[k] = ctx.eu[ctx.best_chosen[k]]
            out_v[k] = ctx.ev[ctx.best_chosen[k]]
    k = ctx.best
    free(ctx.eu)
    free(ctx.ev)
    free(ctx.chosen)
    free(ctx.best_chosen)
    return k


cdef struct OrdCtx:
    int n
    int param
    uint64_t full
    uint64_t firsts
    const uint64_t* adj0
    signed char* cost_cache
    int* memo
    int best
    int lower
    long long explored
    int depth
    int prefix[ORDER_MAXN]
    int best_order[ORDER_MAXN]


cdef int _cost(OrdCtx* ctx, uint64_t bag) noexcept nogil:
    cdef int c = ctx.cost_cache[bag]
    if c < 0:
        if ctx.param == 0:
            c = _mis(ctx.adj0, bag)
        else:
            c = _im_touching(ctx.adj0, ctx.n, bag, NULL, NULL)
        ctx.cost_cache[bag] = <signed char>c
    return c


cdef void _ord_rec(OrdCtx* ctx, uint64_t eliminated, const uint64_t* cur_adj, int cur) noexcept nogil:
    cdef uint64_t rest, low, nb, w_mask, wl
    cdef uint64_t new_adj[ORDER_MAXN]
    cdef int v, w, c, nxt, k
    if eliminated == ctx.full:
        ctx.explored += 1
        ctx.best = cur
        for k in range(ctx.n):
            ctx.best_order[k] = ctx.prefix[k]
        return
    if ctx.memo[eliminated] <= cur:
        return
    ctx.memo[eliminated] = cur
    rest = ctx.full & ~eliminated
    if eliminated == 0:
        rest &= ctx.firsts
    while rest:
        low = rest & (~rest + 1)
        rest ^= low
        v = ctz(low)
        nb = cur_adj[v]
        c = _cost(ctx, nb | low)
        nxt = c if c > cur else cur
        if nxt >= ctx.best:
            continue
        memcpy(new_adj, cur_adj, ctx.n * sizeof(uint64_t))
        new_adj[v] = 0
        w_mask = nb
        while w_mask:
            wl = w_mask & (~w_mask + 1)
            w_mask ^= wl
            w = ctz(wl)
            new_adj[w] = (cur_adj[w] | nb) & ~(wl | low)
        ctx.prefix[ctx.depth] = v
        ctx.depth += 1
        _ord_rec(ctx, eliminated | low, new_adj, nxt)
        ctx.depth -= 1
        if ctx.best <= ctx.lower:
            return


cdef class BitGraph:
    cdef public int n
    cdef uint64_t _adj[MAXN]
    cdef public list adj

    backend = "cython"

    def __init__(self, int n, adj):
        cdef int v
        if n > MAXN:
            raise ValueError("compiled kernel supports at most 64 vertices")
        self.n = n
        self.adj = list(adj)
        for v in range(n):
            self._adj[v] = <uint64_t>self.adj[v]

    def mis_size(self, mask):
        return _mis(self._adj, <uint64_t>mask)

    def touching_edges(self, touch):
        cdef int u, v
        cdef uint64_t t = <uint64_t>touch
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self._adj[u] >> v) & 1 and (((t >> u) & 1) or ((t >> v) & 1)):
                    out.append((u, v))
        return out

    def im_touching(self, touch):
        cdef int out_u[MAXN]
        cdef int out_v[MAXN]
        cdef int k, size
        size = _im_touching(self._adj, self.n, <uint64_t>touch, out_u, out_v)
        return size, [(out_u[k], out_v[k]) for k in range(size)]

    def im_touching_size(self, touch):
        return _im_touching(self._adj, self.n, <uint64_t>touch, NULL, NULL)

    def order_search(self, int param, first=None):
        cdef OrdCtx ctx
        cdef int n = self.n
        cdef int v
        cdef uint64_t states
        if n == 0:
            return 0, [], 1
        if n > ORDER_MAXN:
            raise ValueError("ordering search supports at most 12 vertices")
        states = (<uint64_t>1) << n
        ctx.n = n
        ctx.param = param
        ctx.full = states - 1
        ctx.firsts = ctx.full if first is None else <uint64_t>first
        ctx.adj0 = self._adj
        ctx.best = INF
        ctx.explored = 0
        ctx.depth = 0
        if param == 0:
            ctx.lower = 1
        else:
            ctx.lower = 0
            for v in range(n):
                if self._adj[v]:
                    ctx.lower = 1
                    break
        ctx.cost_cache = <signed char*>malloc(states * sizeof(signed char))
        ctx.memo = <int*>malloc(states * sizeof(int))
        memset(ctx.cost_cache, 0xFF, states * sizeof(signed char))
        for v in range(<int>states):
            ctx.memo[v] = INF
        try:
            with nogil:
                _ord_rec(&ctx, 0, self._adj, 0)
            if ctx.best >= INF:
                return ctx.best, None, ctx.explored
            return ctx.best, [ctx.best_order[v] for v in range(n)], ctx.explored
        finally:
            free(ctx.cost_cache)
            free(ctx.memo)
