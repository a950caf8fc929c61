"""Ramsey upper bounds, the derived bound formulas, monochromatic clique
search, and the two Ramsey-type extraction procedures (induced matching or
biclique from a large matching; joint independent set from several
independent sets).

Bounds are exact integers until they pass ``MAX_DIGITS`` decimal digits, at
which point they *saturate*: a saturated :class:`BigCount` only remembers a
lower bound on its number of digits.  Even the tiniest nontrivial parameters
overflow every fixed-width integer, and a few of them (``C(1, 2)`` already)
are towers no machine can write down.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Dict, Iterable, Optional, Sequence, Union

from .config import check_cap, get_caps
from .errors import PreconditionError
from .graph import (
    BicliqueWitness,
    Graph,
    _check_matching,
    bits,
    find_induced_biclique,
    max_induced_matching_touching_mask,
    to_set,
)

MAX_DIGITS = 20_000
_LOG10_2 = math.log10(2)


@total_ordering
class BigCount:
    """Nonnegative integer that saturates beyond ``MAX_DIGITS`` digits."""

    __slots__ = ("exact", "min_digits")

    def __init__(self, exact: Optional[int] = None, min_digits: int = 0):
        if exact is not None:
            if exact < 0:
                raise ValueError("BigCount is nonnegative")
            if _digits_lower(exact) > MAX_DIGITS:
                min_digits = _digits_lower(exact)
                exact = None
        self.exact = exact
        self.min_digits = min_digits

    @classmethod
    def saturated(cls, min_digits: int) -> "BigCount":
        return cls(None, max(min_digits, MAX_DIGITS))

    @property
    def is_saturated(self) -> bool:
        return self.exact is None

    def __int__(self):
        if self.exact is None:
            raise OverflowError(f"saturated bound (at least 10^{self.min_digits})")
        return self.exact

    def __index__(self):
        return int(self)

    def __add__(self, other):
        other = as_count(other)
        if self.exact is not None and other.exact is not None:
            return BigCount(self.exact + other.exact)
        return BigCount.saturated(max(_dig(self), _dig(other)))

    __radd__ = __add__

    def __mul__(self, other):
        other = as_count(other)
        if self.exact is not None and other.exact is not None:
            a, b = self.exact, other.exact
            if _digits_lower(a) + _digits_lower(b) > MAX_DIGITS + 1:
                return BigCount.saturated(_digits_lower(a) + _digits_lower(b) - 1)
            return BigCount(a * b)
        if self.exact == 0 or other.exact == 0:
            return BigCount(0)
        return BigCount.saturated(_dig(self) + _dig(other) - 1)

    __rmul__ = __mul__

    def __sub__(self, other: int):
        if isinstance(other, BigCount):
            if other.exact is None:
                raise ValueError("cannot subtract a saturated bound")
            other = other.exact
        if self.exact is not None:
            return BigCount(self.exact - other)
        # 10^d - k >= 10^(d-1) for any k we ever subtract
        return BigCount.saturated(self.min_digits - 1)

    def __eq__(self, other):
        if isinstance(other, (int, BigCount)):
            other = as_count(other)
            if self.exact is not None and other.exact is not None:
                return self.exact == other.exact
            return self is other
        return NotImplemented

    def __lt__(self, other):
        other = as_count(other)
        if self.exact is not None and other.exact is not None:
            return self.exact < other.exact
        if other.exact is None and self.exact is not None:
            if _digits_upper(self.exact) <= other.min_digits:
                return True
        if self.exact is None and other.exact is not None:
            if _digits_upper(other.exact) <= self.min_digits:
                return False
        raise ValueError("comparison involving saturated bounds is indeterminate")

    def __hash__(self):
        return hash(self.exact) if self.exact is not None else id(self)

    def __str__(self):
        if self.exact is not None:
            return _decimal(self.exact)
        return f"saturated:>=10^{self.min_digits}"

    def __repr__(self):
        return f"BigCount({self})"


CountLike = Union[int, BigCount]


def as_count(x: CountLike) -> BigCount:
    if isinstance(x, BigCount):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected an integer count, got {type(x).__name__}")
    return BigCount(x)


def _decimal(x: int) -> str:
    # chunked so long values stay under the interpreter's int-to-str limit
    if x < 10**1000:
        return str(x)
    half = _digits_lower(x) // 2
    hi, lo = divmod(x, 10**half)
    return _decimal(hi) + _decimal(lo).rjust(half, "0")


def _digits_lower(x: int) -> int:
    """Largest d with x >= 10^d (x >= 1), from bit length; 0 for x < 10."""
    if x < 10:
        return 0
    return max(0, int((x.bit_length() - 1) * _LOG10_2) - 1)


def _digits_upper(x: int) -> int:
    """Some d with x < 10^d."""
    return int(x.bit_length() * _LOG10_2) + 1


def _dig(c: BigCount) -> int:
    return c.min_digits if c.exact is None else _digits_lower(c.exact)


def _binom(n: BigCount, k: int) -> BigCount:
    # binom(n, k) >= (n / k)^k for 1 <= k <= n
    if n.exact is None:
        return BigCount.saturated(n.min_digits) if k >= 1 else BigCount(1)
    nn = n.exact
    if k < 0 or k > nn:
        return BigCount(0)
    k = min(k, nn - k)
    if k == 0:
        return BigCount(1)
    lower = k * (math.log10(nn) - math.log10(k))
    if lower > MAX_DIGITS + 2:
        return BigCount.saturated(int(lower))
    return BigCount(math.comb(nn, k))


def ramsey_two(a: CountLike, b: CountLike) -> BigCount:
    """Pascal bound: R(a, b) <= R(a-1, b) + R(a, b-1), R(1, .) = 1, R(2, k) = k.

    Its closed form is binom(a + b - 2, a - 1).
    """
    a = as_count(a)
    b = as_count(b)
    if (a.exact is not None and a.exact < 1) or (b.exact is not None and b.exact < 1):
        raise PreconditionError("Ramsey targets must be positive")
    if a.exact == 1 or b.exact == 1:
        return BigCount(1)
    if a.exact is not None and b.exact is not None:
        return _binom(BigCount(a.exact + b.exact - 2), min(a.exact, b.exact) - 1)
    small = a if a.exact is not None else b
    big = b if small is a else a
    if small.exact is None:
        return BigCount.saturated(max(a.min_digits, b.min_digits))
    # R(small, big) >= big once small >= 2
    return _binom(big + (small.exact - 2), small.exact - 1)


def ramsey_upper(targets: Sequence[CountLike]) -> BigCount:
    """Upper bound on R(t_1, ..., t_k): nested as R(t_1, R(t_2, ..., t_k))."""
    targets = list(targets)
    if not targets:
        raise PreconditionError("at least one Ramsey target is required")
    for t in targets:
        if as_count(t).exact is not None and as_count(t).exact < 1:
            raise PreconditionError("Ramsey targets must be positive")
    acc = as_count(targets[-1])
    for t in reversed(targets[:-1]):
        acc = ramsey_two(t, acc)
    return acc


def _nest(first: int, times: BigCount, inner: BigCount) -> BigCount:
    """``R(first, R(first, ... R(first, inner)))`` with ``times`` copies."""
    if first == 1:
        return BigCount(1) if (times.exact is None or times.exact > 0) else inner
    if first == 2:
        return inner
    acc = inner
    if times.exact is None:
        # each level at least doubles an argument >= 2; saturation is certain
        return BigCount.saturated(_dig(inner))
    done = 0
    while done < times.exact:
        nxt = ramsey_two(first, acc)
        done += 1
        if nxt.is_saturated:
            return nxt
        if nxt == acc:
            return acc
        acc = nxt
    return acc


def bound_M(s: CountLike, t: CountLike) -> BigCount:
    """M(s, t) = R(2t, 2t, s + 1)."""
    s, t = as_count(s), as_count(t)
    _positive(s, t)
    return ramsey_upper([2 * t, 2 * t, s + 1])


def bound_N(s: CountLike, t: CountLike, m: CountLike) -> BigCount:
    """N(s, t, m) = R(2t, ..., 2t, m * s) with binom(m, 2) copies of 2t."""
    s, t, m = as_count(s), as_count(t), as_count(m)
    _positive(s, t, m)
    pairs = _binom(m, 2)
    if t.exact is None:
        return BigCount.saturated(_dig(t))
    return _nest(2 * t.exact, pairs, m * s)


def bound_C(mu: CountLike, t: CountLike) -> BigCount:
    """C(mu, t) = N(M(mu, t), t, M(mu, t))."""
    m = bound_M(mu, t)
    return bound_N(m, t, m)


def bound_K(mu: CountLike, t: CountLike) -> BigCount:
    """K(mu, t) = 2 * M(mu, t) + mu * C(mu, t)."""
    return 2 * bound_M(mu, t) + as_count(mu) * bound_C(mu, t)


@lru_cache(maxsize=None)
def _f(mu: int, omega: int) -> BigCount:
    if mu == 0 or omega == 1:
        return BigCount(1)
    r = ramsey_upper([omega + 1, omega + 1, mu + 1])
    return 2 * (_f(mu - 1, omega) + (r - 1) * _f(mu, omega - 1))


def bound_f(mu: int, omega: int) -> BigCount:
    """Chromatic bound f(mu, omega) for mu(T) <= mu and clique number <= omega."""
    if mu < 0 or omega < 1:
        raise PreconditionError("bound_f needs mu >= 0 and omega >= 1")
    for w in range(1, omega + 1):  # fill the cache bottom-up; keeps recursion shallow
        for u in range(0, mu + 1):
            _f(u, w)
    return _f(mu, omega)


def _positive(*xs: BigCount) -> None:
    for x in xs:
        if x.exact is not None and x.exact < 1:
            raise PreconditionError("bound arguments must be positive")


# -- complete edge colorings and monochromatic cliques ---------------------


@dataclass(frozen=True)
class CompleteEdgeColoring:
    n: int
    color: Dict[tuple, object]

    def __post_init__(self):
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (i, j) not in self.color:
                    raise PreconditionError(f"pair ({i}, {j}) has no color")

    def of(self, i: int, j: int):
        return self.color[(i, j) if i < j else (j, i)]

    def color_masks(self, c) -> list:
        adj = [0] * self.n
        for (i, j), cc in self.color.items():
            if cc == c:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        return adj


def _first_clique(adj: list, n: int, size: int) -> Optional[int]:
    if size <= 0:
        return 0
    if size > n:
        return None

    def rec(chosen, cand, need):
        if need == 0:
            return chosen
        if cand.bit_count() < need:
            return None
        for v in bits(cand):
            got = rec(chosen | (1 << v), cand & adj[v] & ~((1 << (v + 1)) - 1), need - 1)
            if got is not None:
                return got
        return None

    return rec(0, (1 << n) - 1, size)


def find_monochromatic_clique(col: CompleteEdgeColoring, targets: Dict[object, int]):
    """First ``(color, indices)`` with a clique of the color's target size.

    Colors are tried in the mapping's order; within a color the clique is the
    lexicographically first one.  ``None`` when no color reaches its target.
    """
    check_cap("monochromatic clique search", col.n, get_caps().clique_n)
    for c, size in targets.items():
        got = _first_clique(col.color_masks(c), col.n, size)
        if got is not None:
            return c, to_set(got)
    return None


# -- extraction outcomes ----------------------------------------------------


@dataclass(frozen=True)
class InducedMatchingFound:
    matching: tuple


@dataclass(frozen=True)
class BicliqueFound:
    witness: BicliqueWitness


@dataclass(frozen=True)
class IndependentSetFound:
    vertices: frozenset


@dataclass(frozen=True)
class Exhausted:
    reason: str = ""


def _orient(G: Graph, A_mask: int, B_mask: int, M) -> list:
    out = []
    for u, v in _check_matching(G, M):
        if (A_mask >> u) & 1 and (B_mask >> v) & 1:
            out.append((u, v))
        elif (A_mask >> v) & 1 and (B_mask >> u) & 1:
            out.append((v, u))
        else:
            raise PreconditionError(f"matching edge ({u}, {v}) does not cross the bipartition")
    return out


def extract_im_or_biclique(G: Graph, A, B, M, s: int, t: int, mode: str = "faithful"):
    """From a matching ``a_i b_i`` in bipartite ``G[A u B]``, find an induced
    ``K_{t,t}`` or an induced matching of ``s + 1`` edges.

    ``faithful`` colors index pairs ``i < j`` by whether ``a_i b_j`` (1),
    else ``a_j b_i`` (2), else neither (3) is an edge and reads the answer off
    a monochromatic clique of size ``2t``, ``2t`` or ``s + 1``.  ``direct``
    searches ``G[A u B]`` exhaustively (biclique first).
    """
    if s < 1 or t < 1:
        raise PreconditionError("s and t must be positive")
    A_mask, B_mask = G.mask(A), G.mask(B)
    if A_mask & B_mask:
        raise PreconditionError("sides must be disjoint")
    for side in (A_mask, B_mask):
        e = G.edge_in(side)
        if e is not None:
            raise PreconditionError(f"G[A u B] is not bipartite with these sides: edge {e}")
    pairs = _orient(G, A_mask, B_mask, M)
    if mode == "faithful":
        return _extract_faithful(G, pairs, s, t)
    if mode == "direct":
        return _extract_direct(G, A_mask | B_mask, s, t)
    raise ValueError(f"unknown mode {mode!r}")


def _extract_faithful(G: Graph, pairs: list, s: int, t: int):
    n = len(pairs)
    colors = {}
    for i in range(n):
        for j in range(i + 1, n):
            ai, bi = pairs[i]
            aj, bj = pairs[j]
            if G.has_edge(ai, bj):
                colors[(i, j)] = 1
            elif G.has_edge(aj, bi):
                colors[(i, j)] = 2
            else:
                colors[(i, j)] = 3
    found = find_monochromatic_clique(CompleteEdgeColoring(n, colors), {1: 2 * t, 2: 2 * t, 3: s + 1})
    if found is None:
        return Exhausted(f"no monochromatic clique among {n} matching edges")
    c, idx = found
    idx = sorted(idx)
    if c == 1:
        side_a = frozenset(pairs[i][0] for i in idx[:t])
        side_b = frozenset(pairs[j][1] for j in idx[t:])
    elif c == 2:
        side_b = frozenset(pairs[j][1] for j in idx[:t])
        side_a = frozenset(pairs[i][0] for i in idx[t:])
    else:
        return InducedMatchingFound(tuple(pairs[i] for i in idx))
    return BicliqueFound(BicliqueWitness(side_a, side_b))


def _extract_direct(G: Graph, mask: int, s: int, t: int):
    sub, names = G.induced_subgraph(bits(mask))
    w = find_induced_biclique(sub, t)
    if w is not None:
        return BicliqueFound(
            BicliqueWitness(frozenset(names[v] for v in w.side_a), frozenset(names[v] for v in w.side_b))
        )
    size, matching = max_induced_matching_touching_mask(sub, sub.full_mask)
    if size >= s + 1:
        return InducedMatchingFound(tuple(tuple(sorted((names[u], names[v]))) for u, v in matching[: s + 1]))
    return Exhausted("no induced biclique and no large induced matching in G[A u B]")


def joint_independent_set(G: Graph, sets: Sequence[Iterable[int]], s: int, t: int, mode: str = "faithful",
                          sample: Optional[int] = None):
    """Independent ``I`` meeting each of the independent sets in ``>= s`` vertices.

    ``faithful`` samples the ``n`` smallest vertices ``v^i_1 < ... < v^i_n``
    of every set, with ``n = min(sample or N(s, t, m), min |I_i|)``, colors
    pairs ``k < l`` by the first ``(i, j)``, ``i < j``, with ``v^i_k v^j_l``
    an edge (else the special color), and slices a special-color clique of
    size ``m * s`` into consecutive blocks of ``s``.  A monochromatic
    ``(i, j)`` clique of size ``2t`` yields an induced biclique instead.
    ``direct`` backtracks over selections.
    """
    lists = [sorted(set(S)) for S in sets]
    m = len(lists)
    if m == 0:
        raise PreconditionError("at least one set is required")
    if s < 1 or t < 1:
        raise PreconditionError("s and t must be positive")
    for i, S in enumerate(lists):
        if not G.is_independent_mask(G.mask(S)):
            raise PreconditionError(f"set {i} is not independent")
        if len(S) < s:
            raise PreconditionError(f"set {i} has {len(S)} < {s} vertices")
    if mode == "faithful":
        return _joint_faithful(G, lists, s, t, sample)
    if mode == "direct":
        return _joint_direct(G, lists, s)
    raise ValueError(f"unknown mode {mode!r}")


def _joint_faithful(G: Graph, lists, s, t, sample):
    m = len(lists)
    requested = as_count(sample) if sample is not None else bound_N(s, t, m)
    n = min(len(S) for S in lists)
    if not requested.is_saturated:
        n = min(n, requested.exact)
    v = [S[:n] for S in lists]
    special = "c"
    colors = {}
    for k in range(n):
        for l in range(k + 1, n):
            c = special
            for i in range(m):
                for j in range(i + 1, m):
                    if G.has_edge(v[i][k], v[j][l]):
                        c = (i, j)
                        break
                if c != special:
                    break
            colors[(k, l)] = c
    targets = {(i, j): 2 * t for i in range(m) for j in range(i + 1, m)}
    targets[special] = m * s
    found = find_monochromatic_clique(CompleteEdgeColoring(n, colors), targets)
    if found is None:
        return Exhausted(f"no monochromatic clique among {n} sampled indices")
    c, idx = found
    idx = sorted(idx)
    if c != special:
        i, j = c
        return BicliqueFound(
            BicliqueWitness(frozenset(v[i][k] for k in idx[:t]), frozenset(v[j][l] for l in idx[t:]))
        )
    chosen = set()
    for i in range(m):
        chosen.update(v[i][k] for k in idx[i * s:(i + 1) * s])
    return IndependentSetFound(frozenset(chosen))


def _joint_direct(G: Graph, lists, s):
    m = len(lists)
    masks = [G.mask(S) for S in lists]

    def rec(i, chosen, blocked):
        if i == m:
            return chosen
        have = (chosen & masks[i]).bit_count()
        return pick(i, chosen, blocked, s - have, masks[i] & ~chosen & ~blocked, -1)

    def pick(i, chosen, blocked, need, cand, last):
        if need <= 0:
            return rec(i + 1, chosen, blocked)
        for v in bits(cand & ~((1 << (last + 1)) - 1)):
            bit = 1 << v
            got = pick(i, chosen | bit, blocked | G.adj[v], need - 1, cand & ~bit & ~G.adj[v], v)
            if got is not None:
                return got
        return None

    got = rec(0, 0, 0)
    if got is None:
        return Exhausted("no independent selection exists")
    return IndependentSetFound(to_set(got))
