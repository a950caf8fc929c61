"""PACE-style ``.gr`` graphs and ``.td`` tree decompositions.

Files are 1-indexed; everything in memory is 0-indexed.  The conversion
happens here and nowhere else.  Parsed decompositions are not validated.
"""
from __future__ import annotations

import warnings

from .decomposition import TreeDecomposition
from .errors import FormatError
from .graph import Graph, build_graph


class DuplicateEdgeWarning(UserWarning):
    pass


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("c"):
            yield no, line.split()


def _ints(tokens, no):
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", no) from None


def parse_gr(text: str) -> Graph:
    rows = list(_lines(text))
    if not rows or rows[0][1][:2] != ["p", "tw"] or len(rows[0][1]) != 4:
        raise FormatError("missing or malformed header 'p tw <n> <m>'", rows[0][0] if rows else 1)
    no, header = rows[0]
    n, m = _ints(header[2:], no)
    if n < 0 or m < 0:
        raise FormatError("negative counts in header", no)
    edges, seen = [], set()
    for no, toks in rows[1:]:
        if len(toks) != 2:
            raise FormatError(f"edge line needs two vertices, got {len(toks)} tokens", no)
        u, v = _ints(toks, no)
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"vertex index out of range 1..{n}", no)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", no)
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"line {no}: duplicate edge {key[0]} {key[1]} ignored", DuplicateEdgeWarning, stacklevel=2)
            continue
        seen.add(key)
        edges.append((u - 1, v - 1))
    if len(rows) - 1 != m:
        raise FormatError(f"header announces {m} edges, file has {len(rows) - 1}", 1)
    return build_graph(n, edges)


def write_gr(G: Graph) -> str:
    out = [f"p tw {G.n} {G.m}"]
    out += [f"{u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(out) + "\n"


def parse_td(text: str) -> TreeDecomposition:
    rows = list(_lines(text))
    if not rows or rows[0][1][:2] != ["s", "td"] or len(rows[0][1]) != 5:
        raise FormatError("missing or malformed header 's td <bags> <maxbag> <n>'", rows[0][0] if rows else 1)
    no, header = rows[0]
    k, _maxbag, n = _ints(header[2:], no)
    bags = {}
    edges = []
    for no, toks in rows[1:]:
        if toks[0] == "b":
            if len(toks) < 2:
                raise FormatError("bag line needs an id", no)
            ident, *members = _ints(toks[1:], no)
            if not 1 <= ident <= k:
                raise FormatError(f"bag id {ident} outside 1..{k}", no)
            if ident in bags:
                raise FormatError(f"bag {ident} defined twice", no)
            if any(not 1 <= v <= n for v in members):
                raise FormatError(f"bag {ident} has a vertex outside 1..{n}", no)
            bags[ident] = frozenset(v - 1 for v in members)
        else:
            if len(toks) != 2:
                raise FormatError("tree edge line needs two bag ids", no)
            x, y = _ints(toks, no)
            if not (1 <= x <= k and 1 <= y <= k):
                raise FormatError(f"tree edge ({x}, {y}) names a bag outside 1..{k}", no)
            edges.append((x - 1, y - 1))
    missing = [i for i in range(1, k + 1) if i not in bags]
    if missing:
        raise FormatError(f"bag {missing[0]} is never defined")
    return TreeDecomposition(k, tuple(edges), tuple(bags[i] for i in range(1, k + 1)))


def write_td(T: TreeDecomposition, n: int) -> str:
    out = [f"s td {T.node_count} {T.max_bag_size()} {n}"]
    for i, bag in enumerate(T.bags, 1):
        out.append(" ".join(["b", str(i)] + [str(v + 1) for v in sorted(bag)]))
    out += [f"{x + 1} {y + 1}" for x, y in T.tree_edges]
    return "\n".join(out) + "\n"


def read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
