"""Labelled simple graphs on [n] stored as adjacency bitsets.

Vertices are 1..n at every public boundary; row ``i`` of the internal
adjacency tuple holds the neighbours of vertex ``i + 1`` as a bitmask.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator

MAX_N = 64


class GraphError(ValueError):
    """Malformed graph input (bad vertex, loop, n out of range, bad graph6)."""


def pair_index(i: int, j: int) -> int:
    """Bit position of the 0-based pair {i, j} in graph6 column order."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pairs(n: int) -> list[tuple[int, int]]:
    """All 0-based pairs (i, j), i < j, ordered by ``pair_index``."""
    return [(i, j) for j in range(1, n) for i in range(j)]


class Graph:
    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 1 <= n <= MAX_N:
            raise GraphError(f"n must be in 1..{MAX_N}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge ({u}, {v}) outside [1, {n}]")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        self.n = n
        self.rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_rows(cls, n: int, rows) -> "Graph":
        """Wrap 0-based adjacency rows; trusted internal constructor."""
        g = object.__new__(cls)
        g.n = n
        g.rows = tuple(rows)
        g._hash = None
        return g

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        rows = [0] * n
        for k, (i, j) in enumerate(pairs(n)):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return cls.from_rows(n, rows)

    @property
    def mask(self) -> int:
        m = 0
        for j in range(1, self.n):
            row = self.rows[j] & ((1 << j) - 1)
            while row:
                b = row & -row
                m |= 1 << pair_index(b.bit_length() - 1, j)
                row ^= b
        return m

    def edges(self) -> list[tuple[int, int]]:
        """Sorted 1-based edge list."""
        out = []
        for i in range(self.n):
            row = self.rows[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    out.append((i + 1, j + 1))
                row >>= 1
                j += 1
        return out

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u - 1] >> (v - 1) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v - 1].bit_count()

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows = list(self.rows)
        rows[u - 1] |= 1 << (v - 1)
        rows[v - 1] |= 1 << (u - 1)
        return Graph.from_rows(self.n, rows)

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u - 1] &= ~(1 << (v - 1))
        rows[v - 1] &= ~(1 << (u - 1))
        return Graph.from_rows(self.n, rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self):
        return f"Graph({self.n}, {self.edges()})"

    # serialization ---------------------------------------------------------

    def to_graph6(self) -> str:
        return encode_graph6(self)

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        return decode_graph6(text)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["n"]), [tuple(e) for e in data["edges"]])
        except (KeyError, TypeError) as exc:
            raise GraphError(f"bad JSON graph: {exc}") from exc


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


# --------------------------------------------------------------------------
# bitset kernels (0-based, used directly by the enumeration loops)


def component_masks(n: int, rows) -> list[int]:
    """Vertex bitmasks of the components, ordered by smallest vertex."""
    seen = 0
    out = []
    full = (1 << n) - 1
    while seen != full:
        low = ~seen & (seen + 1)
        comp = low
        frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = rows[b.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        out.append(comp)
    return out


def bridge_pairs(n: int, rows, within: int | None = None) -> list[tuple[int, int]]:
    """0-based bridges by one iterative low-link DFS.

    ``within`` restricts the search to the subgraph induced by a vertex mask.
    """
    if within is None:
        within = (1 << n) - 1
    pre = [-1] * n
    low = [0] * n
    out = []
    cnt = 0
    todo = within
    while todo:
        s = (todo & -todo).bit_length() - 1
        pre[s] = low[s] = cnt
        cnt += 1
        stack = [(s, -1, rows[s] & within)]
        while stack:
            v, parent, rem = stack[-1]
            if rem:
                b = rem & -rem
                stack[-1] = (v, parent, rem ^ b)
                w = b.bit_length() - 1
                if pre[w] < 0:
                    pre[w] = low[w] = cnt
                    cnt += 1
                    stack.append((w, v, rows[w] & within))
                elif w != parent and pre[w] < low[v]:
                    low[v] = pre[w]
            else:
                stack.pop()
                if parent >= 0:
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] > pre[parent]:
                        out.append((parent, v) if parent < v else (v, parent))
        for v in range(n):
            if pre[v] >= 0:
                todo &= ~(1 << v)
    return out


def profile(n: int, rows) -> tuple[tuple[int, ...], int, int]:
    """(component sizes descending, number of bridges, number of edges)."""
    sizes = sorted((c.bit_count() for c in component_masks(n, rows)), reverse=True)
    e = sum(r.bit_count() for r in rows) // 2
    # a forest has every edge as a bridge; skip the DFS
    if e == n - len(sizes):
        return tuple(sizes), e, e
    return tuple(sizes), len(bridge_pairs(n, rows)), e


# --------------------------------------------------------------------------
# public operations


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as 1-based vertex sets, ordered by smallest vertex."""
    return [_mask_to_set(c) for c in component_masks(g.n, g.rows)]


def kappa(g: Graph) -> int:
    return len(component_masks(g.n, g.rows))


def bridges(g: Graph) -> set[tuple[int, int]]:
    return {(u + 1, v + 1) for u, v in bridge_pairs(g.n, g.rows)}


def num_bridges(g: Graph) -> int:
    return len(bridge_pairs(g.n, g.rows))


def skeleton(g: Graph) -> Graph:
    """``g`` with every bridge deleted."""
    rows = list(g.rows)
    for u, v in bridge_pairs(g.n, g.rows):
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph.from_rows(g.n, rows)


def frag(g: Graph) -> int:
    """Vertices outside a largest component."""
    return g.n - max(c.bit_count() for c in component_masks(g.n, g.rows))


def cross_pairs(g: Graph) -> set[tuple[int, int]]:
    """Vertex pairs lying in different components."""
    comps = component_masks(g.n, g.rows)
    label = [0] * g.n
    for k, c in enumerate(comps):
        for v in _bits(c):
            label[v] = k
    return {(i + 1, j + 1) for i, j in pairs(g.n) if label[i] != label[j]}


def cross_count(g: Graph) -> int:
    sizes = [c.bit_count() for c in component_masks(g.n, g.rows)]
    return (g.n * g.n - sum(s * s for s in sizes)) // 2


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(v + 1 for v in _bits(mask))


# --------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for i, j in pairs(n):
        bits.append(g.rows[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(n) + body


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphError(f"invalid graph6 character in {text!r}")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise GraphError("graph6 with n > 258047 is not supported")
        if len(s) < 4:
            raise GraphError("truncated graph6 size field")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if not 1 <= n <= MAX_N:
        raise GraphError(f"graph6 n={n} outside 1..{MAX_N}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body length {len(body)} does not match n={n}")
    rows = [0] * n
    plist = pairs(n)
    k = 0
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if val >> shift & 1:
                if k >= nbits:
                    raise GraphError("nonzero graph6 padding bits")
                i, j = plist[k]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph.from_rows(n, rows)


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield decode_graph6(line)


def write_graph6_stream(graphs: Iterable[Graph], fh) -> int:
    count = 0
    for g in graphs:
        fh.write(encode_graph6(g) + "\n")
        count += 1
    return count
