"""Named graph classes, their level-n enumerators and closure checkers."""

from __future__ import annotations

import shlex
import subprocess
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Callable, Iterator, Optional

from .errors import CapExceeded, HypothesisError
from .graph import (
    Graph,
    bridge_pairs,
    component_masks,
    encode_graph6,
    pair_index,
    pairs,
    profile,
)

Rows = list  # 0-based adjacency bitmasks
Profile = tuple  # (sizes descending, bridges, edges)


@dataclass(eq=False)
class GraphClass:
    """A set of labelled graphs given by a membership predicate.

    ``can_add(n, rows, i, j)`` is an optional incremental test used when the
    class is closed under edge deletion: it must agree with membership of
    ``rows + ij`` given that ``rows`` is itself a member.
    """

    name: str
    membership: Callable[[Graph], bool]
    bridge_addable: Optional[bool] = None
    bridge_alterable: Optional[bool] = None
    deletion_closed: bool = False
    enum_cap: int = 7
    check_cap: int = 6
    builtin: bool = False
    member_rows: Optional[Callable[[int, Rows], bool]] = None
    can_add: Optional[Callable[[int, Rows, int, int], bool]] = None
    fast_census: Optional[Callable[[int], Counter]] = field(default=None, repr=False)

    def contains_rows(self, n: int, rows) -> bool:
        if self.member_rows is not None:
            return self.member_rows(n, rows)
        return bool(self.membership(Graph.from_rows(n, rows)))

    def __contains__(self, g: Graph) -> bool:
        return self.contains_rows(g.n, g.rows)


# --------------------------------------------------------------------------
# membership kernels


def _comp_of(rows, v: int) -> int:
    comp = frontier = 1 << v
    while frontier:
        b = frontier & -frontier
        frontier ^= b
        new = rows[b.bit_length() - 1] & ~comp
        comp |= new
        frontier |= new
    return comp


def _edges_in(rows, comp: int) -> int:
    total = 0
    c = comp
    while c:
        b = c & -c
        c ^= b
        total += (rows[b.bit_length() - 1] & comp).bit_count()
    return total // 2


def _is_forest(n, rows) -> bool:
    e = sum(r.bit_count() for r in rows) // 2
    return e == n - len(component_masks(n, rows))


def _forest_can_add(n, rows, i, j) -> bool:
    return not (_comp_of(rows, i) >> j & 1)


def _is_pseudoforest(n, rows) -> bool:
    return all(_edges_in(rows, c) <= c.bit_count() for c in component_masks(n, rows))


def _pseudoforest_can_add(n, rows, i, j) -> bool:
    ci = _comp_of(rows, i)
    if ci >> j & 1:
        return _edges_in(rows, ci) < ci.bit_count()
    cj = _comp_of(rows, j)
    return _edges_in(rows, ci) < ci.bit_count() or _edges_in(rows, cj) < cj.bit_count()


def _blocks_are_cliques(n, rows) -> bool:
    """True iff every biconnected block is complete (edge-stack DFS)."""
    pre = [-1] * n
    low = [0] * n
    cnt = 0
    for s in range(n):
        if pre[s] >= 0:
            continue
        pre[s] = low[s] = cnt
        cnt += 1
        stack = [(s, -1, rows[s])]
        estack = []
        while stack:
            v, parent, rem = stack[-1]
            if rem:
                b = rem & -rem
                stack[-1] = (v, parent, rem ^ b)
                w = b.bit_length() - 1
                if pre[w] < 0:
                    estack.append((v, w))
                    pre[w] = low[w] = cnt
                    cnt += 1
                    stack.append((w, v, rows[w]))
                elif w != parent and pre[w] < pre[v]:
                    estack.append((v, w))
                    if pre[w] < low[v]:
                        low[v] = pre[w]
            else:
                stack.pop()
                if parent < 0:
                    continue
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= pre[parent]:
                    verts = 0
                    ecount = 0
                    while True:
                        a, c = estack.pop()
                        verts |= (1 << a) | (1 << c)
                        ecount += 1
                        if a == parent and c == v:
                            break
                    k = verts.bit_count()
                    if ecount != k * (k - 1) // 2:
                        return False
    return True


PLANAR_CAP = 8


def _paths(rows, a: int, b: int, free: int) -> Iterator[int]:
    """Internal-vertex masks of simple a-b paths whose interior lies in ``free``."""
    if rows[a] >> b & 1:
        yield 0
    stack = [(a, 0)]
    while stack:
        v, used = stack.pop()
        nxt = rows[v] & free & ~used
        while nxt:
            bit = nxt & -nxt
            nxt ^= bit
            w = bit.bit_length() - 1
            u2 = used | bit
            if rows[w] >> b & 1:
                yield u2
            stack.append((w, u2))


def _realize(rows, required, free: int) -> bool:
    """Can every pair in ``required`` be joined by internally disjoint paths?"""
    if not required:
        return True
    (a, b), rest = required[0], required[1:]
    for used in _paths(rows, a, b, free):
        if _realize(rows, rest, free & ~used):
            return True
    return False


def _has_kuratowski(n, rows) -> bool:
    rows = list(rows)
    alive = (1 << n) - 1
    # vertices of degree <= 1 never lie on a subdivision
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if alive >> v & 1 and (rows[v] & alive).bit_count() <= 1:
                alive &= ~(1 << v)
                changed = True
    rows = [r & alive for r in rows]
    verts = [v for v in range(n) if alive >> v & 1]
    deg = {v: rows[v].bit_count() for v in verts}
    big4 = [v for v in verts if deg[v] >= 4]
    if len(big4) >= 5:
        for branch in combinations(big4, 5):
            bmask = sum(1 << v for v in branch)
            if _realize(rows, list(combinations(branch, 2)), alive & ~bmask):
                return True
    big3 = [v for v in verts if deg[v] >= 3]
    if len(big3) >= 6:
        for six in combinations(big3, 6):
            first = six[0]
            bmask = sum(1 << v for v in six)
            for side in combinations(six[1:], 2):
                left = (first,) + side
                right = tuple(v for v in six if v not in left)
                req = [(x, y) for x in left for y in right]
                if _realize(rows, req, alive & ~bmask):
                    return True
    return False


def _is_planar_small(n, rows) -> bool:
    if n > PLANAR_CAP:
        raise CapExceeded(f"planar_small membership is limited to n <= {PLANAR_CAP}")
    e = sum(r.bit_count() for r in rows) // 2
    if n >= 3 and e > 3 * n - 6:
        return False
    return not _has_kuratowski(n, rows)


def _planar_can_add(n, rows, i, j) -> bool:
    rows2 = list(rows)
    rows2[i] |= 1 << j
    rows2[j] |= 1 << i
    return _is_planar_small(n, rows2)


# --------------------------------------------------------------------------
# forests: census straight from component structure


def _integer_partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _integer_partitions(n - k, k):
            yield (k,) + rest


def _bareiss_det(mat: list[list[int]]) -> int:
    m = [row[:] for row in mat]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


@lru_cache(maxsize=None)
def labelled_tree_count(m: int) -> int:
    """Spanning trees of K_m, from the reduced Laplacian determinant."""
    if m <= 2:
        return 1
    lap = [[m - 1 if i == j else -1 for j in range(m - 1)] for i in range(m - 1)]
    return _bareiss_det(lap)


def _forest_census(n: int) -> Counter:
    census = Counter()
    for sizes in _integer_partitions(n):
        ways = factorial(n)
        for s in sizes:
            ways //= factorial(s)
        for mult in Counter(sizes).values():
            ways //= factorial(mult)
        for s in sizes:
            ways *= labelled_tree_count(s)
        e = n - len(sizes)
        census[(sizes, e, e)] += ways
    return census


# --------------------------------------------------------------------------
# registry


def _rows_pred(fn):
    return lambda g: fn(g.n, g.rows)


ALL_GRAPHS = GraphClass(
    "all_graphs", _rows_pred(lambda n, rows: True), True, True, True,
    enum_cap=7, check_cap=6, builtin=True,
    member_rows=lambda n, rows: True, can_add=lambda n, rows, i, j: True,
)
FORESTS = GraphClass(
    "forests", _rows_pred(_is_forest), True, True, True,
    enum_cap=10, check_cap=8, builtin=True,
    member_rows=_is_forest, can_add=_forest_can_add, fast_census=_forest_census,
)
PSEUDOFORESTS = GraphClass(
    # not bridge-addable from n=6 on: a bridge between two unicyclic components
    "pseudoforests", _rows_pred(_is_pseudoforest), False, False, True,
    enum_cap=8, check_cap=7, builtin=True,
    member_rows=_is_pseudoforest, can_add=_pseudoforest_can_add,
)
BLOCK_CLIQUE = GraphClass(
    "block_clique", _rows_pred(_blocks_are_cliques), True, True, False,
    enum_cap=7, check_cap=6, builtin=True,
    member_rows=_blocks_are_cliques,
)
PLANAR_SMALL = GraphClass(
    "planar_small", _rows_pred(_is_planar_small), True, True, True,
    enum_cap=7, check_cap=6, builtin=True,
    member_rows=_is_planar_small, can_add=_planar_can_add,
)

BUILTIN = {c.name: c for c in (ALL_GRAPHS, FORESTS, PSEUDOFORESTS, BLOCK_CLIQUE, PLANAR_SMALL)}


def get_class(name: str) -> GraphClass:
    try:
        return BUILTIN[name]
    except KeyError:
        raise KeyError(f"unknown class {name!r}; built-ins: {', '.join(BUILTIN)}") from None


def user_class(name: str, predicate: Callable[[Graph], bool], enum_cap: int = 6,
               deletion_closed: bool = False) -> GraphClass:
    """A class given only by a predicate. Nothing about it is assumed."""
    return GraphClass(name, predicate, deletion_closed=deletion_closed,
                      enum_cap=enum_cap, check_cap=enum_cap)


class ExternalPredicate:
    """Membership answered by a child process.

    Protocol: one graph6 line is written to the child's stdin per query; the
    child answers with one line starting ``Y`` or ``N``. Both sides flush
    after every line.
    """

    def __init__(self, command):
        if isinstance(command, str):
            command = shlex.split(command)
        self.command = command
        self._proc = subprocess.Popen(
            command, stdin=subprocess.PIPE, stdout=subprocess.PIPE, text=True, bufsize=1,
        )

    def __call__(self, g: Graph) -> bool:
        self._proc.stdin.write(encode_graph6(g) + "\n")
        self._proc.stdin.flush()
        answer = self._proc.stdout.readline()
        if not answer:
            raise RuntimeError(f"predicate process {self.command!r} closed its output")
        answer = answer.strip().upper()
        if answer.startswith("Y"):
            return True
        if answer.startswith("N"):
            return False
        raise RuntimeError(f"predicate process answered {answer!r}, expected Y or N")

    def close(self):
        if self._proc.poll() is None:
            self._proc.stdin.close()
            self._proc.wait(timeout=10)

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def external_class(name: str, command, enum_cap: int = 6) -> GraphClass:
    return user_class(name, ExternalPredicate(command), enum_cap=enum_cap)


# --------------------------------------------------------------------------
# enumeration


def _check_cap(cls: GraphClass, n: int, cap: Optional[int] = None):
    cap = cls.enum_cap if cap is None else cap
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise CapExceeded(f"{cls.name}: n={n} exceeds enumeration cap {cap}")


def _pruned_rows(n: int, can_add) -> Iterator[tuple]:
    """Edge-subset DFS yielding rows in increasing edge-mask order.

    The highest pair index is decided first, exclusion before inclusion.
    ``can_add`` prunes inclusion; it is only sound for deletion-closed sets.
    """
    plist = pairs(n)
    m = len(plist)
    rows = [0] * n
    if m == 0:
        yield tuple(rows)
        return
    choice = [-1] * m
    k = m - 1
    while True:
        c = choice[k]
        i, j = plist[k]
        if c == 1:
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)
        c += 1
        if c == 1 and not can_add(n, rows, i, j):
            c = 2
        if c == 2:
            choice[k] = -1
            k += 1
            if k == m:
                return
            continue
        if c == 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        choice[k] = c
        if k == 0:
            yield tuple(rows)
        else:
            k -= 1


def _always(n, rows, i, j):
    return True


def iter_rows(cls: GraphClass, n: int, cap: Optional[int] = None) -> Iterator[tuple]:
    _check_cap(cls, n, cap)
    if cls.deletion_closed and cls.can_add is not None:
        yield from _pruned_rows(n, cls.can_add)
        return
    if cls.deletion_closed:
        def can_add(n_, rows, i, j):
            r = list(rows)
            r[i] |= 1 << j
            r[j] |= 1 << i
            return cls.contains_rows(n_, r)
        if cls.contains_rows(n, [0] * n):
            yield from _pruned_rows(n, can_add)
        return
    for rows in _pruned_rows(n, _always):
        if cls.contains_rows(n, rows):
            yield rows


def enumerate_graphs(cls: GraphClass, n: int, cap: Optional[int] = None) -> Iterator[Graph]:
    """Every member of the class on [n], once each, by increasing edge mask."""
    for rows in iter_rows(cls, n, cap):
        yield Graph.from_rows(n, rows)


@lru_cache(maxsize=256)
def census(cls: GraphClass, n: int) -> Counter:
    """Exact count of members by (component sizes, bridges, edges)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if cls.fast_census is not None:
        return cls.fast_census(n)
    out = Counter()
    for rows in iter_rows(cls, n):
        out[profile(n, rows)] += 1
    return out


def census_by_enumeration(cls: GraphClass, n: int) -> Counter:
    out = Counter()
    for rows in iter_rows(cls, n):
        out[profile(n, rows)] += 1
    return out


# --------------------------------------------------------------------------
# closure checks


@dataclass
class ClosureCheck:
    holds: bool
    counterexample: Optional[tuple[Graph, tuple[int, int]]] = None
    kind: str = ""

    def __bool__(self):
        return self.holds


def _mask_of_rows(n, rows) -> int:
    m = 0
    for j in range(1, n):
        row = rows[j] & ((1 << j) - 1)
        while row:
            b = row & -row
            m |= 1 << pair_index(b.bit_length() - 1, j)
            row ^= b
    return m


@lru_cache(maxsize=128)
def _member_masks(cls: GraphClass, n: int) -> tuple[frozenset, tuple]:
    members = list(iter_rows(cls, n, max(cls.enum_cap, cls.check_cap)))
    return frozenset(_mask_of_rows(n, r) for r in members), tuple(members)


def _closure(cls: GraphClass, n: int, deletion: bool) -> ClosureCheck:
    if n > cls.check_cap:
        raise CapExceeded(f"{cls.name}: closure check at n={n} exceeds cap {cls.check_cap}")
    masks, members = _member_masks(cls, n)
    for rows in members:
        mask = _mask_of_rows(n, rows)
        comps = component_masks(n, rows)
        if len(comps) > 1:
            label = [0] * n
            for idx, c in enumerate(comps):
                cc = c
                while cc:
                    b = cc & -cc
                    cc ^= b
                    label[b.bit_length() - 1] = idx
            for k, (i, j) in enumerate(pairs(n)):
                if label[i] != label[j] and (mask | (1 << k)) not in masks:
                    return ClosureCheck(False, (Graph.from_rows(n, rows), (i + 1, j + 1)), "add")
        if deletion:
            for i, j in bridge_pairs(n, rows):
                if mask & ~(1 << pair_index(i, j)) not in masks:
                    return ClosureCheck(False, (Graph.from_rows(n, rows), (i + 1, j + 1)), "delete")
    return ClosureCheck(True)


def check_bridge_addable(cls: GraphClass, n: int) -> ClosureCheck:
    """Is G + uv in the class for every member G and every cross pair uv?"""
    return _closure(cls, n, deletion=False)


def check_bridge_alterable(cls: GraphClass, n: int) -> ClosureCheck:
    return _closure(cls, n, deletion=True)


def require_hypothesis(cls: GraphClass, n: int, alterable: bool = False,
                       strict: bool = True) -> str:
    """Return "checked" or "declared"; raise if the hypothesis cannot be assured.

    Within the check cap the closure is verified mechanically. Past it, only a
    built-in class whose declared flag is true is accepted. With strict=False
    a failure is returned as a "violated: ..." string instead of raised, so the
    bounds can still be evaluated and reported.
    """
    try:
        return _require_hypothesis(cls, n, alterable)
    except HypothesisError as exc:
        if strict:
            raise
        return f"violated: {exc}"


def _require_hypothesis(cls: GraphClass, n: int, alterable: bool) -> str:
    if n <= cls.check_cap:
        res = check_bridge_alterable(cls, n) if alterable else check_bridge_addable(cls, n)
        if not res:
            g, uv = res.counterexample
            raise HypothesisError(
                f"{cls.name} is not bridge-{'alterable' if alterable else 'addable'} at n={n}: "
                f"{res.kind} {uv} on {g.to_graph6()}"
            )
        return "checked"
    declared = cls.bridge_alterable if alterable else cls.bridge_addable
    if cls.builtin and declared:
        return "declared"
    raise HypothesisError(
        f"{cls.name}: hypothesis at n={n} is past the check cap {cls.check_cap} and not declared"
    )
