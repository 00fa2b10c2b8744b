"""Compiled tally of the graphs over a bridge-free base (numba).

Runs the same enumeration as the engine="python" route of
``forests.fiber_mass_identity_check``; the tests compare the two.
"""

import numpy as np
from numba import njit, types
from numba.typed import Dict


@njit(cache=True)
def _bridge_count(n, rows, cross_mask):
    """Number of bridges, and how many of them are not cross pairs."""
    pre = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    st_v = np.zeros(n, np.int64)
    st_p = np.zeros(n, np.int64)
    st_rem = np.zeros(n, np.int64)
    cnt = 0
    nb = 0
    bad = 0
    for s in range(n):
        if pre[s] >= 0:
            continue
        pre[s] = cnt
        low[s] = cnt
        cnt += 1
        top = 0
        st_v[0] = s
        st_p[0] = -1
        st_rem[0] = rows[s]
        while top >= 0:
            v = st_v[top]
            rem = st_rem[top]
            if rem != 0:
                b = rem & -rem
                st_rem[top] = rem ^ b
                w = 0
                while (b >> w) != 1:
                    w += 1
                if pre[w] < 0:
                    pre[w] = cnt
                    low[w] = cnt
                    cnt += 1
                    top += 1
                    st_v[top] = w
                    st_p[top] = v
                    st_rem[top] = rows[w]
                elif w != st_p[top] and pre[w] < low[v]:
                    low[v] = pre[w]
            else:
                p = st_p[top]
                top -= 1
                if p >= 0:
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > pre[p]:
                        nb += 1
                        if not ((cross_mask[p] >> v) & 1):
                            bad += 1
    return nb, bad


@njit(cache=True)
def _comp_count(n, rows):
    seen = 0
    c = 0
    full = (1 << n) - 1
    while seen != full:
        low = ~seen & (seen + 1)
        comp = low
        frontier = low
        while frontier != 0:
            b = frontier & -frontier
            frontier ^= b
            v = 0
            while (b >> v) != 1:
                v += 1
            new = rows[v] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        c += 1
    return c


@njit(cache=True)
def _reach(crows, a):
    comp = 1 << a
    frontier = comp
    while frontier != 0:
        b = frontier & -frontier
        frontier ^= b
        v = 0
        while (b >> v) != 1:
            v += 1
        new = crows[v] & ~comp
        comp |= new
        frontier |= new
    return comp


@njit(cache=True)
def fiber_tally(n, rows0, label, k, cross_i, cross_j, cross_mask, weights):
    m = cross_i.shape[0]
    rows = rows0.copy()
    crows = np.zeros(k, np.int64)
    choice = np.full(max(m, 1), -1, np.int64)
    counts = Dict.empty(key_type=types.int64, value_type=types.int64)
    ek = np.zeros((n + 1, n + 1), np.int64)
    seen = 0
    inconsistent = 0
    added = 0
    key = 0
    pos = m - 1
    done = m == 0
    if done:
        # a single leaf: the base itself
        nb, bad = _bridge_count(n, rows, cross_mask)
        kap = _comp_count(n, rows)
        ek[nb, kap] += 1
        counts[0] = 1
        seen = 1
        if nb != 0 or bad != 0:
            inconsistent += 1
    while not done:
        c = choice[pos]
        i = cross_i[pos]
        j = cross_j[pos]
        a = label[i]
        b = label[j]
        lo = min(a, b)
        hi = max(a, b)
        kb = hi * (hi - 1) // 2 + lo
        if c == 1:
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)
            crows[a] &= ~(1 << b)
            crows[b] &= ~(1 << a)
            key ^= 1 << kb
            added -= 1
        c += 1
        if c == 1 and (_reach(crows, a) >> b) & 1:
            c = 2
        if c == 2:
            choice[pos] = -1
            pos += 1
            if pos == m:
                done = True
            continue
        if c == 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            crows[a] |= 1 << b
            crows[b] |= 1 << a
            key ^= 1 << kb
            added += 1
        choice[pos] = c
        if pos == 0:
            nb, bad = _bridge_count(n, rows, cross_mask)
            kap = _comp_count(n, rows)
            ek[nb, kap] += 1
            if nb != added or bad != 0:
                inconsistent += 1
            if key in counts:
                counts[key] += 1
            else:
                counts[key] = 1
            seen += 1
        else:
            pos -= 1

    # per contracted forest: acyclicity and the expected fiber size
    nonforest = 0
    mismatches = 0
    wsum = np.zeros(k + 1, np.int64)
    for fkey, cnt in counts.items():
        frows = np.zeros(k, np.int64)
        e = 0
        for hi in range(1, k):
            for lo in range(hi):
                if (fkey >> (hi * (hi - 1) // 2 + lo)) & 1:
                    frows[lo] |= 1 << hi
                    frows[hi] |= 1 << lo
                    e += 1
        kap = _comp_count(k, frows)
        if e != k - kap:
            nonforest += 1
        expected = 1
        for v in range(k):
            d = 0
            x = frows[v]
            while x != 0:
                x &= x - 1
                d += 1
            for _ in range(d):
                expected *= weights[v]
        if expected != cnt:
            mismatches += 1
        wsum[kap] += expected
    return seen, len(counts), inconsistent, nonforest, mismatches, wsum, ek
