"""Numba-compiled kernels over single-word bitmasks (n <= 64)."""

from __future__ import annotations

import numpy as np
from numba import njit

_ONE = np.uint64(1)
_ZERO = np.uint64(0)


@njit(cache=True)
def transitive_closure(adj):
    n = adj.shape[0]
    reach = adj.copy()
    for i in range(n):
        reach[i, i] = True
    for k in range(n):
        for i in range(n):
            if reach[i, k]:
                for j in range(n):
                    if reach[k, j]:
                        reach[i, j] = True
    return reach


@njit(cache=True)
def _enum_antichains(compat, out, record):
    # Backtracking over ascending indices; each visited state is one
    # antichain.  With record=False only counts (out may be a dummy).
    n = compat.shape[0]
    count = 1
    if record:
        out[0] = _ZERO
    if n == 0:
        return count
    if n >= 64:
        full = ~_ZERO
    else:
        full = (_ONE << np.uint64(n)) - _ONE
    choice = np.empty(n + 1, np.int64)
    allowed = np.empty(n + 1, np.uint64)
    allowed[0] = full
    depth = 0
    cursor = 0
    mask = _ZERO
    while True:
        nxt = -1
        for t in range(cursor, n):
            if allowed[depth] & (_ONE << np.uint64(t)) != _ZERO:
                nxt = t
                break
        if nxt >= 0:
            choice[depth] = nxt
            mask |= _ONE << np.uint64(nxt)
            if record:
                out[count] = mask
            count += 1
            allowed[depth + 1] = allowed[depth] & compat[nxt]
            depth += 1
            cursor = nxt + 1
        else:
            if depth == 0:
                break
            depth -= 1
            popped = choice[depth]
            mask &= ~(_ONE << np.uint64(popped))
            cursor = popped + 1
    return count


def antichain_masks(compat: np.ndarray) -> np.ndarray:
    dummy = np.empty(1, np.uint64)
    total = _enum_antichains(compat, dummy, False)
    out = np.empty(total, np.uint64)
    _enum_antichains(compat, out, True)
    return out


@njit(cache=True)
def subset_order(masks, dom):
    m = masks.shape[0]
    out = np.empty((m, m), np.bool_)
    for i in range(m):
        mi = masks[i]
        for j in range(m):
            out[i, j] = (mi & ~dom[j]) == _ZERO
    return out


@njit(cache=True)
def cayley_tables(down, sdown):
    # down[y]: bitmask of elements <= y; sdown[y]: elements strictly below y.
    n = down.shape[0]
    values = np.zeros((n, n), np.uint64)
    dom = np.zeros((n, n), np.uint64)
    for a in range(n):
        for x in range(n):
            cone = down[a] & down[x]
            beaten = _ZERO
            for j in range(n):
                if cone & (_ONE << np.uint64(j)) != _ZERO:
                    beaten |= sdown[j]
            top = cone & ~beaten
            values[a, x] = top
            reach = _ZERO
            for j in range(n):
                if top & (_ONE << np.uint64(j)) != _ZERO:
                    reach |= down[j]
            dom[a, x] = reach
    return values, dom


@njit(cache=True)
def map_order(values, dom):
    n = values.shape[0]
    out = np.empty((n, n), np.bool_)
    for a in range(n):
        for b in range(n):
            ok = True
            for x in range(n):
                if values[a, x] & ~dom[b, x] != _ZERO:
                    ok = False
                    break
            out[a, b] = ok
    return out
