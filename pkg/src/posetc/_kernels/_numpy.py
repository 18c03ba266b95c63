"""Pure numpy (and plain Python) kernel implementations.

This backend is the portable reference: it handles posets of any size and
never imports numba.  Set representations are boolean vectors over the
element indices; only the antichain enumerator uses Python integers as
bitmasks (arbitrary precision, so it works for any n).
"""

from __future__ import annotations

import numpy as np

# Bound on boolean temporaries created by chunked broadcasts.
_CHUNK_CELLS = 1 << 24


def transitive_closure(adj: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean adjacency matrix (Warshall)."""
    reach = adj.copy()
    n = reach.shape[0]
    np.fill_diagonal(reach, True)
    for k in range(n):
        reach |= np.outer(reach[:, k], reach[k, :])
    return reach


def antichain_masks(compat: list[int], n: int) -> list[int]:
    """All antichain bitmasks, given per-element incomparability masks.

    ``compat[j]`` has bit i set iff element i is incomparable to j (i != j).
    Emission order is DFS over ascending indices; callers sort.
    """
    out: list[int] = []

    def grow(mask: int, allowed: int, start: int) -> None:
        out.append(mask)
        cand = (allowed >> start) << start
        while cand:
            low = cand & -cand
            j = low.bit_length() - 1
            grow(mask | low, allowed & compat[j], j + 1)
            cand &= cand - 1

    full = (1 << n) - 1
    grow(0, full, 0)
    return out


def subset_order(members: np.ndarray, dominated: np.ndarray) -> np.ndarray:
    """Pairwise subset-domination order.

    members[i] is the boolean vector of set i; dominated[j] the vector of
    elements lying below some member of set j.  out[i, j] iff set i is
    contained in dominated[j].
    """
    m, n = members.shape
    out = np.empty((m, m), dtype=bool)
    if m == 0:
        return out
    chunk = max(1, _CHUNK_CELLS // max(1, m * max(1, n)))
    not_dom = ~dominated
    for i0 in range(0, m, chunk):
        blk = members[i0 : i0 + chunk]
        out[i0 : i0 + chunk] = ~(blk[:, None, :] & not_dom[None, :, :]).any(axis=2)
    return out


def cayley_tables(leq: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Value and domination tensors of the maps a -> (x -> Max L(a, x)).

    Returns (F, Fdom), both boolean of shape (n, n, n):
    F[a, x, e] iff e is a maximal common lower bound of a and x, and
    Fdom[a, x, e] iff e lies below some member of F[a, x].
    """
    n = leq.shape[0]
    down = leq.T.copy()
    lt = leq & ~np.eye(n, dtype=bool)
    cones = down[:, None, :] & down[None, :, :]
    # e is dominated within a cone iff some strictly larger j is in the cone
    dominated = np.matmul(cones.astype(np.int32), lt.T.astype(np.int32)) > 0
    values = cones & ~dominated
    dom = np.matmul(values.astype(np.int32), leq.T.astype(np.int32)) > 0
    return values, dom


def map_order(values: np.ndarray, dom: np.ndarray) -> np.ndarray:
    """Pointwise order between all pairs of maps given by cayley_tables."""
    n = values.shape[0]
    out = np.empty((n, n), dtype=bool)
    not_dom = ~dom
    for a in range(n):
        out[a] = ~(values[a][None, :, :] & not_dom).any(axis=(1, 2))
    return out
