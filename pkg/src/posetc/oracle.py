"""Independent verification machinery: random posets and isomorphism search.

The generator uses SplitMix64 (the java.util.SplittableRandom stepping
discipline), implemented here directly so the same (n, edge_prob, seed)
triple yields the same poset on every platform and in any other
implementation of the same scheme: one 64-bit draw per candidate pair
(i, j) with i < j in row-major order, edge included iff the top 53 bits,
scaled to [0, 1), fall below edge_prob.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as kernels
from .errors import TooLarge
from .poset import FinitePoset

ISO_DEFAULT_CAP = 10

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class GenConfig:
    """Parameters of the seeded DAG sampler."""

    n: int
    edge_prob: float
    seed: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise ValueError("edge_prob must lie in [0, 1]")


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def random_poset(cfg: GenConfig) -> FinitePoset:
    """Sample a poset: random DAG on e0..e{n-1}, then its closure.

    Edges only point from lower to higher index, so the result is always
    a valid partial order; identical configs give identical posets.
    """
    n = cfg.n
    adj = np.zeros((n, n), dtype=bool)
    state = cfg.seed & _MASK64
    for i in range(n):
        for j in range(i + 1, n):
            state, word = _splitmix64(state)
            if (word >> 11) * 2.0**-53 < cfg.edge_prob:
                adj[i, j] = True
    names = [f"e{i}" for i in range(n)]
    return FinitePoset(names, kernels.transitive_closure(adj))


def _degree_profiles(p: FinitePoset) -> list[tuple[int, int]]:
    lt = p.strict
    return [(int(lt[:, i].sum()), int(lt[i, :].sum())) for i in range(p.n)]


def are_isomorphic(
    p: FinitePoset, q: FinitePoset, max_n: int = ISO_DEFAULT_CAP
) -> list[int] | None:
    """Search for an order isomorphism p -> q.

    Returns a list ``f`` with ``f[i]`` the q-index matched to p-index i
    (the empty list for empty posets), or None if no isomorphism exists.
    Note the falsy empty list: test against None.  Backtracking with
    (in-degree, out-degree) pruning on the strict order; refuses inputs
    above ``max_n`` elements.
    """
    if p.n != q.n:
        return None
    if p.n > max_n:
        raise TooLarge(f"isomorphism search capped at {max_n} elements, got {p.n}")
    prof_p = _degree_profiles(p)
    prof_q = _degree_profiles(q)
    if sorted(prof_p) != sorted(prof_q):
        return None
    candidates = [
        [j for j in range(q.n) if prof_q[j] == prof_p[i]] for i in range(p.n)
    ]
    # assign the most constrained elements first
    order = sorted(range(p.n), key=lambda i: (len(candidates[i]), i))
    fwd = [-1] * p.n
    used = [False] * q.n
    pm, qm = p.matrix, q.matrix

    def fits(i: int, j: int, assigned: list[int]) -> bool:
        for k in assigned:
            fk = fwd[k]
            if pm[i, k] != qm[j, fk] or pm[k, i] != qm[fk, j]:
                return False
        return True

    def backtrack(pos: int) -> bool:
        if pos == p.n:
            return True
        i = order[pos]
        assigned = order[:pos]
        for j in candidates[i]:
            if not used[j] and fits(i, j, assigned):
                fwd[i] = j
                used[j] = True
                if backtrack(pos + 1):
                    return True
                fwd[i] = -1
                used[j] = False
        return False

    return fwd if backtrack(0) else None
