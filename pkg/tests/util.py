"""Brute-force oracles used by the tests.

Everything here recomputes results from first principles (explicit loops
and powerset enumeration), independent of the library's kernels.
"""

from itertools import combinations

import numpy as np

from posetc import FinitePoset, GenConfig, lattice_tables, random_poset


def seeded_lattices(count, max_n=7, start_seed=0):
    """First `count` lattices among seeded random posets with n <= max_n."""
    found = []
    seed = start_seed
    while len(found) < count:
        p = random_poset(GenConfig(2 + seed % (max_n - 1), 0.45, seed))
        if lattice_tables(p).is_lattice:
            found.append(p)
        seed += 1
        assert seed < start_seed + 5000, "seeded lattice supply exhausted"
    return found


def brute_is_partial_order(mat) -> bool:
    """Reflexive, antisymmetric, transitive: exhaustive triple scan."""
    n = len(mat)
    for i in range(n):
        if not mat[i][i]:
            return False
    for i in range(n):
        for j in range(n):
            if i != j and mat[i][j] and mat[j][i]:
                return False
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if mat[i][j] and mat[j][k] and not mat[i][k]:
                    return False
    return True


def brute_subset_leq(p: FinitePoset, b, c) -> bool:
    return all(any(p.leq(x, y) for y in c) for x in b)


def brute_lower_cone(p: FinitePoset, a, b):
    return tuple(x for x in range(p.n) if p.leq(x, a) and p.leq(x, b))


def brute_maximal(p: FinitePoset, s):
    s = sorted(set(s))
    return tuple(x for x in s if not any(p.leq(x, y) and x != y for y in s))


def brute_antichains(p: FinitePoset):
    """All antichains by powerset enumeration, in canonical order."""
    out = []
    for size in range(p.n + 1):
        for combo in combinations(range(p.n), size):
            if all(
                not p.leq(x, y) and not p.leq(y, x)
                for x, y in combinations(combo, 2)
            ):
                out.append(combo)
    out.sort(key=lambda s: (len(s), s))
    return out


def brute_minimal_upper_bounds(p: FinitePoset, a, b):
    ub = [x for x in range(p.n) if p.leq(a, x) and p.leq(b, x)]
    return tuple(x for x in ub if not any(p.leq(y, x) and y != x for y in ub))


def brute_maximal_lower_bounds(p: FinitePoset, a, b):
    lb = [x for x in range(p.n) if p.leq(x, a) and p.leq(x, b)]
    return tuple(x for x in lb if not any(p.leq(x, y) and y != x for y in lb))


def brute_cayley_value(p: FinitePoset, a, x):
    return brute_maximal(p, brute_lower_cone(p, a, x))


def is_isomorphism(p: FinitePoset, q: FinitePoset, f) -> bool:
    """Check that f is an order-preserving bijection in both directions."""
    if sorted(f) != list(range(p.n)):
        return False
    return all(
        bool(p.matrix[i, j]) == bool(q.matrix[f[i], f[j]])
        for i in range(p.n)
        for j in range(p.n)
    )


def boolean_lattice(k: int) -> FinitePoset:
    """The subset lattice on k generators, elements named by bitmask."""
    m = 1 << k
    mat = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(m):
            mat[i, j] = (i & j) == i
    return FinitePoset([f"s{i}" for i in range(m)], mat)
