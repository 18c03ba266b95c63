"""Finite partial orders over named elements.

A :class:`FinitePoset` stores the full reflexive-transitive relation as a
dense boolean matrix, validated on construction.  Elements are addressed
either by 0-based index or by display name; every set-valued result is a
sorted tuple of indices (the canonical form used throughout the package).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as kernels
from .errors import (
    CycleDetected,
    DuplicateElement,
    PosetFormatError,
    UnknownElement,
)

Element = int | str
ElementSet = tuple[int, ...]


class Law(enum.Enum):
    """Order law named by a violation witness."""

    ANTISYMMETRY = "antisymmetry"
    EMBEDDING_FORWARD = "embedding-forward"
    EMBEDDING_BACKWARD = "embedding-backward"
    JOIN_HOMOMORPHISM = "join-homomorphism"
    LATTICE_JOIN = "lattice-join"
    LATTICE_MEET = "lattice-meet"


@dataclass(frozen=True)
class OrderWitness:
    """A counterexample to an order law.

    ``data`` is law-specific: enough elements and sets to replay the
    violation against the poset it was produced from.
    """

    law: Law
    data: dict

    def __str__(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.data.items())
        return f"{self.law.value}: {inner}"


def _check_names(names: Sequence[str]) -> tuple[str, ...]:
    seen = set()
    for name in names:
        if not isinstance(name, str) or not name or name.split() != [name]:
            raise ValueError(f"element names must be non-empty tokens without whitespace: {name!r}")
        if name in seen:
            raise DuplicateElement(f"duplicate element name {name!r}")
        seen.add(name)
    return tuple(names)


def _bool_reach(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean matrix product: out[i, j] iff some k has a[i, k] and b[k, j]."""
    n, p = a.shape[0], b.shape[1]
    if n == 0 or p == 0:
        return np.zeros((n, p), dtype=bool)
    packed = np.packbits(b, axis=1)
    out = np.zeros((n, packed.shape[1]), np.uint8)
    for i in range(n):
        sel = packed[a[i]]
        if sel.size:
            out[i] = np.bitwise_or.reduce(sel, axis=0)
    return np.unpackbits(out, axis=1, count=p).astype(bool)


class FinitePoset:
    """An immutable finite poset: element names plus the full <= matrix.

    The matrix is validated (reflexive, antisymmetric, transitive) on
    construction and frozen afterwards, so instances are safe to share
    across threads.
    """

    def __init__(self, names: Sequence[str], matrix: np.ndarray):
        self.names = _check_names(names)
        mat = np.array(matrix, dtype=bool)
        n = len(self.names)
        if mat.shape != (n, n):
            raise ValueError(f"matrix shape {mat.shape} does not match {n} elements")
        self._validate(mat)
        mat.flags.writeable = False
        self.matrix = mat
        self.n = n
        self._index = {name: i for i, name in enumerate(self.names)}

    def _validate(self, mat: np.ndarray) -> None:
        n = mat.shape[0]
        if not mat.diagonal().all():
            i = int(np.flatnonzero(~mat.diagonal())[0])
            raise ValueError(f"relation is not reflexive at {self.names[i]!r}")
        both = mat & mat.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = (int(v) for v in np.argwhere(both)[0])
            raise ValueError(
                f"relation is not antisymmetric: {self.names[i]!r} and {self.names[j]!r}"
            )
        if n == 0:
            return
        packed = np.packbits(mat, axis=1)
        for i in range(n):
            reach = np.bitwise_or.reduce(packed[mat[i]], axis=0)
            extra = reach & ~packed[i]
            if extra.any():
                j = int(np.flatnonzero(np.unpackbits(extra, count=n))[0])
                k = int(np.flatnonzero(mat[i] & mat[:, j])[0])
                raise ValueError(
                    "relation is not transitive: "
                    f"{self.names[i]!r} <= {self.names[k]!r} <= {self.names[j]!r}"
                )

    # -- element addressing -------------------------------------------------

    def index(self, element: Element) -> int:
        """Resolve a name or index to the element index."""
        if isinstance(element, str):
            try:
                return self._index[element]
            except KeyError:
                raise UnknownElement(f"no element named {element!r}") from None
        i = int(element)
        if not 0 <= i < self.n:
            raise UnknownElement(f"element index {i} out of range (n={self.n})")
        return i

    def resolve_set(self, elements: Iterable[Element]) -> ElementSet:
        """Canonical form of a subset: sorted, de-duplicated index tuple."""
        return tuple(sorted({self.index(e) for e in elements}))

    def format_set(self, elements: Iterable[Element]) -> str:
        """Render a subset as ``{a,b}`` with members in index order."""
        return "{" + ",".join(self.names[i] for i in self.resolve_set(elements)) + "}"

    # -- order queries -------------------------------------------------------

    def leq(self, a: Element, b: Element) -> bool:
        """Whether a <= b."""
        return bool(self.matrix[self.index(a), self.index(b)])

    @cached_property
    def strict(self) -> np.ndarray:
        """The strict relation a < b as a read-only boolean matrix."""
        lt = self.matrix & ~np.eye(self.n, dtype=bool)
        lt.flags.writeable = False
        return lt

    def lower_cone(self, a: Element, b: Element) -> ElementSet:
        """All elements below both a and b (may be empty)."""
        ia, ib = self.index(a), self.index(b)
        cone = self.matrix[:, ia] & self.matrix[:, ib]
        return tuple(int(i) for i in np.flatnonzero(cone))

    def maximal_elements(self, elements: Iterable[Element]) -> ElementSet:
        """Members of the subset with nothing in the subset strictly above."""
        s = self.resolve_set(elements)
        if not s:
            return ()
        idx = np.array(s)
        dominated = self.strict[np.ix_(idx, idx)].any(axis=1)
        return tuple(int(i) for i in idx[~dominated])

    def is_antichain(self, elements: Iterable[Element]) -> bool:
        """Whether the subset is pairwise incomparable."""
        s = self.resolve_set(elements)
        idx = np.array(s, dtype=int)
        return not self.strict[np.ix_(idx, idx)].any()

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Transitive reduction: pairs (x, y) with x < y and nothing between."""
        lt = self.strict
        covers = lt & ~_bool_reach(lt, lt)
        return [(int(i), int(j)) for i, j in np.argwhere(covers)]

    # -- plumbing ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.names == other.names and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash((self.names, self.matrix.tobytes()))

    def __repr__(self) -> str:
        shown = " ".join(self.names[:8]) + (" ..." if self.n > 8 else "")
        return f"FinitePoset({self.n} elements: {shown})"


def _bfs_path(adj: np.ndarray, src: int, dst: int) -> list[int] | None:
    """Shortest directed path src -> dst, or None; ties broken by index."""
    n = adj.shape[0]
    parent = [-1] * n
    seen = [False] * n
    seen[src] = True
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = [u]
            while u != src:
                u = parent[u]
                path.append(u)
            return path[::-1]
        for v in np.flatnonzero(adj[u]):
            v = int(v)
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                queue.append(v)
    return None


def _shortest_cycle(adj: np.ndarray, names: Sequence[str]) -> tuple[str, ...]:
    best: list[int] | None = None
    n = adj.shape[0]
    for u in range(n):
        for v in np.flatnonzero(adj[u]):
            path = _bfs_path(adj, int(v), u)
            if path is not None and (best is None or len(path) < len(best)):
                best = [u] + path[:-1]
    assert best is not None, "no cycle despite antisymmetry failure"
    return tuple(names[i] for i in best)


def from_relations(
    names: Sequence[str], pairs: Iterable[tuple[str, str]]
) -> FinitePoset:
    """Build a poset from declared names and strict generating pairs.

    Pairs mean ``first < second`` and need not be cover pairs; the
    reflexive-transitive closure is computed and then validated.

    Raises DuplicateElement, UnknownElement, or CycleDetected (with one
    shortest witness cycle) accordingly.
    """
    checked = _check_names(names)
    index = {name: i for i, name in enumerate(checked)}
    n = len(checked)
    adj = np.zeros((n, n), dtype=bool)
    for u, v in pairs:
        for tok in (u, v):
            if tok not in index:
                raise UnknownElement(f"relation references undeclared element {tok!r}")
        if u == v:
            raise CycleDetected(f"self-loop: {u} < {u}", (u,))
        adj[index[u], index[v]] = True
    reach = kernels.transitive_closure(adj)
    both = reach & reach.T
    np.fill_diagonal(both, False)
    if both.any():
        cycle = _shortest_cycle(adj, checked)
        loop = " < ".join(cycle + (cycle[0],))
        raise CycleDetected(f"relation is cyclic: {loop}", cycle)
    return FinitePoset(checked, reach)


def parse_poset(text: str) -> FinitePoset:
    """Parse the poset text format.

    Blank lines and lines starting with ``#`` are ignored.  The format is
    one ``elements:`` line of whitespace-separated tokens, a ``relations:``
    header, then one ``tokA tokB`` pair per line meaning tokA < tokB.
    Duplicate pairs are allowed and idempotent.
    """
    names: list[str] | None = None
    pairs: list[tuple[str, str]] = []
    in_relations = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("elements:"):
            if names is not None:
                raise PosetFormatError(f"line {lineno}: repeated 'elements:' line")
            names = line[len("elements:") :].split()
            continue
        if line.startswith("relations:"):
            rest = line[len("relations:") :].strip()
            if rest:
                raise PosetFormatError(
                    f"line {lineno}: 'relations:' header takes no tokens"
                )
            in_relations = True
            continue
        if not in_relations:
            raise PosetFormatError(f"line {lineno}: unexpected line {line!r}")
        toks = line.split()
        if len(toks) != 2:
            raise PosetFormatError(
                f"line {lineno}: relation lines need exactly two tokens, got {line!r}"
            )
        pairs.append((toks[0], toks[1]))
    if names is None:
        raise PosetFormatError("missing 'elements:' line")
    return from_relations(names, pairs)


def format_poset(p: FinitePoset) -> str:
    """Serialize to the poset text format (cover pairs only)."""
    lines = ["elements: " + " ".join(p.names) if p.n else "elements:", "relations:"]
    for i, j in p.cover_pairs():
        lines.append(f"{p.names[i]} {p.names[j]}")
    return "\n".join(lines) + "\n"
