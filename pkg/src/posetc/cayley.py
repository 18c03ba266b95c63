"""Representation of a poset by maps into its antichain order.

Each element a induces the map f_a(x) = Max L(a, x), sending x to the
maximal elements of the common lower cone of a and x.  Under the
pointwise domination order on maps, a <= b holds exactly when f_a <= f_b,
so a -> f_a is an order embedding of P into the maps P -> A(P).  This
module builds the maps and machine-checks that equivalence pair by pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as kernels
from .antichains import subset_leq
from .errors import BaseMismatch
from .poset import Element, ElementSet, FinitePoset, Law, OrderWitness


@dataclass(frozen=True)
class CayleyMap:
    """A total map from the base poset into its antichains.

    ``values[x]`` is the image of element x, as a canonical index tuple.
    """

    base: FinitePoset
    values: tuple[ElementSet, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        assert len(self.values) == self.base.n

    def __call__(self, x: Element) -> ElementSet:
        return self.values[self.base.index(x)]

    def __str__(self) -> str:
        cells = " ".join(
            f"{self.base.names[x]}:{self.base.format_set(v)}"
            for x, v in enumerate(self.values)
        )
        return f"{self.label or 'map'}[{cells}]"


@dataclass(frozen=True)
class MapFamily:
    """All maps f_a of a base poset, indexed like its elements."""

    base: FinitePoset
    maps: tuple[CayleyMap, ...]

    def __getitem__(self, a: Element) -> CayleyMap:
        return self.maps[self.base.index(a)]


def _tensor_to_family(p: FinitePoset, values: np.ndarray) -> MapFamily:
    maps = []
    for a in range(p.n):
        rows = tuple(
            tuple(int(e) for e in np.flatnonzero(values[a, x])) for x in range(p.n)
        )
        maps.append(CayleyMap(p, rows, label=f"f_{p.names[a]}"))
    return MapFamily(p, tuple(maps))


def cayley_map(p: FinitePoset, a: Element) -> CayleyMap:
    """The map f_a: x -> Max L(a, x).  Always sends a itself to {a}."""
    ia = p.index(a)
    rows = tuple(p.maximal_elements(p.lower_cone(ia, x)) for x in range(p.n))
    return CayleyMap(p, rows, label=f"f_{p.names[ia]}")


def embed(p: FinitePoset) -> MapFamily:
    """All n maps f_a, computed in one kernel pass.

    Works directly on lower cones, so it never enumerates A(p) and is not
    subject to the antichain enumeration cap.
    """
    return _tensor_to_family(p, kernels.cayley_tables(p.matrix))


def map_leq(f: CayleyMap, g: CayleyMap) -> bool:
    """Pointwise domination: f <= g iff f(x) <= g(x) for every x."""
    if f.base != g.base:
        raise BaseMismatch("maps are defined over different posets")
    return all(
        subset_leq(f.base, fv, gv) for fv, gv in zip(f.values, g.values)
    )


def verify_embedding(p: FinitePoset) -> OrderWitness | None:
    """Check a <= b iff f_a <= f_b over all pairs; None when it holds.

    Scans pairs in row-major element order and reports only the first
    violation.  A witness would mean the construction is broken, since
    the equivalence holds for every finite poset; injectivity needs no
    separate check because f_a = f_b with a != b would already surface
    as a backward violation.
    """
    morder = kernels.cayley_order(p.matrix)
    for a in range(p.n):
        for b in range(p.n):
            want, got = bool(p.matrix[a, b]), bool(morder[a, b])
            if want and not got:
                return OrderWitness(Law.EMBEDDING_FORWARD, {"a": a, "b": b})
            if got and not want:
                return OrderWitness(Law.EMBEDDING_BACKWARD, {"a": a, "b": b})
    return None


def image_subposet(p: FinitePoset) -> FinitePoset:
    """The maps f_a as a poset of their own, ordered pointwise.

    Elements are named ``f_<name>`` in base order; the result is order
    isomorphic to p via f_a -> a.
    """
    morder = kernels.cayley_order(p.matrix)
    return FinitePoset([f"f_{name}" for name in p.names], morder)
