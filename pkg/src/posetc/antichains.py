"""The antichain order.

Subsets of a poset are compared by domination: B <= C iff every member of
B lies below some member of C.  On arbitrary subsets this relation is a
preorder that fails antisymmetry as soon as two elements are comparable;
restricted to antichains it is a partial order, materialized here as
:class:`AntichainPoset`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from . import _kernels as kernels
from .errors import TooLarge, UnknownElement
from .poset import Element, ElementSet, FinitePoset

DEFAULT_ENUM_CAP = 16


def subset_leq(p: FinitePoset, b: Iterable[Element], c: Iterable[Element]) -> bool:
    """Whether every member of b is dominated by some member of c.

    Defined on arbitrary subsets, not just antichains.  The empty set is
    below everything; nothing nonempty is below the empty set.
    """
    bs, cs = p.resolve_set(b), p.resolve_set(c)
    if not bs:
        return True
    if not cs:
        return False
    dominated = p.matrix[:, np.array(cs)].any(axis=1)
    return bool(dominated[np.array(bs)].all())


def _check_cap(p: FinitePoset, max_n: int) -> None:
    if p.n > max_n:
        raise TooLarge(
            f"antichain enumeration refused for {p.n} elements "
            f"(cap is {max_n}; pass a higher max_n or set POSETC_MAX_ENUM)"
        )


def _mask_to_set(mask: int) -> ElementSet:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def all_antichains(p: FinitePoset, max_n: int = DEFAULT_ENUM_CAP) -> list[ElementSet]:
    """Every antichain of p exactly once, smallest first, then lexicographic.

    The empty antichain is always present.  Refuses posets larger than
    ``max_n`` elements, since the count can grow as 2**n.
    """
    _check_cap(p, max_n)
    masks = kernels.antichain_bitmasks(p.matrix)
    sets = [_mask_to_set(m) for m in masks]
    sets.sort(key=lambda s: (len(s), s))
    return sets


@dataclass(frozen=True)
class PowersetOrderStatus:
    """Whether domination partially orders the whole powerset of p.

    When it does not, ``witness`` is a pair (B, C) of distinct subsets
    with B <= C and C <= B.
    """

    is_partial_order: bool
    witness: tuple[ElementSet, ElementSet] | None

    def __post_init__(self):
        assert self.is_partial_order == (self.witness is None)


def powerset_order_status(p: FinitePoset) -> PowersetOrderStatus:
    """Decide antisymmetry of domination on all subsets of p.

    Uses the analytic characterization: the powerset order is a partial
    order exactly when p itself is an antichain.  Any comparable pair
    a < b yields the standard witness ({b}, {a, b}), so no enumeration
    of the powerset is needed.
    """
    strict = p.strict
    if not strict.any():
        return PowersetOrderStatus(True, None)
    a, b = (int(v) for v in np.argwhere(strict)[0])
    return PowersetOrderStatus(False, ((b,), tuple(sorted((a, b)))))


class AntichainPoset:
    """The poset of all antichains of a base poset under domination.

    ``antichains`` lists every antichain in canonical order; ``order`` is
    a FinitePoset over those antichains whose element names are the
    rendered sets (``{}``, ``{a}``, ``{a,b}``, ...).  Constructing the
    order runs full partial-order validation, so building this object is
    itself a machine check that domination restricted to antichains is a
    partial order.
    """

    def __init__(self, base: FinitePoset, max_n: int = DEFAULT_ENUM_CAP):
        _check_cap(base, max_n)
        self.base = base
        self.antichains = tuple(all_antichains(base, max_n))
        members = np.zeros((len(self.antichains), base.n), dtype=bool)
        for row, s in enumerate(self.antichains):
            members[row, list(s)] = True
        matrix = kernels.subset_order_matrix(base.matrix, members)
        labels = [base.format_set(s) for s in self.antichains]
        self.order = FinitePoset(labels, matrix)

    @cached_property
    def _positions(self) -> dict[ElementSet, int]:
        return {s: i for i, s in enumerate(self.antichains)}

    def index_of(self, antichain: Iterable[Element]) -> int:
        """Position of an antichain in the canonical listing."""
        s = self.base.resolve_set(antichain)
        try:
            return self._positions[s]
        except KeyError:
            raise UnknownElement(
                f"{self.base.format_set(s)} is not an antichain of the base poset"
            ) from None

    def __repr__(self) -> str:
        return f"AntichainPoset({len(self.antichains)} antichains over {self.base!r})"


def antichain_poset(p: FinitePoset, max_n: int = DEFAULT_ENUM_CAP) -> AntichainPoset:
    """Materialize the antichain order of p (subject to the size cap)."""
    return AntichainPoset(p, max_n)
