"""Lattice detection, join/meet tables, and the map-based counterexamples.

On a lattice, every value of f_a collapses to the singleton meet
{a ^ x}; this module checks that, and probes whether a -> f_a also
respects joins and meets as a lattice homomorphism into the pointwise
lattice of maps (it need not: M3 is the classic counterexample).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .antichains import DEFAULT_ENUM_CAP, AntichainPoset, antichain_poset
from .cayley import CayleyMap, embed
from .errors import AntichainOrderNotLattice, BaseMismatch, NotALattice
from .poset import FinitePoset, Law, OrderWitness


@dataclass(frozen=True)
class LatticeTables:
    """Join and meet tables of a finite poset, if it is a lattice.

    When some pair lacks a unique least upper bound or greatest lower
    bound, ``is_lattice`` is False, the tables are None, and ``failure``
    carries the first offending pair together with its minimal upper
    (or maximal lower) bounds.
    """

    is_lattice: bool
    join: np.ndarray | None
    meet: np.ndarray | None
    failure: OrderWitness | None


def _minimal_of(p: FinitePoset, candidates: np.ndarray) -> tuple[int, ...]:
    sub = p.strict[np.ix_(candidates, candidates)]
    return tuple(int(x) for x in candidates[~sub.any(axis=0)])


def _maximal_of(p: FinitePoset, candidates: np.ndarray) -> tuple[int, ...]:
    sub = p.strict[np.ix_(candidates, candidates)]
    return tuple(int(x) for x in candidates[~sub.any(axis=1)])


def _lattice_tables(p: FinitePoset) -> LatticeTables:
    n = p.n
    up = p.matrix
    down = np.ascontiguousarray(p.matrix.T)
    # In a lattice the up-set of a join is exactly the intersection of the
    # up-sets, so candidate rows can be matched by lookup instead of search.
    up_ids = {up[i].tobytes(): i for i in range(n)}
    down_ids = {down[i].tobytes(): i for i in range(n)}
    join = np.zeros((n, n), dtype=np.int64)
    meet = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            jk = up_ids.get((up[i] & up[j]).tobytes())
            if jk is None:
                cands = _minimal_of(p, np.flatnonzero(up[i] & up[j]))
                failure = OrderWitness(
                    Law.LATTICE_JOIN,
                    {"a": i, "b": j, "minimal_upper_bounds": cands},
                )
                return LatticeTables(False, None, None, failure)
            mk = down_ids.get((down[i] & down[j]).tobytes())
            if mk is None:
                cands = _maximal_of(p, np.flatnonzero(down[i] & down[j]))
                failure = OrderWitness(
                    Law.LATTICE_MEET,
                    {"a": i, "b": j, "maximal_lower_bounds": cands},
                )
                return LatticeTables(False, None, None, failure)
            join[i, j] = join[j, i] = jk
            meet[i, j] = meet[j, i] = mk
    join.flags.writeable = False
    meet.flags.writeable = False
    return LatticeTables(True, join, meet, None)


@lru_cache(maxsize=64)
def _tables_cached(p: FinitePoset) -> LatticeTables:
    return _lattice_tables(p)


def lattice_tables(p: FinitePoset) -> LatticeTables:
    """Compute join/meet tables, or a witness that p is not a lattice.

    Pairs are scanned row-major with a <= b by index and the first pair
    whose join (checked first) or meet fails is reported.
    """
    return _tables_cached(p)


def singleton_meet_check(p: FinitePoset) -> OrderWitness | None:
    """On a lattice, confirm f_a(x) = {a ^ x} for all a, x.

    Returns None on success; a witness would indicate a broken
    construction, since maximal elements of a common lower cone in a
    lattice are exactly the meet.  Raises NotALattice otherwise.
    """
    tables = lattice_tables(p)
    if not tables.is_lattice:
        raise NotALattice(f"not a lattice: {tables.failure}")
    family = embed(p)
    for a in range(p.n):
        values = family.maps[a].values
        for x in range(p.n):
            expected = (int(tables.meet[a, x]),)
            if values[x] != expected:
                return OrderWitness(
                    Law.LATTICE_MEET,
                    {"a": a, "x": x, "value": values[x], "meet": expected[0]},
                )
    return None


def _ap_tables(ap: AntichainPoset) -> LatticeTables:
    tables = lattice_tables(ap.order)
    if not tables.is_lattice:
        raise AntichainOrderNotLattice(
            f"the antichain order is not a lattice: {tables.failure}"
        )
    return tables


def _combine(
    ap: AntichainPoset, f: CayleyMap, g: CayleyMap, table: np.ndarray, symbol: str
) -> CayleyMap:
    if f.base != ap.base or g.base != ap.base:
        raise BaseMismatch("maps and antichain poset have different bases")
    values = tuple(
        ap.antichains[table[ap.index_of(fv), ap.index_of(gv)]]
        for fv, gv in zip(f.values, g.values)
    )
    label = f"{f.label or 'f'} {symbol} {g.label or 'g'}"
    return CayleyMap(ap.base, values, label=label)


def pointwise_join(ap: AntichainPoset, f: CayleyMap, g: CayleyMap) -> CayleyMap:
    """Pointwise join of two maps, taken in the antichain order of ap.

    Requires that order to be a lattice (AntichainOrderNotLattice
    otherwise) and both maps to live over ap's base poset.
    """
    return _combine(ap, f, g, _ap_tables(ap).join, "v")


def pointwise_meet(ap: AntichainPoset, f: CayleyMap, g: CayleyMap) -> CayleyMap:
    """Pointwise meet of two maps in the antichain order of ap."""
    return _combine(ap, f, g, _ap_tables(ap).meet, "^")


@dataclass(frozen=True)
class HomomorphismWitness:
    """A pair where a -> f_a fails to respect a lattice operation."""

    operation: str  # "join" or "meet"
    a: int
    b: int
    composite: CayleyMap  # f at the join (or meet) of a and b
    pointwise: CayleyMap  # pointwise join (or meet) of f_a and f_b
    differ_at: tuple[int, ...]  # every x where the two maps disagree

    def __post_init__(self):
        assert self.operation in ("join", "meet") and self.differ_at


@dataclass(frozen=True)
class HomomorphismReport:
    holds: bool
    witness: HomomorphismWitness | None


def join_homomorphism_witness(
    p: FinitePoset, max_n: int = DEFAULT_ENUM_CAP
) -> HomomorphismReport:
    """Scan all pairs for f_(a v b) = f_a v f_b and f_(a ^ b) = f_a ^ f_b.

    Requires both p and its antichain order to be lattices.  Pairs are
    scanned row-major with a <= b by index, join before meet, and the
    first failing pair is returned with both maps spelled out.
    """
    tables = lattice_tables(p)
    if not tables.is_lattice:
        raise NotALattice(f"not a lattice: {tables.failure}")
    ap = antichain_poset(p, max_n)
    atables = _ap_tables(ap)
    family = embed(p)
    # positions of every map value in the canonical antichain listing
    pos = np.empty((p.n, p.n), dtype=np.int64)
    for a in range(p.n):
        for x in range(p.n):
            pos[a, x] = ap.index_of(family.maps[a].values[x])
    for a in range(p.n):
        for b in range(a, p.n):
            for operation, ptable, atable, symbol in (
                ("join", tables.join, atables.join, "v"),
                ("meet", tables.meet, atables.meet, "^"),
            ):
                combo = int(ptable[a, b])
                pointwise = atable[pos[a], pos[b]]
                diffs = np.flatnonzero(pointwise != pos[combo])
                if diffs.size:
                    pw_map = CayleyMap(
                        p,
                        tuple(ap.antichains[i] for i in pointwise),
                        label=f"f_{p.names[a]} {symbol} f_{p.names[b]}",
                    )
                    witness = HomomorphismWitness(
                        operation,
                        a,
                        b,
                        family.maps[combo],
                        pw_map,
                        tuple(int(x) for x in diffs),
                    )
                    return HomomorphismReport(False, witness)
    return HomomorphismReport(True, None)
