import itertools

import numpy as np
import pytest
from hypothesis import given, settings

import util
from conftest import small_posets
from posetc import (
    BaseMismatch,
    FinitePoset,
    GenConfig,
    Law,
    NotALattice,
    all_antichains,
    antichain_poset,
    cayley_map,
    embed,
    from_relations,
    join_homomorphism_witness,
    lattice_tables,
    pointwise_join,
    pointwise_meet,
    random_poset,
    singleton_meet_check,
)


seeded_lattices = util.seeded_lattices


class TestLatticeTables:
    def test_m3_tables(self, m3):
        t = lattice_tables(m3)
        assert t.is_lattice and t.failure is None
        a, b, c = m3.index("a"), m3.index("b"), m3.index("c")
        top, bot = m3.index("1"), m3.index("0")
        for x, y in itertools.combinations((a, b, c), 2):
            assert t.join[x, y] == top
            assert t.meet[x, y] == bot
        assert t.join[a, top] == top
        assert t.meet[a, bot] == bot

    def test_double_diamond_failure_witness(self, double_diamond):
        t = lattice_tables(double_diamond)
        assert not t.is_lattice
        assert t.join is None and t.meet is None
        w = t.failure
        assert w.law is Law.LATTICE_JOIN
        a, b = w.data["a"], w.data["b"]
        assert (double_diamond.names[a], double_diamond.names[b]) == ("a", "b")
        assert double_diamond.format_set(w.data["minimal_upper_bounds"]) == "{c,d}"
        assert w.data["minimal_upper_bounds"] == util.brute_minimal_upper_bounds(
            double_diamond, a, b
        )

    def test_two_chain_is_min_max(self, chain2):
        t = lattice_tables(chain2)
        assert t.is_lattice
        for i in range(2):
            for j in range(2):
                assert t.join[i, j] == max(i, j)
                assert t.meet[i, j] == min(i, j)

    def test_empty_poset(self):
        t = lattice_tables(from_relations([], []))
        assert t.is_lattice

    def test_no_upper_bound_at_all(self):
        t = lattice_tables(from_relations(["p", "q"], []))
        assert not t.is_lattice
        assert t.failure.data["minimal_upper_bounds"] == ()

    @settings(max_examples=60, deadline=None)
    @given(small_posets())
    def test_against_brute_bounds(self, p):
        t = lattice_tables(p)
        brute_lattice = all(
            len(util.brute_minimal_upper_bounds(p, a, b)) == 1
            and len(util.brute_maximal_lower_bounds(p, a, b)) == 1
            for a in range(p.n)
            for b in range(p.n)
        )
        assert t.is_lattice == brute_lattice
        if t.is_lattice:
            for a in range(p.n):
                for b in range(p.n):
                    assert (t.join[a, b],) == util.brute_minimal_upper_bounds(p, a, b)
                    assert (t.meet[a, b],) == util.brute_maximal_lower_bounds(p, a, b)

    def test_algebraic_laws_on_lattices(self, m3, chain2, bool2):
        for p in [m3, chain2, bool2] + seeded_lattices(10, max_n=7):
            t = lattice_tables(p)
            jn, mt = t.join, t.meet
            rng = range(p.n)
            for x in rng:
                assert jn[x, x] == x and mt[x, x] == x
                for y in rng:
                    assert jn[x, y] == jn[y, x] and mt[x, y] == mt[y, x]
                    assert jn[x, mt[x, y]] == x and mt[x, jn[x, y]] == x
                    for z in rng:
                        assert jn[x, jn[y, z]] == jn[jn[x, y], z]
                        assert mt[x, mt[y, z]] == mt[mt[x, y], z]


class TestSingletonMeet:
    def test_m3(self, m3):
        assert singleton_meet_check(m3) is None
        f = cayley_map(m3, "a")
        assert m3.format_set(f("b")) == "{0}"

    def test_boolean_lattice(self, bool2):
        assert singleton_meet_check(bool2) is None
        t = lattice_tables(bool2)
        fam = embed(bool2)
        for a in range(bool2.n):
            for x in range(bool2.n):
                assert fam.maps[a].values[x] == (t.meet[a, x],)

    def test_two_chain(self, chain2):
        assert singleton_meet_check(chain2) is None
        assert cayley_map(chain2, "hi")("lo") == (chain2.index("lo"),)

    def test_requires_lattice(self, double_diamond):
        with pytest.raises(NotALattice):
            singleton_meet_check(double_diamond)

    def test_seeded_lattices(self):
        for p in seeded_lattices(20, max_n=7):
            assert singleton_meet_check(p) is None


class TestPointwiseOps:
    def test_m3_join_examples(self, m3):
        ap = antichain_poset(m3)
        fam = embed(m3)
        joined = pointwise_join(ap, fam["a"], fam["b"])
        assert m3.format_set(joined("1")) == "{a,b}"
        assert m3.format_set(joined("c")) == "{0}"

    def test_idempotent(self, m3):
        ap = antichain_poset(m3)
        f = cayley_map(m3, "b")
        assert pointwise_join(ap, f, f).values == f.values
        assert pointwise_meet(ap, f, f).values == f.values

    def test_base_mismatch(self, m3, double_diamond):
        ap = antichain_poset(m3)
        with pytest.raises(BaseMismatch):
            pointwise_join(ap, cayley_map(double_diamond, "a"), cayley_map(double_diamond, "b"))


class TestHomomorphismScan:
    def test_m3_witness(self, m3):
        report = join_homomorphism_witness(m3)
        assert not report.holds
        w = report.witness
        assert w.operation == "join"
        assert (m3.names[w.a], m3.names[w.b]) == ("a", "b")
        # the pointwise join reproduces the expected column
        got = [m3.format_set(v) for v in w.pointwise.values]
        assert got == ["{0}", "{a}", "{b}", "{0}", "{a,b}"]
        assert w.composite.label == "f_1"
        one = m3.index("1")
        assert one in w.differ_at
        assert m3.format_set(w.composite.values[one]) == "{1}"
        assert m3.format_set(w.pointwise.values[one]) == "{a,b}"

    def test_two_chain_holds(self, chain2):
        report = join_homomorphism_witness(chain2)
        assert report.holds and report.witness is None

    def test_boolean_lattice_outcome(self, bool2):
        # recorded outcome of the exhaustive scan: B2 fails like M3 does
        report = join_homomorphism_witness(bool2)
        assert not report.holds
        w = report.witness
        assert w.operation == "join"
        assert (bool2.names[w.a], bool2.names[w.b]) == ("p", "q")
        top = bool2.index("top")
        assert w.pointwise.values[top] == bool2.resolve_set(["p", "q"])

    def test_requires_base_lattice(self, double_diamond):
        with pytest.raises(NotALattice):
            join_homomorphism_witness(double_diamond)

    def test_witness_replays(self, m3):
        # recompute both sides of the failing pair independently
        report = join_homomorphism_witness(m3)
        w = report.witness
        ap = antichain_poset(m3)
        fam = embed(m3)
        t = lattice_tables(m3)
        assert w.composite.values == fam.maps[t.join[w.a, w.b]].values
        redo = pointwise_join(ap, fam.maps[w.a], fam.maps[w.b])
        assert redo.values == w.pointwise.values
        assert redo.values != w.composite.values


def full_map_space(p):
    """The poset of ALL maps p -> A(p) under the pointwise order."""
    ap = antichain_poset(p)
    m = ap.order.n
    suborder = ap.order.matrix
    combos = list(itertools.product(range(m), repeat=p.n))
    idx = np.array(combos, dtype=int).reshape(len(combos), p.n)
    if p.n:
        mat = suborder[idx[:, None, :], idx[None, :, :]].all(axis=2)
    else:
        mat = np.ones((1, 1), dtype=bool)
    return FinitePoset([f"g{k}" for k in range(len(combos))], mat)


class TestAntichainOrderLattice:
    @settings(max_examples=40, deadline=None)
    @given(small_posets())
    def test_computed_not_assumed(self, p):
        # a computed fact on every instance (finiteness makes it hold)
        assert lattice_tables(antichain_poset(p).order).is_lattice

    def test_m3_antichain_order_is_lattice(self, m3):
        assert lattice_tables(antichain_poset(m3).order).is_lattice

    @settings(max_examples=25, deadline=None)
    @given(small_posets(max_n=3))
    def test_equivalent_to_map_space_lattice(self, p):
        # both sides computed independently on every tiny instance
        left = lattice_tables(antichain_poset(p).order).is_lattice
        right = lattice_tables(full_map_space(p)).is_lattice
        assert left == right
