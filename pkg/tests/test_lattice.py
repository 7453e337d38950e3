import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poptamari import lattice as lat


def test_chain_pop_steps_down_by_one():
    L = lat.chain(4)
    assert lat.pop_map(L) == (0, 0, 1, 2, 3)
    assert not lat.is_pop_trivial(L)
    assert lat.is_pop_trivial(lat.chain(1))


def test_boolean_lattice_shape():
    B = lat.boolean_lattice(3)
    assert len(B) == 8
    assert len(B.covers) == 12
    assert B.meet(0b110, 0b011) == 0b010
    assert B.join(0b100, 0b001) == 0b101
    assert lat.classify(B).geometric


@pytest.mark.parametrize("k,size", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
def test_partition_lattice_sizes_are_bell_numbers(k, size):
    P = lat.partition_lattice(k)
    assert len(P) == size
    assert lat.is_pop_trivial(P)


def test_classification_of_small_fixtures():
    c = lat.classify(lat.chain(2))
    assert c.graded and c.semimodular and not c.atomic and not c.geometric
    assert lat.classify(lat.diamond()).geometric
    assert not lat.classify(lat.pentagon()).graded
    assert lat.classify(lat.m3()).geometric


def test_pentagon_is_not_pop_trivial():
    L = lat.pentagon()
    top = L.index("1")
    # 1 covers b and c; b meet c is the bottom, but b itself covers a
    assert lat.pop_generic(L, top) == L.bottom
    assert lat.pop_generic(L, L.index("b")) == L.index("a")


def test_rejects_non_lattice():
    # two minimal elements below one top: no meet of the two minima
    with pytest.raises(lat.LatticeError):
        lat.FiniteLattice(3, [(0, 2), (1, 2)])


def test_rejects_cycle_and_transitive_cover():
    with pytest.raises(lat.LatticeError):
        lat.FiniteLattice(2, [(0, 1), (1, 0)])
    with pytest.raises(lat.LatticeError):
        lat.FiniteLattice(3, [(0, 1), (1, 2), (0, 2)])


def test_empty_meet_is_an_error():
    with pytest.raises(ValueError):
        lat.meet_of_set(lat.chain(2), [])


def test_remark_counterexample_details():
    L, C = lat.remark_counterexample()
    assert lat.is_meet_congruence(L, C)
    assert not lat.is_congruence(L, C)
    b, c, x = L.index("b"), L.index("c"), L.index("x")
    assert L.join(b, c) == x and L.join(L.bottom, c) == c
    assert lat.pi_down(L, C, b) == L.bottom
    rep = lat.verify_quotient_pop(L, C)
    assert rep.image_is_sublattice
    assert not rep.passed
    assert rep.counterexample == {"x": "x", "pop_in_image": "c", "projected_pop": "0"}


def test_singleton_congruence_passes_everywhere():
    for L in [lat.pentagon(), lat.m3(), lat.boolean_lattice(3), lat.partition_lattice(4)]:
        rep = lat.verify_quotient_pop(L, lat.Congruence.singletons(L.size))
        assert rep.passed and rep.is_lattice_congruence


def test_one_class_partition_is_a_congruence():
    L = lat.pentagon()
    assert lat.is_congruence(L, lat.Congruence.from_blocks(L.size, [list(L.elements())]))


def test_pentagon_congruences():
    # identity, a~b, {0,c}|{a,b,1}, {0,a,b}|{c,1}, and the total relation
    found = {tuple(sorted(map(tuple, C.blocks()))) for C in lat.lattice_congruences(lat.pentagon())}
    assert found == {
        ((0,), (1,), (2,), (3,), (4,)),
        ((0,), (1, 2), (3,), (4,)),
        ((0, 3), (1, 2, 4)),
        ((0, 1, 2), (3, 4)),
        ((0, 1, 2, 3, 4),),
    }


@pytest.mark.parametrize("size,count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 7), (6, 39)])
def test_small_lattice_enumeration_counts(size, count):
    # labelled lattices with bottom 0, top size-1 and a linear extension fixed by labels
    assert sum(1 for _ in lat.all_small_lattices(size)) == count


def test_geometric_implies_pop_trivial_on_small_lattices():
    for size in range(1, 7):
        for L in lat.all_small_lattices(size):
            if lat.classify(L).geometric:
                assert lat.is_pop_trivial(L)


def test_dual_of_pop_trivial_need_not_be_pop_trivial():
    L = lat.search_lattice(lambda L: lat.is_pop_trivial(L) and not lat.is_pop_trivial(lat.dual(L)))
    assert L is not None
    assert lat.is_pop_trivial(L) and not lat.is_pop_trivial(lat.dual(L))


def test_semimodular_lattice_that_is_not_pop_trivial_exists():
    def wanted(L):
        c = lat.classify(L)
        return c.semimodular and not lat.is_pop_trivial(L) and lat.classify(lat.dual(L)).atomic
    L = lat.search_lattice(wanted)
    assert L is not None and len(L) <= 7


def test_hasse_round_trip_and_dot():
    L = lat.pentagon()
    text = lat.format_hasse(L)
    again = lat.parse_hasse(text)
    assert again.covers == L.covers
    dot = lat.to_dot(L)
    assert dot.startswith("digraph") and "rankdir=BT" in dot


def test_parse_hasse_errors():
    with pytest.raises(lat.LatticeError):
        lat.parse_hasse("cover 0 1\n")
    with pytest.raises(lat.LatticeError):
        lat.parse_hasse("elements 2\nedge 0 1\n")


def test_induced_and_sublattice():
    B = lat.boolean_lattice(2)
    assert lat.is_sublattice(B, [0, 1, 3])
    assert not lat.is_sublattice(B, [1, 2, 3])  # missing the meet of 01 and 10
    sub, back = lat.induced(B, [0, 1, 2, 3])
    assert back == [0, 1, 2, 3] and len(sub.covers) == 4


lattices = st.sampled_from(
    [lat.pentagon(), lat.m3(), lat.diamond(), lat.boolean_lattice(3), lat.partition_lattice(4), lat.chain(5)]
)


@settings(max_examples=40, deadline=None)
@given(lattices, st.data())
def test_pop_is_below_x_and_fixes_only_the_bottom(L, data):
    x = data.draw(st.integers(0, L.size - 1))
    p = lat.pop_generic(L, x)
    assert L.leq(p, x)
    assert (p == x) == (not L.lower_covers[x])


@settings(max_examples=40, deadline=None)
@given(lattices, st.data())
def test_meet_and_join_are_bounds(L, data):
    x = data.draw(st.integers(0, L.size - 1))
    y = data.draw(st.integers(0, L.size - 1))
    m, j = L.meet(x, y), L.join(x, y)
    assert L.leq(m, x) and L.leq(m, y) and L.leq(x, j) and L.leq(y, j)
    for z in L.elements():
        if L.leq(z, x) and L.leq(z, y):
            assert L.leq(z, m)


def test_pi_down_idempotent_and_monotone():
    for L in [lat.pentagon(), lat.boolean_lattice(3), lat.chain(3)]:
        for C in lat.lattice_congruences(L):
            proj = lat.projection_map(L, C)
            assert all(proj[proj[x]] == proj[x] for x in L.elements())
            for x, y in itertools.product(L.elements(), repeat=2):
                if L.leq(x, y):
                    assert L.leq(proj[x], proj[y])
