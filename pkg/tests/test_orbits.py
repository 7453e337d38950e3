import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poptamari import orbits as orb
from poptamari.counting import max_orbit_count, primitive_ballot_count
from poptamari.nu_tamari import m_tamari_path, tamari


def test_orbit_of_example_path():
    rec = orb.forward_orbit("NEEEENEN", "NNENEEEE")
    assert rec.size == 6
    assert rec.trajectory[0] == (0, 3, 3, 3, 3, 1, 2, 2, 3)
    assert rec.trajectory[-1] == rec.trajectory[-2] == tamari("NEEEENEN").base
    assert rec.paths[0] == "NNENEEEE" and rec.paths[-1] == "NEEEENEN"


def test_theta_and_witness_for_example():
    assert orb.k_set("NEEEENEN") == [1, 2]
    assert orb.theta("NEEEENEN") == 6
    assert orb.witness_max_orbit("NEEEENEN") == "NNENEEEE"


def test_theta_is_one_without_open_blocks():
    for nu in ["", "N", "NN", "NNE", "NNNE"]:
        assert orb.k_set(nu) == []
        assert orb.theta(nu) == 1
        assert orb.max_orbit_size(nu, "exhaustive") == 1
    with pytest.raises(ValueError):
        orb.witness_bracket("NN")


def test_max_orbit_size_mode_is_checked():
    with pytest.raises(ValueError):
        orb.max_orbit_size("NENE", "guess")


@pytest.mark.parametrize("m,n", [(1, 3), (1, 5), (2, 3), (2, 4), (3, 3)])
def test_theta_on_m_tamari_is_m_plus_n_minus_one(m, n):
    nu = m_tamari_path(m, n)
    assert orb.theta(nu) == m + n - 1 == orb.max_orbit_size(nu, "exhaustive")


@settings(max_examples=60, deadline=None)
@given(st.text(alphabet="NE", max_size=9))
def test_theta_matches_exhaustive_maximum(nu):
    assert orb.theta(nu) == orb.max_orbit_size(nu, "exhaustive")


@settings(max_examples=60, deadline=None)
@given(st.text(alphabet="NE", min_size=1, max_size=9).filter(lambda w: orb.k_set(w)))
def test_witness_trajectory_closed_form(nu):
    rec = orb.forward_orbit(nu, orb.witness_max_orbit(nu))
    for t, b in enumerate(rec.trajectory):
        assert orb.witness_trajectory_formula(nu, t) == b


def test_orbit_report_shape():
    rep = orb.orbit_report("NENENE")
    assert rep["theta"] == rep["max_exhaustive"] == 3
    assert sum(rep["histogram"].values()) == 5
    assert rep["witnesses"] == ["NNENEE"]


@pytest.mark.parametrize("m,n", [(1, 4), (1, 5), (2, 3), (2, 4), (3, 3)])
def test_max_orbit_characterization_and_count(m, n):
    found = sorted(orb.max_orbit_paths(m, n))
    by_rule = sorted(mu for mu in tamari(m_tamari_path(m, n)).enumerate() if orb.is_max_orbit_m_tamari(m, n, mu))
    assert found == by_rule
    assert len(found) == max_orbit_count(m, n) == orb.count_max_orbit(m, n)


def test_max_orbit_count_values():
    assert [max_orbit_count(1, n) for n in range(2, 8)] == [1, 1, 2, 5, 14, 42]
    assert [max_orbit_count(2, n) for n in range(2, 6)] == [1, 2, 7, 30]


@pytest.mark.parametrize("m,n", [(1, 4), (2, 3), (2, 4), (3, 3)])
def test_primitive_paths_counted_and_start_at_top(m, n):
    prim = orb.enumerate_primitive(m, n)
    assert len(prim) == primitive_ballot_count(m, n)
    T = tamari(m_tamari_path(m, n))
    assert all(T.bracket(mu)[1] == n for mu in prim)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_ballot_paths_are_sequences_of_primitives(m):
    prim = [primitive_ballot_count(m, n) for n in range(1, 6)]
    totals = [len(tamari(m_tamari_path(m, n)).enumerate()) for n in range(1, 6)]
    assert orb.compositions_from_primitives(prim, 5) == totals


def test_primitive_decomposition():
    assert orb.primitive_decomposition(1, "NENNEE") == ["NE", "NNEE"]
    assert orb.primitive_decomposition(2, "NEENNEEEE") == ["NEE", "NNEEEE"]
    with pytest.raises(ValueError):
        orb.primitive_decomposition(1, "NNE")


def test_word_examples_and_labels():
    assert orb.avoids_212((2, 3, 2, 2, 2, 1, 1, 1))
    assert not orb.avoids_212((2, 1, 2))
    assert orb.blocked_letters((2, 3, 1, 2)) == {3, 2}
    assert orb.word_label((1, 2, 2), 3) == 3


@pytest.mark.parametrize("m,n", [(1, 3), (1, 4), (2, 2), (2, 3), (2, 4)])
def test_u_words_biject_with_primitive_paths(m, n):
    prim = orb.enumerate_primitive(m, n)
    words = sorted(orb.u_word(m, n, mu) for mu in prim)
    assert words == sorted(orb.enumerate_u_words(m, n))
    assert len(set(words)) == len(prim)
    assert all(orb.avoids_212(w) for w in words)


@pytest.mark.parametrize("m,n", [(1, 3), (1, 4), (2, 2), (2, 3)])
def test_y_words_biject_with_max_orbit_paths(m, n):
    paths = orb.max_orbit_paths(m, n + 1)
    words = sorted(orb.y_word(m, n, mu) for mu in paths)
    assert words == sorted(orb.enumerate_y_words(m, n))
    assert len(set(words)) == len(paths)


@pytest.mark.parametrize("m", [1, 2])
def test_generating_tree_matches_word_labels(m):
    levels = orb.generating_tree_counts(m, 5)
    for n in range(1, 5):
        assert orb.label_distribution(orb.enumerate_u_words(m, n), n) == levels[n]
        assert orb.label_distribution(orb.enumerate_y_words(m, n), n) == levels[n]
        assert sum(levels[n].values()) == primitive_ballot_count(m, n)


def test_tree_children_rule():
    assert orb.tree_children(1, 2) == {3: 1}
    assert orb.tree_children(2, 2) == {2: 1, 3: 1}
    with pytest.raises(ValueError):
        orb.generating_tree_counts(0, 3)


def test_orbit_sizes_cover_every_path():
    sizes = orb.orbit_sizes("ENNEEN")
    assert set(sizes) == set(tamari("ENNEEN").enumerate())
    for mu, s in sizes.items():
        assert orb.forward_orbit("ENNEEN", mu).size == s


def test_every_short_word_has_consistent_theta():
    for k in range(7):
        for w in itertools.product("NE", repeat=k):
            nu = "".join(w)
            assert orb.theta(nu) == orb.max_orbit_size(nu, "exhaustive")
