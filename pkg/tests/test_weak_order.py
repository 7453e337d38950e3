import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poptamari import lattice as lat
from poptamari import weak_order as wo
from poptamari.counting import catalan
from poptamari.nu_tamari import m_tamari_path, tamari


def perms(max_n=7):
    return st.integers(1, max_n).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


def test_pop_stack_sort_reverses_descending_runs():
    assert wo.pop_stack_sort(wo.parse_perm("3152764")) == wo.parse_perm("1325467")
    assert wo.descending_runs((3, 1, 5, 2, 7, 6, 4)) == [(3, 1), (5, 2), (7, 6, 4)]


def test_parse_and_format():
    assert wo.format_perm(wo.parse_perm("312")) == "312"
    w = wo.parse_perm("10,2,1,3,4,5,6,7,8,9")
    assert wo.format_perm(w) == "10,2,1,3,4,5,6,7,8,9"
    with pytest.raises(ValueError):
        wo.parse_perm("113")


def test_left_inversions_and_weak_order():
    assert wo.left_inversions((2, 3, 1)) == {(1, 2), (1, 3)}
    assert wo.weak_leq((1, 2, 3), (3, 2, 1))
    assert not wo.weak_leq((2, 1, 3), (1, 3, 2))


def test_sylvester_projection_examples():
    assert wo.sylvester_project((3, 1, 2)) == (1, 3, 2)
    assert wo.sylvester_rewrites((3, 1, 2)) == [(1, 3, 2)]
    assert wo.sylvester_rewrites((2, 3, 1)) == []


@pytest.mark.parametrize("n", range(1, 8))
def test_av312_counted_by_catalan(n):
    assert len(wo.av312(n)) == catalan(n)


@settings(max_examples=200, deadline=None)
@given(perms())
def test_projection_lands_in_av312_and_is_strategy_independent(w):
    v = wo.sylvester_project(w)
    assert wo.is_312_avoiding(v)
    assert wo.sylvester_project(w, "rightmost") == v
    assert wo.weak_leq(v, w)
    assert wo.sylvester_project(v) == v


@settings(max_examples=200, deadline=None)
@given(perms(8))
def test_stack_sort_matches_recursive_definition(w):
    assert wo.stack_sort(w) == wo.stack_sort_classical(w)


def test_stack_sort_example():
    assert wo.stack_sort((2, 3, 1)) == (2, 1, 3)


@settings(max_examples=100, deadline=None)
@given(perms(7))
def test_is_312_avoiding_matches_pattern_search(w):
    brute = not any(w[i] > w[k] > w[j] for i, j, k in itertools.combinations(range(len(w)), 3))
    assert wo.is_312_avoiding(w) == brute


@pytest.mark.parametrize("n", range(1, 6))
def test_sylvester_classes_match_rewrite_closure(n):
    brute = wo.sylvester_classes_bruteforce(n)
    for w, cls in brute.items():
        assert {wo.sylvester_project(v) for v in cls} == {wo.sylvester_project(w)}
        assert sum(wo.is_312_avoiding(v) for v in cls) == 1


@pytest.mark.parametrize("n", [3, 4])
def test_sylvester_is_a_lattice_congruence(n):
    L, ps = wo.weak_order_lattice(n)
    C = wo.sylvester_congruence(ps)
    assert lat.is_congruence(L, C)
    rep = lat.verify_quotient_pop(L, C)
    assert rep.passed and rep.checked == catalan(n)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_tamari_permutation_lattice_matches_dyck_paths(n):
    L, ps = wo.tamari_as_permutations(n)
    T = tamari(m_tamari_path(1, n))
    brackets = [wo.perm_to_dyck_bracket(w) for w in ps]
    assert sorted(brackets) == sorted(T.bracket(mu) for mu in T.enumerate())
    for i, j in itertools.product(range(len(ps)), repeat=2):
        assert L.leq(i, j) == T.leq(brackets[i], brackets[j])


@pytest.mark.parametrize("n", range(2, 8))
def test_orbit_sizes_agree_across_models(n):
    T = tamari(m_tamari_path(1, n))
    for w in wo.av312(n):
        perm_orbit = wo.forward_orbit_perm(w)
        b = wo.perm_to_dyck_bracket(w)
        steps = [b]
        while True:
            nxt = T.pop(steps[-1])
            if nxt == steps[-1]:
                break
            steps.append(nxt)
        assert [wo.perm_to_dyck_bracket(v) for v in perm_orbit] == steps


def test_max_orbit_permutations_small():
    assert wo.max_orbit_permutations(4) == [(2, 3, 4, 1), (3, 2, 4, 1)]
    assert [len(wo.max_orbit_permutations(n)) for n in range(2, 8)] == [1, 1, 2, 5, 14, 42]


def test_pop_av312_rejects_non_avoiders():
    with pytest.raises(ValueError):
        wo.pop_av312((3, 1, 2))


def test_tamari_size_cap():
    with pytest.raises(ValueError):
        wo.tamari_as_permutations(wo.TAMARI_PERM_MAX + 1)
