"""Named verification suites.

Each suite recomputes a family of exact statements from independent
brute force and returns a :class:`CheckResult`.  The CLI ``verify``
command and the acceptance tests both call into this module.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import lattice as lat
from . import orbits as orb
from . import sortable as srt
from . import weak_order as wo
from .counting import catalan, g_sequence, g_sequence_coupled, max_orbit_count, pell, primitive_ballot_count
from .corpus import corpus
from .nu_tamari import m_tamari_path, tamari


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def expect(self, ok: bool, message: str) -> None:
        self.checked += 1
        if not ok:
            self.passed = False
            if len(self.failures) < 20:
                self.failures.append(message)

    def as_dict(self) -> dict:
        return asdict(self)


def _timed(name: str):
    def wrap(fn):
        def run(**kw) -> CheckResult:
            res = CheckResult(name)
            start = time.perf_counter()
            fn(res, **kw)
            res.seconds = round(time.perf_counter() - start, 3)
            return res

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


# permutations

@_timed("pop-av312")
def check_pop_av312(res: CheckResult, n_max: int | None = None, small: bool = False, **_) -> None:
    """Pop on 312-avoiders equals sylvester projection of pop-stack-sort and the lattice Pop."""
    n_max = n_max or (5 if small else 6)
    for n in range(1, n_max + 1):
        W, perms = wo.weak_order_lattice(n)
        av = [i for i, w in enumerate(perms) if wo.is_312_avoiding(w)]
        res.expect(lat.is_sublattice(W, av), f"Av_{n}(312) is not a sublattice of the weak order")
        sub, back = lat.induced(W, av)
        for i, x in enumerate(back):
            w = perms[x]
            inside = perms[back[lat.pop_generic(sub, i)]]
            formula = wo.sylvester_project(wo.pop_stack_sort(w))
            res.expect(inside == formula, f"{wo.format_perm(w)}: lattice Pop {inside} vs formula {formula}")
            res.expect(wo.pop_av312(w) == formula, f"pop_av312 disagrees at {wo.format_perm(w)}")


@_timed("max-orbit-perms")
def check_max_orbit_perms(res: CheckResult, n_max: int | None = None, small: bool = False, **_) -> None:
    """Largest Pop orbits on Av_n(312) have size n and are the perms ending in n1."""
    n_max = n_max or (6 if small else 7)
    for n in range(2, n_max + 1):
        sizes = {w: len(wo.forward_orbit_perm(w)) for w in wo.av312(n)}
        res.expect(max(sizes.values()) == n, f"n={n}: max orbit {max(sizes.values())}")
        top = {w for w, s in sizes.items() if s == n}
        suffix = {w for w in sizes if w[-2:] == (n, 1)}
        res.expect(top == suffix, f"n={n}: max-orbit set differs from suffix-n1 set")
        res.expect(len(top) == catalan(n - 2), f"n={n}: {len(top)} max-orbit perms, expected C_{n - 2}")
        res.expect(set(wo.max_orbit_permutations(n)) == suffix, f"n={n}: max_orbit_permutations mismatch")


@_timed("quotient-pop")
def check_quotient_pop(res: CheckResult, n_max: int | None = None, small: bool = False, **_) -> None:
    """Pop on the class minima equals projected Pop for the sylvester congruence."""
    n_max = n_max or (4 if small else 5)
    for n in range(1, n_max + 1):
        W, perms = wo.weak_order_lattice(n)
        C = wo.sylvester_congruence(perms)
        brute = wo.sylvester_classes_bruteforce(n)
        res.expect(all(C.same(i, perms.index(v)) for i, w in enumerate(perms) for v in brute[w]),
                   f"n={n}: sylvester classes differ from rewrite closure")
        res.expect(len(set(C.class_of)) == catalan(n), f"n={n}: wrong number of classes")
        rep = lat.verify_quotient_pop(W, C)
        res.expect(rep.is_lattice_congruence and rep.image_is_sublattice and rep.passed,
                   f"n={n}: {rep}")
    L, C = lat.remark_counterexample()
    rep = lat.verify_quotient_pop(L, C)
    res.expect(rep.is_meet_congruence and not rep.is_lattice_congruence, "diamond partition compatibility")
    res.expect(rep.image_is_sublattice, "diamond class minima should form a sublattice")
    res.expect(not rep.passed and rep.counterexample == {"x": "x", "pop_in_image": "c", "projected_pop": "0"},
               f"diamond counterexample not reproduced: {rep}")


@_timed("pop-trivial")
def check_pop_trivial(res: CheckResult, k_max: int | None = None, small: bool = False, **_) -> None:
    """Boolean and partition lattices are geometric and Pop-trivial; chains are not."""
    k_max = k_max or (5 if small else 6)
    for k in range(0, k_max + 1):
        B = lat.boolean_lattice(k)
        res.expect(lat.is_pop_trivial(B) and lat.classify(B).geometric, f"B_{k}")
    for k in range(1, k_max + 1):
        P = lat.partition_lattice(k)
        res.expect(lat.is_pop_trivial(P) and lat.classify(P).geometric, f"Pi_{k}")
    for length in range(2, 12):
        res.expect(not lat.is_pop_trivial(lat.chain(length)), f"chain of length {length}")


# nu-Tamari

def _lattice_and_brackets(nu: str):
    T = tamari(nu)
    L, paths = T.lattice()
    return T, L, paths, [T.bracket(p) for p in paths]


@_timed("bracket-bijection")
def check_bracket_bijection(res: CheckResult, max_length: int = 12, small: bool = False, **_) -> None:
    """Paths and bracket vectors are in bijection; meets are componentwise minima."""
    for nu in corpus(10 if small else max_length):
        T, L, paths, B = _lattice_and_brackets(nu)
        vectors = sorted(T.iter_bracket_vectors())
        res.expect(sorted(B) == vectors, f"{nu}: encoded paths differ from bracket vectors")
        res.expect(len(set(B)) == len(B), f"{nu}: encoding not injective")
        res.expect(all(T.path(b) == p for b, p in zip(B, paths)), f"{nu}: round trip fails")
        res.expect(all(T.is_bracket_vector(b) for b in B), f"{nu}: invalid vector")
        index = {b: i for i, b in enumerate(B)}
        for i, j in itertools.product(range(len(B)), repeat=2):
            if L.meet(i, j) != index.get(T.meet(B[i], B[j])) or L.leq(i, j) != T.leq(B[i], B[j]):
                res.expect(False, f"{nu}: meet/order mismatch at {paths[i]}, {paths[j]}")
                break
        else:
            res.expect(True, "")


@_timed("pop-bracket")
def check_pop_bracket(res: CheckResult, max_length: int = 12, small: bool = False, **_) -> None:
    """Bracket-vector Pop and covers match the Hasse diagram built from rotations."""
    for nu in corpus(10 if small else max_length):
        T, L, paths, B = _lattice_and_brackets(nu)
        for i, b in enumerate(B):
            res.expect(T.pop(b) == B[lat.pop_generic(L, i)], f"{nu}: Pop at {paths[i]}")
            res.expect(T.covered(b) == sorted(B[j] for j in L.lower_covers[i]), f"{nu}: covers at {paths[i]}")
            res.expect(T.delta(b) == T.delta_by_definition(b), f"{nu}: delta forms disagree at {paths[i]}")


def _theta_corpus(max_length: int, small: bool) -> list[str]:
    extra = ["".join(w) for k in range(0, 6 if small else 8) for w in itertools.product("NE", repeat=k)]
    seen = dict.fromkeys(corpus(10 if small else max_length) + extra)
    return list(seen)


EXAMPLE_NU = "NEEEENEN"
EXAMPLE_TRAJECTORY = (
    (0, 3, 3, 3, 3, 1, 2, 2, 3),
    (0, 3, 3, 3, 2, 1, 2, 2, 3),
    (0, 3, 3, 2, 1, 1, 2, 2, 3),
    (0, 3, 2, 1, 1, 1, 2, 2, 3),
    (0, 2, 1, 1, 1, 1, 2, 2, 3),
    (0, 1, 1, 1, 1, 1, 2, 2, 3),
    (0, 1, 1, 1, 1, 1, 2, 2, 3),
)


@_timed("theta")
def check_theta(res: CheckResult, max_length: int = 12, small: bool = False, **_) -> None:
    """The closed-form maximum orbit size is attained and never exceeded."""
    for nu in _theta_corpus(max_length, small):
        th = orb.theta(nu)
        res.expect(orb.max_orbit_size(nu, "exhaustive") == th, f"{nu}: theta {th} not the exhaustive max")
        if orb.k_set(nu):
            mu = orb.witness_max_orbit(nu)
            rec = orb.forward_orbit(nu, mu)
            for t, b in enumerate(rec.trajectory):
                res.expect(orb.witness_trajectory_formula(nu, t) == b, f"{nu}: witness trajectory at t={t}")
    rec = orb.forward_orbit(EXAMPLE_NU, "NNENEEEE")
    res.expect(rec.trajectory == EXAMPLE_TRAJECTORY, f"example trajectory {rec.trajectory}")
    res.expect(orb.theta(EXAMPLE_NU) == 6 and orb.witness_max_orbit(EXAMPLE_NU) == "NNENEEEE", "example witness")


MAX_ORBIT_CASES = [(m, n) for m in (1, 2, 3) for n in (2, 3, 4)] + [(1, 5), (1, 6), (2, 5)]


@_timed("max-orbit-count")
def check_max_orbit_count(res: CheckResult, m: int | None = None, n_max: int | None = None,
                          small: bool = False, **_) -> None:
    """Bracket test, orbit sizes and the closed count agree on m-Tamari lattices."""
    if m is not None:
        cases = [(m, n) for n in range(2, (n_max or 4) + 1)]
    else:
        cases = [c for c in MAX_ORBIT_CASES if not small or c[1] <= 4]
    for mm, n in cases:
        nu = m_tamari_path(mm, n)
        by_orbit = set(orb.max_orbit_paths(mm, n))
        by_test = {mu for mu in tamari(nu).enumerate() if orb.is_max_orbit_m_tamari(mm, n, mu)}
        res.expect(orb.theta(nu) == mm + n - 1, f"({mm},{n}): theta")
        res.expect(by_orbit == by_test, f"({mm},{n}): characterization differs from orbit sizes")
        res.expect(len(by_orbit) == max_orbit_count(mm, n), f"({mm},{n}): {len(by_orbit)} vs closed form")
    for n in range(2, 8 if not small else 6):
        # cross-model: Dyck paths with big orbits correspond to perms ending in n1
        T = tamari(m_tamari_path(1, n))
        ends = {T.path(wo.perm_to_dyck_bracket(w)) for w in wo.av312(n) if w[-2:] == (n, 1)}
        marked = {mu for mu in T.enumerate() if orb.is_max_orbit_m_tamari(1, n, mu)}
        res.expect(ends == marked, f"n={n}: permutation model disagrees")


@_timed("primitive-count")
def check_primitive_count(res: CheckResult, m_max: int = 3, n_max: int | None = None,
                          small: bool = False, **_) -> None:
    """Primitive ballot paths, both word classes and the generating tree give one sequence."""
    n_max = n_max or (5 if small else 6)
    for m in range(1, m_max + 1):
        tree = orb.generating_tree_counts(m, n_max)
        prim_counts = []
        for n in range(1, n_max + 1):
            prims = orb.enumerate_primitive(m, n)
            prim_counts.append(len(prims))
            res.expect(len(prims) == primitive_ballot_count(m, n), f"m={m} n={n}: primitive count")
            res.expect(sum(tree[n].values()) == len(prims), f"m={m} n={n}: tree total")
            geo = [mu for mu in tamari(m_tamari_path(m, n)).enumerate() if tamari(m_tamari_path(m, n)).bracket(mu)[1] == n]
            res.expect(sorted(geo) == sorted(prims), f"m={m} n={n}: b_1 = n test differs from geometry")
        full = [len(tamari(m_tamari_path(m, n)).enumerate()) for n in range(1, n_max + 1)]
        res.expect(orb.compositions_from_primitives(prim_counts, n_max) == full, f"m={m}: A = B/(1-B) fails")
    for m in range(1, 3):
        for n in range(1, (4 if small else 5) + 1):
            U = orb.enumerate_u_words(m, n)
            Y = orb.enumerate_y_words(m, n)
            res.expect(len(U) == len(Y), f"m={m} n={n}: |U| {len(U)} vs |Y| {len(Y)}")
            res.expect(orb.label_distribution(U, n) == orb.generating_tree_counts(m, n)[n],
                       f"m={m} n={n}: U labels vs tree")
            res.expect(orb.label_distribution(Y, n) == orb.generating_tree_counts(m, n)[n],
                       f"m={m} n={n}: Y labels vs tree")
            res.expect(sorted(orb.u_word(m, n, mu) for mu in orb.enumerate_primitive(m, n)) == sorted(U),
                       f"m={m} n={n}: u-words of primitive paths")
            res.expect(sorted(orb.y_word(m, n, mu) for mu in orb.max_orbit_paths(m, n + 1)) == sorted(Y),
                       f"m={m} n={n}: y-words of max-orbit paths")
            res.expect(all(orb.avoids_212(w) for w in U + Y), f"m={m} n={n}: 212 pattern present")
            if n >= 2:
                shorter = set(orb.enumerate_u_words(m, n - 1))
                res.expect(all(w[m + 1:] in shorter for w in U), f"m={m} n={n}: prefix deletion leaves U")


@_timed("one-sortable")
def check_one_sortable(res: CheckResult, max_length: int = 12, small: bool = False, **_) -> None:
    """1-sortable paths are counted by 2^|A| via the alpha/beta bijection."""
    for nu in corpus(10 if small else max_length):
        brute = srt.enumerate_t_sortable_brute(nu, 1)
        res.expect(len(brute) == srt.count_1_sortable(nu), f"{nu}: count {len(brute)}")
        res.expect(all(srt.beta(nu, srt.alpha(nu, mu)) == mu for mu in brute), f"{nu}: beta(alpha) != id")
        A = srt.script_a(nu)
        for r in range(len(A) + 1):
            for q in itertools.combinations(A, r):
                res.expect(srt.alpha(nu, srt.beta(nu, q)) == frozenset(q), f"{nu}: alpha(beta({q})) != id")


@_timed("two-sortable")
def check_two_sortable(res: CheckResult, max_length: int = 12, small: bool = False, **_) -> None:
    """Recursive 2-sortable enumeration, its closed forms, and m-Tamari sequences."""
    for nu in corpus(10 if small else max_length):
        brute = srt.enumerate_t_sortable_brute(nu, 2)
        res.expect(srt.enumerate_2_sortable(nu) == brute, f"{nu}: recursion differs from brute force")
        f = srt.count_2_sortable_formula(nu)
        if f is not None:
            res.expect(f == len(brute), f"{nu}: 3^theta 5^chi = {f} vs {len(brute)}")
    for n in range(1, 6):
        res.expect(len(srt.enumerate_t_sortable_brute(m_tamari_path(1, n), 2)) == pell(n), f"Tamari n={n}")
    for m in (2, 3):
        for n in range(1, 5):
            res.expect(len(srt.enumerate_t_sortable_brute(m_tamari_path(m, n), 2)) == g_sequence(n), f"m={m} n={n}")
    for n in range(1, 8):
        res.expect(g_sequence(n) == g_sequence_coupled(n), f"g({n}) forms")
    # the worked extension example
    nu = "EENEENENENN"
    S = tamari(srt.nu_sharp(nu))
    res.expect(S.base == (0, 0, 0, 1, 1, 2, 2, 3, 4), "sharp base vector")
    mu0 = S.path((1, 1, 0, 1, 1, 3, 2, 3, 4))
    T = tamari(nu)
    pairs = sorted(T.bracket(mu)[:2] for mu in srt.extend_2_sortable(nu, mu0))
    res.expect(pairs == [(0, 0), (2, 0), (2, 2), (4, 0), (4, 2)], f"extension pairs {pairs}")
    bad = (4, 4, 0, 2, 2, 1, 2, 2, 4, 3, 4, 5)
    res.expect(T.pop(T.pop(bad)) == (3, 0, 0, 1, 1, 1, 2, 2, 3, 3, 4, 5), "rejected pair does not sort")


@_timed("properties")
def check_properties(res: CheckResult, max_length: int = 12, small: bool = False, **_) -> None:
    """Quantified statements about meet projection, Pop lower bounds and unimpeded indices."""
    _meet_projection(res, 5 if small else 6)
    for nu in corpus(10 if small else max_length):
        T = tamari(nu)
        for mu in T.enumerate():
            b = T.bracket(mu)
            p = T.pop(b)
            for k in range(T.n + 1):
                lo, hi = T.f(k - 1), T.f(k)
                for i in range(lo + 1, hi):
                    res.expect(p[i] >= b[i + 1], f"{nu} {mu}: Pop lower bound at {i}")
                    if T.is_unimpeded(b, i):
                        res.expect(T.is_unimpeded(p, i), f"{nu} {mu}: {i} stops being unimpeded")
                        if b[i] > k:
                            res.expect(p[i] < b[i], f"{nu} {mu}: unimpeded {i} does not drop")
                        if i > lo + 1:
                            res.expect(T.is_unimpeded(p, i - 1), f"{nu} {mu}: {i - 1} not unimpeded after Pop")
                if hi >= lo + 2 and all(b[j] == T.n for j in range(lo + 1, hi)):
                    c = b
                    for _ in range(hi - lo - 2):
                        c = T.pop(c)
                    res.expect(c[lo + 1] == T.n, f"{nu} {mu}: top block entry drops too early")
            dp = set(T.delta(p))
            fixed = set(T.fixed)
            for i in T.delta(b):
                if i >= 1 and i - 1 not in fixed:
                    res.expect(i - 1 in dp, f"{nu} {mu}: descent at {i} does not shift left")
            if "N" in nu:
                for t in (1, 2, 3):
                    if srt.is_t_sortable(nu, mu, t):
                        sharp = srt.nu_sharp(nu)
                        res.expect(srt.is_t_sortable(sharp, tamari(sharp).path(srt.bracket_sharp(nu, b)), t),
                                   f"{nu} {mu}: sortability not inherited for t={t}")
    for m in range(1, 4):
        for n in range(1, (4 if small else 5) + 1):
            _m_tamari_bounds(res, m, n)


def _meet_projection(res: CheckResult, max_size: int) -> None:
    W3, _ = wo.weak_order_lattice(3)
    fixtures = [lat.diamond(), lat.pentagon(), lat.m3(), lat.boolean_lattice(3), lat.chain(4),
                lat.partition_lattice(3), W3]
    for size in range(1, max_size + 1):
        fixtures.extend(lat.all_small_lattices(size))
    for L in fixtures:
        for C in lat.lattice_congruences(L):
            proj = lat.projection_map(L, C)
            if not lat.is_sublattice(L, set(proj)):
                continue
            for r in range(1, L.size + 1):
                for A in itertools.combinations(L.elements(), r):
                    lhs = proj[lat.meet_of_set(L, A)]
                    rhs = lat.meet_of_set(L, [proj[a] for a in A])
                    res.expect(lhs == rhs, f"{L}: projection of meet over {A}")


def _m_tamari_bounds(res: CheckResult, m: int, n: int) -> None:
    T = tamari(m_tamari_path(m, n))
    for mu in T.enumerate():
        b = T.bracket(mu)
        traj = [b]
        while len(traj) < m + n + 2:
            traj.append(T.pop(traj[-1]))
        for k in range(1, n + 1):
            block = range((k - 1) * (m + 1) + 1, k * (m + 1))
            low_entry = any(b[r] < n for r in block)
            for t in range(m - 1, len(traj)):
                c = traj[t]
                for j in block:
                    res.expect(c[j] <= max(k, n + m - 1 - t), f"({m},{n}) {mu}: first bound j={j} t={t}")
                    if j != block.start or low_entry:
                        res.expect(c[j] <= max(k, n + m - 2 - t), f"({m},{n}) {mu}: second bound j={j} t={t}")


@_timed("m-independence")
def check_m_independence(res: CheckResult, small: bool = False, **_) -> None:
    """Empirical: for m >= t the t-sortable counts do not depend on m."""
    for t, n_max in ((1, 5), (2, 5), (3, 4 if small else 5)):
        rep = srt.independence_report(t, 4, n_max)
        res.expect(rep["independent"], f"t={t}: rows differ across m: {rep['rows']}")


SUITES: dict[str, Callable[..., CheckResult]] = {
    "pop-av312": check_pop_av312,
    "max-orbit-perms": check_max_orbit_perms,
    "quotient-pop": check_quotient_pop,
    "pop-trivial": check_pop_trivial,
    "bracket-bijection": check_bracket_bijection,
    "pop-bracket": check_pop_bracket,
    "theta": check_theta,
    "max-orbit-count": check_max_orbit_count,
    "primitive-count": check_primitive_count,
    "one-sortable": check_one_sortable,
    "two-sortable": check_two_sortable,
    "properties": check_properties,
    "m-independence": check_m_independence,
}


def run_suites(names: list[str], **options) -> list[CheckResult]:
    if names == ["all"]:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return [SUITES[name](**{k: v for k, v in options.items() if v is not None}) for name in names]
