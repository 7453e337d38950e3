"""t-Pop-sortable paths: paths reaching the bottom nu after at most t steps of Pop.

For t = 1 there is an explicit bijection with subsets of the set 𝒜(nu) of
heights below n whose east run is nonempty.  For t = 2 the paths are built
recursively: deleting the first block of nu gives a smaller base path
``nu#``, and every 2-sortable path of Tam(nu) is obtained from one of
Tam(nu#) by choosing its two leading bracket entries from a short list that
depends only on the first two entries of the smaller path.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .counting import g_sequence, pell  # noqa: F401  (re-exported)
from .nu_tamari import DEFAULT_CAP, Bracket, m_tamari_path, tamari
from .orbits import orbit_size_bracket


def is_t_sortable(nu: str, mu: str, t: int) -> bool:
    if t < 0:
        raise ValueError("t must be nonnegative")
    T = tamari(nu)
    b = T.bracket(mu)
    for _ in range(t):
        b = T.pop(b)
    return b == T.base


def enumerate_t_sortable_brute(nu: str, t: int, cap: int = DEFAULT_CAP) -> list[str]:
    """Every path of Tam(nu) whose orbit has at most t+1 elements."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    T = tamari(nu)
    memo: dict[Bracket, int] = {}
    return sorted(mu for mu in T.enumerate(cap) if orbit_size_bracket(T, T.bracket(mu), memo) <= t + 1)


# t = 1

def script_a(nu: str) -> list[int]:
    T = tamari(nu)
    return [k for k in range(T.n) if T.gammas[k] >= 1]


def count_1_sortable(nu: str) -> int:
    return 2 ** len(script_a(nu))


def alpha(nu: str, mu: str) -> frozenset[int]:
    T = tamari(nu)
    b = T.bracket(mu)
    if T.pop(b) != T.base:
        raise ValueError(f"{mu} is not 1-Pop-sortable in Tam({nu})")
    return frozenset(k for k in range(T.n + 1) if b[T.f(k - 1) + 1] > k)


def _runs(q: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal runs of consecutive integers as half-open pairs (q_i, r_i)."""
    out: list[tuple[int, int]] = []
    for k in sorted(q):
        if out and out[-1][1] == k:
            out[-1] = (out[-1][0], k + 1)
        else:
            out.append((k, k + 1))
    return out


def beta_bracket(nu: str, q) -> Bracket:
    T = tamari(nu)
    allowed = set(script_a(nu))
    if not set(q) <= allowed:
        raise ValueError(f"{sorted(set(q) - allowed)} not in the allowed index set {sorted(allowed)}")
    c = list(T.base)
    for lo, hi in _runs(q):
        for k in range(lo, hi):
            c[T.f(k - 1) + 1] = hi
    return tuple(c)


def beta(nu: str, q) -> str:
    T = tamari(nu)
    mu = T.path(beta_bracket(nu, q))
    if T.pop(T.bracket(mu)) != T.base:
        raise AssertionError(f"beta({sorted(q)}) = {mu} is not 1-Pop-sortable")
    return mu


def enumerate_1_sortable(nu: str) -> list[str]:
    subsets = itertools.chain.from_iterable(
        itertools.combinations(script_a(nu), r) for r in range(len(script_a(nu)) + 1)
    )
    return sorted(beta(nu, q) for q in subsets)


# t = 2

def nu_sharp(nu: str) -> str:
    if "N" not in nu:
        raise ValueError("nu has no north step")
    return nu[nu.index("N") + 1:]


def bracket_sharp(nu: str, b: Sequence[int]) -> Bracket:
    f0 = tamari(nu).f(0)
    return tuple(v - 1 for v in b[f0 + 1:])


def prefix_choices(nu: str, mu0: str) -> tuple[str, list[tuple[int, int]]]:
    """Which case applies when extending mu0, and the allowed (b_0, b_1) pairs.

    With f_0 = 0 there is nothing to choose and the pair list is empty.
    """
    T = tamari(nu)
    sharp = nu_sharp(nu)
    r = [v + 1 for v in tamari(sharp).bracket(mu0)]
    f0, n = T.f(0), T.n
    if f0 == 0:
        return "f0=0", []
    r0 = r[0]
    # a one-point nu# has no r_1; the extension then behaves as r_1 = r_0 = n
    r1 = r[1] if len(r) > 1 else r0
    if r0 > r1:
        return "case5", [(0, 0), (r0, 0)]
    if r0 == r1 == n:
        if f0 >= 2:
            return "case3", [(0, 0), (n, 0), (n, n)]
        return "case4", [(0, 0), (n, 0)]
    if T.f(r0) + 1 > T.length:
        raise AssertionError("d is undefined outside the top-value case")
    d = r[T.f(r0) - f0]
    if f0 >= 2:
        return "case1", [(0, 0), (r0, 0), (d, 0), (r0, r0), (d, r0)]
    return "case2", [(0, 0), (r0, 0), (d, 0)]


def extend_2_sortable(nu: str, mu0: str) -> list[str]:
    """All 2-sortable paths of Tam(nu) that reduce to mu0 under the # map."""
    T = tamari(nu)
    sharp_T = tamari(nu_sharp(nu))
    b0 = sharp_T.bracket(mu0)
    if sharp_T.pop(sharp_T.pop(b0)) != sharp_T.base:
        raise ValueError(f"{mu0} is not 2-Pop-sortable in Tam({sharp_T.nu})")
    tail = tuple(v + 1 for v in b0)
    f0 = T.f(0)
    _, pairs = prefix_choices(nu, mu0)
    if f0 == 0:
        vectors = [(0,) + tail]
    else:
        # entries 2..f_0 are zero; when f_0 = 1 every listed pair has b_1 = 0
        vectors = [(x, y) + (0,) * (f0 - 1) + tail for x, y in pairs]
    out = []
    for b in vectors:
        if T.pop(T.pop(b)) != T.base:
            raise AssertionError(f"extension {b} of {mu0} is not 2-Pop-sortable")
        out.append(T.path(b))
    return sorted(out)


@lru_cache(maxsize=None)
def _two_sortable(nu: str) -> tuple[str, ...]:
    if "N" not in nu:
        return (nu,)
    out = []
    for mu0 in _two_sortable(nu_sharp(nu)):
        out.extend(extend_2_sortable(nu, mu0))
    return tuple(sorted(out))


def enumerate_2_sortable(nu: str) -> list[str]:
    return list(_two_sortable(nu))


def ne_blocks(nu: str) -> tuple[list[int], list[int]]:
    """Exponents (alphas, betas) with nu = E^a0 N^b0 E^a1 ... N^b(q-1) E^aq."""
    alphas, betas = [], []
    i = 0
    while True:
        j = i
        while j < len(nu) and nu[j] == "E":
            j += 1
        alphas.append(j - i)
        if j == len(nu):
            return alphas, betas
        i = j
        while j < len(nu) and nu[j] == "N":
            j += 1
        betas.append(j - i)
        i = j


def count_2_sortable_formula(nu: str) -> int | None:
    """3^theta 5^chi when every north run has length at least 2, else None."""
    alphas, betas = ne_blocks(nu)
    if any(b < 2 for b in betas):
        return None
    q = len(betas)
    theta = sum(1 for a in alphas[:q] if a == 1)
    chi = sum(1 for a in alphas[:q] if a >= 2)
    return 3 ** theta * 5 ** chi


def count_2_sortable_m_tamari(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return pell(n) if m == 1 else g_sequence(n)


def a_classes(m: int, k: int) -> tuple[int, int]:
    """Sizes of the two classes of 2-sortable paths over (E^m N)^k E^m.

    The first class has leading entries b_0 = b_1 < k or b_0 < b_1; the
    second has b_0 = b_1 = k.
    """
    nu = ("E" * m + "N") * k + "E" * m
    T = tamari(nu)
    first = second = 0
    for mu in enumerate_2_sortable(nu):
        b = T.bracket(mu)
        if b[0] == b[1] == k:
            second += 1
        elif b[0] < b[1] or (b[0] == b[1] < k):
            first += 1
    return first, second


# conjecture data

def h_values(m: int, t: int, n_max: int, cap: int = DEFAULT_CAP) -> list[int]:
    """h_t(m, n) for n = 1..n_max by brute force."""
    return [len(enumerate_t_sortable_brute(m_tamari_path(m, n), t, cap)) for n in range(1, n_max + 1)]


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact Gauss-Jordan on a square system; None when singular."""
    size = len(rows)
    a = [row[:] + [v] for row, v in zip(rows, rhs)]
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[r][size] for r in range(size)]


def fit_recurrence(seq: Sequence[int], max_order: int = 6, spare: int = 2) -> list[Fraction] | None:
    """Smallest homogeneous linear recurrence consistent with ``seq``.

    Coefficients c_1..c_d satisfy s(n) = sum c_i s(n-i).  The first d
    equations determine them and at least ``spare`` further terms must also
    match; this is a heuristic guess, not a proof of anything.
    """
    s = [Fraction(v) for v in seq]
    for d in range(1, max_order + 1):
        if len(s) < 2 * d + spare:
            break
        rows = [[s[i + d - j] for j in range(1, d + 1)] for i in range(d)]
        rhs = [s[i + d] for i in range(d)]
        c = _solve(rows, rhs)
        if c is None:
            continue
        if all(s[i] == sum(c[j - 1] * s[i - j] for j in range(1, d + 1)) for i in range(d, len(s))):
            return c
    return None


def format_recurrence(c: Sequence[Fraction] | None) -> str:
    if c is None:
        return "no fit found"
    terms = [f"({v})*h(n-{i})" for i, v in enumerate(c, 1) if v != 0]
    return "h(n) = " + " + ".join(terms) if terms else "h(n) = 0"


def conjecture_table(m: int, t: int, n_max: int, cap: int = DEFAULT_CAP) -> dict:
    values = h_values(m, t, n_max, cap)
    checks = {}
    if t == 1:
        checks["closed_form"] = values == [2 ** (n - 1) for n in range(1, n_max + 1)]
    if t == 2:
        checks["closed_form"] = values == [count_2_sortable_m_tamari(m, n) for n in range(1, n_max + 1)]
        checks["recursion"] = values == [len(enumerate_2_sortable(m_tamari_path(m, n))) for n in range(1, n_max + 1)]
    c = fit_recurrence(values)
    return {
        "schema": 1,
        "m": m,
        "t": t,
        "rows": [{"n": n, "h": h} for n, h in enumerate(values, 1)],
        "checks": checks,
        "recurrence_heuristic": format_recurrence(c),
        "recurrence_coefficients": None if c is None else [str(v) for v in c],
    }


def independence_report(t: int, m_max: int, n_max: int) -> dict:
    """Compare h_t(m, n) across m = t..m_max; flags any m-dependence."""
    rows = {m: h_values(m, t, n_max) for m in range(max(t, 1), m_max + 1)}
    distinct = {tuple(v) for v in rows.values()}
    return {"t": t, "rows": rows, "independent": len(distinct) <= 1}
