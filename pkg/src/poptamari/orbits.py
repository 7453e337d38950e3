"""Forward orbits of Pop on nu-Tamari lattices.

Besides the orbit machinery itself this module holds the objects used to
count maximum-size orbits in m-Tamari lattices.  Primitive ballot paths
and the word classes U_n(m) and Y_n(m) all grow along one generating tree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

from .counting import max_orbit_count
from .nu_tamari import DEFAULT_CAP, Bracket, CapExceeded, NuTamari, m_tamari_path, tamari


@dataclass(frozen=True)
class OrbitRecord:
    """A path together with its Pop trajectory.

    ``trajectory`` lists bracket vectors from ``b(base)`` down to ``b(nu)``
    and then repeats ``b(nu)`` once, so ``size`` counts distinct elements.
    """

    nu: str
    base: str
    trajectory: tuple[Bracket, ...]

    @property
    def size(self) -> int:
        return len(self.trajectory) - 1

    @property
    def paths(self) -> list[str]:
        T = tamari(self.nu)
        return [T.path(b) for b in self.trajectory[:-1]]


def forward_orbit(nu: str, mu: str) -> OrbitRecord:
    T = tamari(nu)
    b = T.bracket(mu)
    traj = [b]
    while True:
        nxt = T.pop(traj[-1])
        traj.append(nxt)
        if nxt == traj[-2]:
            break
    return OrbitRecord(nu, mu, tuple(traj))


def orbit_size_bracket(T: NuTamari, b: Bracket, memo: dict[Bracket, int] | None = None) -> int:
    chain = []
    size = None
    while True:
        if memo is not None and b in memo:
            size = memo[b]
            break
        nxt = T.pop(b)
        if nxt == b:
            size = 1
            if memo is not None:
                memo[b] = 1
            break
        chain.append(b)
        b = nxt
    for k, c in enumerate(reversed(chain), 1):
        if memo is not None:
            memo[c] = size + k
    return size + len(chain)


def orbit_sizes(nu: str, cap: int = DEFAULT_CAP) -> dict[str, int]:
    """Orbit size of every path of Tam(nu)."""
    T = tamari(nu)
    memo: dict[Bracket, int] = {}
    return {mu: orbit_size_bracket(T, T.bracket(mu), memo) for mu in T.enumerate(cap)}


# maximum orbit size

def k_set(nu: str) -> list[int]:
    T = tamari(nu)
    return [k for k in range(T.n) if T.f(k) - T.f(k - 1) >= 2]


def _theta_terms(nu: str) -> dict[int, int]:
    T = tamari(nu)
    return {k: T.f(k) - T.f(k - 1) - k + T.n - 1 for k in k_set(nu)}


def theta(nu: str) -> int:
    terms = _theta_terms(nu)
    return max(terms.values()) if terms else 1


def witness_bracket(nu: str) -> tuple[int, Bracket]:
    """The arg-max block k and the witness vector (open block raised to n)."""
    terms = _theta_terms(nu)
    if not terms:
        raise ValueError(f"Tam({nu}) has a single element, so there is no witness block")
    best = max(terms.values())
    k = min(k for k, v in terms.items() if v == best)
    T = tamari(nu)
    b = list(T.base)
    for j in range(T.f(k - 1) + 1, T.f(k)):
        b[j] = T.n
    return k, tuple(b)


def witness_max_orbit(nu: str) -> str:
    _, b = witness_bracket(nu)
    mu = tamari(nu).path(b)
    size = forward_orbit(nu, mu).size
    if size != theta(nu):
        raise AssertionError(f"witness {mu} has orbit size {size}, expected {theta(nu)}")
    return mu


def witness_trajectory_formula(nu: str, t: int) -> Bracket:
    """Closed-form value of b(Pop^t) on the witness path."""
    k, _ = witness_bracket(nu)
    T = tamari(nu)
    fk = T.f(k)
    b = list(T.base)
    for j in range(T.f(k - 1) + 1, fk):
        if t >= fk - j - 1:
            b[j] = max(k, T.n - (t + 1 - (fk - j)))
        else:
            b[j] = T.n
    return tuple(b)


def max_orbit_size(nu: str, mode: str = "formula", cap: int = DEFAULT_CAP) -> int:
    if mode == "formula":
        return theta(nu)
    if mode == "exhaustive":
        return max(orbit_sizes(nu, cap).values())
    raise ValueError("mode must be 'formula' or 'exhaustive'")


def orbit_report(nu: str, cap: int = DEFAULT_CAP) -> dict:
    sizes = orbit_sizes(nu, cap)
    top = max(sizes.values())
    hist = Counter(sizes.values())
    return {
        "schema": 1,
        "nu": nu,
        "theta": theta(nu),
        "max_exhaustive": top,
        "witnesses": sorted(mu for mu, s in sizes.items() if s == top),
        "histogram": {str(s): hist[s] for s in sorted(hist)},
    }


# m-Tamari

def is_max_orbit_m_tamari(m: int, n: int, mu: str) -> bool:
    if n < 2:
        raise ValueError("n must be at least 2")
    T = tamari(m_tamari_path(m, n))
    b = T.bracket(mu)
    return b[m] == n and all(b[k * (m + 1) - 1] < n for k in range(2, n))


def max_orbit_paths(m: int, n: int, cap: int = DEFAULT_CAP) -> list[str]:
    """Paths of Tam_n(m) with orbit size m+n-1, found by running the orbits."""
    sizes = orbit_sizes(m_tamari_path(m, n), cap)
    return [mu for mu, s in sizes.items() if s == m + n - 1]


def count_max_orbit(m: int, n: int) -> int:
    return max_orbit_count(m, n)


# primitive ballot paths

def is_primitive(m: int, mu: str) -> bool:
    """True when mu meets the line x = m y only at its two ends."""
    x = y = 0
    for step in mu[:-1]:
        if step == "N":
            y += 1
        else:
            x += 1
        if x >= m * y:
            return False
    return True


def enumerate_primitive(m: int, n: int, cap: int = DEFAULT_CAP) -> list[str]:
    return [mu for mu in tamari(m_tamari_path(m, n)).enumerate(cap) if is_primitive(m, mu)]


def primitive_decomposition(m: int, mu: str) -> list[str]:
    """Split a ballot path at its interior contacts with x = m y."""
    parts, start, x, y = [], 0, 0, 0
    for i, step in enumerate(mu):
        if step == "N":
            y += 1
        else:
            x += 1
        if x == m * y:
            parts.append(mu[start:i + 1])
            start = i + 1
    if start != len(mu):
        raise ValueError(f"{mu} does not end on the line x = m y")
    return parts


def compositions_from_primitives(primitive_counts: Sequence[int], n_max: int) -> list[int]:
    """Coefficients of B/(1-B) up to z^n_max, with B given from z^1."""
    b = [0] + list(primitive_counts[:n_max])
    a = [1] + [0] * n_max  # a[k] = coefficient of z^k in 1/(1-B)
    for k in range(1, n_max + 1):
        a[k] = sum(b[j] * a[k - j] for j in range(1, k + 1))
    return a[1:]


# words and generating trees

def u_word(m: int, n: int, mu: str) -> tuple[int, ...]:
    b = tamari(m_tamari_path(m, n)).bracket(mu)
    if b[1] != n:
        raise ValueError(f"{mu} is not primitive")
    return tuple(n + 1 - b[i] for i in range(2, (m + 1) * n + 1))


def y_word(m: int, n: int, mu: str) -> tuple[int, ...]:
    """Word of a max-orbit path of Tam_{n+1}(m); letters over [n]."""
    if not is_max_orbit_m_tamari(m, n + 1, mu):
        raise ValueError(f"{mu} does not have a maximum-size orbit in Tam_{n + 1}({m})")
    b = tamari(m_tamari_path(m, n + 1)).bracket(mu)
    return tuple(n + 2 - b[m + 1 + i] for i in range(1, (m + 1) * n + 1))


def blocked_letters(word: Sequence[int]) -> set[int]:
    seen_min = None
    out = set()
    for c in word:
        if seen_min is not None and seen_min < c:
            out.add(c)
        seen_min = c if seen_min is None else min(seen_min, c)
    return out


def word_label(word: Sequence[int], n: int) -> int:
    return n + 1 - len(blocked_letters(word) & set(range(1, n + 2)))


def avoids_212(word: Sequence[int]) -> bool:
    for i, c in enumerate(word):
        dipped = False
        for d in word[i + 1:]:
            if d < c:
                dipped = True
            elif d == c and dipped:
                return False
    return True


def _word_dfs(m: int, n: int, positions: range, extra) -> Iterator[tuple[int, ...]]:
    """Words indexed by ``positions`` obeying the shared block conditions.

    ``extra(i, letter)`` adds per-position constraints.  Avoidance of 212 is
    maintained incrementally: once a smaller letter follows some letter, that
    letter may not occur again.
    """
    idx = list(positions)
    word: list[int] = []

    def ceiling(i: int) -> tuple[int, int]:
        k = -(-i // (m + 1))  # block of position i
        return k, n + 1 - k

    def walk(p: int, closed: frozenset, present: frozenset) -> Iterator[tuple[int, ...]]:
        if p == len(idx):
            yield tuple(word)
            return
        i = idx[p]
        k, top = ceiling(i)
        letters = [top] if i == k * (m + 1) else range(1, top + 1)
        for c in letters:
            if c in closed or not extra(i, c):
                continue
            word.append(c)
            yield from walk(p + 1, closed | {d for d in present if d > c}, present | {c})
            word.pop()

    yield from walk(0, frozenset(), frozenset())


def enumerate_u_words(m: int, n: int) -> list[tuple[int, ...]]:
    return list(_word_dfs(m, n, range(2, (m + 1) * n + 1), lambda i, c: True))


def enumerate_y_words(m: int, n: int) -> list[tuple[int, ...]]:
    gated = {(k - 1) * (m + 1) - 1 for k in range(2, n + 1)}
    return list(_word_dfs(m, n, range(1, (m + 1) * n + 1), lambda i, c: i not in gated or c > 1))


def tree_children(m: int, r: int) -> dict[int, int]:
    """Labels produced from a node with label r, with multiplicities."""
    out = {}
    for t in range(2, r + 2):
        mult = comb(r + m - t, m - 1) - (t == 2)
        if mult:
            out[t] = mult
    return out


def generating_tree_counts(m: int, depth: int, cap: int = 10 ** 6) -> dict[int, dict[int, int]]:
    if m < 1 or depth < 1:
        raise ValueError("m and depth must be positive")
    if depth > cap:
        raise CapExceeded(f"depth {depth} exceeds cap {cap}")
    levels = {1: {2: 1}}
    for level in range(2, depth + 1):
        nxt: Counter[int] = Counter()
        for r, count in levels[level - 1].items():
            for t, mult in tree_children(m, r).items():
                nxt[t] += count * mult
        levels[level] = dict(sorted(nxt.items()))
    return levels


def label_distribution(words: Sequence[Sequence[int]], n: int) -> dict[int, int]:
    return dict(sorted(Counter(word_label(w, n) for w in words).items()))
