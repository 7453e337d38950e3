"""Permutations under the right weak order.

Permutations are tuples in one-line notation on 1..n.  ``v <= w`` in the
right weak order when every left inversion of ``v`` (a pair of values
``i < j`` with ``i`` to the right of ``j``) is a left inversion of ``w``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .lattice import Congruence, FiniteLattice

Perm = tuple[int, ...]

TAMARI_PERM_MAX = 8


def parse_perm(text: str) -> Perm:
    """``4258617`` or ``10,2,1,...``; digits-only words need n <= 9."""
    text = text.strip()
    if "," in text:
        w = tuple(int(t) for t in text.split(","))
    else:
        w = tuple(int(c) for c in text)
    check_perm(w)
    return w


def format_perm(w: Sequence[int]) -> str:
    if len(w) <= 9:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def check_perm(w: Sequence[int]) -> None:
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w!r} is not a permutation of 1..{len(w)}")


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def inverse(w: Sequence[int]) -> Perm:
    inv = [0] * len(w)
    for pos, val in enumerate(w, 1):
        inv[val - 1] = pos
    return tuple(inv)


def compose(u: Sequence[int], v: Sequence[int]) -> Perm:
    """``(u o v)(i) = u(v(i))``."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def left_inversions(w: Sequence[int]) -> frozenset[tuple[int, int]]:
    pos = inverse(w)
    n = len(w)
    return frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if pos[i - 1] > pos[j - 1])


def weak_leq(v: Sequence[int], w: Sequence[int]) -> bool:
    if len(v) != len(w):
        raise ValueError("permutations of different sizes")
    return left_inversions(v) <= left_inversions(w)


def descending_runs(w: Sequence[int]) -> list[Perm]:
    runs: list[list[int]] = []
    for x in w:
        if runs and runs[-1][-1] > x:
            runs[-1].append(x)
        else:
            runs.append([x])
    return [tuple(r) for r in runs]


def pop_stack_sort(w: Sequence[int]) -> Perm:
    """Reverse every descending run in place."""
    return tuple(x for run in descending_runs(w) for x in reversed(run))


def is_312_avoiding(w: Sequence[int]) -> bool:
    # w avoids 312 iff no entry c has a smaller entry a to its right that is
    # followed later by some b with a < b < c.
    n = len(w)
    for i in range(n):
        low = None
        for j in range(i + 1, n):
            if w[j] < w[i]:
                if low is not None and low < w[j]:
                    return False
                low = w[j] if low is None else min(low, w[j])
    return True


def av312(n: int) -> list[Perm]:
    return [w for w in itertools.permutations(range(1, n + 1)) if is_312_avoiding(w)]


def _rewrite_at(w: Sequence[int], p: int) -> bool:
    """Whether positions p, p+1 hold c, a with some later b, a < b < c."""
    c, a = w[p], w[p + 1]
    return c > a and any(a < b < c for b in w[p + 2:])


def sylvester_rewrites(w: Sequence[int]) -> list[Perm]:
    """Every v with w |> v (one adjacent ``ca -> ac`` swap)."""
    out = []
    for p in range(len(w) - 1):
        if _rewrite_at(w, p):
            v = list(w)
            v[p], v[p + 1] = v[p + 1], v[p]
            out.append(tuple(v))
    return out


def sylvester_project(w: Sequence[int], strategy: str = "leftmost") -> Perm:
    """Minimum of the sylvester class of ``w`` (its 312-avoiding member).

    Applies ``XcaYbZ -> XacYbZ`` until none applies; each rewrite removes
    one inversion so this terminates.  The witness ``b`` only needs to exist.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError("strategy must be 'leftmost' or 'rightmost'")
    v = list(w)
    positions = range(len(v) - 1)
    if strategy == "rightmost":
        positions = positions[::-1]
    while True:
        for p in positions:
            if _rewrite_at(v, p):
                v[p], v[p + 1] = v[p + 1], v[p]
                break
        else:
            return tuple(v)


def tail_length(w: Sequence[int]) -> int:
    n = len(w)
    k = 0
    while k < n and w[n - 1 - k] == n - k:
        k += 1
    return k


def pop_av312(w: Sequence[int]) -> Perm:
    """Pop on the Tamari lattice realized as 312-avoiding permutations."""
    if not is_312_avoiding(w):
        raise ValueError(f"{format_perm(w)} contains 312")
    return sylvester_project(pop_stack_sort(w))


def stack_sort(w: Sequence[int]) -> Perm:
    """West's stack-sorting map, computed as ``w o pi_down(w^-1)``."""
    return compose(w, sylvester_project(inverse(w)))


def stack_sort_classical(w: Sequence[int]) -> Perm:
    """s(L n R) = s(L) s(R) n."""
    if not w:
        return ()
    k = max(range(len(w)), key=lambda i: w[i])
    return stack_sort_classical(w[:k]) + stack_sort_classical(w[k + 1:]) + (w[k],)


def forward_orbit_perm(w: Sequence[int], step=pop_av312) -> list[Perm]:
    orbit = [tuple(w)]
    while True:
        nxt = step(orbit[-1])
        if nxt == orbit[-1]:
            return orbit
        orbit.append(nxt)


def max_orbit_permutations(n: int) -> list[Perm]:
    """312-avoiders ending in ``n 1``, each checked to have orbit size n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    out = [w for w in av312(n) if w[-2:] == (n, 1)]
    for w in out:
        if len(forward_orbit_perm(w)) != n:
            raise AssertionError(f"{format_perm(w)} does not have orbit size {n}")
    return out


# lattices

def _lattice_from_perms(perms: Sequence[Perm], covers: Iterable[tuple[int, int]]) -> FiniteLattice:
    return FiniteLattice(len(perms), covers, [format_perm(w) for w in perms])


def weak_order_lattice(n: int) -> tuple[FiniteLattice, list[Perm]]:
    """Right weak order on S_n; covers swap adjacent ascending positions."""
    perms = sorted(itertools.permutations(range(1, n + 1)), key=lambda w: (len(left_inversions(w)), w))
    index = {w: i for i, w in enumerate(perms)}
    covers = []
    for w in perms:
        for p in range(n - 1):
            if w[p] < w[p + 1]:
                v = list(w)
                v[p], v[p + 1] = v[p + 1], v[p]
                covers.append((index[w], index[tuple(v)]))
    return _lattice_from_perms(perms, covers), perms


def sylvester_congruence(perms: Sequence[Perm]) -> Congruence:
    cls = {}
    class_of = []
    for w in perms:
        key = sylvester_project(w)
        class_of.append(cls.setdefault(key, len(cls)))
    return Congruence(tuple(class_of))


def sylvester_classes_bruteforce(n: int) -> dict[Perm, frozenset[Perm]]:
    """Classes of the symmetric-transitive closure of |>, via union-find."""
    parent: dict[Perm, Perm] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    perms = list(itertools.permutations(range(1, n + 1)))
    for w in perms:
        parent[w] = w
    for w in perms:
        for v in sylvester_rewrites(w):
            parent[find(w)] = find(v)
    groups: dict[Perm, set[Perm]] = {}
    for w in perms:
        groups.setdefault(find(w), set()).add(w)
    return {w: frozenset(groups[find(w)]) for w in perms}


def tamari_as_permutations(n: int) -> tuple[FiniteLattice, list[Perm]]:
    """Weak order restricted to Av_n(312), order computed from inversion sets."""
    if n < 1 or n > TAMARI_PERM_MAX:
        raise ValueError(f"tamari_as_permutations supports 1 <= n <= {TAMARI_PERM_MAX}")
    perms = sorted(av312(n), key=lambda w: (len(left_inversions(w)), w))
    invs = [left_inversions(w) for w in perms]
    size = len(perms)
    down = [0] * size
    for i in range(size):
        for j in range(size):
            if invs[j] <= invs[i]:
                down[i] |= 1 << j
    up = [0] * size
    for i in range(size):
        for j in _iter_bits(down[i]):
            up[j] |= 1 << i
    covers = []
    for i in range(size):
        strict = down[i] & ~(1 << i)
        for j in _iter_bits(strict):
            if up[j] & strict == 1 << j:
                covers.append((j, i))
    return _lattice_from_perms(perms, covers), perms


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def perm_to_dyck_bracket(w: Sequence[int]) -> tuple[int, ...]:
    """Order isomorphism Av_n(312) -> bracket vectors of Tam((NE)^n).

    For each value k, the larger values standing left of k in a 312-avoider
    are exactly k+1..c_k; the bracket vector is (0, c_1, 1, c_2, 2, ..., c_n, n).
    """
    pos = inverse(w)
    n = len(w)
    out = [0]
    for k in range(1, n + 1):
        c = k
        while c < n and pos[c] < pos[k - 1]:
            c += 1
        out += [c, k]
    return tuple(out)
