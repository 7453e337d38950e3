"""nu-Tamari lattices as lattice paths and as nu-bracket vectors.

Paths are strings over ``N`` (north) and ``E`` (east).  A bracket vector is
a plain tuple of ints; the :class:`NuTamari` object carrying the base path
supplies its context (fixed positions, the minimum vector, and so on).

Indexing follows the usual convention for these vectors: entries are
numbered ``0..l`` where ``l`` is the number of steps of the base path, and
``f_{-1} = -1``.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from typing import Iterator, Sequence

from .lattice import FiniteLattice

Bracket = tuple[int, ...]

DEFAULT_CAP = 10 ** 7


class NotInLattice(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


def m_tamari_path(m: int, n: int) -> str:
    """The base path (N E^m)^n of the m-Tamari lattice of height n."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    return ("N" + "E" * m) * n


_SHORTHAND = re.compile(r"^\(?\s*(\d+)\s*,\s*(\d+)\s*\)?$")


def parse_nu(text: str) -> str:
    """Accept an N/E word or the ``(m,n)`` shorthand for (N E^m)^n."""
    text = text.strip()
    match = _SHORTHAND.match(text)
    if match:
        return m_tamari_path(int(match.group(1)), int(match.group(2)))
    word = text.upper()
    if any(c not in "NE" for c in word):
        raise ValueError(f"{text!r} is not a word over N and E")
    return word


def heights(path: str) -> tuple[int, ...]:
    out = [0]
    for step in path:
        out.append(out[-1] + (step == "N"))
    return tuple(out)


class NuTamari:
    """The lattice Tam(nu) for a fixed base path ``nu``."""

    def __init__(self, nu: str):
        if any(c not in "NE" for c in nu):
            raise ValueError(f"{nu!r} is not a word over N and E")
        self.nu = nu
        self.length = len(nu)
        self.n = nu.count("N")
        self.east = nu.count("E")
        self.base: Bracket = heights(nu)
        fixed = [0] * (self.n + 1)
        for i, h in enumerate(self.base):
            fixed[h] = i
        self.fixed: tuple[int, ...] = tuple(fixed)
        self.block_of = tuple(self.base)
        # x-coordinate of nu's k-th north step (k = 0..n-1) and of its end
        xs, x = [], 0
        for step in nu:
            if step == "N":
                xs.append(x)
            else:
                x += 1
        self.north_x = tuple(xs)
        self.right_end = tuple(xs) + (self.east,)
        runs = [0] * (self.n + 1)
        k = 0
        for step in nu:
            if step == "N":
                k += 1
            else:
                runs[k] += 1
        self.gammas = tuple(runs)

    def __repr__(self) -> str:
        return f"NuTamari({self.nu!r})"

    def f(self, k: int) -> int:
        """Fixed position f_k, with f_{-1} = -1."""
        return -1 if k < 0 else self.fixed[k]

    # membership and enumeration

    def contains(self, mu: str) -> bool:
        if len(mu) != self.length or mu.count("N") != self.n or any(c not in "NE" for c in mu):
            return False
        x = k = 0
        for step in mu:
            if step == "N":
                if x > self.north_x[k]:
                    return False
                k += 1
            else:
                x += 1
        return True

    def check(self, mu: str) -> None:
        if not self.contains(mu):
            raise NotInLattice(f"{mu!r} is not a path of Tam({self.nu})")

    def iter_paths(self) -> Iterator[str]:
        """Paths weakly above nu, lexicographic with E < N."""
        steps: list[str] = []

        def walk(x: int, k: int) -> Iterator[str]:
            if x == self.east and k == self.n:
                yield "".join(steps)
                return
            if x < self.right_end[k]:
                steps.append("E")
                yield from walk(x + 1, k)
                steps.pop()
            if k < self.n:
                steps.append("N")
                yield from walk(x, k + 1)
                steps.pop()

        yield from walk(0, 0)

    def enumerate(self, cap: int = DEFAULT_CAP) -> list[str]:
        out = []
        for mu in self.iter_paths():
            out.append(mu)
            if len(out) > cap:
                raise CapExceeded(f"Tam({self.nu}) has more than {cap} elements")
        return out

    # bracket vectors

    def bracket(self, mu: str) -> Bracket:
        """Fill slots along mu: height k goes to the rightmost free slot <= f_k."""
        self.check(mu)
        slots: list[int | None] = [None] * (self.length + 1)
        for k in heights(mu):
            j = self.fixed[k]
            while j >= 0 and slots[j] is not None:
                j -= 1
            if j < 0:
                raise NotInLattice(f"no free slot for height {k} while reading {mu!r}")
            slots[j] = k
        return tuple(slots)  # type: ignore[arg-type]

    def is_bracket_vector(self, b: Sequence[int]) -> bool:
        if len(b) != self.length + 1:
            return False
        if any(b[self.fixed[k]] != k for k in range(self.n + 1)):
            return False
        if any(not self.base[i] <= b[i] <= self.n for i in range(len(b))):
            return False
        for i, v in enumerate(b):
            for j in range(i + 1, self.fixed[v] + 1):
                if b[j] > v:
                    return False
        return True

    def iter_bracket_vectors(self) -> Iterator[Bracket]:
        """Every vector satisfying the three defining conditions, built left to right."""
        fixed_at = {f: k for k, f in enumerate(self.fixed)}
        vec: list[int] = []

        def walk(j: int) -> Iterator[Bracket]:
            if j > self.length:
                yield tuple(vec)
                return
            # an earlier entry v caps every later position up to f_v
            limit = min((v for i, v in enumerate(vec) if j <= self.fixed[v]), default=self.n)
            options = [fixed_at[j]] if j in fixed_at else range(self.base[j], self.n + 1)
            for v in options:
                if v <= limit:
                    vec.append(v)
                    yield from walk(j + 1)
                    vec.pop()

        yield from walk(0)

    def path(self, b: Sequence[int]) -> str:
        """Inverse of :meth:`bracket`.

        Each lattice point of height k writes one k, so the number of k's in
        ``b`` is one more than the number of east steps at height k.  That
        pins down the only candidate path, which is then re-encoded to
        confirm ``b`` really is a bracket vector.
        """
        b = tuple(b)
        if not self.is_bracket_vector(b):
            raise ValueError(f"{b} is not a bracket vector for {self.nu}")
        counts = [0] * (self.n + 1)
        for v in b:
            counts[v] += 1
        mu = "N".join("E" * (c - 1) for c in counts)
        if not self.contains(mu) or self.bracket(mu) != b:
            raise ValueError(f"{b} does not come from a path of Tam({self.nu})")
        return mu

    def meet(self, b1: Sequence[int], b2: Sequence[int]) -> Bracket:
        if len(b1) != self.length + 1 or len(b2) != self.length + 1:
            raise ValueError("bracket vectors from a different context")
        return tuple(min(x, y) for x, y in zip(b1, b2))

    def leq(self, b1: Sequence[int], b2: Sequence[int]) -> bool:
        return all(x <= y for x, y in zip(b1, b2))

    # covers and Pop

    def delta(self, b: Sequence[int]) -> list[int]:
        """Indices whose entry strictly exceeds the next one."""
        return [i for i in range(self.length) if b[i] > b[i + 1]]

    def delta_by_definition(self, b: Sequence[int]) -> list[int]:
        out = []
        for i, v in enumerate(b):
            k = self.base[i]
            if v > k and all(b[j] < v for j in range(i + 1, self.fixed[k] + 1)):
                out.append(i)
        return out

    def eta(self, b: Sequence[int], i: int) -> int:
        """Value entry i drops to under Pop (unchanged outside delta)."""
        if not (i < self.length and b[i] > b[i + 1]):
            return b[i]
        for h in range(b[i] - 1, self.base[i] - 1, -1):
            if all(b[j] <= h for j in range(i + 1, self.fixed[h] + 1)):
                return h
        raise AssertionError("eta range is never empty for a bracket vector")

    def covered(self, b: Sequence[int]) -> list[Bracket]:
        out = []
        for i in self.delta(b):
            c = list(b)
            c[i] = self.eta(b, i)
            out.append(tuple(c))
        return sorted(out)

    def pop(self, b: Sequence[int]) -> Bracket:
        return tuple(self.eta(b, i) for i in range(self.length + 1))

    def pop_path(self, mu: str) -> str:
        return self.path(self.pop(self.bracket(mu)))

    def is_unimpeded(self, b: Sequence[int], beta: int) -> bool:
        k = self.base[beta]
        if beta == self.fixed[k]:
            raise ValueError(f"{beta} is a fixed position")
        j = beta
        while b[j] != k:
            if j + 1 > self.fixed[k] or b[j + 1] >= b[j]:
                return False
            j += 1
        return True

    # rotation covers on paths

    def horizontal_distances(self, mu: str) -> list[int]:
        """For each lattice point of mu, east steps available before crossing nu."""
        out, x, y = [], 0, 0
        out.append(self.right_end[0])
        for step in mu:
            if step == "N":
                y += 1
            else:
                x += 1
            out.append(self.right_end[y] - x)
        return out

    def upper_covers(self, mu: str) -> list[str]:
        """Rotations at each valley: X E D Y -> X D E Y."""
        self.check(mu)
        hd = self.horizontal_distances(mu)
        out = []
        for p in range(1, len(mu)):
            if mu[p - 1] == "E" and mu[p] == "N":
                q = next(j for j in range(p + 1, len(mu) + 1) if hd[j] == hd[p])
                out.append(mu[:p - 1] + mu[p:q] + "E" + mu[q:])
        return sorted(out)

    def lattice(self, cap: int = DEFAULT_CAP) -> tuple[FiniteLattice, list[str]]:
        """Tam(nu) as a FiniteLattice built from rotation covers only."""
        paths = self.enumerate(cap)
        index = {mu: i for i, mu in enumerate(paths)}
        covers = [(index[mu], index[nu2]) for mu in paths for nu2 in self.upper_covers(mu)]
        return FiniteLattice(len(paths), covers, paths), paths

    # serialization

    def to_json(self, b: Sequence[int]) -> str:
        return json.dumps({"nu": self.nu, "bracket": list(b)})

    def from_json(self, text: str) -> Bracket:
        data = json.loads(text)
        if data.get("nu") != self.nu:
            raise ValueError("bracket vector belongs to a different base path")
        b = tuple(int(v) for v in data["bracket"])
        if not self.is_bracket_vector(b):
            raise ValueError(f"{b} is not a bracket vector for {self.nu}")
        return b

    def to_dot(self, cap: int = DEFAULT_CAP) -> str:
        from .lattice import to_dot

        L, _ = self.lattice(cap)
        return to_dot(L, name="Tam")


@lru_cache(maxsize=256)
def tamari(nu: str) -> NuTamari:
    return NuTamari(nu)


# functional surface

def fixed_positions(nu: str) -> tuple[int, ...]:
    return tamari(nu).fixed


def enumerate_tam(nu: str, cap: int = DEFAULT_CAP) -> list[str]:
    return tamari(nu).enumerate(cap)


def covers_path(nu: str, mu: str) -> list[str]:
    return tamari(nu).upper_covers(mu)


def path_to_bracket(nu: str, mu: str) -> Bracket:
    return tamari(nu).bracket(mu)


def bracket_to_path(nu: str, b: Sequence[int]) -> str:
    return tamari(nu).path(b)


def meet_brackets(nu: str, b1: Sequence[int], b2: Sequence[int]) -> Bracket:
    return tamari(nu).meet(b1, b2)


def delta_set(nu: str, b: Sequence[int]) -> list[int]:
    return tamari(nu).delta(b)


def eta(nu: str, b: Sequence[int], i: int) -> int:
    return tamari(nu).eta(b, i)


def covered_brackets(nu: str, b: Sequence[int]) -> list[Bracket]:
    return tamari(nu).covered(b)


def pop_bracket(nu: str, b: Sequence[int]) -> Bracket:
    return tamari(nu).pop(b)


def is_unimpeded(nu: str, b: Sequence[int], beta: int) -> bool:
    return tamari(nu).is_unimpeded(b, beta)
