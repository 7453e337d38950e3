"""Finite lattices given by Hasse diagrams.

Elements are the integers ``0..N-1``.  Order relations are stored as Python
int bitmasks (bit ``y`` of ``down[x]`` is set when ``y <= x``), and the full
meet table, plus the join table when every pair has a join, is built at
construction time.  Instances are treated as immutable afterwards.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence


class LatticeError(ValueError):
    """Raised when a diagram does not describe a (meet-semi)lattice."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLattice:
    """A finite meet-semilattice (usually a lattice) on ``range(size)``.

    ``covers`` holds pairs ``(lower, upper)`` with ``lower`` covered by
    ``upper``.  Construction rejects cycles, transitively implied pairs and
    pairs of elements without a meet.  Joins are tabulated when they all exist;
    ``has_joins`` tells which case applies.
    """

    def __init__(self, size: int, covers: Iterable[tuple[int, int]], labels: Sequence[str] | None = None):
        if size < 1:
            raise LatticeError("a lattice needs at least one element")
        self.size = size
        self.covers = frozenset((int(a), int(b)) for a, b in covers)
        for a, b in self.covers:
            if not (0 <= a < size and 0 <= b < size) or a == b:
                raise LatticeError(f"bad cover pair ({a}, {b})")
        if labels is not None and len(labels) != size:
            raise LatticeError("need exactly one label per element")
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(size))

        self.lower_covers: tuple[tuple[int, ...], ...]
        self.upper_covers: tuple[tuple[int, ...], ...]
        lower: list[list[int]] = [[] for _ in range(size)]
        upper: list[list[int]] = [[] for _ in range(size)]
        for a, b in sorted(self.covers):
            lower[b].append(a)
            upper[a].append(b)
        self.lower_covers = tuple(tuple(x) for x in lower)
        self.upper_covers = tuple(tuple(x) for x in upper)

        self.topological_order = self._toposort()
        down = [0] * size
        for x in self.topological_order:
            mask = 1 << x
            for y in self.lower_covers[x]:
                mask |= down[y]
            down[x] = mask
        up = [0] * size
        for x in range(size):
            for y in _bits(down[x]):
                up[y] |= 1 << x
        self.down = tuple(down)
        self.up = tuple(up)

        for a, b in self.covers:
            between = (up[a] & down[b]) & ~((1 << a) | (1 << b))
            if between:
                raise LatticeError(f"cover ({a}, {b}) is implied by transitivity")

        self.meet_table = self._table(down, "meet")
        try:
            self.join_table: tuple[tuple[int, ...], ...] | None = self._table(up, "join")
        except LatticeError:
            self.join_table = None

        full = (1 << size) - 1
        bottoms = [x for x in range(size) if up[x] == full]
        tops = [x for x in range(size) if down[x] == full]
        self.bottom = bottoms[0] if bottoms else None
        self.top = tops[0] if tops else None

    def _toposort(self) -> tuple[int, ...]:
        indeg = [len(self.lower_covers[x]) for x in range(self.size)]
        ready = [x for x in range(self.size) if indeg[x] == 0]
        order = []
        while ready:
            x = ready.pop()
            order.append(x)
            for y in self.upper_covers[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    ready.append(y)
        if len(order) != self.size:
            raise LatticeError("cover relation has a cycle")
        return tuple(order)

    def _table(self, closure: Sequence[int], what: str) -> tuple[tuple[int, ...], ...]:
        by_mask = {mask: x for x, mask in enumerate(closure)}
        rows = []
        for x in range(self.size):
            row = []
            for y in range(self.size):
                z = by_mask.get(closure[x] & closure[y])
                if z is None:
                    raise LatticeError(f"elements {x} and {y} have no {what}")
                row.append(z)
            rows.append(tuple(row))
        return tuple(rows)

    # order and operations

    def leq(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    def less(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    @property
    def has_joins(self) -> bool:
        return self.join_table is not None

    def join(self, x: int, y: int) -> int:
        if self.join_table is None:
            raise LatticeError("this semilattice does not have all joins")
        return self.join_table[x][y]

    def elements(self) -> range:
        return range(self.size)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def below(self, x: int) -> list[int]:
        return list(_bits(self.down[x]))

    def above(self, x: int) -> list[int]:
        return list(_bits(self.up[x]))

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteLattice(size={self.size}, covers={len(self.covers)})"


def meet_of_set(L: FiniteLattice, S: Iterable[int]) -> int:
    items = list(S)
    if not items:
        raise ValueError("empty meet undefined")
    return reduce(L.meet, items)


def join_of_set(L: FiniteLattice, S: Iterable[int]) -> int:
    items = list(S)
    if not items:
        if L.bottom is None:
            raise ValueError("empty join undefined without a minimum")
        return L.bottom
    return reduce(L.join, items)


def pop_generic(L: FiniteLattice, x: int) -> int:
    """Meet of ``x`` together with every element it covers."""
    if not 0 <= x < L.size:
        raise IndexError(f"no element {x}")
    return reduce(L.meet, L.lower_covers[x], x)


def pop_map(L: FiniteLattice) -> tuple[int, ...]:
    return tuple(pop_generic(L, x) for x in L.elements())


def is_pop_trivial(L: FiniteLattice) -> bool:
    if L.bottom is None:
        raise LatticeError("Pop-triviality needs a minimum element")
    return all(pop_generic(L, x) == L.bottom for x in L.elements())


# fixtures

def chain(length: int) -> FiniteLattice:
    """Chain 0 < 1 < ... < length (so ``length + 1`` elements)."""
    return FiniteLattice(length + 1, [(i, i + 1) for i in range(length)])


def diamond() -> FiniteLattice:
    """Four-element lattice 0 < b, c < x (element order 0, b, c, x)."""
    return FiniteLattice(4, [(0, 1), (0, 2), (1, 3), (2, 3)], labels=["0", "b", "c", "x"])


def pentagon() -> FiniteLattice:
    """N5: 0 < a < b < 1 and 0 < c < 1."""
    return FiniteLattice(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], labels=["0", "a", "b", "c", "1"])


def m3() -> FiniteLattice:
    return FiniteLattice(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], labels=["0", "a", "b", "c", "1"])


BOOLEAN_MAX = 10
PARTITION_MAX = 7


def boolean_lattice(k: int) -> FiniteLattice:
    """Subsets of a k-set; element index is the subset's bitmask."""
    if k < 0 or k > BOOLEAN_MAX:
        raise ValueError(f"boolean_lattice supports 0 <= k <= {BOOLEAN_MAX}")
    covers = [(s, s | 1 << i) for s in range(1 << k) for i in range(k) if not s >> i & 1]
    labels = [format(s, f"0{k}b") if k else "" for s in range(1 << k)]
    return FiniteLattice(1 << k, covers, labels)


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        yield [[first]] + smaller
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]


def _canonical_partition(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def partition_lattice(k: int) -> FiniteLattice:
    """Set partitions of [k] under refinement; all singletons at the bottom."""
    if k < 1 or k > PARTITION_MAX:
        raise ValueError(f"partition_lattice supports 1 <= k <= {PARTITION_MAX}")
    parts = sorted({_canonical_partition(p) for p in set_partitions(list(range(1, k + 1)))},
                   key=lambda p: (-len(p), p))
    index = {p: i for i, p in enumerate(parts)}
    covers = []
    for p in parts:
        for a, b in itertools.combinations(range(len(p)), 2):
            merged = [blk for i, blk in enumerate(p) if i not in (a, b)] + [p[a] + p[b]]
            covers.append((index[p], index[_canonical_partition(merged)]))
    labels = ["|".join("".join(map(str, blk)) for blk in p) for p in parts]
    return FiniteLattice(len(parts), covers, labels)


def dual(L: FiniteLattice) -> FiniteLattice:
    return FiniteLattice(L.size, [(b, a) for a, b in L.covers], L.labels)


def induced(L: FiniteLattice, subset: Iterable[int]) -> tuple[FiniteLattice, list[int]]:
    """Induced subposet on ``subset`` as a lattice, with the index map back into L.

    Raises LatticeError when the induced poset lacks meets.
    """
    elems = sorted(set(subset))
    pos = {x: i for i, x in enumerate(elems)}
    mask = sum(1 << x for x in elems)
    covers = []
    for x in elems:
        strictly_below = (L.down[x] & mask) & ~(1 << x)
        for y in _bits(strictly_below):
            between = L.up[y] & L.down[x] & mask & ~((1 << x) | (1 << y))
            if not between:
                covers.append((pos[y], pos[x]))
    return FiniteLattice(len(elems), covers, [L.labels[x] for x in elems]), elems


def is_sublattice(L: FiniteLattice, subset: Iterable[int]) -> bool:
    s = set(subset)
    for x in s:
        for y in s:
            if L.meet(x, y) not in s:
                return False
            if L.has_joins and L.join(x, y) not in s:
                return False
    return True


# structural classification

@dataclass(frozen=True)
class Classification:
    graded: bool
    atomic: bool
    semimodular: bool
    geometric: bool


def rank_function(L: FiniteLattice) -> tuple[int, ...] | None:
    """Rank of each element when L is graded, else None."""
    if L.bottom is None or L.top is None:
        return None
    rank = [0] * L.size
    for x in L.topological_order:
        below = {rank[y] + 1 for y in L.lower_covers[x]}
        if len(below) > 1:
            return None
        rank[x] = below.pop() if below else 0
    return tuple(rank)


def atoms(L: FiniteLattice) -> list[int]:
    if L.bottom is None:
        return []
    return list(L.upper_covers[L.bottom])


def classify(L: FiniteLattice) -> Classification:
    if L.bottom is None or not L.has_joins:
        raise LatticeError("classify needs a lattice with a minimum")
    rank = rank_function(L)
    graded = rank is not None
    atom_list = atoms(L)
    atomic = all(
        join_of_set(L, [a for a in atom_list if L.leq(a, x)]) == x for x in L.elements()
    )
    semimodular = graded and all(
        rank[x] + rank[y] >= rank[L.meet(x, y)] + rank[L.join(x, y)]
        for x in L.elements() for y in L.elements()
    )
    return Classification(graded, atomic, semimodular, graded and atomic and semimodular)


# congruences

@dataclass(frozen=True)
class Congruence:
    """Equivalence on the elements; ``class_of[x]`` names the class of ``x``."""

    class_of: tuple[int, ...]

    @classmethod
    def from_blocks(cls, size: int, blocks: Iterable[Iterable[int]]) -> "Congruence":
        class_of = [-1] * size
        for cid, block in enumerate(blocks):
            for x in block:
                if class_of[x] != -1:
                    raise ValueError(f"element {x} appears in two blocks")
                class_of[x] = cid
        if -1 in class_of:
            raise ValueError("blocks do not cover every element")
        return cls(tuple(class_of))

    @classmethod
    def singletons(cls, size: int) -> "Congruence":
        return cls(tuple(range(size)))

    def blocks(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x, c in enumerate(self.class_of):
            out.setdefault(c, []).append(x)
        return list(out.values())

    def same(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]


def _compatible(L: FiniteLattice, C: Congruence, op) -> bool:
    for block in C.blocks():
        x1 = block[0]
        for x2 in block[1:]:
            for y in L.elements():
                if not C.same(op(x1, y), op(x2, y)):
                    return False
    return True


def is_meet_congruence(L: FiniteLattice, C: Congruence) -> bool:
    """Compatibility with meets only (a semilattice congruence)."""
    return _compatible(L, C, L.meet)


def is_congruence(L: FiniteLattice, C: Congruence) -> bool:
    """Compatibility with both meets and joins."""
    if not L.has_joins:
        raise LatticeError("lattice congruences need joins")
    return is_meet_congruence(L, C) and _compatible(L, C, L.join)


def pi_down(L: FiniteLattice, C: Congruence, x: int) -> int:
    """Minimum element of the class of ``x``."""
    block = [y for y in L.elements() if C.same(x, y)]
    for cand in block:
        if all(L.leq(cand, y) for y in block):
            return cand
    raise LatticeError(f"class of {x} has no unique minimum")


def projection_map(L: FiniteLattice, C: Congruence) -> tuple[int, ...]:
    mins = {}
    for block in C.blocks():
        m = pi_down(L, C, block[0])
        for y in block:
            mins[y] = m
    return tuple(mins[x] for x in L.elements())


@dataclass
class QuotientPopReport:
    is_lattice_congruence: bool
    is_meet_congruence: bool
    image_is_sublattice: bool
    checked: int
    passed: bool
    counterexample: dict | None = None


def verify_quotient_pop(L: FiniteLattice, C: Congruence) -> QuotientPopReport:
    """Compare Pop on the class-minima subposet with projected Pop on L.

    Hypothesis failures are recorded in the report; the comparison is still
    carried out whenever the class minima form a lattice.
    """
    proj = projection_map(L, C)
    image = sorted(set(proj))
    report = QuotientPopReport(
        is_lattice_congruence=L.has_joins and is_congruence(L, C),
        is_meet_congruence=is_meet_congruence(L, C),
        image_is_sublattice=is_sublattice(L, image),
        checked=0,
        passed=True,
    )
    sub, back = induced(L, image)
    for i, x in enumerate(back):
        inside = back[pop_generic(sub, i)]
        projected = proj[pop_generic(L, x)]
        report.checked += 1
        if inside != projected:
            report.passed = False
            report.counterexample = {
                "x": L.labels[x],
                "pop_in_image": L.labels[inside],
                "projected_pop": L.labels[projected],
            }
            break
    return report


def lattice_congruences(L: FiniteLattice) -> Iterator[Congruence]:
    """Every lattice congruence of L, by brute force over set partitions."""
    for blocks in set_partitions(list(L.elements())):
        C = Congruence.from_blocks(L.size, blocks)
        if is_congruence(L, C):
            yield C


def remark_counterexample() -> tuple[FiniteLattice, Congruence]:
    """Diamond 0 < b, c < x with classes {0, b}, {c}, {x}.

    Compatible with meets but not joins (b v c = x while 0 v c = c), and its
    class minima {0, c, x} form a chain sublattice on which Pop(x) = c while
    the projected Pop of x is 0.
    """
    L = diamond()
    return L, Congruence.from_blocks(4, [[0, 1], [2], [3]])


# small-lattice search

def all_small_lattices(size: int) -> Iterator[FiniteLattice]:
    """All lattices on ``size`` elements with 0 the bottom and size-1 the top.

    Interior elements are enumerated through every transitively closed
    relation compatible with the natural order of labels, so isomorphic
    copies repeat.  Meant for sizes up to about 8.
    """
    if size < 2:
        if size == 1:
            yield FiniteLattice(1, [])
        return
    inner = list(range(1, size - 1))
    pairs = list(itertools.combinations(inner, 2))
    for choice in range(1 << len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if choice >> i & 1}
        if any((a, c) not in rel for (a, b) in rel for (b2, c) in rel if b == b2):
            continue
        covers = [(a, b) for (a, b) in rel if not any((a, c) in rel and (c, b) in rel for c in inner)]
        has_below = {b for _, b in rel}
        has_above = {a for a, _ in rel}
        covers += [(0, x) for x in inner if x not in has_below]
        covers += [(x, size - 1) for x in inner if x not in has_above]
        if not inner:
            covers = [(0, 1)]
        try:
            L = FiniteLattice(size, covers)
        except LatticeError:
            continue
        if L.has_joins:
            yield L


def search_lattice(predicate, max_size: int = 7) -> FiniteLattice | None:
    for size in range(1, max_size + 1):
        for L in all_small_lattices(size):
            if predicate(L):
                return L
    return None


# text formats

def parse_hasse(text: str) -> FiniteLattice:
    """Read ``elements N`` / ``cover a b`` lines; ``#`` starts a comment."""
    size = None
    covers = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "elements" and len(parts) == 2:
            size = int(parts[1])
        elif parts[0] == "cover" and len(parts) == 3:
            covers.append((int(parts[1]), int(parts[2])))
        else:
            raise LatticeError(f"line {lineno}: cannot parse {raw!r}")
    if size is None:
        raise LatticeError("missing 'elements N' line")
    return FiniteLattice(size, covers)


def format_hasse(L: FiniteLattice) -> str:
    lines = [f"elements {L.size}"]
    lines += [f"cover {a} {b}" for a, b in sorted(L.covers)]
    return "\n".join(lines) + "\n"


def to_dot(L: FiniteLattice, name: str = "L") -> str:
    def q(s: str) -> str:
        return '"' + s.replace('"', '\\"') + '"'

    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for x in L.elements():
        lines.append(f"  {x} [label={q(L.labels[x])}];")
    for a, b in sorted(L.covers):
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
