"""Finite lattices given by their cover relations, and the property checks
used throughout the package: irreducibles, length, gradedness, extremality,
left-modularity, semidistributivity, distributivity and trimness.

Elements are referred to by index.  Witnesses in verdicts are built from
indices too, so each one can be checked directly against the lattice.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence


class LatticeError(ValueError):
    """Cover data that does not describe a finite lattice."""

    def __init__(self, kind: str, message: str, witness: Any = None):
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.witness = witness


@dataclass
class Verdict:
    holds: bool
    witness: Any = None

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness": self.witness}


@dataclass
class PropertyReport:
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    instance: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> Verdict:
        return self.verdicts[name]

    def __contains__(self, name: str) -> bool:
        return name in self.verdicts

    def holds(self, name: str) -> bool:
        return self.verdicts[name].holds

    @property
    def ok(self) -> bool:
        return all(v.holds for v in self.verdicts.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.verdicts.items() if not v.holds]

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "verdicts": {k: v.to_json() for k, v in self.verdicts.items()},
        }


def _bits(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class FiniteLattice:
    """A finite lattice with precomputed meet and join tables.

    Construction validates everything: the covers must be acyclic and
    transitively reduced, with a unique bottom and top, and every pair must
    have a unique meet and join.
    """

    def __init__(self, labels: Sequence[str], covers: Iterable[tuple[int, int]]):
        labels = [str(x) for x in labels]
        n = len(labels)
        if n == 0:
            raise LatticeError("empty", "a lattice needs at least one element")
        if len(set(labels)) != n:
            dup = sorted({x for x in labels if labels.count(x) > 1})
            raise LatticeError("duplicate labels", f"labels {dup} repeat", dup)
        edges = []
        seen = set()
        for pair in covers:
            a, b = (int(x) for x in pair)
            if not (0 <= a < n and 0 <= b < n):
                raise LatticeError("bad index", f"cover ({a}, {b}) out of range", [a, b])
            if a == b:
                raise LatticeError("cycle", f"self-loop at {labels[a]}", [a])
            if (a, b) in seen:
                raise LatticeError("duplicate cover", f"cover ({labels[a]}, {labels[b]}) repeats", [a, b])
            seen.add((a, b))
            edges.append((a, b))
        upper = [[] for _ in range(n)]
        lower = [[] for _ in range(n)]
        for a, b in sorted(edges):
            upper[a].append(b)
            lower[b].append(a)

        # Kahn's algorithm, smallest index first
        indeg = [len(lower[x]) for x in range(n)]
        heap = [x for x in range(n) if indeg[x] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            x = heapq.heappop(heap)
            order.append(x)
            for y in upper[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    heapq.heappush(heap, y)
        if len(order) < n:
            stuck = sorted(x for x in range(n) if indeg[x] > 0)
            raise LatticeError("cycle", f"cover relation has a cycle through {[labels[x] for x in stuck]}", stuck)

        bottoms = [x for x in range(n) if not lower[x]]
        tops = [x for x in range(n) if not upper[x]]
        if len(bottoms) > 1:
            raise LatticeError("multiple bottoms", f"minimal elements {[labels[x] for x in bottoms]}", bottoms)
        if len(tops) > 1:
            raise LatticeError("multiple tops", f"maximal elements {[labels[x] for x in tops]}", tops)

        pos = [0] * n
        for i, x in enumerate(order):
            pos[x] = i
        # up/down sets as bitsets over topological positions
        up = [0] * n
        for x in reversed(order):
            b = 1 << pos[x]
            for y in upper[x]:
                b |= up[y]
            up[x] = b
        down = [0] * n
        for x in order:
            b = 1 << pos[x]
            for y in lower[x]:
                b |= down[y]
            down[x] = b

        for a, b in sorted(edges):
            for c in upper[a]:
                if c != b and (up[c] >> pos[b]) & 1:
                    raise LatticeError(
                        "redundant cover",
                        f"({labels[a]}, {labels[b]}) is implied through {labels[c]}",
                        [a, b, c],
                    )

        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                u = up[x] & up[y]
                cand = order[(u & -u).bit_length() - 1] if u else None
                if cand is None or up[cand] != u:
                    raise LatticeError("no join", f"{labels[x]} and {labels[y]} have no unique join", [x, y])
                join[x][y] = join[y][x] = cand
                d = down[x] & down[y]
                cand = order[d.bit_length() - 1] if d else None
                if cand is None or down[cand] != d:
                    raise LatticeError("no meet", f"{labels[x]} and {labels[y]} have no unique meet", [x, y])
                meet[x][y] = meet[y][x] = cand

        self.size = n
        self.labels: tuple[str, ...] = tuple(labels)
        self.covers: tuple[tuple[int, int], ...] = tuple(sorted(edges))
        self.upper_covers: tuple[tuple[int, ...], ...] = tuple(tuple(u) for u in upper)
        self.lower_covers: tuple[tuple[int, ...], ...] = tuple(tuple(d) for d in lower)
        self.bottom = bottoms[0]
        self.top = tops[0]
        self.order: tuple[int, ...] = tuple(order)
        self.meet_table = meet
        self.join_table = join
        self._pos = pos
        self._up = up
        self._down = down
        self._index = {lab: i for i, lab in enumerate(labels)}

    def __repr__(self) -> str:
        return f"FiniteLattice(size={self.size}, covers={len(self.covers)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.labels == other.labels and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.labels, self.covers))

    def index(self, label: str) -> int:
        return self._index[label]

    def le(self, x: int, y: int) -> bool:
        return bool((self._up[x] >> self._pos[y]) & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.le(x, y)

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def up_set(self, x: int) -> list[int]:
        return sorted(self.order[p] for p in _bits(self._up[x]))

    def down_set(self, x: int) -> list[int]:
        return sorted(self.order[p] for p in _bits(self._down[x]))

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "covers": [list(c) for c in self.covers]}

    @classmethod
    def from_json(cls, data: dict) -> FiniteLattice:
        return cls(data["labels"], [tuple(c) for c in data["covers"]])


def from_covers(labels: Sequence[str], covers: Iterable[tuple[int, int]]) -> FiniteLattice:
    return FiniteLattice(labels, covers)


def chain_lattice(k: int) -> FiniteLattice:
    """The chain 0 < 1 < ... < k."""
    return FiniteLattice([str(i) for i in range(k + 1)], [(i, i + 1) for i in range(k)])


def join_irreducibles(L: FiniteLattice) -> list[int]:
    return [x for x in range(L.size) if len(L.lower_covers[x]) == 1]


def meet_irreducibles(L: FiniteLattice) -> list[int]:
    return [x for x in range(L.size) if len(L.upper_covers[x]) == 1]


def _longest_from_bottom(L: FiniteLattice) -> list[int]:
    depth = [0] * L.size
    for x in L.order:
        for y in L.upper_covers[x]:
            depth[y] = max(depth[y], depth[x] + 1)
    return depth


def lattice_length(L: FiniteLattice) -> int:
    return _longest_from_bottom(L)[L.top]


def _extreme_chain(L: FiniteLattice, longest: bool) -> list[int]:
    pick = max if longest else min
    dist = {L.top: 0}
    for x in reversed(L.order):
        if x != L.top:
            dist[x] = pick(dist[y] for y in L.upper_covers[x]) + 1
    chain = [L.bottom]
    while chain[-1] != L.top:
        x = chain[-1]
        chain.append(next(y for y in L.upper_covers[x] if dist[y] == dist[x] - 1))
    return chain


def check_graded(L: FiniteLattice) -> Verdict:
    short = _extreme_chain(L, longest=False)
    long = _extreme_chain(L, longest=True)
    if len(short) == len(long):
        return Verdict(True)
    return Verdict(False, {"chains": [short, long]})


def is_graded(L: FiniteLattice) -> bool:
    return check_graded(L).holds


def check_extremal(L: FiniteLattice) -> Verdict:
    counts = {
        "join_irreducibles": len(join_irreducibles(L)),
        "length": lattice_length(L),
        "meet_irreducibles": len(meet_irreducibles(L)),
    }
    holds = counts["join_irreducibles"] == counts["length"] == counts["meet_irreducibles"]
    return Verdict(holds, counts)


def is_extremal(L: FiniteLattice) -> bool:
    return check_extremal(L).holds


def is_left_modular_element(L: FiniteLattice, x: int) -> bool:
    """Cover test: across every cover y < z exactly one of x^y = x^z, xvy = xvz."""
    M, J = L.meet_table[x], L.join_table[x]
    for y, z in L.covers:
        if (M[y] == M[z]) == (J[y] == J[z]):
            return False
    return True


def is_left_modular_element_def(L: FiniteLattice, x: int) -> bool:
    """(y v x) ^ z = y v (x ^ z) for all y < z."""
    M, J = L.meet_table, L.join_table
    for y in range(L.size):
        yx = J[y][x]
        for z in range(L.size):
            if z != y and L.le(y, z) and M[yx][z] != J[y][M[x][z]]:
                return False
    return True


def left_modular_elements(L: FiniteLattice) -> list[int]:
    return [x for x in range(L.size) if is_left_modular_element(L, x)]


def find_left_modular_chain(L: FiniteLattice) -> list[int] | None:
    """First (in index order) maximal chain of length l(L) made of
    left-modular elements, or None."""
    length = lattice_length(L)
    lm = set(left_modular_elements(L))
    if L.bottom not in lm or L.top not in lm:
        return None
    # best[x]: longest left-modular cover path from x to the top
    best = {L.top: 0}
    for x in reversed(L.order):
        if x == L.top or x not in lm:
            continue
        reach = [best[y] for y in L.upper_covers[x] if y in best]
        if reach:
            best[x] = max(reach) + 1
    if best.get(L.bottom) != length:
        return None
    chain = [L.bottom]
    while chain[-1] != L.top:
        x = chain[-1]
        chain.append(next(y for y in L.upper_covers[x] if best.get(y) == best[x] - 1))
    return chain


def check_join_semidistributive(L: FiniteLattice) -> Verdict:
    """x v y = x v z implies x v y = x v (y ^ z); first failing triple."""
    M, J = L.meet_table, L.join_table
    n = L.size
    for x in range(n):
        Jx = J[x]
        for y in range(n):
            xy = Jx[y]
            My = M[y]
            for z in range(n):
                if Jx[z] == xy and Jx[My[z]] != xy:
                    return Verdict(False, {"triple": [x, y, z]})
    return Verdict(True)


def check_meet_semidistributive(L: FiniteLattice) -> Verdict:
    M, J = L.meet_table, L.join_table
    n = L.size
    for x in range(n):
        Mx = M[x]
        for y in range(n):
            xy = Mx[y]
            Jy = J[y]
            for z in range(n):
                if Mx[z] == xy and Mx[Jy[z]] != xy:
                    return Verdict(False, {"triple": [x, y, z]})
    return Verdict(True)


def is_join_semidistributive(L: FiniteLattice) -> bool:
    return check_join_semidistributive(L).holds


def is_meet_semidistributive(L: FiniteLattice) -> bool:
    return check_meet_semidistributive(L).holds


def check_semidistributive(L: FiniteLattice) -> Verdict:
    j = check_join_semidistributive(L)
    if not j.holds:
        return Verdict(False, {"join": j.witness})
    m = check_meet_semidistributive(L)
    if not m.holds:
        return Verdict(False, {"meet": m.witness})
    return Verdict(True)


def is_semidistributive(L: FiniteLattice) -> bool:
    return check_semidistributive(L).holds


def check_distributive(L: FiniteLattice) -> Verdict:
    """x ^ (y v z) = (x ^ y) v (x ^ z) over all triples."""
    M, J = L.meet_table, L.join_table
    n = L.size
    for x in range(n):
        Mx = M[x]
        for y in range(n):
            Jy = J[y]
            xy = Mx[y]
            Jxy = J[xy]
            for z in range(n):
                if Mx[Jy[z]] != Jxy[Mx[z]]:
                    return Verdict(False, {"triple": [x, y, z]})
    return Verdict(True)


def is_distributive(L: FiniteLattice) -> bool:
    return check_distributive(L).holds


def check_trim(L: FiniteLattice) -> Verdict:
    ext = check_extremal(L)
    chain = find_left_modular_chain(L)
    if ext.holds and chain is not None:
        return Verdict(True, {"chain": chain})
    return Verdict(False, {"extremal": ext.witness, "left_modular_chain": chain})


def is_trim(L: FiniteLattice) -> bool:
    return check_trim(L).holds


def sublattice_interval(L: FiniteLattice, a: int, b: int) -> FiniteLattice:
    """The interval [a, b] of L with its induced covers."""
    if not L.le(a, b):
        raise ValueError(f"{L.labels[a]} is not below {L.labels[b]}")
    keep = [x for x in range(L.size) if L.le(a, x) and L.le(x, b)]
    local = {x: i for i, x in enumerate(keep)}
    covers = [(local[x], local[y]) for x, y in L.covers if x in local and y in local]
    return FiniteLattice([L.labels[x] for x in keep], covers)


def dual(L: FiniteLattice) -> FiniteLattice:
    return FiniteLattice(L.labels, [(b, a) for a, b in L.covers])


def analyze(L: FiniteLattice) -> PropertyReport:
    """Every lattice verdict in one report."""
    graded = check_graded(L)
    chain = find_left_modular_chain(L)
    verdicts = {
        "graded": graded,
        "extremal": check_extremal(L),
        "left_modular": Verdict(chain is not None, {"chain": chain}),
        "join_semidistributive": check_join_semidistributive(L),
        "meet_semidistributive": check_meet_semidistributive(L),
        "semidistributive": check_semidistributive(L),
        "distributive": check_distributive(L),
        "trim": check_trim(L),
    }
    instance = {
        "size": L.size,
        "length": lattice_length(L),
        "join_irreducibles": [L.labels[x] for x in join_irreducibles(L)],
        "meet_irreducibles": [L.labels[x] for x in meet_irreducibles(L)],
    }
    return PropertyReport(verdicts, instance)
