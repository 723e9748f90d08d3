"""Sorting words, sortable elements and closed Cambrian intervals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .coxeter import CoxeterSystem, Element
from .lattice import FiniteLattice
from .weak import ElementLimitExceeded, ideal_bits, in_ideal, order_ideal


class NotSortableError(ValueError):
    pass


@dataclass(frozen=True)
class CoxeterElement:
    """A Coxeter element given by the order of its generators.

    ``order`` is used verbatim as the reduced word of gamma, so it fixes the
    sorting words (the set of sortable elements does not depend on it).
    """

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(s) for s in self.order))
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError(f"{self.order} is not a permutation of 0..{len(self.order) - 1}")

    @classmethod
    def parse(cls, system: CoxeterSystem, text: str | Sequence[str]) -> CoxeterElement:
        order = system.parse_word(text)
        if len(order) != system.rank:
            raise ValueError(f"gamma must use each of the {system.rank} generators exactly once")
        return cls(order)

    @property
    def initial(self) -> int:
        return self.order[0]

    def element(self, system: CoxeterSystem) -> Element:
        return system.element(self.order)

    def render(self, system: CoxeterSystem) -> str:
        return system.format_word(self.order, sep="")


def coxeter_element(system: CoxeterSystem, order: Sequence[int] | str | None = None) -> CoxeterElement:
    if order is None:
        return CoxeterElement(tuple(range(system.rank)))
    if isinstance(order, str):
        return CoxeterElement.parse(system, order)
    gamma = CoxeterElement(tuple(order))
    if len(gamma.order) != system.rank:
        raise ValueError(f"gamma must use each of the {system.rank} generators exactly once")
    return gamma


@dataclass(frozen=True)
class SortingWord:
    owner: Element
    blocks: tuple[tuple[int, ...], ...]

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(s for b in self.blocks for s in b)

    @property
    def block_bounds(self) -> tuple[tuple[int, int], ...]:
        out, start = [], 0
        for b in self.blocks:
            out.append((start, start + len(b)))
            start += len(b)
        return tuple(out)

    def render(self) -> str:
        """Letters with " | " between blocks, e.g. "s0 s2 s3 | s2"."""
        sys = self.owner.system
        return " | ".join(sys.format_word(b) for b in self.blocks)

    def is_decreasing(self) -> bool:
        return all(set(a) >= set(b) for a, b in zip(self.blocks, self.blocks[1:]))


@lru_cache(maxsize=1 << 16)
def sorting_word(w: Element, gamma: CoxeterElement) -> SortingWord:
    """Lexicographically first reduced word of w inside gamma^infinity.

    Scan copies of gamma, taking each letter that is a left descent of what
    is still left to sort.  The remainder is tracked through its inverse so
    each step is a right multiplication.
    """
    rest = w.inverse()
    blocks = []
    while rest.length:
        block = []
        for c in gamma.order:
            if c in rest.right_descents:
                block.append(c)
                rest = rest.right_mul(c)
        blocks.append(tuple(block))
    return SortingWord(w, tuple(blocks))


def sorting_label(w: Element, gamma: CoxeterElement) -> str:
    """The sorting word without block dividers; "ε" for the identity."""
    letters = sorting_word(w, gamma).letters
    return w.system.format_word(letters) if letters else "ε"


def is_sortable(w: Element, gamma: CoxeterElement) -> bool:
    return sorting_word(w, gamma).is_decreasing()


def is_sortable_recursive(w: Element, gamma: CoxeterElement) -> bool:
    """Sortability through the initial-letter recursion.

    With s the first letter of gamma: if s is a left descent of w, peel it
    and continue with the rotated word s*gamma*s; otherwise w must avoid s
    entirely and be sortable for s*gamma in the parabolic subgroup without s.
    The parabolic subgroup is handled inside the parent group by shrinking
    the generator order.
    """
    order = gamma.order
    while w.length:
        if not order:
            return False
        s = order[0]
        if s in w.left_descents:
            w = w.left_mul(s)
            order = order[1:] + (s,)
        elif s in w.support:
            return False
        else:
            order = order[1:]
    return True


def all_reduced_words(w: Element) -> list[tuple[int, ...]]:
    """Every reduced word of w, sorted."""
    memo: dict[Element, set[tuple[int, ...]]] = {}

    def words(x: Element) -> set[tuple[int, ...]]:
        hit = memo.get(x)
        if hit is not None:
            return hit
        if x.length == 0:
            out = {()}
        else:
            out = {r + (s,) for s in x.right_descents for r in words(x.right_mul(s))}
        memo[x] = out
        return out

    return sorted(words(w))


def sorting_chain(w: Element, gamma: CoxeterElement) -> list[Element]:
    """Prefixes of the sorting word: eps = x_0 < x_1 < ... < x_k = w."""
    sw = sorting_word(w, gamma)
    if not sw.is_decreasing():
        raise NotSortableError(f"{w.label} is not sortable; blocks {_render_blocks(sw)}")
    chain = [w.system.identity()]
    for s in sw.letters:
        chain.append(chain[-1].right_mul(s))
    return chain


def _render_blocks(sw: SortingWord) -> str:
    sys = sw.owner.system
    return ", ".join("{" + ",".join(sys.names[s] for s in b) + "}" for b in sw.blocks)


@dataclass(frozen=True, eq=False)
class CambrianInterval:
    gamma: CoxeterElement
    bottom: Element
    top: Element
    elements: tuple[Element, ...]
    lattice: FiniteLattice

    def index(self, w: Element) -> int:
        return self.elements.index(w)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w: Element) -> bool:
        return w in self.elements


def _require_sortable(w: Element, gamma: CoxeterElement, role: str) -> None:
    sw = sorting_word(w, gamma)
    if not sw.is_decreasing():
        raise NotSortableError(f"{role} {w.label} is not sortable: blocks {_render_blocks(sw)} do not decrease")


def induced_covers(elements: Sequence[Element]) -> list[tuple[int, int]]:
    """Transitive reduction of weak order restricted to ``elements``."""
    local = {x.id: i for i, x in enumerate(elements)}
    strict_down = []
    for y in elements:
        bits = 0
        ideal = ideal_bits(y)
        for xid, i in local.items():
            if (ideal >> xid) & 1 and xid != y.id:
                bits |= 1 << i
        strict_down.append(bits)
    covers = []
    for j, d in enumerate(strict_down):
        shadow = 0
        rest = d
        while rest:
            low = rest & -rest
            shadow |= strict_down[low.bit_length() - 1]
            rest ^= low
        lower = d & ~shadow
        while lower:
            low = lower & -lower
            covers.append((low.bit_length() - 1, j))
            lower ^= low
    return sorted(covers)


def cambrian_interval(
    u: Element,
    v: Element,
    gamma: CoxeterElement,
    max_elems: int | None = None,
) -> CambrianInterval:
    """The closed interval [u, v] of the gamma-Cambrian semilattice."""
    if u.system is not v.system:
        raise ValueError("elements belong to different Coxeter systems")
    _require_sortable(u, gamma, "bottom")
    _require_sortable(v, gamma, "top")
    if not in_ideal(u, v):
        raise ValueError(f"{u.label} is not below {v.label} in weak order")
    ideal = order_ideal(v, max_elems=max_elems)
    if max_elems is not None and len(ideal) > max_elems:
        raise ElementLimitExceeded(max_elems, f"order ideal of {v.label}")
    elements = tuple(x for x in ideal if in_ideal(u, x) and is_sortable(x, gamma))
    lattice = FiniteLattice([sorting_label(x, gamma) for x in elements], induced_covers(elements))
    return CambrianInterval(gamma, u, v, elements, lattice)


def sortable_elements(elements: Sequence[Element], gamma: CoxeterElement) -> list[Element]:
    return [x for x in elements if is_sortable(x, gamma)]
