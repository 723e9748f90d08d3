"""The right weak order on a Coxeter group."""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxeterSystem, Element, multiply


class ElementLimitExceeded(RuntimeError):
    """An enumeration grew past its element budget."""

    def __init__(self, limit: int, what: str = "enumeration"):
        super().__init__(f"{what} exceeded {limit} elements")
        self.limit = limit


@dataclass(frozen=True)
class NoJoinWithinCap:
    """No common upper bound of length <= cap exists.

    This does not certify that the join fails to exist in an infinite group.
    """

    cap: int

    def __bool__(self) -> bool:
        return False


def _check_same(u: Element, v: Element) -> None:
    if u.system is not v.system:
        raise ValueError("elements belong to different Coxeter systems")


def weak_le(u: Element, v: Element) -> bool:
    """u <= v iff l(v) = l(u) + l(u^-1 v)."""
    _check_same(u, v)
    if u.length > v.length:
        return False
    return v.length == u.length + multiply(u.inverse(), v).length


def upper_covers(w: Element) -> list[Element]:
    sys = w.system
    return sorted(
        (w.right_mul(s) for s in range(sys.rank) if s not in w.right_descents),
        key=lambda x: x.sort_key,
    )


def lower_covers(w: Element) -> list[Element]:
    return sorted((w.right_mul(s) for s in w.right_descents), key=lambda x: x.sort_key)


def ideal_bits(w: Element) -> int:
    """Principal order ideal of w as a bitset over element ids."""
    bits = w._ideal_bits
    if bits is None:
        bits = 1 << w.id
        for s in w.right_descents:
            bits |= ideal_bits(w.right_mul(s))
        w._ideal_bits = bits
    return bits


def in_ideal(u: Element, w: Element) -> bool:
    """Fast u <= w through the cached ideal of w."""
    return u.system is w.system and u.length <= w.length and bool((ideal_bits(w) >> u.id) & 1)


def elements_of(system: CoxeterSystem, bits: int) -> list[Element]:
    out = []
    elements = system._elements
    while bits:
        low = bits & -bits
        out.append(elements[low.bit_length() - 1])
        bits ^= low
    out.sort(key=lambda x: x.sort_key)
    return out


def order_ideal(w: Element, max_elems: int | None = None) -> list[Element]:
    """All u <= w, ordered by length and then by normal form."""
    if max_elems is not None and w.length > 0:
        _bounded_down_closure(w, max_elems)
    return elements_of(w.system, ideal_bits(w))


def _bounded_down_closure(w: Element, limit: int) -> None:
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for x in frontier:
            for y in lower_covers(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > limit:
            raise ElementLimitExceeded(limit, f"order ideal of {w.label}")
        frontier = nxt


def weak_meet(u: Element, v: Element) -> Element:
    _check_same(u, v)
    short, other = (u, v) if u.length <= v.length else (v, u)
    common = [x for x in order_ideal(short) if in_ideal(x, other)]
    top = common[-1]
    for x in common:
        if not in_ideal(x, top):
            raise AssertionError(f"meet of {u} and {v} is not unique: {x} and {top} are both maximal")
    return top


def up_set_bits(w: Element, cap: int) -> int:
    """Elements x >= w with l(x) <= cap, as a bitset."""
    bits = 1 << w.id
    frontier = [w]
    rank = w.system.rank
    for _ in range(w.length, cap):
        nxt = []
        for x in frontier:
            for s in range(rank):
                if s not in x.right_descents:
                    y = x.right_mul(s)
                    if not (bits >> y.id) & 1:
                        bits |= 1 << y.id
                        nxt.append(y)
        frontier = nxt
    return bits


def weak_join(u: Element, v: Element, cap: int, bound: Element | None = None) -> Element | NoJoinWithinCap:
    """Join of u and v if some common upper bound of length <= cap exists.

    In a finitary meet-semilattice any common upper bound lies above the
    join, so the shortest common upper bound is the join.  ``bound`` is an
    optional known upper bound; the search then stays inside its ideal.
    """
    _check_same(u, v)
    if cap < max(u.length, v.length):
        raise ValueError(f"cap {cap} is below the lengths of the arguments")
    if bound is not None:
        if not (in_ideal(u, bound) and in_ideal(v, bound)):
            raise ValueError(f"{bound} is not an upper bound of {u} and {v}")
        if bound.length <= cap:
            candidates = [x for x in order_ideal(bound) if in_ideal(u, x) and in_ideal(v, x)]
            join = candidates[0]
            for x in candidates:
                if not in_ideal(join, x):
                    raise AssertionError(f"join of {u} and {v} is not unique")
            return join
    common = up_set_bits(u, cap) & up_set_bits(v, cap)
    if not common:
        return NoJoinWithinCap(cap)
    candidates = elements_of(u.system, common)
    join = candidates[0]
    if common & ~up_set_bits(join, cap):
        raise AssertionError(f"join of {u} and {v} is not unique")
    return join


def enumerate_elements(system: CoxeterSystem, max_len: int, max_elems: int | None = None) -> list[Element]:
    """All elements of length <= max_len, by length then normal form."""
    level = [system.identity()]
    out = list(level)
    for _ in range(max_len):
        seen = set()
        nxt = []
        for x in level:
            for s in range(system.rank):
                if s not in x.right_descents:
                    y = x.right_mul(s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        if not nxt:
            break
        nxt.sort(key=lambda x: x.word)
        out.extend(nxt)
        if max_elems is not None and len(out) > max_elems:
            raise ElementLimitExceeded(max_elems, "element enumeration")
        level = nxt
    return out
