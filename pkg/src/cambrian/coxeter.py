"""Coxeter systems and their elements.

Elements are stored through the geometric representation: each one keeps the
matrix of ``w`` and of ``w^-1`` in the simple-root basis, plus its ShortLex
normal form (repeatedly peel off the smallest-index left descent).  Elements
are interned per system, so every group element is built once and equal
elements are the same object.
"""

from __future__ import annotations

import math
import threading
from typing import Iterable, Sequence

from .arith import (
    EXACT_LABELS,
    QUAD_ONE,
    QUAD_ZERO,
    column_sign,
    reflection_coefficient,
)

INFINITY = math.inf


class CoxeterMatrixError(ValueError):
    """Invalid Coxeter matrix or generator names."""


def _read_label(value, i: int, j: int) -> float:
    # 0 is the file encoding of m = inf
    if value == 0 or value == math.inf:
        return math.inf
    if isinstance(value, bool) or not float(value).is_integer():
        raise CoxeterMatrixError(f"entry m[{i}][{j}] = {value!r} is not an integer label")
    return int(value)


class CoxeterSystem:
    """A Coxeter system given by its Coxeter matrix.

    ``m[i][j]`` are the bond labels, with ``math.inf`` (or 0 on input) for no
    relation.  ``form`` is the bilinear form ``-cos(pi/m)`` of the geometric
    representation.  Arithmetic is exact whenever every label lies in
    {2, 3, 4, 6, inf}.
    """

    def __init__(self, matrix: Sequence[Sequence[float]], names: Sequence[str] | None = None):
        n = len(matrix)
        if n == 0:
            raise CoxeterMatrixError("rank must be positive")
        for i, row in enumerate(matrix):
            if len(row) != n:
                raise CoxeterMatrixError(f"row {i} has {len(row)} entries, expected {n}")
        m = [[_read_label(matrix[i][j], i, j) for j in range(n)] for i in range(n)]
        for i in range(n):
            if m[i][i] != 1:
                raise CoxeterMatrixError(f"diagonal entry m[{i}][{i}] = {m[i][i]} must be 1")
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise CoxeterMatrixError(
                        f"asymmetric matrix: m[{i}][{j}] = {m[i][j]} but m[{j}][{i}] = {m[j][i]}"
                    )
                if i != j and m[i][j] < 2:
                    raise CoxeterMatrixError(f"off-diagonal entry m[{i}][{j}] = {m[i][j]} must be >= 2")
        if names is None:
            names = [f"s{i}" for i in range(n)]
        names = [str(x) for x in names]
        if len(names) != n:
            raise CoxeterMatrixError(f"got {len(names)} names for rank {n}")
        if len(set(names)) != n:
            raise CoxeterMatrixError(f"generator names {names} are not distinct")

        self.rank = n
        self.m: tuple[tuple[float, ...], ...] = tuple(tuple(row) for row in m)
        self.names: tuple[str, ...] = tuple(names)
        self.exact = all(m[i][j] in EXACT_LABELS for i in range(n) for j in range(n) if i != j)
        self.form = tuple(
            tuple(
                1.0 if i == j else (-1.0 if m[i][j] == math.inf else -math.cos(math.pi / m[i][j]))
                for j in range(n)
            )
            for i in range(n)
        )
        # coef[s][t] = 2cos(pi/m_st): sigma_s(alpha_t) = alpha_t + coef[s][t] * alpha_s
        self._coef = tuple(
            tuple(None if i == j else reflection_coefficient(m[i][j], self.exact) for j in range(n))
            for i in range(n)
        )
        self._zero = QUAD_ZERO if self.exact else 0.0
        self._one = QUAD_ONE if self.exact else 1.0
        self._index = {name: i for i, name in enumerate(self.names)}

        self._lock = threading.RLock()
        self._elements: list[Element] = []
        self._by_word: dict[tuple[int, ...], Element] = {}
        eye = tuple(
            tuple(self._one if i == j else self._zero for j in range(n)) for i in range(n)
        )
        self._identity = self._intern((), eye, eye, None)

    def __repr__(self) -> str:
        return f"CoxeterSystem(rank={self.rank}, names={list(self.names)})"

    @property
    def coxeter_matrix(self) -> list[list[int]]:
        """The matrix with 0 encoding infinity, as used in system files."""
        return [[0 if x == math.inf else x for x in row] for row in self.m]

    def is_finite(self) -> bool:
        """W is finite iff its bilinear form is positive definite (Sylvester)."""
        n = self.rank
        for k in range(1, n + 1):
            a = [list(row[:k]) for row in self.form[:k]]
            det = 1.0
            for c in range(k):
                p = max(range(c, k), key=lambda r: abs(a[r][c]))
                if abs(a[p][c]) < 1e-12:
                    return False
                if p != c:
                    a[c], a[p] = a[p], a[c]
                    det = -det
                det *= a[c][c]
                for r in range(c + 1, k):
                    f = a[r][c] / a[c][c]
                    for j in range(c, k):
                        a[r][j] -= f * a[c][j]
            if det < 1e-9:
                return False
        return True

    def generator_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r}; expected one of {list(self.names)}") from None

    def parse_word(self, text: str | Iterable[str]) -> tuple[int, ...]:
        """Turn "s0 s2,s3" (or a list of names) into generator indices."""
        if isinstance(text, str):
            tokens = text.replace(",", " ").split()
        else:
            tokens = [t for chunk in text for t in str(chunk).replace(",", " ").split()]
        return tuple(self.generator_index(t) for t in tokens if t not in ("ε", "e"))

    def format_word(self, word: Sequence[int], sep: str = " ") -> str:
        return sep.join(self.names[i] for i in word)

    def identity(self) -> Element:
        return self._identity

    def generator(self, s: int) -> Element:
        return self._identity.right_mul(s)

    def element(self, word: Sequence[int] | str) -> Element:
        """Canonical element represented by an arbitrary word."""
        if isinstance(word, str):
            word = self.parse_word(word)
        return canonicalize(self, word)

    # -- matrix updates -------------------------------------------------

    def _right_reflect(self, mat, s: int):
        """mat * sigma_s."""
        coef = self._coef[s]
        rows = []
        for row in mat:
            ws = row[s]
            new = list(row)
            for j in range(self.rank):
                if j == s:
                    new[j] = -ws
                elif coef[j]:
                    new[j] = row[j] + ws * coef[j]
            rows.append(tuple(new))
        return tuple(rows)

    def _left_reflect(self, mat, s: int):
        """sigma_s * mat: only row s changes."""
        coef = self._coef[s]
        acc = [-x for x in mat[s]]
        for k in range(self.rank):
            c = coef[k]
            if k != s and c:
                rk = mat[k]
                for j in range(self.rank):
                    acc[j] = acc[j] + c * rk[j]
        rows = list(mat)
        rows[s] = tuple(acc)
        return tuple(rows)

    def _column_negative(self, mat, s: int) -> bool:
        return column_sign([row[s] for row in mat]) < 0

    # -- interning --------------------------------------------------------

    def _intern(self, word, mat, inv, tail) -> Element:
        with self._lock:
            found = self._by_word.get(word)
            if found is not None:
                return found
            el = Element(self, word, mat, inv, tail, len(self._elements))
            self._elements.append(el)
            self._by_word[word] = el
            return el

    def _ascend(self, w: Element, s: int) -> Element:
        """w * s for a right ascent s, built from the normal form of w."""
        hit = w._right.get(s)
        if hit is not None:
            return hit
        mat = self._right_reflect(w._mat, s)
        inv = self._left_reflect(w._inv, s)
        if w.length == 0:
            word, tail = (s,), w
        else:
            head = w.word[0]
            first = head
            for b in range(head):
                if self._column_negative(inv, b):
                    first = b
                    break
            if first == head:
                tail = self._ascend(w._tail, s)
            else:
                tail = w
            word = (first,) + tail.word
        el = self._by_word.get(word)
        if el is None:
            el = self._intern(word, mat, inv, tail)
        w._right[s] = el
        el._right[s] = w
        return el

    def _from_reduced(self, word: Iterable[int]) -> Element:
        w = self._identity
        for s in word:
            w = self._ascend(w, s)
        return w

    def _peel(self, inv, length: int) -> tuple[int, ...]:
        """ShortLex normal form of the element whose inverse matrix is ``inv``."""
        word = []
        for _ in range(length):
            for b in range(self.rank):
                if self._column_negative(inv, b):
                    break
            else:
                raise AssertionError("nonidentity element without a left descent")
            word.append(b)
            inv = self._right_reflect(inv, b)
        return tuple(word)


class Element:
    """An element of a Coxeter group in ShortLex normal form.

    Do not construct directly; use :func:`canonicalize`, :func:`identity` or
    :meth:`CoxeterSystem.element`.
    """

    __slots__ = (
        "system", "word", "length", "id", "_mat", "_inv", "_tail",
        "_right", "_dl", "_dr", "_inverse", "_ideal_bits",
    )

    def __init__(self, system, word, mat, inv, tail, ident):
        self.system = system
        self.word: tuple[int, ...] = word
        self.length = len(word)
        self.id = ident
        self._mat = mat
        self._inv = inv
        self._tail = tail
        self._right: dict[int, Element] = {}
        self._dl = None
        self._dr = None
        self._inverse = None
        self._ideal_bits = None

    @property
    def matrix(self):
        """Matrix of w acting on the simple-root basis (columns are w(alpha_s))."""
        return self._mat

    @property
    def label(self) -> str:
        return self.system.format_word(self.word) if self.word else "ε"

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.word)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.length, self.word)

    @property
    def left_descents(self) -> frozenset[int]:
        if self._dl is None:
            sys = self.system
            self._dl = frozenset(s for s in range(sys.rank) if sys._column_negative(self._inv, s))
        return self._dl

    @property
    def right_descents(self) -> frozenset[int]:
        if self._dr is None:
            sys = self.system
            self._dr = frozenset(s for s in range(sys.rank) if sys._column_negative(self._mat, s))
        return self._dr

    def root_image(self, s: int) -> tuple:
        """Coordinates of w(alpha_s) in the simple-root basis."""
        return tuple(row[s] for row in self._mat)

    def right_mul(self, s: int) -> Element:
        hit = self._right.get(s)
        if hit is not None:
            return hit
        sys = self.system
        if not 0 <= s < sys.rank:
            raise ValueError(f"generator index {s} out of range for rank {sys.rank}")
        if s not in self.right_descents:
            return sys._ascend(self, s)
        word = sys._peel(sys._left_reflect(self._inv, s), self.length - 1)
        lower = sys._from_reduced(word)
        self._right[s] = lower
        lower._right[s] = self
        return lower

    def left_mul(self, s: int) -> Element:
        return self.inverse().right_mul(s).inverse()

    def inverse(self) -> Element:
        if self._inverse is None:
            inv = self.system._from_reduced(reversed(self.word))
            self._inverse = inv
            inv._inverse = self
        return self._inverse

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.system is other.system and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"Element({self.label})"


def build_system(matrix: Sequence[Sequence[float]], names: Sequence[str] | None = None) -> CoxeterSystem:
    return CoxeterSystem(matrix, names)


def identity(system: CoxeterSystem) -> Element:
    return system.identity()


def is_left_descent(system: CoxeterSystem, s: int, w: Element) -> bool:
    if not 0 <= s < system.rank:
        raise ValueError(f"generator index {s} out of range for rank {system.rank}")
    return s in w.left_descents


def multiply(u: Element, v: Element) -> Element:
    if u.system is not v.system:
        raise ValueError("elements belong to different Coxeter systems")
    w = u
    for s in v.word:
        w = w.right_mul(s)
    return w


def inverse(w: Element) -> Element:
    return w.inverse()


def canonicalize(system: CoxeterSystem, word: Sequence[int]) -> Element:
    w = system.identity()
    for s in word:
        w = w.right_mul(s)
    return w


def parabolic_subsystem(system: CoxeterSystem, J: Iterable[int]) -> tuple[CoxeterSystem, tuple[int, ...]]:
    """The standard parabolic subsystem on ``J`` and its index embedding.

    ``embedding[i]`` is the parent index of the subsystem's generator ``i``.
    """
    J = tuple(sorted(set(J)))
    if not J:
        raise ValueError("parabolic subsystem needs a nonempty generator set")
    for j in J:
        if not 0 <= j < system.rank:
            raise ValueError(f"generator index {j} out of range for rank {system.rank}")
    sub = CoxeterSystem(
        [[system.m[i][j] for j in J] for i in J],
        [system.names[i] for i in J],
    )
    return sub, J


def embed(w: Element, parent: CoxeterSystem, embedding: Sequence[int]) -> Element:
    """Image of a subsystem element in the parent system."""
    return parent._from_reduced(embedding[s] for s in w.word)
