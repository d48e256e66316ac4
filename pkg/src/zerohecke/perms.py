"""Permutations of {1..N} in one-line notation.

Positions and values are 1-based throughout the public API.

>>> w = Permutation([3, 1, 2])
>>> w.length()
2
>>> descents(w, "right"), descents(w, "left")
({1}, {2})
>>> reduced_word(Permutation([3, 2, 1]))
(1, 2, 1)
"""

from __future__ import annotations

from itertools import permutations as _iter_perms
from typing import Iterable, Iterator, Sequence

from .errors import InvalidElement, RankMismatch


class Permutation(tuple):
    """An element of S_N stored as its one-line notation (an immutable tuple)."""

    __slots__ = ()

    def __new__(cls, oneline: Iterable[int]):
        t = tuple.__new__(cls, (int(v) for v in oneline))
        if sorted(t) != list(range(1, len(t) + 1)):
            raise InvalidElement(f"not a permutation of 1..{len(t)}: {list(t)}")
        return t

    @classmethod
    def _raw(cls, t) -> "Permutation":
        # skip validation for internally produced tuples
        return tuple.__new__(cls, t)

    @classmethod
    def identity(cls, N: int) -> "Permutation":
        return cls._raw(range(1, N + 1))

    @property
    def N(self) -> int:
        return len(self)

    @property
    def oneline(self) -> tuple:
        return tuple(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __repr__(self):
        return "[" + ",".join(map(str, self)) + "]"

    __str__ = __repr__

    def length(self) -> int:
        return length(self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for pos, v in enumerate(self, 1):
            inv[v - 1] = pos
        return Permutation._raw(inv)

    def __mul__(self, other):
        """Composition as functions: (u*v)(i) = u(v(i))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise RankMismatch("rank mismatch")
        return Permutation._raw(self[v - 1] for v in other)

    def right_mult(self, i: int) -> "Permutation":
        """w*s_i: swap the entries in positions i and i+1."""
        t = list(self)
        t[i - 1], t[i] = t[i], t[i - 1]
        return Permutation._raw(t)

    def left_mult(self, i: int) -> "Permutation":
        """s_i*w: swap the values i and i+1."""
        return Permutation._raw(i + 1 if v == i else i if v == i + 1 else v for v in self)

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self, 1))


def parse_perm(text: str) -> Permutation:
    """Parse comma separated one-line notation, e.g. ``"3,4,5,2,1,6"``."""
    text = text.strip().strip("[]()")
    return Permutation(int(tok) for tok in text.replace(" ", "").split(",") if tok)


def all_perms(N: int) -> Iterator[Permutation]:
    """All of S_N in lexicographic order."""
    for t in _iter_perms(range(1, N + 1)):
        yield Permutation._raw(t)


def length(w) -> int:
    """Coxeter length. Affine permutations dispatch to their own statistic.

    >>> length(Permutation([2, 3, 4, 5, 6, 7, 1]))
    6
    """
    if hasattr(w, "window"):
        return w.length()
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def descents(w, side: str = "right") -> set:
    """Indices i with l(w s_i) < l(w) (right) or l(s_i w) < l(w) (left)."""
    if hasattr(w, "window"):
        return w.descents(side)
    n = len(w)
    if side == "right":
        return {i for i in range(1, n) if w[i - 1] > w[i]}
    if side == "left":
        pos = {v: p for p, v in enumerate(w)}
        return {i for i in range(1, n) if pos[i + 1] < pos[i]}
    raise InvalidElement(f"side must be 'left' or 'right', got {side!r}")


def reduced_word(w) -> tuple:
    """Lex-minimal reduced word, built by always stripping the smallest left descent."""
    if hasattr(w, "window"):
        return w.reduced_word()
    word = []
    cur = w
    while True:
        d = descents(cur, "left")
        if not d:
            return tuple(word)
        i = min(d)
        word.append(i)
        cur = cur.left_mult(i)


def from_word(word: Sequence[int], N: int) -> Permutation:
    """The Coxeter product s_{i1} s_{i2} ... (no reducedness check)."""
    t = list(range(1, N + 1))
    for i in word:
        if not 1 <= i < N:
            raise InvalidElement(f"generator {i} out of range for S_{N}")
        t[i - 1], t[i] = t[i], t[i - 1]
    return Permutation._raw(t)


def longest_element(N: int) -> Permutation:
    return Permutation._raw(range(N, 0, -1))


def parabolic_longest_perm(J: Iterable[int], N: int) -> Permutation:
    """Longest element of the parabolic subgroup W_J: reverse each block of consecutive generators."""
    J = set(J)
    t = list(range(1, N + 1))
    i = 1
    while i < N:
        if i in J:
            j = i
            while j + 1 in J:
                j += 1
            # block of generators i..j acts on positions i..j+1
            t[i - 1:j + 1] = reversed(t[i - 1:j + 1])
            i = j + 1
        else:
            i += 1
    return Permutation._raw(t)


def standardize(values: Sequence[int]) -> tuple:
    """Relative order of a sequence of distinct numbers, as a permutation tuple."""
    order = sorted(values)
    rank = {v: k for k, v in enumerate(order, 1)}
    return tuple(rank[v] for v in values)


def conjugate_by_longest(w: Permutation) -> Permutation:
    """w0 w w0, i.e. the Dynkin flip s_i -> s_{N-i} on S_N."""
    n = len(w)
    return Permutation._raw(n + 1 - w[n - 1 - k] for k in range(n))


def catalan(n: int) -> int:
    from math import comb
    return comb(2 * n, n) // (n + 1)
