"""Affine permutations of Z in window notation.

sigma(i+N) = sigma(i) + N; the window lists sigma(1..N) and sums to N(N+1)/2.
Generators are s_0..s_{N-1}; s_i swaps j and j+1 for every j = i mod N.

>>> s0 = AffinePermutation([0, 2, 4])
>>> s0.length(), s0.reduced_word()
(1, (0,))
>>> AffinePermutation.from_word([0, 1], 3).window
(2, 0, 4)
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import InvalidElement


class AffinePermutation:
    __slots__ = ("window", "N")

    def __init__(self, window: Iterable[int], check: bool = True):
        w = tuple(int(v) for v in window)
        N = len(w)
        if check:
            if N < 1:
                raise InvalidElement("empty window")
            if len({v % N for v in w}) != N:
                raise InvalidElement(f"window residues are not distinct mod {N}: {list(w)}")
            if sum(w) != N * (N + 1) // 2:
                raise InvalidElement(f"window {list(w)} violates the sum rule (expected {N * (N + 1) // 2})")
        self.window = w
        self.N = N

    @classmethod
    def identity(cls, N: int) -> "AffinePermutation":
        return cls(range(1, N + 1), check=False)

    @classmethod
    def from_word(cls, word: Sequence[int], N: int) -> "AffinePermutation":
        x = cls.identity(N)
        for i in word:
            x = x.right_mult(i)
        return x

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.N)
        return self.window[r] + q * self.N

    def __eq__(self, other):
        return isinstance(other, AffinePermutation) and self.window == other.window

    def __hash__(self):
        return hash(("aff", self.window))

    def __repr__(self):
        return "[" + ",".join(map(str, self.window)) + "]"

    def __lt__(self, other):
        return self.window < other.window

    def position_of(self, v: int) -> int:
        N = self.N
        for k, w in enumerate(self.window, 1):
            if (w - v) % N == 0:
                return k + (v - w)
        raise AssertionError("unreachable")

    def length(self) -> int:
        """Affine inversion count: sum over i<j in the window of |floor((x(j)-x(i))/N)|."""
        w, N = self.window, self.N
        return sum(abs((w[j] - w[i]) // N) for i in range(N) for j in range(i + 1, N))

    def descents(self, side: str = "right") -> set:
        N = self.N
        if side == "right":
            return {i for i in range(N) if self(i) > self(i + 1)}
        if side == "left":
            return {i for i in range(N) if self.position_of(i + 1) < self.position_of(i)}
        raise InvalidElement(f"side must be 'left' or 'right', got {side!r}")

    def right_mult(self, i: int) -> "AffinePermutation":
        """x*s_i: swap positions i and i+1 (mod N)."""
        N = self.N
        i %= N
        w = list(self.window)
        if i == 0:
            a, b = self(0), self(1)
            w[0], w[N - 1] = a, b + N
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return AffinePermutation(w, check=False)

    def left_mult(self, i: int) -> "AffinePermutation":
        """s_i*x: swap the values congruent to i and i+1."""
        N = self.N
        i %= N
        out = []
        for v in self.window:
            r = v % N
            if r == i:
                out.append(v + 1)
            elif r == (i + 1) % N:
                out.append(v - 1)
            else:
                out.append(v)
        return AffinePermutation(out, check=False)

    def reduced_word(self) -> tuple:
        word = []
        cur = self
        while True:
            d = cur.descents("left")
            if not d:
                return tuple(word)
            i = min(d)
            word.append(i)
            cur = cur.left_mult(i)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.N + 1))


def parse_affine(text: str) -> AffinePermutation:
    text = text.strip().strip("[]()")
    return AffinePermutation(int(t) for t in text.replace(" ", "").split(",") if t)


def affine_contains_321(x: AffinePermutation) -> Optional["PatternInstance"]:
    """A witness i<j<k with x(i)>x(j)>x(k), j in the base window and both gaps below N.

    The lex-smallest (i, j, k) is returned, or None when x is fully commutative.
    """
    from .patterns import PatternInstance

    N = x.N
    best = None
    for j in range(1, N + 1):
        xj = x(j)
        for i in range(j - N + 1, j):
            if x(i) <= xj:
                continue
            for k in range(j + 1, j + N):
                if x(k) < xj:
                    cand = (i, j, k)
                    if best is None or cand < best:
                        best = cand
                    break
    if best is None:
        return None
    return PatternInstance(best, (3, 2, 1))


def affine_elements_up_to(N: int, max_length: int) -> dict:
    """All affine permutations of length <= max_length, keyed by window, found by breadth-first search."""
    start = AffinePermutation.identity(N)
    seen = {start.window: start}
    frontier = [start]
    for _ in range(max_length):
        nxt = []
        for x in frontier:
            L = x.length()
            for i in range(N):
                y = x.right_mult(i)
                if y.window not in seen and y.length() == L + 1:
                    seen[y.window] = y
                    nxt.append(y)
        frontier = nxt
    return seen
