"""Affine non-decreasing parking functions and the maps P, Q, R.

An element is determined by its window f(1..N), with f(i+N) = f(i) + N.

>>> from .affine import AffinePermutation
>>> affine_quotient_Q(AffinePermutation([0, 2, 4]))
[0,2,3]
>>> affine_reconstruct_R(affine_generator(0, 3))
[0,2,4]
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .affine import AffinePermutation, affine_contains_321
from .errors import InvalidElement, RankMismatch, TheoremViolation


class AffineNdpf:
    __slots__ = ("window", "N")

    def __init__(self, window: Iterable[int], check: bool = True):
        w = tuple(int(v) for v in window)
        self.window = w
        self.N = N = len(w)
        if not check:
            return
        if N < 1:
            raise InvalidElement("empty window")
        if any(v > i for i, v in enumerate(w, 1)):
            raise InvalidElement(f"{list(w)} is not regressive")
        if any(a > b for a, b in zip(w, w[1:])) or w[-1] > w[0] + N:
            raise InvalidElement(f"{list(w)} is not order preserving")
        if not self.is_identity() and all(self(j) != self(j + 1) for j in range(N)):
            raise InvalidElement(f"{list(w)} is a shift, not an element of the monoid")

    @classmethod
    def identity(cls, N: int) -> "AffineNdpf":
        return cls(range(1, N + 1), check=False)

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.N)
        return self.window[r] + q * self.N

    def __eq__(self, other):
        return isinstance(other, AffineNdpf) and self.window == other.window

    def __hash__(self):
        return hash(("andpf", self.window))

    def __repr__(self):
        return "[" + ",".join(map(str, self.window)) + "]"

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.N + 1))

    def then(self, g: "AffineNdpf") -> "AffineNdpf":
        """Apply self, then g."""
        if g.N != self.N:
            raise RankMismatch("affine NDPF of different ranks")
        return AffineNdpf((g(v) for v in self.window), check=False)


def affine_generator(i: int, N: int) -> AffineNdpf:
    """f_i: j -> j - 1 when j = i + 1 mod N."""
    i %= N
    return AffineNdpf((j - 1 if (j - i - 1) % N == 0 else j for j in range(1, N + 1)), check=False)


def affine_compose(*fs: AffineNdpf) -> AffineNdpf:
    out = fs[0]
    for g in fs[1:]:
        out = out.then(g)
    return out


def affine_word(word: Sequence[int], N: int) -> AffineNdpf:
    out = AffineNdpf.identity(N)
    for i in word:
        out = out.then(affine_generator(i, N))
    return out


def shift_values(f: AffineNdpf, t: int) -> tuple:
    """Window of f followed by the shift i -> i - t (not itself a monoid element)."""
    return tuple(v - t for v in f.window)


def affine_quotient_Q(x: AffinePermutation) -> AffineNdpf:
    """f(i) = min of x(i), ..., x(i+N-1)."""
    N = x.N
    return AffineNdpf((min(x(j) for j in range(i, i + N)) for i in range(1, N + 1)), check=False)


def affine_quotient_P(x: AffinePermutation) -> AffineNdpf:
    """Image of a reduced word under pi_i -> f_i; products come out reversed."""
    return affine_word(x.reduced_word()[::-1], x.N)


def affine_reconstruct_R(f: AffineNdpf) -> AffinePermutation:
    """The [321]-avoiding x with Q(x) = f.

    Fiber maxima m (f(m) < f(m+1)) keep x(m) = f(m); the other positions take
    the remaining residues in increasing order, offset so the window sums to
    N(N+1)/2.
    """
    N = f.N
    if f.is_identity():
        return AffinePermutation.identity(N)
    maxima = [m for m in range(1, N + 1) if f(m) < f(m + 1)]
    rest = [p for p in range(1, N + 1) if p not in maxima]
    used = {f(m) % N for m in maxima}
    res = sorted(r for r in range(1, N + 1) if r % N not in used)
    K = len(rest)

    def V(t):
        q, r = divmod(t, K)
        return res[r] + q * N

    target = N * (N + 1) // 2
    base = sum(f(m) for m in maxima) + sum(V(a) for a in range(K))
    c, rem = divmod(target - base, N)
    if rem:
        raise TheoremViolation(f"no offset satisfies the sum rule for {f}")
    w = [0] * N
    for m in maxima:
        w[m - 1] = f(m)
    for a, p in enumerate(rest):
        w[p - 1] = V(a + c)
    x = AffinePermutation(w)
    if affine_contains_321(x) is not None or affine_quotient_Q(x) != f:
        raise TheoremViolation(f"reconstruction of {f} gave {x}")
    return x


def elements_up_to(N: int, max_word: int) -> set:
    """All affine NDPF reachable by words of length <= max_word."""
    seen = {AffineNdpf.identity(N)}
    frontier = list(seen)
    gens = [affine_generator(i, N) for i in range(N)]
    for _ in range(max_word):
        nxt = []
        for x in frontier:
            for g in gens:
                y = x.then(g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen
