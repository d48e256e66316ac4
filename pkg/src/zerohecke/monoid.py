"""The 0-Hecke monoid H_0(S_N) and its affine analogue.

Monoid elements are identified with their underlying (affine) permutation.
pi_i acts on the right by w -> w s_i when that lengthens w, and fixes w
otherwise.

>>> from .perms import Permutation
>>> pi_word([1, 2, 1], 3)
[3,2,1]
>>> hecke_product(pi_word([1], 3), pi_word([1, 2], 3))
[2,3,1]
"""

from __future__ import annotations

from typing import Iterable, Optional

from .affine import AffinePermutation
from .errors import InvalidElement, LengthBudgetExceeded, RankMismatch, TypeMismatch
from .perms import (Permutation, all_perms, conjugate_by_longest, descents, length,
                    parabolic_longest_perm, reduced_word)

HeckeElement = Permutation  # affine elements are AffinePermutation instances


class _Zero:
    """Absorbing marker produced by the negative evaluation maps."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "ZERO"

    def __bool__(self):
        return False


ZERO = _Zero()


def _rank(h):
    return h.N


def identity(N: int, affine: bool = False):
    return AffinePermutation.identity(N) if affine else Permutation.identity(N)


def pi_right(h, i: int):
    """h * pi_i."""
    if i in descents(h, "right"):
        return h
    return h.right_mult(i)


def pi_left(h, i: int):
    """pi_i * h."""
    if i in descents(h, "left"):
        return h
    return h.left_mult(i)


def pi_word(word: Iterable[int], N: int, affine: bool = False):
    """pi_{i1} pi_{i2} ... as a monoid element (the Demazure product)."""
    h = identity(N, affine)
    for i in word:
        h = pi_right(h, i)
    return h


def hecke_product(a, b, max_length: Optional[int] = None):
    """a * b in the 0-Hecke monoid.

    For affine elements a length budget may be supplied; exceeding it raises.
    """
    if _rank(a) != _rank(b) or isinstance(a, AffinePermutation) != isinstance(b, AffinePermutation):
        raise RankMismatch(f"cannot multiply {a!r} and {b!r}")
    h = a
    for i in reduced_word(b):
        h = pi_right(h, i)
        if max_length is not None and length(h) > max_length:
            raise LengthBudgetExceeded(f"product exceeds length budget {max_length}")
    return h


def support(h) -> frozenset:
    """Generators occurring in (every) reduced word of h."""
    return frozenset(reduced_word(h))


def parabolic_longest(J: Iterable[int], N: int) -> Permutation:
    """pi_J^+, the longest element of the parabolic submonoid generated by J."""
    return parabolic_longest_perm(J, N)


def omega_power(h, max_steps: int = 10_000):
    """h^omega: iterate powers until they stabilize."""
    cur = h
    for _ in range(max_steps):
        nxt = hecke_product(cur, h)
        if nxt == cur:
            return cur
        cur = nxt
    raise LengthBudgetExceeded("powers did not stabilize")


def dynkin_automorphism(h: Permutation) -> Permutation:
    """pi_i -> pi_{N-i}; implemented as conjugation by the longest element."""
    if isinstance(h, AffinePermutation):
        raise TypeMismatch("the Dynkin flip here is defined for finite type only")
    return conjugate_by_longest(h)


def evaluation_map(h, J, sign: str):
    """Phi_J^+ (pi_j -> 1 for j in J) or Phi_J^- (pi_j -> 0 for j in J).

    J may be a single index. The positive map returns an element of the
    parabolic submonoid on the remaining generators; the negative map returns
    h itself or ZERO.
    """
    if h is ZERO:
        return ZERO
    J = {J} if isinstance(J, int) else set(J)
    word = reduced_word(h)
    if sign in ("+", "plus"):
        return pi_word([i for i in word if i not in J], h.N, isinstance(h, AffinePermutation))
    if sign in ("-", "−", "minus"):
        return ZERO if J & set(word) else h
    raise InvalidElement(f"sign must be '+' or '-', got {sign!r}")


def simple_character(h, J) -> int:
    """lambda_J(h): pi_i acts by 0 for i in J and by 1 otherwise."""
    return 0 if set(J) & support(h) else 1


def all_elements(N: int) -> list:
    """H_0(S_N) sorted by (length, one-line)."""
    return sorted(all_perms(N), key=lambda w: (length(w), tuple(w)))


def descent_class_basis(N: int, J: Iterable[int]) -> list:
    """Elements whose left descent set is exactly J."""
    J = set(J)
    return [w for w in all_elements(N) if descents(w, "left") == J]


def projective_action(w: Permutation, i: int):
    """Action of pi_i on the basis vector b_w of the projective module indexed by D_L(w).

    Returns w pi_i when the left descent set is unchanged, else ZERO.
    """
    v = pi_right(w, i)
    return v if descents(v, "left") == descents(w, "left") else ZERO
