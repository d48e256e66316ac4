"""Finite monoids given by a multiplication table, and their idempotent structure.

>>> M = example_jtrivial()
>>> is_j_trivial(M), M.name(omega("z", M))
(True, '0')
>>> is_j_trivial(free_left_regular_band())
False
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .errors import NonAperiodic, SizeLimit, VerificationFailure

ASSOC_CHECK_LIMIT = 200


class FiniteMonoid:
    """Elements plus a product table; elements are referred to by value.

    `product(a, b)` is "a then b" when the elements act on the right.
    """

    def __init__(self, elements: Sequence[Hashable], product: Callable, identity: Hashable,
                 check: bool = True, labels: dict | None = None):
        self.elements = list(elements)
        self.index = {e: k for k, e in enumerate(self.elements)}
        if identity not in self.index:
            raise VerificationFailure("identity is not among the elements")
        self.identity = identity
        self.one = self.index[identity]
        self.labels = labels or {}
        n = len(self.elements)
        self.table = np.empty((n, n), dtype=np.int64)
        for a, x in enumerate(self.elements):
            for b, y in enumerate(self.elements):
                z = product(x, y)
                if z not in self.index:
                    raise VerificationFailure(f"product {x!r}*{y!r} = {z!r} leaves the set")
                self.table[a, b] = self.index[z]
        if check:
            self.verify()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def name(self, x) -> str:
        return self.labels.get(x, repr(x) if not isinstance(x, str) else x)

    def mul(self, x, y):
        return self.elements[self.table[self.index[x], self.index[y]]]

    def verify(self) -> None:
        T, e = self.table, self.one
        n = len(self)
        if not (np.array_equal(T[e], np.arange(n)) and np.array_equal(T[:, e], np.arange(n))):
            raise VerificationFailure("identity laws fail")
        if n <= ASSOC_CHECK_LIMIT:
            # (ab)c == a(bc) for all triples, one row of a at a time
            for a in range(n):
                if not np.array_equal(T[T[a]], T[a][T]):
                    raise VerificationFailure("product is not associative")

    def is_idempotent(self, x) -> bool:
        return self.mul(x, x) == x

    def idempotents(self) -> list:
        return [x for x in self.elements if self.is_idempotent(x)]

    def two_sided_ideal(self, x) -> frozenset:
        """Indices of M x M."""
        k = self.index[x]
        right = self.table[k]                      # x M
        return frozenset(np.unique(self.table[:, right]).tolist())

    def j_leq(self, x, y) -> bool:
        """x <=_J y, i.e. x in M y M."""
        return self.index[x] in self.two_sided_ideal(y)


def omega(m, M: FiniteMonoid):
    """The idempotent power m^omega = m^k = m^(k+1)."""
    cur = m
    for _ in range(len(M) + 1):
        nxt = M.mul(cur, m)
        if nxt == cur:
            return cur
        cur = nxt
    raise NonAperiodic(f"powers of {M.name(m)} cycle without stabilizing")


def is_j_trivial(M: FiniteMonoid, max_size: int = 2000) -> bool:
    if len(M) > max_size:
        raise SizeLimit(f"|M|={len(M)} exceeds {max_size}")
    seen = {}
    for x in M.elements:
        ideal = M.two_sided_ideal(x)
        if ideal in seen:
            return False
        seen[ideal] = x
    return True


def star(e, f, M: FiniteMonoid):
    """(ef)^omega, the meet of two idempotents for the J-order."""
    return omega(M.mul(e, f), M)


def radical_basis(M: FiniteMonoid) -> list:
    """Pairs (x, x^omega) over non-idempotent x; x - x^omega spans the radical."""
    return [(x, omega(x, M)) for x in M.elements if not M.is_idempotent(x)]


def generate_monoid(generators: Iterable, product: Callable, identity, **kw) -> FiniteMonoid:
    """Closure of the generators under `product`, breadth first."""
    seen = [identity]
    known = {identity}
    frontier = [identity]
    gens = list(generators)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = product(x, g)
                if y not in known:
                    known.add(y)
                    seen.append(y)
                    nxt.append(y)
        frontier = nxt
    return FiniteMonoid(seen, product, identity, **kw)


# ---------------------------------------------------------------- small examples

def example_jtrivial() -> FiniteMonoid:
    """{1, x, y, z, 0} with x, y idempotent, xz = zy = z and every other product 0."""
    rules = {("x", "x"): "x", ("y", "y"): "y", ("x", "z"): "z", ("z", "y"): "z"}

    def prod(a, b):
        if a == "1":
            return b
        if b == "1":
            return a
        return rules.get((a, b), "0")

    return FiniteMonoid(["1", "x", "y", "z", "0"], prod, "1")


def free_left_regular_band() -> FiniteMonoid:
    """Words without repeated letters on {a, b}; product concatenates and drops repeats."""
    def prod(u, v):
        out = u
        for c in v:
            if c not in out:
                out += c
        return out

    return FiniteMonoid(["", "a", "b", "ab", "ba"], prod, "", labels={"": "1"})


def nilpotent_example() -> FiniteMonoid:
    """{1, x, 0} with x^2 = 0."""
    def prod(a, b):
        if a == "1":
            return b
        if b == "1":
            return a
        return "0"

    return FiniteMonoid(["1", "x", "0"], prod, "1")


def hecke_monoid(N: int) -> FiniteMonoid:
    from .monoid import all_elements, hecke_product
    from .perms import Permutation
    return FiniteMonoid(all_elements(N), hecke_product, Permutation.identity(N))


# ---------------------------------------------------------------- monoid algebra

class MonoidAlgebraElement:
    """Sparse exact combination of elements of a FiniteMonoid."""

    __slots__ = ("M", "terms")

    def __init__(self, M: FiniteMonoid, terms: dict | None = None):
        self.M = M
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, M, x, c=1):
        return cls(M, {x: c})

    @classmethod
    def one(cls, M):
        return cls(M, {M.identity: 1})

    def __add__(self, other):
        if not isinstance(other, MonoidAlgebraElement):
            other = MonoidAlgebraElement.one(self.M) * other
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return MonoidAlgebraElement(self.M, t)

    __radd__ = __add__

    def __neg__(self):
        return MonoidAlgebraElement(self.M, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MonoidAlgebraElement):
            return MonoidAlgebraElement(self.M, {k: c * other for k, c in self.terms.items()})
        M = self.M
        t = {}
        for a, ca in self.terms.items():
            ia = M.index[a]
            for b, cb in other.terms.items():
                z = M.elements[M.table[ia, M.index[b]]]
                t[z] = t.get(z, 0) + ca * cb
        return MonoidAlgebraElement(M, t)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k):
        out = MonoidAlgebraElement.one(self.M)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, MonoidAlgebraElement):
            other = MonoidAlgebraElement.one(self.M) * other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kc: self.M.index[kc[0]])
        return " + ".join(f"{c}*{self.M.name(k)}" for k, c in items).replace("+ -", "- ")
