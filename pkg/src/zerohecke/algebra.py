"""Exact sparse elements of the 0-Hecke algebra C H_0(S_N).

Heavy computations run on dense integer vectors indexed by S_N, where right
multiplication by pi_i is a gather: (v pi_i)[u] = v[u] + v[u s_i] if i is a
right descent of u, else 0. Integer vectors fall back to Python ints when
entries grow large, so arithmetic stays exact.

>>> C = diagram_demipotent("-+")
>>> C
π_2 - π_12 - π_21 + π_121
>>> idempotent_from(C)[1]
1
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidElement, NotDemipotent, RankMismatch, VerificationFailure
from .monoid import all_elements, hecke_product
from .perms import Permutation, descents, length, parabolic_longest_perm, reduced_word

_GUARD = 1 << 60


# ---------------------------------------------------------------- vector space

class HeckeSpace:
    """Indexing data for S_N used by the vector engine."""

    def __init__(self, N: int):
        self.N = N
        self.perms = all_elements(N)
        self.index = {w: k for k, w in enumerate(self.perms)}
        n = len(self.perms)
        self.size = n
        self.lengths = np.array([length(w) for w in self.perms])
        self.desc = {}
        self.swap = {}
        for i in range(1, N):
            self.desc[i] = np.array([w[i - 1] > w[i] for w in self.perms], dtype=bool)
            self.swap[i] = np.array([self.index[w.right_mult(i)] for w in self.perms], dtype=np.int64)
        # spanning tree of right weak order: parent(y) = y s_d, d the largest right descent
        self.children = [[] for _ in range(n)]
        for k, w in enumerate(self.perms):
            d = descents(w, "right")
            if d:
                i = max(d)
                self.children[self.index[w.right_mult(i)]].append((k, i))
        self.parent = [-1] * n
        for k, ch in enumerate(self.children):
            for c, _ in ch:
                self.parent[c] = k

    def zero(self, dtype=np.int64):
        return np.zeros(self.size, dtype=dtype)

    def unit(self, k: int = 0):
        v = self.zero()
        v[k] = 1
        return v

    def right_pi(self, v, i: int):
        v = _guard(v)
        return np.where(self.desc[i], v + v[self.swap[i]], 0).astype(v.dtype)

    def right_factor(self, v, i: int, sign: int):
        """v * pi_i (sign +1) or v * (1 - pi_i) (sign -1)."""
        r = self.right_pi(v, i)
        return r if sign > 0 else v - r

    def apply_factors(self, v, factors):
        for i, s in factors:
            v = self.right_factor(v, i, s)
        return v

    def right_monomials(self, v, targets=None):
        """Yield (k, v * pi_{perms[k]}) along the weak-order tree; restricted to ancestors of targets."""
        keep = None
        if targets is not None:
            keep = set()
            for t in targets:
                while t != -1 and t not in keep:
                    keep.add(t)
                    t = self.parent[t]
        stack = [(0, v)]
        while stack:
            k, vec = stack.pop()
            yield k, vec
            for c, i in self.children[k]:
                if keep is None or c in keep:
                    stack.append((c, self.right_pi(vec, i)))

    def multiply(self, va, b_terms: dict):
        """va * b where b is given as {index: coefficient}."""
        out = self.zero(va.dtype if va.dtype == object else np.int64)
        for k, vec in self.right_monomials(va, b_terms.keys()):
            c = b_terms.get(k)
            if c:
                out = _guard(out) + _guard(vec) * c
        return out


def _guard(v):
    if v.dtype != object and v.size and int(np.abs(v).max()) >= _GUARD:
        return v.astype(object)
    return v


@lru_cache(maxsize=None)
def space(N: int) -> HeckeSpace:
    return HeckeSpace(N)


# ---------------------------------------------------------------- algebra elements

def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class AlgebraElement:
    """A finite exact linear combination of monoid elements (no zero coefficients stored)."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: dict | None = None):
        self.N = N
        self.terms = {}
        for w, c in (terms or {}).items():
            c = _norm(c)
            if c:
                self.terms[w] = c

    # constructors
    @classmethod
    def one(cls, N: int) -> "AlgebraElement":
        return cls(N, {Permutation.identity(N): 1})

    @classmethod
    def zero(cls, N: int) -> "AlgebraElement":
        return cls(N, {})

    @classmethod
    def monomial(cls, w: Permutation, c=1) -> "AlgebraElement":
        return cls(len(w), {w: c})

    @classmethod
    def pi(cls, word: Sequence[int], N: int) -> "AlgebraElement":
        from .monoid import pi_word
        return cls(N, {pi_word(word, N): 1})

    @classmethod
    def pibar(cls, i: int, N: int) -> "AlgebraElement":
        return cls.one(N) - cls.pi([i], N)

    @classmethod
    def from_vector(cls, N: int, v) -> "AlgebraElement":
        sp = space(N)
        nz = np.nonzero(v)[0]
        return cls(N, {sp.perms[k]: int(v[k]) if v.dtype != object else v[k] for k in nz})

    def to_vector(self):
        sp = space(self.N)
        if all(isinstance(c, int) for c in self.terms.values()):
            v = sp.zero(np.int64 if all(abs(c) < _GUARD for c in self.terms.values()) else object)
        else:
            v = sp.zero(object)
        for w, c in self.terms.items():
            v[sp.index[w]] = c
        return v

    # arithmetic
    def _check(self, other):
        if self.N != other.N:
            raise RankMismatch(f"rank mismatch: S_{self.N} vs S_{other.N}")

    def __add__(self, other):
        if isinstance(other, Rational):
            other = AlgebraElement.one(self.N) * other
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, 0) + c
        return AlgebraElement(self.N, t)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.N, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return AlgebraElement(self.N, {w: c * other for w, c in self.terms.items()})
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        if not self.terms or not other.terms:
            return AlgebraElement.zero(self.N)
        if len(self.terms) * len(other.terms) <= 64 or self.N > 8:
            t = {}
            for a, ca in self.terms.items():
                for b, cb in other.terms.items():
                    ab = hecke_product(a, b)
                    t[ab] = t.get(ab, 0) + ca * cb
            return AlgebraElement(self.N, t)
        sp = space(self.N)
        out = sp.multiply(self.to_vector(), {sp.index[w]: c for w, c in other.terms.items()})
        return AlgebraElement.from_vector(self.N, out)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = AlgebraElement.one(self.N)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = AlgebraElement.one(self.N) * other
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, w) -> int:
        return self.terms.get(w, 0)

    def sorted_terms(self) -> list:
        """[(one-line, coefficient)] sorted by (length, one-line)."""
        return sorted(((tuple(w), c) for w, c in self.terms.items()),
                      key=lambda t: (length(Permutation(t[0])), t[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        words = sorted((len(reduced_word(w)), reduced_word(w), c) for w, c in self.terms.items())
        for _, word, c in words:
            mono = "1" if not word else "π_" + "".join(map(str, word))
            if c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}" if mono != "1" else str(c)
            parts.append(s)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


# ---------------------------------------------------------------- signed diagrams

@dataclass(frozen=True)
class SignedDiagram:
    """Signs on the nodes 1..N-1 of the type A Dynkin diagram, stored as +1/-1."""

    signs: tuple

    @classmethod
    def parse(cls, text) -> "SignedDiagram":
        if isinstance(text, SignedDiagram):
            return text
        if isinstance(text, (tuple, list)):
            return cls(tuple(1 if s > 0 else -1 for s in text))
        out = []
        for ch in str(text).strip():
            if ch == "+":
                out.append(1)
            elif ch in "-−":
                out.append(-1)
            elif ch in " _":
                continue
            else:
                raise InvalidElement(f"bad sign {ch!r} in diagram {text!r}")
        return cls(tuple(out))

    @property
    def N(self) -> int:
        return len(self.signs) + 1

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def __repr__(self):
        return f"SignedDiagram({str(self)!r})"

    def __len__(self):
        return len(self.signs)

    def sign(self, i: int) -> int:
        return self.signs[i - 1]

    def plus_nodes(self) -> frozenset:
        return frozenset(i for i, s in enumerate(self.signs, 1) if s > 0)

    def runs(self) -> list:
        """Maximal constant-sign runs as (sign, [nodes])."""
        out = []
        for i, s in enumerate(self.signs, 1):
            if out and out[-1][0] == s:
                out[-1][1].append(i)
            else:
                out.append((s, [i]))
        return out

    def prefix(self, k: int) -> "SignedDiagram":
        return SignedDiagram(self.signs[:k])

    def child(self, s) -> "SignedDiagram":
        return SignedDiagram(self.signs + ((1 if s in (1, "+") else -1),))

    def flip(self) -> "SignedDiagram":
        return SignedDiagram(tuple(-s for s in self.signs))

    def sibling(self) -> "SignedDiagram":
        if not self.signs:
            return self
        return SignedDiagram(self.signs[:-1] + (-self.signs[-1],))

    def sign_changes(self) -> int:
        return sum(1 for a, b in zip(self.signs, self.signs[1:]) if a != b)


def all_diagrams(N: int) -> list:
    """The 2^(N-1) signed diagrams, ordered with '+' before '-' lexicographically."""
    return [SignedDiagram(t) for t in _cartesian((1, -1), repeat=N - 1)]


# ---------------------------------------------------------------- demipotents

def _run_word(nodes: Sequence[int], N: int) -> tuple:
    return reduced_word(parabolic_longest_perm(nodes, N))


def diagram_factors(D) -> tuple:
    """(L_D, R_D) as lists of (generator, sign) factors."""
    D = SignedDiagram.parse(D)
    N = D.N
    blocks = [[(i, s) for i in _run_word(nodes, N)] for s, nodes in D.runs()]
    L = [f for b in blocks for f in b]
    R = [f for b in reversed(blocks) for f in b]
    return L, R


def factors_element(factors, N: int) -> AlgebraElement:
    sp = space(N)
    return AlgebraElement.from_vector(N, sp.apply_factors(sp.unit(0), factors))


def longest_signed(J: Iterable[int], sign, N: int) -> AlgebraElement:
    """w_J^+ (a single monoid term) or w_J^- (product of (1 - pi_i) along a reduced word of w_J^+)."""
    s = 1 if sign in (1, "+") else -1
    word = reduced_word(parabolic_longest_perm(J, N))
    if s > 0:
        return AlgebraElement.monomial(parabolic_longest_perm(J, N))
    return factors_element([(i, -1) for i in word], N)


def diagram_LR(D) -> tuple:
    D = SignedDiagram.parse(D)
    L, R = diagram_factors(D)
    return factors_element(L, D.N), factors_element(R, D.N)


def diagram_demipotent(D, opposite: bool = False) -> AlgebraElement:
    """C_D = L_D R_D, or the opposite C'_D = R_D L_D."""
    D = SignedDiagram.parse(D)
    L, R = diagram_factors(D)
    return factors_element(R + L if opposite else L + R, D.N)


def masked_factors(word: Sequence[int], D) -> list:
    D = SignedDiagram.parse(D)
    return [(i, D.sign(i)) for i in word]


def masked_word(word: Sequence[int], D) -> AlgebraElement:
    """prod pi_{w_k}^{sign of w_k in D}, with pi^- = 1 - pi."""
    D = SignedDiagram.parse(D)
    return factors_element(masked_factors(word, D), D.N)


def universal_word(N: int) -> tuple:
    return tuple(range(1, N)) + tuple(range(N - 2, 0, -1))


def _stabilize_factors(factors, N: int, max_power: int):
    """(C^k as a vector, k) for the element C given as a factor list."""
    sp = space(N)
    cur = sp.apply_factors(sp.unit(0), factors)
    for k in range(1, max_power + 1):
        nxt = sp.apply_factors(cur, factors)
        if np.array_equal(nxt, cur):
            return cur, k
        cur = nxt
    raise NotDemipotent(f"powers did not stabilize within {max_power}")


def idempotent_from(C: AlgebraElement, max_power: int | None = None) -> tuple:
    """(C^k, k) for the least k with C^k = C^(k+1)."""
    max_power = max_power if max_power is not None else max(C.N, 2) + 2
    cur = C
    for k in range(1, max_power + 1):
        nxt = cur * C
        if nxt == cur:
            return cur, k
        cur = nxt
    raise NotDemipotent(f"powers did not stabilize within {max_power}")


def diagram_idempotent(D, max_power: int | None = None) -> tuple:
    """(I_D, nilpotence degree of C_D)."""
    D = SignedDiagram.parse(D)
    L, R = diagram_factors(D)
    v, k = _stabilize_factors(L + R, D.N, max_power or max(D.N, 2) + 2)
    return AlgebraElement.from_vector(D.N, v), k


def nilpotence_degrees(N: int) -> dict:
    return {str(D): diagram_idempotent(D)[1] for D in all_diagrams(N)}


@dataclass
class IdempotentFamily:
    N: int
    diagrams: list
    idempotents: list
    degrees: list

    def items(self):
        return list(zip(self.diagrams, self.idempotents))


def idempotent_family(N: int, verify: bool = True, max_N: int = 8) -> IdempotentFamily:
    """All I_D for S_N; optionally checks idempotence, pairwise orthogonality and sum = 1."""
    from .errors import SizeLimit
    if N > max_N:
        raise SizeLimit(f"N={N} exceeds the rank ceiling {max_N} (raise max_N to override)")
    sp = space(N)
    Ds = all_diagrams(N)
    vecs, degs, facts = [], [], []
    for D in Ds:
        L, R = diagram_factors(D)
        v, k = _stabilize_factors(L + R, N, max(N, 2) + 2)
        vecs.append(v)
        degs.append(k)
        facts.append(L + R)
    if verify:
        total = sum(vecs[1:], vecs[0].copy())
        if not np.array_equal(total, sp.unit(0)):
            raise VerificationFailure("idempotents do not sum to 1")
        for a, va in enumerate(vecs):
            for b in range(len(Ds)):
                prod = va
                for _ in range(degs[b]):
                    prod = sp.apply_factors(prod, facts[b])
                expect = va if a == b else None
                if expect is None:
                    if np.any(prod):
                        raise VerificationFailure(f"I_{Ds[a]} I_{Ds[b]} != 0")
                elif not np.array_equal(prod, expect):
                    raise VerificationFailure(f"I_{Ds[a]} is not idempotent")
    return IdempotentFamily(N, Ds, [AlgebraElement.from_vector(N, v) for v in vecs], degs)


def check_universal_word(N: int) -> dict:
    """Compare the idempotents of the masked words u_N^D with the I_D."""
    word = universal_word(N) if N > 1 else ()
    rows = []
    for D in all_diagrams(N):
        I_D, _ = diagram_idempotent(D)
        try:
            v, k = _stabilize_factors(masked_factors(word, D), N, 2 * N + 2)
            ok = AlgebraElement.from_vector(N, v) == I_D
            rows.append({"diagram": str(D), "demipotent": True, "degree": k, "matches": ok})
        except NotDemipotent:
            rows.append({"diagram": str(D), "demipotent": False, "degree": None, "matches": False})
    failures = [r["diagram"] for r in rows if not r["matches"]]
    return {"N": N, "word": list(word), "total": len(rows), "matched": len(rows) - len(failures),
            "failures": failures, "rows": rows}


def degree_bound(D) -> int:
    """1 + n - k, k the longest prefix with at most one sign change (or the sibling of one).

    The prefix demipotent is idempotent and each further branching raises the
    degree by at most one.

    >>> degree_bound("+-++"), degree_bound("++-+++")
    (2, 3)
    """
    D = SignedDiagram.parse(D)
    n = len(D)
    k = 0
    for j in range(1, n + 1):
        E = D.prefix(j)
        if E.sign_changes() <= 1 or E.sibling().sign_changes() <= 1:
            k = j
    return 1 + n - k


def triangularity_report(D, elements=None) -> list:
    """Violations of: C_D m = lambda m + (terms strictly above m), lambda in {0,1}.

    lambda must be 1 exactly when the left descent set of m is the plus-node set of D.
    """
    D = SignedDiagram.parse(D)
    N = D.N
    sp = space(N)
    L, R = diagram_factors(D)
    vC = sp.apply_factors(sp.unit(0), L + R)
    plus = D.plus_nodes()
    bad = []
    for k, vec in sp.right_monomials(vC):
        m = sp.perms[k]
        lam = int(vec[k])
        want = 1 if descents(m, "left") == plus else 0
        if lam != want:
            bad.append((tuple(m), "diagonal", lam))
        lm = sp.lengths[k]
        minv = m.inverse()
        for j in np.nonzero(vec)[0]:
            if j == k:
                continue
            x = sp.perms[j]
            # x must be u*m with lengths adding
            if sp.lengths[j] <= lm or length(x * minv) != sp.lengths[j] - lm:
                bad.append((tuple(m), "support", tuple(x)))
    return bad
