"""Finite posets and the monoid OR(P) of regressive order preserving maps.

Functions act on the right: (f*g)(x) = g(f(x)).

>>> P = chain(3)
>>> len(generate_orp(P)), len(orp_idempotents(P))
(5, 4)
>>> f = P.function([1, 1, 2])
>>> lf, rf = lfix_rfix(P, f)
>>> P.image_labels(lf), P.image_labels(rf)
(['1', '3'], ['1', '2'])
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (InvalidElement, InvalidExtension, NotComparable, NotIdempotent,
                     NotSemilattice, SizeLimit, VerificationFailure)
from .jtrivial import FiniteMonoid, MonoidAlgebraElement, omega


def _label_key(s: str):
    try:
        return (0, int(s), s)
    except ValueError:
        return (1, 0, s)


@dataclass(frozen=True)
class OrpFunction:
    """values[k] is the index of f(element k)."""

    values: tuple

    def __call__(self, k: int) -> int:
        return self.values[k]

    def then(self, g: "OrpFunction") -> "OrpFunction":
        """self * g: apply self, then g."""
        return OrpFunction(tuple(g.values[v] for v in self.values))

    def image(self) -> frozenset:
        return frozenset(self.values)

    def is_idempotent(self) -> bool:
        return self.then(self) == self


class Poset:
    """A finite poset on string labels, stored as a reachability matrix."""

    def __init__(self, labels: Iterable[str], relations: Iterable[tuple] = (), name: str = ""):
        self.labels = [str(a) for a in labels]
        if len(set(self.labels)) != len(self.labels):
            raise InvalidElement("duplicate poset labels")
        self.name = name
        self.index = {a: k for k, a in enumerate(self.labels)}
        n = len(self.labels)
        leq = [[i == j for j in range(n)] for i in range(n)]
        for a, b in relations:
            leq[self.index[str(a)]][self.index[str(b)]] = True
        for k in range(n):          # transitive closure
            for i in range(n):
                if leq[i][k]:
                    for j in range(n):
                        if leq[k][j]:
                            leq[i][j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if leq[i][j] and leq[j][i]:
                    raise InvalidElement(f"relations form a cycle through {self.labels[i]} and {self.labels[j]}")
        self.leq_m = tuple(tuple(r) for r in leq)
        self.up = [sum(1 << j for j in range(n) if leq[i][j]) for i in range(n)]
        self.down = [sum(1 << j for j in range(n) if leq[j][i]) for i in range(n)]
        self._joins = None

    # ---- basics
    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"Poset({self.name or self.labels})"

    def leq(self, i: int, j: int) -> bool:
        return self.leq_m[i][j]

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq_m[i][j]

    def minimal(self) -> list:
        return [i for i in range(len(self)) if self.down[i] == 1 << i]

    def covers(self) -> list:
        """Pairs (a, b) of indices with a covering b (b < a, nothing between)."""
        n = len(self)
        out = []
        for a in range(n):
            for b in range(n):
                if self.lt(b, a) and not any(self.lt(b, c) and self.lt(c, a) for c in range(n)):
                    out.append((a, b))
        return out

    def function(self, labels: Sequence) -> OrpFunction:
        """Build f from the list of images, listed in label order."""
        if len(labels) != len(self):
            raise InvalidElement("function needs one image per element")
        f = OrpFunction(tuple(self.index[str(v)] for v in labels))
        if not is_orp(self, f):
            raise InvalidElement(f"{list(labels)} is not regressive and order preserving")
        return f

    def show(self, f: OrpFunction) -> list:
        return [self.labels[v] for v in f.values]

    def image_labels(self, f: OrpFunction) -> list:
        return [self.labels[k] for k in sorted(f.image())]

    def mask_labels(self, mask: int) -> list:
        return [self.labels[k] for k in range(len(self)) if mask >> k & 1]

    # ---- joins and meets
    def joins_mask(self, S: int) -> int:
        """Bitmask of Joins(S): the minimal upper bounds (minimal elements when S is empty)."""
        if self._joins is None:
            self._joins = {}
        if S in self._joins:
            return self._joins[S]
        n = len(self)
        U = (1 << n) - 1
        for i in range(n):
            if S >> i & 1:
                U &= self.up[i]
        out = 0
        for z in range(n):
            if U >> z & 1 and not (self.down[z] & U & ~(1 << z)):
                out |= 1 << z
        self._joins[S] = out
        return out

    def join_closure(self, S: int) -> int:
        cur = S
        while True:
            nxt = cur
            sub = cur
            while True:
                nxt |= self.joins_mask(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & cur
            if nxt == cur:
                return cur
            cur = nxt

    def is_join_stable(self, I: int) -> bool:
        sub = I
        while True:
            if self.joins_mask(sub) & ~I:
                return False
            if sub == 0:
                return True
            sub = (sub - 1) & I

    def meet(self, x: int, y: int):
        lower = self.down[x] & self.down[y]
        cands = [z for z in range(len(self)) if lower >> z & 1 and (self.up[z] & lower) == 1 << z]
        return cands[0] if len(cands) == 1 else None

    def is_meet_semilattice(self) -> bool:
        n = len(self)
        return all(self.meet(x, y) is not None for x in range(n) for y in range(x + 1, n))

    def require_meet_semilattice(self) -> None:
        if not self.is_meet_semilattice():
            raise NotSemilattice(f"{self!r} is not a meet semilattice")

    # ---- linear extensions
    def default_extension(self) -> list:
        """The label-sorted topological order (the sorted order itself when it is an extension)."""
        n = len(self)
        indeg = [bin(self.down[i]).count("1") - 1 for i in range(n)]
        heap = [(_label_key(self.labels[i]), i) for i in range(n) if indeg[i] == 0]
        heapq.heapify(heap)
        out = []
        while heap:
            _, i = heapq.heappop(heap)
            out.append(i)
            for j in range(n):
                if self.lt(i, j):
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        heapq.heappush(heap, (_label_key(self.labels[j]), j))
        return out

    def extension(self, ext=None) -> list:
        """Validate a linear extension given by labels (or None for the default)."""
        if ext is None:
            return self.default_extension()
        idx = [self.index[str(a)] if str(a) in self.index else None for a in ext]
        if None in idx or sorted(idx) != list(range(len(self))):
            raise InvalidExtension("extension must list every element exactly once")
        pos = {k: p for p, k in enumerate(idx)}
        for a in range(len(self)):
            for b in range(len(self)):
                if self.lt(a, b) and pos[a] > pos[b]:
                    raise InvalidExtension(f"{self.labels[a]} < {self.labels[b]} but appears later")
        return idx

    def restrict(self, keep: Sequence[int]) -> "Poset":
        keep = list(keep)
        rel = [(self.labels[a], self.labels[b]) for a in keep for b in keep if self.lt(a, b)]
        return Poset([self.labels[k] for k in keep], rel)


# ---------------------------------------------------------------- parsing and catalog

def parse_poset(text: str, name: str = "") -> Poset:
    """Lines "a < b" (a chain "a < b < c" is allowed); a bare token declares an element; '#' comments."""
    labels, rel = [], []

    def add(t):
        if t not in labels:
            labels.append(t)

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ">" in line:
            raise InvalidElement(f"use '<' only: {raw!r}")
        parts = [p.strip() for p in line.split("<")]
        if any(not p or len(p.split()) != 1 for p in parts):
            raise InvalidElement(f"cannot parse poset line {raw!r}")
        for p in parts:
            add(p)
        rel += list(zip(parts, parts[1:]))
    return Poset(labels, rel, name=name)


def load_poset(path: str) -> Poset:
    with open(path) as fh:
        return parse_poset(fh.read(), name=path)


def chain(n: int) -> Poset:
    return Poset([str(i) for i in range(1, n + 1)], [(str(i), str(i + 1)) for i in range(1, n)], f"chain{n}")


def antichain(n: int) -> Poset:
    return Poset([str(i) for i in range(1, n + 1)], [], f"antichain{n}")


def boolean(k: int) -> Poset:
    subsets = [frozenset(c) for r in range(k + 1) for c in combinations("abc"[:k], r)]
    lab = {s: "".join(sorted(s)) or "0" for s in subsets}
    rel = [(lab[s], lab[t]) for s in subsets for t in subsets if s < t and len(t) == len(s) + 1]
    return Poset([lab[s] for s in subsets], rel, f"B{k}")


_FIXED = {
    "diamond": "0 < a < 1\n0 < b < 1",
    "M3": "0 < a < 1\n0 < b < 1\n0 < c < 1",
    "N5": "0 < a < b < 1\n0 < c < 1",
    "V": "0 < a\n0 < b",
    "wedge": "a < 1\nb < 1",
}


def catalog() -> dict:
    """Named posets used by the tests and the CLI."""
    out = {}
    for n in range(1, 7):
        out[f"chain{n}"] = chain(n)
    for n in range(1, 4):
        out[f"antichain{n}"] = antichain(n)
    out["B2"] = boolean(2)
    out["B3"] = boolean(3)
    for k, v in _FIXED.items():
        out[k] = parse_poset(v, name=k)
    return out


def get_poset(spec: str) -> Poset:
    """A catalog name, or a path to a poset file."""
    cat = catalog()
    if spec in cat:
        return cat[spec]
    return load_poset(spec)


# ---------------------------------------------------------------- OR(P)

def is_orp(P: Poset, f: OrpFunction) -> bool:
    n = len(P)
    if any(not P.leq(f(x), x) for x in range(n)):
        return False
    return all(P.leq(f(x), f(y)) for x in range(n) for y in range(n) if P.leq(x, y))


def all_orp_functions(P: Poset) -> list:
    n = len(P)
    order = P.default_extension()
    vals = [None] * n
    out = []

    def rec(t):
        if t == n:
            out.append(OrpFunction(tuple(vals)))
            return
        x = order[t]
        for y in range(n):
            if not P.leq(y, x):
                continue
            ok = True
            for s in range(t):
                z = order[s]
                if P.leq(z, x) and not P.leq(vals[z], y):
                    ok = False
                    break
            if ok:
                vals[x] = y
                rec(t + 1)
        vals[x] = None

    rec(0)
    return out


def generate_orp(P: Poset, max_size: int | None = None) -> FiniteMonoid:
    """OR(P) as a FiniteMonoid; |P| is capped at 8 for chains and 7 otherwise."""
    chainlike = all(P.leq(i, j) or P.leq(j, i) for i in range(len(P)) for j in range(len(P)))
    cap = max_size if max_size is not None else (8 if chainlike else 7)
    if len(P) > cap:
        raise SizeLimit(f"|P|={len(P)} exceeds the limit {cap}")
    elems = all_orp_functions(P)
    ident = OrpFunction(tuple(range(len(P))))
    labels = {f: "[" + ",".join(P.show(f)) + "]" for f in elems}
    return FiniteMonoid(elems, OrpFunction.then, ident, check=len(elems) <= 200, labels=labels)


def sup_map(P: Poset, I: int) -> OrpFunction:
    """x -> the unique maximal y in I below x."""
    vals = []
    for x in range(len(P)):
        below = P.down[x] & I
        tops = [y for y in range(len(P)) if below >> y & 1 and (P.up[y] & below) == 1 << y]
        if len(tops) != 1:
            raise VerificationFailure(f"sup over {P.mask_labels(I)} is not defined at {P.labels[x]}")
        vals.append(tops[0])
    return OrpFunction(tuple(vals))


def orp_idempotents(P: Poset) -> list:
    """(image labels, sup_I) for each I containing the minima and stable under joins."""
    n = len(P)
    mins = sum(1 << m for m in P.minimal())
    out = []
    for I in range(1 << n):
        if I & mins == mins and P.is_join_stable(I):
            out.append((P.mask_labels(I), sup_map(P, I)))
    return out


def lfix_rfix(P: Poset, f: OrpFunction) -> tuple:
    """Minimal idempotents e with e*f = f (lfix) and f*e = f (rfix)."""
    n = len(P)
    mins = sum(1 << m for m in P.minimal())
    im = 0
    for v in f.values:
        im |= 1 << v
    fmins = 0
    for x in range(n):
        if not any(P.lt(y, x) and f(y) == f(x) for y in range(n)):
            fmins |= 1 << x
    lf = sup_map(P, P.join_closure(fmins | mins))
    rf = sup_map(P, P.join_closure(im | mins))
    return lf, rf


def _bits(f: OrpFunction, ext: list) -> tuple:
    im = f.image()
    return tuple(1 if k in im else 0 for k in ext)


def cartan_triangularity_check(P: Poset, linear_extension=None, detail: bool = False):
    """im(lfix f) <=_lex im(rfix f) along the extension, with equality exactly on idempotents."""
    ext = P.extension(linear_extension)
    bad = []
    for f in all_orp_functions(P):
        lf, rf = lfix_rfix(P, f)
        a, b = _bits(lf, ext), _bits(rf, ext)
        if not (a <= b and ((a == b) == f.is_idempotent())):
            bad.append(P.show(f))
    return (not bad, bad) if detail else not bad


# ---------------------------------------------------------------- meet semilattices

def e_ab(L: Poset, a, b) -> OrpFunction:
    """x -> x meet b when x <= a, x otherwise. a, b are labels or indices."""
    L.require_meet_semilattice()
    a = a if isinstance(a, int) else L.index[str(a)]
    b = b if isinstance(b, int) else L.index[str(b)]
    if not L.leq(b, a):
        raise NotComparable(f"need {L.labels[a]} >= {L.labels[b]}")
    return OrpFunction(tuple(L.meet(x, b) if L.leq(x, a) else x for x in range(len(L))))


def compose_all(fs: Sequence[OrpFunction], n: int) -> OrpFunction:
    out = OrpFunction(tuple(range(n)))
    for f in fs:
        out = out.then(f)
    return out


def _cover_chain(L: Poset, a: int, b: int) -> list:
    """A saturated chain a = a0 > a1 > ... > ak = b, as cover pairs."""
    steps = []
    cur = a
    while cur != b:
        nxt = next(c for c in L.default_extension()[::-1]
                   if L.lt(c, cur) and L.leq(b, c)
                   and not any(L.lt(c, d) and L.lt(d, cur) for d in range(len(L))))
        steps.append((cur, nxt))
        cur = nxt
    return steps


def factor_idempotent(L: Poset, f: OrpFunction, linear_extension=None) -> list:
    """Cover pairs (a, b) (labels) such that the product of the e_{a,b} is f."""
    L.require_meet_semilattice()
    if not f.is_idempotent():
        raise NotIdempotent(f"{L.show(f)} is not idempotent")
    ext = L.extension(linear_extension)
    n = len(L)
    g = f
    peeled = []
    for a in reversed(ext):
        if g(a) != a:
            peeled.append((a, g(a)))
            g = OrpFunction(tuple(a if x == a else g(x) for x in range(n)))
    pairs = []
    for a, b in reversed(peeled):
        pairs += _cover_chain(L, a, b)
    if compose_all([e_ab(L, a, b) for a, b in pairs], n) != f:
        raise VerificationFailure("factorization does not recompose")
    return [(L.labels[a], L.labels[b]) for a, b in pairs]


@dataclass
class SemilatticeDiagram:
    """Signs along the extension: '-' when the element is in the image set, '+' otherwise."""

    signs: str
    image: list
    factors: list            # (a, b, sign) in L_D order
    C: MonoidAlgebraElement


def semilattice_demipotents(L: Poset, linear_extension=None, max_size: int = 8) -> dict:
    """Branch over valid diagrams, build C_D = L_D R_D in the algebra of OR(L) and test them."""
    L.require_meet_semilattice()
    if len(L) > max_size:
        raise SizeLimit(f"|L|={len(L)} exceeds {max_size}")
    ext = L.extension(linear_extension)
    M = generate_orp(L, max_size=max_size)
    one = MonoidAlgebraElement.one(M)
    n = len(L)

    leaves = []

    def rec(t, I, signs, facs, Lel, Rel):
        if t == n:
            leaves.append((signs, I, facs, Lel * Rel))
            return
        k = ext[t]
        prefix = 0
        for s in ext[:t + 1]:
            prefix |= 1 << s
        sub = I
        forced = False
        while True:
            # joins inside the restriction to the prefix
            U = prefix
            for i in range(n):
                if sub >> i & 1:
                    U &= L.up[i]
            mins = [z for z in range(n) if U >> z & 1 and not (L.down[z] & U & ~(1 << z))]
            if k in mins:
                forced = True
                break
            if sub == 0:
                break
            sub = (sub - 1) & I
        if forced:
            rec(t + 1, I | 1 << k, signs + "-", facs, Lel, Rel)
            return
        below = L.down[k] & I
        b = next(y for y in range(n) if below >> y & 1 and (L.up[y] & below) == 1 << y)
        e = MonoidAlgebraElement.basis(M, e_ab(L, k, b))
        rec(t + 1, I, signs + "+", facs + [(L.labels[k], L.labels[b], "+")], Lel * e, e * Rel)
        rec(t + 1, I | 1 << k, signs + "-", facs + [(L.labels[k], L.labels[b], "-")],
            Lel * (one - e), (one - e) * Rel)

    rec(0, 0, "", [], one, one)
    diagrams = [SemilatticeDiagram(s, L.mask_labels(I), f, C) for s, I, f, C in leaves]

    total = MonoidAlgebraElement(M)
    for d in diagrams:
        total = total + d.C
    idems, direct, demi = [], [], []
    for d in diagrams:
        sq = d.C * d.C
        direct.append(sq == d.C)
        cur, ok = d.C, False
        for _ in range(n + 2):
            nxt = cur * d.C
            if nxt == cur:
                ok = True
                break
            cur = nxt
        demi.append(ok)
        idems.append(cur)
    orth = all(not (idems[i] * idems[j]) for i in range(len(idems)) for j in range(len(idems)) if i != j)
    isum = MonoidAlgebraElement(M)
    for e in idems:
        isum = isum + e
    valid = sorted(lab for lab, _ in orp_idempotents(L))
    return {
        "diagrams": diagrams,
        "idempotents": idems,
        "sum_is_one": total == one,
        "all_demipotent": all(demi),
        "all_directly_idempotent": all(direct),
        "orthogonal": orth,
        "idempotents_sum_to_one": isum == one,
        "count_matches_idempotents": sorted(d.image for d in diagrams) == valid,
        "monoid": M,
    }


def ndpf_from_chain_signs(signs: str) -> str:
    """Chain diagram over elements 1..N to the node diagram over generators 1..N-1."""
    return "".join("+" if s == "+" else "-" for s in signs[1:])
