"""Crystal graphs: letters of types A_n and B_n, tableaux, tensor products.

Tableaux are written row by row from the top ([[1,2],[2]] has top row 1 2).
Crystal operators act on the reading word (rows from the bottom up, each
left to right) through the signature rule: each letter contributes
'+' * phi_i then '-' * eps_i, adjacent "-+" pairs cancel, f_i changes the
letter of the rightmost surviving '+', e_i the letter of the leftmost
surviving '-'. For two letters a b this is the tensor rule applied to b (x) a.

>>> B = tableau_crystal(2, (2, 1))
>>> len(B), check_stembridge(B)[0]
(8, True)
>>> stembridge_statistics(B, Tableau([[1, 2], [2]]), 1, 2)["triple"]
(-1, 0, -1)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import ShapeTooTall, SizeLimit, TypeMismatch, VerificationFailure


# ---------------------------------------------------------------- Cartan data

@dataclass(frozen=True)
class CartanType:
    letter: str
    n: int

    @classmethod
    def parse(cls, text) -> "CartanType":
        if isinstance(text, CartanType):
            return text
        s = str(text).replace("_", "").strip().upper()
        letter, n = s[0], int(s[1:])
        if letter not in "AB" or n < 1 or (letter == "B" and n < 2):
            raise TypeMismatch(f"unsupported Cartan type {text!r}")
        return cls(letter, n)

    def __str__(self):
        return f"{self.letter}{self.n}"

    @property
    def index_set(self) -> tuple:
        return tuple(range(1, self.n + 1))

    @property
    def weight_dim(self) -> int:
        return self.n + 1 if self.letter == "A" else self.n

    def pairing(self, i: int, wt: Sequence[int]) -> int:
        """<h_i, wt>."""
        if self.letter == "B" and i == self.n:
            return 2 * wt[i - 1]
        return wt[i - 1] - wt[i]

    def simple_root(self, i: int) -> tuple:
        v = [0] * self.weight_dim
        v[i - 1] = 1
        if not (self.letter == "B" and i == self.n):
            v[i] = -1
        return tuple(v)

    def cartan(self, i: int, j: int) -> int:
        """A_ij = <h_i, alpha_j>."""
        return self.pairing(i, self.simple_root(j))

    def simply_laced(self) -> bool:
        return self.letter == "A"


# ---------------------------------------------------------------- letters

def letters(ct: CartanType) -> list:
    """Letters in increasing order: 1..n+1 for A_n; 1..n, 0, -n..-1 for B_n."""
    if ct.letter == "A":
        return list(range(1, ct.n + 2))
    return list(range(1, ct.n + 1)) + [0] + list(range(-ct.n, 0))


def letter_f(ct: CartanType, a: int, i: int):
    if ct.letter == "A":
        return a + 1 if a == i else None
    n = ct.n
    if i < n:
        if a == i:
            return i + 1
        if a == -(i + 1):
            return -i
        return None
    if a == n:
        return 0
    if a == 0:
        return -n
    return None


def letter_e(ct: CartanType, a: int, i: int):
    for b in letters(ct):
        if letter_f(ct, b, i) == a:
            return b
    return None


def letter_eps_phi(ct: CartanType, a: int, i: int) -> tuple:
    eps, b = 0, letter_e(ct, a, i)
    while b is not None:
        eps += 1
        b = letter_e(ct, b, i)
    phi, b = 0, letter_f(ct, a, i)
    while b is not None:
        phi += 1
        b = letter_f(ct, b, i)
    return eps, phi


def letter_weight(ct: CartanType, a: int) -> tuple:
    v = [0] * ct.weight_dim
    if a > 0:
        v[a - 1] += 1
    elif a < 0:
        v[-a - 1] -= 1
    return tuple(v)


def _signature(ct: CartanType, word: Sequence[int], i: int) -> tuple:
    """(surviving '+' positions, surviving '-' positions) after cancelling '-+' pairs."""
    plus, minus = [], []
    for pos, a in enumerate(word):
        eps, phi = letter_eps_phi(ct, a, i)
        for _ in range(phi):
            if minus:
                minus.pop()         # a '+' cancels the nearest open '-'
            else:
                plus.append(pos)
        minus.extend([pos] * eps)
    return plus, minus


def word_f(ct: CartanType, word: Sequence[int], i: int):
    plus, _ = _signature(ct, word, i)
    if not plus:
        return None
    w = list(word)
    w[plus[-1]] = letter_f(ct, w[plus[-1]], i)
    return tuple(w)


def word_e(ct: CartanType, word: Sequence[int], i: int):
    _, minus = _signature(ct, word, i)
    if not minus:
        return None
    w = list(word)
    w[minus[0]] = letter_e(ct, w[minus[0]], i)
    return tuple(w)


def word_eps_phi(ct: CartanType, word: Sequence[int], i: int) -> tuple:
    plus, minus = _signature(ct, word, i)
    return len(minus), len(plus)


# ---------------------------------------------------------------- tableaux

class Tableau(tuple):
    """Rows from the top, e.g. Tableau([[1, 2], [2]])."""

    def __new__(cls, rows: Iterable[Iterable[int]]):
        return super().__new__(cls, (tuple(int(v) for v in r) for r in rows))

    def __repr__(self):
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self) + "]"

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self)

    def reading_word(self) -> tuple:
        return tuple(v for r in reversed(self) for v in r)

    def with_word(self, word: Sequence[int]) -> "Tableau":
        rows, pos = [None] * len(self), 0
        for k in range(len(self) - 1, -1, -1):
            rows[k] = word[pos:pos + len(self[k])]
            pos += len(self[k])
        return Tableau(rows)

    def weight(self, ct: CartanType) -> tuple:
        v = [0] * ct.weight_dim
        for a in self.reading_word():
            for t, x in enumerate(letter_weight(ct, a)):
                v[t] += x
        return tuple(v)

    def is_semistandard(self) -> bool:
        if any(a > b for r in self for a, b in zip(r, r[1:])):
            return False
        for r1, r2 in zip(self, self[1:]):
            if len(r2) > len(r1) or any(r2[c] <= r1[c] for c in range(len(r2))):
                return False
        return True


class WordCrystal:
    """Crystal operators on tableaux of a given type, without enumerating the crystal."""

    def __init__(self, ctype):
        self.ctype = CartanType.parse(ctype)

    def f(self, b: Tableau, i: int):
        w = word_f(self.ctype, b.reading_word(), i)
        return None if w is None else b.with_word(w)

    def e(self, b: Tableau, i: int):
        w = word_e(self.ctype, b.reading_word(), i)
        return None if w is None else b.with_word(w)

    def epsilon(self, b: Tableau, i: int) -> int:
        return word_eps_phi(self.ctype, b.reading_word(), i)[0]

    def phi(self, b: Tableau, i: int) -> int:
        return word_eps_phi(self.ctype, b.reading_word(), i)[1]

    def weight(self, b: Tableau) -> tuple:
        return b.weight(self.ctype)

    @property
    def index_set(self):
        return self.ctype.index_set


# ---------------------------------------------------------------- explicit graphs

class CrystalGraph:
    """Finite crystal with explicit f-edges per color."""

    def __init__(self, ctype, vertices: Sequence[Hashable], f_edges: dict, weight: dict,
                 validate: bool = True, name: str = ""):
        self.ctype = CartanType.parse(ctype)
        self.vertices = list(vertices)
        self.vindex = {v: k for k, v in enumerate(self.vertices)}
        self.f_edges = {i: dict(f_edges.get(i, {})) for i in self.ctype.index_set}
        self.e_edges = {i: {} for i in self.ctype.index_set}
        for i, fe in self.f_edges.items():
            for a, b in fe.items():
                if b in self.e_edges[i]:
                    raise VerificationFailure(f"two {i}-edges enter {b!r}")
                self.e_edges[i][b] = a
        self.wt = dict(weight)
        self.name = name
        if validate:
            problems = self.axiom_violations()
            if problems:
                raise VerificationFailure(f"crystal axioms fail: {problems[:3]}")

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def index_set(self):
        return self.ctype.index_set

    def f(self, b, i):
        return self.f_edges[i].get(b)

    def e(self, b, i):
        return self.e_edges[i].get(b)

    def epsilon(self, b, i) -> int:
        k, seen = 0, {b}
        b = self.e(b, i)
        while b is not None:
            if b in seen:
                raise VerificationFailure("cycle in an i-string")
            seen.add(b)
            k += 1
            b = self.e(b, i)
        return k

    def phi(self, b, i) -> int:
        k, seen = 0, {b}
        b = self.f(b, i)
        while b is not None:
            if b in seen:
                raise VerificationFailure("cycle in an i-string")
            seen.add(b)
            k += 1
            b = self.f(b, i)
        return k

    def weight(self, b) -> tuple:
        return self.wt[b]

    def axiom_violations(self) -> list:
        bad = []
        ct = self.ctype
        for i in self.index_set:
            root = ct.simple_root(i)
            for a, b in self.f_edges[i].items():
                if a not in self.vindex or b not in self.vindex:
                    bad.append(("edge leaves vertex set", i, a, b))
                    continue
                if tuple(x - y for x, y in zip(self.wt[a], root)) != tuple(self.wt[b]):
                    bad.append(("weight", i, a, b))
            for b in self.vertices:
                try:
                    if self.phi(b, i) - self.epsilon(b, i) != ct.pairing(i, self.wt[b]):
                        bad.append(("phi - eps", i, b))
                except VerificationFailure:
                    bad.append(("cycle", i, b))
        return bad

    def highest_weight_vertices(self) -> list:
        return [b for b in self.vertices if all(self.e(b, i) is None for i in self.index_set)]

    def components(self, colors=None) -> list:
        colors = self.index_set if colors is None else colors
        parent = {v: v for v in self.vertices}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in colors:
            for a, b in self.f_edges.get(i, {}).items():
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        groups = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values(), key=lambda g: self.vindex[g[0]])

    def weyl_reflection(self, b, i):
        """Flip b within its i-string."""
        k = self.phi(b, i) - self.epsilon(b, i)
        op = self.f if k > 0 else self.e
        for _ in range(abs(k)):
            b = op(b, i)
        return b

    def to_dot(self) -> str:
        out = [f'digraph "{self.name or self.ctype}" {{']
        for v in self.vertices:
            out.append(f'  "{v!r}";')
        for i in self.index_set:
            for a, b in self.f_edges[i].items():
                out.append(f'  "{a!r}" -> "{b!r}" [label="{i}"];')
        out.append("}")
        return "\n".join(out)

    def to_json(self) -> str:
        return json.dumps({
            "type": str(self.ctype),
            "vertices": [{"id": repr(v), "weight": list(self.wt[v])} for v in self.vertices],
            "edges": [{"from": repr(a), "to": repr(b), "color": i}
                      for i in self.index_set for a, b in self.f_edges[i].items()],
        })


def semistandard_tableaux(shape: Sequence[int], max_entry: int) -> list:
    shape = [r for r in shape if r > 0]
    cells = [(r, c) for r, L in enumerate(shape) for c in range(L)]
    grid = [[0] * L for L in shape]
    out = []

    def rec(t):
        if t == len(cells):
            out.append(Tableau(grid))
            return
        r, c = cells[t]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, max_entry + 1):
            grid[r][c] = v
            rec(t + 1)
        grid[r][c] = 0

    rec(0)
    return out


def tableau_crystal(n: int, shape: Sequence[int], validate: bool = True) -> CrystalGraph:
    """Type A_n crystal on semistandard tableaux of the given shape, entries at most n + 1."""
    shape = tuple(r for r in shape if r > 0)
    if len(shape) > n + 1:
        raise ShapeTooTall(f"shape {shape} has more than {n + 1} rows")
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise ShapeTooTall(f"{shape} is not a partition")
    ct = CartanType("A", n)
    W = WordCrystal(ct)
    verts = semistandard_tableaux(shape, n + 1)
    vset = set(verts)
    edges = {i: {} for i in ct.index_set}
    for b in verts:
        for i in ct.index_set:
            c = W.f(b, i)
            if c is not None:
                if c not in vset:
                    raise VerificationFailure(f"f_{i}{b} = {c} is not semistandard")
                edges[i][b] = c
    B = CrystalGraph(ct, verts, edges, {b: b.weight(ct) for b in verts}, validate=validate,
                     name=f"A{n}{list(shape)}")
    if validate:
        if len(B.components()) != 1 or len(B.highest_weight_vertices()) != 1:
            raise VerificationFailure("tableau crystal is not connected with one highest weight")
    return B


def string_crystal(j: int) -> CrystalGraph:
    """A_1 crystal B(j) on 0..j; x stands for f^x u."""
    return CrystalGraph("A1", list(range(j + 1)), {1: {x: x + 1 for x in range(j)}},
                        {x: (j - x, x) for x in range(j + 1)}, name=f"B({j})")


def trivial_crystal(ctype) -> CrystalGraph:
    ct = CartanType.parse(ctype)
    return CrystalGraph(ct, ["*"], {}, {"*": (0,) * ct.weight_dim}, name="trivial")


def tensor(B1: CrystalGraph, B2: CrystalGraph) -> CrystalGraph:
    """B1 (x) B2: f_i acts on the left factor when phi_i(b1) > eps_i(b2)."""
    if B1.ctype != B2.ctype:
        raise TypeMismatch(f"cannot tensor {B1.ctype} with {B2.ctype}")
    verts = [(a, b) for a in B1.vertices for b in B2.vertices]
    edges = {i: {} for i in B1.index_set}
    for a, b in verts:
        for i in B1.index_set:
            if B1.phi(a, i) > B2.epsilon(b, i):
                fa = B1.f(a, i)
                t = None if fa is None else (fa, b)
            else:
                fb = B2.f(b, i)
                t = None if fb is None else (a, fb)
            if t is not None:
                edges[i][(a, b)] = t
    wt = {(a, b): tuple(x + y for x, y in zip(B1.wt[a], B2.wt[b])) for a, b in verts}
    return CrystalGraph(B1.ctype, verts, edges, wt, name=f"{B1.name}*{B2.name}")


# ---------------------------------------------------------------- Stembridge

def stembridge_statistics(B, b, i: int, j: int) -> dict:
    """The four local differences and the triple, with 0 (or None) when e_i / f_i is undefined."""
    ei, fi = B.e(b, i), B.f(b, i)
    d_depth = 0 if ei is None else B.epsilon(b, j) - B.epsilon(ei, j)
    d_rise = 0 if ei is None else B.phi(ei, j) - B.phi(b, j)
    n_depth = 0 if fi is None else B.epsilon(fi, j) - B.epsilon(b, j)
    n_rise = 0 if fi is None else B.phi(b, j) - B.phi(fi, j)
    triple = None if ei is None else (B.ctype.cartan(j, i), d_depth, d_rise)
    return {"delta_depth": d_depth, "delta_rise": d_rise, "del_depth": n_depth,
            "del_rise": n_rise, "triple": triple}


def _chain(B, b, ops):
    for op, i in ops:
        if b is None:
            return None
        b = (B.e if op == "e" else B.f)(b, i)
    return b


def check_stembridge(B: CrystalGraph, index_set=None, verbose: bool = False) -> tuple:
    """(passes, failures); failures are (vertex, i, j, axiom). Both orders of each pair are checked."""
    idx = tuple(index_set) if index_set is not None else B.index_set
    log = []
    for x in B.vertices:
        for i in idx:
            for j in idx:
                if i == j or B.e(x, i) is None or B.e(x, j) is None:
                    continue
                st = stembridge_statistics(B, x, i, j)
                a, dd, dr = st["triple"]
                if a != dd + dr or dd > 0 or dr > 0:
                    log.append((x, i, j, "P3/P4"))
                if dd == 0:
                    y = _chain(B, x, [("e", i), ("e", j)])
                    y2 = _chain(B, x, [("e", j), ("e", i)])
                    if y is None or y != y2 or stembridge_statistics(B, y, j, i)["del_rise"] != 0:
                        log.append((x, i, j, "P5"))
                if dd == -1 and stembridge_statistics(B, x, j, i)["delta_depth"] == -1:
                    y1 = _chain(B, x, [("e", j), ("e", i), ("e", i), ("e", j)])
                    y2 = _chain(B, x, [("e", i), ("e", j), ("e", j), ("e", i)])
                    if (y1 is None or y2 is None or y1 != y2
                            or stembridge_statistics(B, y1, j, i)["del_rise"] != -1
                            or stembridge_statistics(B, y2, i, j)["del_rise"] != -1):
                        log.append((x, i, j, "P6"))
    if verbose:
        for entry in log:
            print("stembridge failure:", entry)
    return not log, log


def recolor_edge(B: CrystalGraph, i: int, j: int, which: int = 0) -> CrystalGraph:
    """Copy of B with one i-edge moved to color j (for mutation tests)."""
    edges = {c: dict(B.f_edges[c]) for c in B.index_set}
    for a, b in sorted(edges[i].items(), key=lambda ab: B.vindex[ab[0]])[which:]:
        if a not in edges[j] and b not in set(edges[j].values()):
            del edges[i][a]
            edges[j][a] = b
            break
    else:
        raise VerificationFailure("no edge can be recolored")
    return CrystalGraph(B.ctype, B.vertices, edges, B.wt, validate=False, name=B.name + "~")


# ---------------------------------------------------------------- promotion

def _rotate(wt):
    return (wt[-1],) + tuple(wt[:-1])


def promotion_search(B: CrystalGraph, max_size: int = 200) -> list:
    """All bijections pr with pr f_i = f_{i+1} pr (1 <= i < n), rotated weights and pr^(n+1) = id."""
    ct = B.ctype
    if ct.letter != "A":
        raise TypeMismatch("promotion search needs type A")
    if len(B) > max_size:
        raise SizeLimit(f"{len(B)} vertices exceed {max_size}")
    n = ct.n
    verts = B.vertices
    by_wt = {}
    for v in verts:
        by_wt.setdefault(B.wt[v], []).append(v)
    results = []

    def propagate(pr, used, b, c):
        stack = [(b, c)]
        added = []
        while stack:
            b, c = stack.pop()
            if b in pr:
                if pr[b] != c:
                    return added, False
                continue
            if c in used or B.wt[c] != _rotate(B.wt[b]):
                return added, False
            pr[b] = c
            used.add(c)
            added.append(b)
            for i in range(1, n):
                for op in (B.f, B.e):
                    nb, nc = op(b, i), op(c, i + 1)
                    if (nb is None) != (nc is None):
                        return added, False
                    if nb is not None:
                        stack.append((nb, nc))
        return added, True

    def rec(pr, used):
        free = next((v for v in verts if v not in pr), None)
        if free is None:
            ok = True
            for v in verts:
                w = v
                for _ in range(n + 1):
                    w = pr[w]
                if w != v:
                    ok = False
                    break
            if ok:
                results.append(dict(pr))
            return
        for c in by_wt.get(_rotate(B.wt[free]), []):
            if c in used:
                continue
            added, ok = propagate(pr, used, free, c)
            if ok:
                rec(pr, used)
            for v in added:
                used.discard(pr.pop(v))

    rec({}, set())
    out = []
    for pr in results:
        inv = {c: b for b, c in pr.items()}
        zero = {}
        for b in verts:
            t = B.f(inv[b], n)
            if t is not None:
                zero[b] = pr[t]
        affine = CrystalGraph(ct, verts, dict(B.f_edges), B.wt, validate=False)
        affine.f_edges[0] = zero
        out.append({"pr": pr, "zero_edges": zero,
                    "connected": len(affine.components(colors=(0,) + ct.index_set)) == 1})
    return out
