"""Non-decreasing parking functions and the quotient maps out of H_0(S_N).

Functions act on the right, so `compose(f, g)` applies f first.

>>> quotient_phi(Permutation([2, 4, 1, 5, 3]))
[1,1,1,3,3]
>>> p1, p2 = ndpf_generator(1, 3), ndpf_generator(2, 3)
>>> compose(p1, p2, p1) == compose(p2, p1)
True
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .errors import InvalidElement, RankMismatch, SizeLimit, TheoremViolation
from .jtrivial import FiniteMonoid, MonoidAlgebraElement, generate_monoid
from .patterns import avoids, contains_pattern, minimal_instances
from .perms import Permutation, all_perms, catalan, conjugate_by_longest, length, reduced_word


class NdpfFunction(tuple):
    """f(1..N) with f(i) <= i and f nondecreasing; prints as [1,1,2]."""

    def __new__(cls, values: Iterable[int], check: bool = True):
        self = super().__new__(cls, (int(v) for v in values))
        if check:
            for i, v in enumerate(self, 1):
                if not 1 <= v <= i:
                    raise InvalidElement(f"{list(self)} is not regressive at {i}")
            if any(a > b for a, b in zip(self, self[1:])):
                raise InvalidElement(f"{list(self)} is not nondecreasing")
        return self

    @property
    def N(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __repr__(self):
        return "[" + ",".join(map(str, self)) + "]"

    @classmethod
    def identity(cls, N: int) -> "NdpfFunction":
        return cls(range(1, N + 1), check=False)

    def then(self, g: "NdpfFunction") -> "NdpfFunction":
        if len(g) != len(self):
            raise RankMismatch("NDPF functions of different sizes")
        return NdpfFunction((g[v - 1] for v in self), check=False)


def ndpf_generator(i: int, N: int) -> NdpfFunction:
    """pi_i: i+1 -> i, everything else fixed."""
    if not 1 <= i < N:
        raise InvalidElement(f"generator index {i} out of range for N={N}")
    return NdpfFunction((i if j == i + 1 else j for j in range(1, N + 1)), check=False)


def compose(*fs: NdpfFunction) -> NdpfFunction:
    out = fs[0]
    for g in fs[1:]:
        out = out.then(g)
    return out


def ndpf_word(word: Sequence[int], N: int) -> NdpfFunction:
    out = NdpfFunction.identity(N)
    for i in word:
        out = out.then(ndpf_generator(i, N))
    return out


def all_ndpf(N: int) -> list:
    out = []

    def rec(prefix):
        if len(prefix) == N:
            out.append(NdpfFunction(prefix, check=False))
            return
        i = len(prefix) + 1
        for v in range(prefix[-1] if prefix else 1, i + 1):
            rec(prefix + [v])

    rec([])
    return out


def ndpf_monoid(N: int) -> FiniteMonoid:
    gens = [ndpf_generator(i, N) for i in range(1, N)]
    return generate_monoid(gens, NdpfFunction.then, NdpfFunction.identity(N))


# ---------------------------------------------------------------- quotients

def quotient_phi(x: Sequence[int]) -> NdpfFunction:
    """f(i) = min of x(i), ..., x(N)."""
    out = list(x)
    for i in range(len(out) - 2, -1, -1):
        out[i] = min(out[i], out[i + 1])
    return NdpfFunction(out, check=False)


def quotient_phi_algebraic(x: Permutation) -> NdpfFunction:
    """Send each pi_i to the NDPF generator; the quotient reverses products."""
    return ndpf_word(reduced_word(x)[::-1], len(x))


def quotient_psi_phi(x: Permutation) -> NdpfFunction:
    return quotient_phi(conjugate_by_longest(x))


def omega_map(x: Permutation) -> tuple:
    return quotient_phi(x), quotient_psi_phi(x)


@lru_cache(maxsize=None)
def _fibers(N: int, which: str) -> dict:
    fn = quotient_phi if which == "phi" else quotient_psi_phi
    out = defaultdict(list)
    for x in all_perms(N):
        out[fn(x)].append(x)
    return dict(out)


@dataclass
class Fiber:
    f: NdpfFunction
    members: list
    minimum: Permutation
    maximum: Permutation


def _analyse(f, members, max_pattern):
    by_len = sorted(members, key=lambda w: (length(w), tuple(w)))
    lo, hi = length(by_len[0]), length(by_len[-1])
    mins = [w for w in members if length(w) == lo]
    maxs = [w for w in members if length(w) == hi]
    av321 = [w for w in members if avoids(w, (3, 2, 1))]
    avmax = [w for w in members if avoids(w, max_pattern)]
    if len(mins) != 1 or av321 != mins:
        raise TheoremViolation(f"fiber of {f}: [321]-avoiders {av321}, minima {mins}")
    if len(maxs) != 1 or avmax != maxs:
        raise TheoremViolation(f"fiber of {f}: {list(max_pattern)}-avoiders {avmax}, maxima {maxs}")
    return Fiber(f, by_len, mins[0], maxs[0])


def fiber_phi(f: NdpfFunction) -> Fiber:
    """All x with phi(x) = f, with its [321]-avoiding minimum and [231]-avoiding maximum."""
    if len(f) > 8:
        raise SizeLimit("fiber enumeration is limited to N <= 8")
    members = _fibers(len(f), "phi").get(NdpfFunction(f), [])
    return _analyse(f, members, (2, 3, 1))


def fiber_psi_phi(f: NdpfFunction) -> Fiber:
    """Fiber of phi o Psi, with its [321]-avoiding minimum and [312]-avoiding maximum."""
    if len(f) > 8:
        raise SizeLimit("fiber enumeration is limited to N <= 8")
    members = _fibers(len(f), "psi").get(NdpfFunction(f), [])
    return _analyse(f, members, (3, 1, 2))


def all_fibers(N: int, which: str = "phi") -> list:
    an = fiber_phi if which == "phi" else fiber_psi_phi
    return [an(f) for f in sorted(_fibers(N, which))]


def straighten_231(x: Permutation):
    """Swap the first two entries of a globally minimal [231]-instance, or None."""
    glob, _ = minimal_instances(x, (2, 3, 1))
    if not glob:
        return None
    p, q, _r = glob[0].positions
    w = list(x)
    w[p - 1], w[q - 1] = w[q - 1], w[p - 1]
    return Permutation(w)


# ---------------------------------------------------------------- omega fibers

@dataclass
class FiberDigraph:
    N: int
    vertices: list
    edges: list
    components: list = field(default_factory=list)
    avoiders: list = field(default_factory=list)

    @property
    def bad(self) -> list:
        return [k for k, a in enumerate(self.avoiders) if len(a) != 1]

    def summary(self) -> list:
        return [{"component_id": k, "size": len(c),
                 "avoider": repr(a[0]) if len(a) == 1 else [repr(v) for v in a],
                 "members": [repr(v) for v in c]}
                for k, (c, a) in enumerate(zip(self.components, self.avoiders))]

    def to_json(self) -> str:
        return json.dumps(self.summary())

    def to_dot(self) -> str:
        lines = [f"digraph omega{self.N} {{"]
        for v in self.vertices:
            lines.append(f'  "{v!r}";')
        for a, b in self.edges:
            lines.append(f'  "{a!r}" -> "{b!r}";')
        lines.append("}")
        return "\n".join(lines)


def omega_fiber_digraph(N: int, max_N: int = 8) -> FiberDigraph:
    """Edges straighten each locally minimal [4231] into [4321]; components are the omega-fibers."""
    if N > max_N:
        raise SizeLimit(f"N={N} exceeds {max_N}")
    verts = sorted(all_perms(N), key=lambda w: (length(w), tuple(w)))
    idx = {v: k for k, v in enumerate(verts)}
    parent = list(range(len(verts)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    edges = []
    for x in verts:
        if N < 4 or not contains_pattern(x, (4, 2, 3, 1)):
            continue
        _, local = minimal_instances(x, (4, 2, 3, 1))
        for inst in local:
            q1, q2 = inst.positions[1], inst.positions[2]
            w = list(x)
            w[q1 - 1], w[q2 - 1] = w[q2 - 1], w[q1 - 1]
            y = Permutation(w)
            edges.append((x, y))
            ra, rb = find(idx[x]), find(idx[y])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups = defaultdict(list)
    for v in verts:
        groups[find(idx[v])].append(v)
    comps = [groups[k] for k in sorted(groups)]
    avoid = [[v for v in c if avoids(v, (4, 3, 2, 1))] for c in comps]
    return FiberDigraph(N, verts, edges, comps, avoid)


def omega_fiber_count(N: int) -> int:
    return len({omega_map(x) for x in all_perms(N)})


# ---------------------------------------------------------------- BNDPF

def bndpf_generators(N: int) -> list:
    """mu_i = pi_i pi_{2N-i} in NDPF_{2N}; mu_N is just pi_N."""
    M = 2 * N
    return [compose(ndpf_generator(i, M), ndpf_generator(M - i, M)) for i in range(1, N + 1)]


def bndpf_elements(N: int, max_N: int = 6) -> list:
    if N > max_N:
        raise SizeLimit(f"N={N} exceeds {max_N}; pass a larger max_N to opt in")
    ident = NdpfFunction.identity(2 * N)
    gens = bndpf_generators(N)
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x.then(g)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return order


def bndpf_formula(N: int) -> int:
    return sum(comb(N, j) ** 2 * catalan(j) for j in range(N + 1))


def bndpf_generate(N: int, max_N: int = 6) -> dict:
    elems = bndpf_elements(N, max_N)
    return {"N": N, "count": len(elems), "formula": bndpf_formula(N),
            "matches": len(elems) == bndpf_formula(N), "elements": elems}


# ---------------------------------------------------------------- demipotents

def ndpf_demipotent(D, M: FiniteMonoid | None = None) -> MonoidAlgebraElement:
    """C_D = prod_{i not in D, ascending} (1 - pi_i) * prod_{i in D, descending} pi_i."""
    from .algebra import SignedDiagram
    D = SignedDiagram.parse(D)
    N = D.N
    M = M or ndpf_monoid(N)
    one = MonoidAlgebraElement.one(M)
    out = one
    for i in range(1, N):
        if D.sign(i) < 0:
            out = out * (one - MonoidAlgebraElement.basis(M, ndpf_generator(i, N)))
    for i in range(N - 1, 0, -1):
        if D.sign(i) > 0:
            out = out * MonoidAlgebraElement.basis(M, ndpf_generator(i, N))
    return out


def ndpf_idempotent_report(N: int) -> dict:
    from .algebra import all_diagrams
    M = ndpf_monoid(N)
    Ds = all_diagrams(N)
    Cs = [ndpf_demipotent(D, M) for D in Ds]
    one = MonoidAlgebraElement.one(M)
    total = MonoidAlgebraElement(M)
    for C in Cs:
        total = total + C
    return {
        "N": N,
        "idempotent": all(C * C == C for C in Cs),
        "orthogonal": all(not (Cs[a] * Cs[b]) for a in range(len(Cs)) for b in range(len(Cs)) if a != b),
        "sum_is_one": total == one,
        "count": len(Cs),
    }
