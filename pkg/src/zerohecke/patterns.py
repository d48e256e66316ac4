"""Pattern containment, width systems and factorization over a pattern.

An *instance* of a pattern sigma in x is a strictly increasing tuple of
(1-based) positions whose values are in the same relative order as sigma.

>>> x = Permutation([3, 4, 5, 2, 1, 6])
>>> len(contains_pattern(x, [2, 3, 1]))
6
>>> [p.positions for p in minimal_instances(x, [2, 3, 1])[0]]
[(2, 3, 4)]
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Sequence

from .errors import UnsupportedPattern, VerificationFailure
from .perms import Permutation, descents, length, standardize


@dataclass(frozen=True)
class PatternInstance:
    positions: tuple
    pattern: tuple

    def values(self, x) -> tuple:
        return tuple(x[p - 1] for p in self.positions)


def _as_tuple(sigma) -> tuple:
    return tuple(int(v) for v in sigma)


def contains_pattern(x: Sequence[int], sigma: Sequence[int]) -> list:
    """All instances of sigma in x, in lex order of positions (empty list if x avoids sigma)."""
    sigma = _as_tuple(sigma)
    k = len(sigma)
    out = []
    for pos in combinations(range(len(x)), k):
        if standardize([x[p] for p in pos]) == sigma:
            out.append(PatternInstance(tuple(p + 1 for p in pos), sigma))
    return out


def avoids(x: Sequence[int], sigma: Sequence[int]) -> bool:
    sigma = _as_tuple(sigma)
    k = len(sigma)
    # compare via argsort, cheaper than building instance objects
    order = sorted(range(k), key=lambda a: sigma[a])
    for pos in combinations(x, k):
        if all(pos[order[a]] < pos[order[a + 1]] for a in range(k - 1)):
            return False
    return True


# ---------------------------------------------------------------- width systems

@dataclass(frozen=True)
class WidthSystem:
    pattern: tuple
    width_of: Callable[[tuple], tuple]
    name: str = ""

    def __call__(self, positions: tuple) -> tuple:
        return self.width_of(tuple(positions))


def _w(fn, pattern, name):
    return WidthSystem(pattern, fn, name)


_BASE = {
    (1, 2): lambda P: (P[1] - P[0],),
    (2, 1): lambda P: (P[1] - P[0],),
    (2, 3, 1): lambda P: (P[2] - P[0], P[1] - P[0]),
    (3, 1, 2): lambda P: (P[2] - P[0], P[2] - P[1]),
    (3, 2, 1): lambda P: (P[1] - P[0], P[2] - P[1]),
    (2, 1, 3): lambda P: (P[2] - P[1], P[1] - P[0]),
    (1, 3, 2): lambda P: (P[1] - P[0], P[2] - P[1]),
    (4, 2, 3, 1): lambda P: (P[1] - P[0], P[2] - P[1], P[3] - P[2]),
    (4, 3, 2, 1): lambda P: (P[1] - P[0], P[2] - P[1], P[3] - P[2]),
}


def width_system(sigma) -> WidthSystem:
    """The registered width system for sigma.

    Base systems cover S_2, S_3 minus [123], [4231] and [4321]. Longer
    patterns are handled when they arise from a supported pattern by
    prepending the largest value(s) or appending the smallest value(s).
    """
    sigma = _as_tuple(sigma)
    if sigma in _BASE:
        return _w(_BASE[sigma], sigma, "base")
    K = len(sigma)
    if K >= 4:
        if sigma[0] == K:
            sub = width_system(standardize(sigma[1:]))
            return _w(lambda P: sub(P[1:]) + (P[-1] - P[0],), sigma, "plus")
        if sigma[-1] == 1:
            sub = width_system(standardize(sigma[:-1]))
            return _w(lambda P: sub(P[:-1]) + (P[-1] - P[0],), sigma, "minus")
        if K >= 5 and sigma[0] == K - 1 and sigma[1] == K:
            sub = width_system(standardize(sigma[2:]))
            return _w(lambda P: sub(P[2:]) + (P[-1] - P[0], P[2] - P[1]), sigma, "plusplus")
        if K >= 5 and sigma[-2:] == (1, 2):
            sub = width_system(standardize(sigma[:-2]))
            return _w(lambda P: sub(P[:-2]) + (P[-1] - P[0], P[-2] - P[-3]), sigma, "minusminus")
    raise UnsupportedPattern(f"no width system registered for pattern {list(sigma)}")


def is_supported(sigma) -> bool:
    try:
        width_system(sigma)
    except UnsupportedPattern:
        return False
    return True


def _minimal(instances, ws):
    if not instances:
        return []
    best = min(ws(p.positions) for p in instances)
    return [p for p in instances if ws(p.positions) == best]


def minimal_instances(x: Sequence[int], sigma_or_ws) -> tuple:
    """(globally minimal, locally minimal) instances of a pattern in x.

    An instance is locally minimal when it is minimal among the instances
    living inside the contiguous stretch of x it spans.
    """
    ws = sigma_or_ws if isinstance(sigma_or_ws, WidthSystem) else width_system(sigma_or_ws)
    sigma = ws.pattern
    inst = contains_pattern(x, sigma)
    glob = _minimal(inst, ws)
    local = []
    for p in inst:
        lo, hi = p.positions[0], p.positions[-1]
        window = x[lo - 1:hi]
        shifted = tuple(q - lo + 1 for q in p.positions)
        wmin = _minimal(contains_pattern(window, sigma), ws)
        if any(m.positions == shifted for m in wmin):
            local.append(p)
    return glob, local


# ---------------------------------------------------------------- factorization

@dataclass(frozen=True)
class Factorization:
    y: Permutation
    sigma_prime: Permutation
    z: Permutation
    shift: int
    instance: PatternInstance

    def product(self) -> Permutation:
        return self.y * self.sigma_prime * self.z


def j_shift(sigma, j: int, N: int) -> Permutation:
    """sigma acting on positions j..j+k-1 of S_N."""
    t = list(range(1, N + 1))
    for a, v in enumerate(sigma):
        t[j - 1 + a] = j - 1 + v
    return Permutation(t)


def _try_factor(x: Permutation, sigma, inst: PatternInstance, prefer_small: bool):
    P = inst.positions
    k = len(P)
    pset = set(P)
    small, large = [], []
    for t in range(P[0] + 1, P[-1]):
        if t in pset:
            continue
        xt = x[t - 1]
        left = [x[p - 1] for p in P if p < t]
        right = [x[p - 1] for p in P if p > t]
        is_small = xt < min(left)
        is_large = xt > max(right)
        if is_small and (prefer_small or not is_large):
            small.append(t)
        elif is_large:
            large.append(t)
        else:
            return None
    block = small + list(P) + large
    xs = list(x)
    xs[P[0] - 1:P[-1]] = [x[t - 1] for t in block]
    xp = Permutation(xs)
    z = xp.inverse() * x
    if length(x) != length(xp) + length(z):
        return None
    j = P[0] + len(small)
    sp = j_shift(sigma, j, len(x))
    y = xp * sp.inverse()
    if length(xp) != length(y) + length(sp):
        return None
    J = set(range(j, j + k - 1))
    if descents(y, "right") & J or descents(z, "left") & J:
        return None
    return Factorization(y, sp, z, j, inst)


def factor_over_pattern(x: Sequence[int], sigma) -> Optional[Factorization]:
    """Length-additive factorization x = y * sigma' * z over a pattern.

    sigma' is sigma shifted onto positions j..j+k-1, y has no right descents
    and z no left descents in J = {j, .., j+k-2}. Returns None when x avoids
    sigma and raises UnsupportedPattern outside the supported family.

    >>> f = factor_over_pattern(Permutation([3, 4, 5, 2, 1, 6]), [2, 3, 1])
    >>> f.sigma_prime, f.shift
    ([1,3,4,2,5,6], 2)
    """
    sigma = _as_tuple(sigma)
    ws = width_system(sigma)
    x = x if isinstance(x, Permutation) else Permutation(x)
    inst = contains_pattern(x, sigma)
    if not inst:
        return None
    glob, local = minimal_instances(x, ws)
    ordered = glob + [p for p in local if p not in glob]
    ordered += sorted((p for p in inst if p not in ordered), key=lambda p: (ws(p.positions), p.positions))
    for p in ordered:
        for prefer_small in (True, False):
            res = _try_factor(x, sigma, p, prefer_small)
            if res is not None:
                assert res.product() == x
                return res
    raise VerificationFailure(f"no length-additive factorization of {x} over {list(sigma)}")
