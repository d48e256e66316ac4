from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zerohecke.algebra import (AlgebraElement, SignedDiagram, all_diagrams, check_universal_word,
                               degree_bound, diagram_LR, diagram_demipotent, diagram_factors,
                               diagram_idempotent, idempotent_family, idempotent_from, longest_signed,
                               masked_word, nilpotence_degrees, space, triangularity_report,
                               universal_word)
from zerohecke.errors import RankMismatch
from zerohecke.monoid import dynkin_automorphism, hecke_product, pi_word
from zerohecke.perms import Permutation, all_perms


def el(N, spec):
    """{'121': 1, '': -1} -> the corresponding algebra element."""
    return AlgebraElement(N, {pi_word([int(c) for c in w], N): c for w, c in spec.items()})


def naive_mul(a, b):
    t = {}
    for x, cx in a.terms.items():
        for y, cy in b.terms.items():
            xy = hecke_product(x, y)
            t[xy] = t.get(xy, 0) + cx * cy
    return AlgebraElement(a.N, t)


def naive_demipotent(D):
    """C_D from the definition, multiplying pi / (1 - pi) factors with the naive product."""
    D = SignedDiagram.parse(D)
    N = D.N
    out = AlgebraElement.one(N)
    L, R = diagram_factors(D)
    for i, s in L + R:
        f = AlgebraElement.pi([i], N) if s > 0 else AlgebraElement.pibar(i, N)
        out = naive_mul(out, f)
    return out


def vec(D, N=None):
    D = SignedDiagram.parse(D)
    sp = space(N or D.N)
    L, R = diagram_factors(D)
    return sp.apply_factors(sp.unit(0), L + R)


# Reference degrees for '+'-rooted diagrams.
DEGREES = {'+': 1, '++': 1, '+-': 1,
          '+++': 1, '++-': 1, '+-+': 1, '+--': 1,
          '++++': 1, '+++-': 1, '++-+': 1, '++--': 1, '+-++': 2, '+-+-': 2, '+--+': 1, '+---': 1,
          '+++++': 1, '++++-': 1, '+++-+': 1, '+++--': 1, '++-++': 2, '++-+-': 2, '++--+': 1,
          '++---': 1, '+-+++': 2, '+-++-': 2, '+-+-+': 2, '+-+--': 2, '+--++': 2, '+--+-': 2,
          '+---+': 1, '+----': 1}
# N = 7: both children of each key share the listed degree.
DEGREES7 = {'+++++': 1, '++++-': 1, '+++-+': 2, '+++--': 1, '++-++': 3, '++-+-': 2, '++--+': 2,
           '++---': 1, '+-+++': 2, '+-++-': 2, '+-+-+': 3, '+-+--': 2, '+--++': 2, '+--+-': 2,
           '+---+': 2, '+----': 1}


def test_basic_products():
    a = el(3, {"12": 2, "": -1})
    one = AlgebraElement.one(3)
    assert one * a == a and a * one == a
    assert AlgebraElement.pibar(1, 2) * AlgebraElement.pi([1], 2) == 0
    e = el(3, {"1": 1, "121": -1})
    assert e * e == e
    with pytest.raises(RankMismatch):
        AlgebraElement.one(2) * AlgebraElement.one(3)


@settings(max_examples=60, deadline=None)
@given(*[st.dictionaries(st.sampled_from(sorted(all_perms(4))), st.integers(-3, 3), max_size=6)] * 3)
def test_ring_axioms(ta, tb, tc):
    a, b, c = (AlgebraElement(4, t) for t in (ta, tb, tc))
    assert a * b == naive_mul(a, b)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_vector_engine_matches_naive_products():
    x = el(5, {w: (-1) ** k for k, w in enumerate(["", "1", "12", "34", "232", "1234", "4321"])})
    y = el(5, {w: k + 1 for k, w in enumerate(["", "2", "13", "343", "121", "24", "3412", "4"])})
    y = y * y * y
    assert len(x.terms) * len(y.terms) > 64
    assert x * y == naive_mul(x, y)


def test_longest_signed():
    assert longest_signed([], "+", 3) == 1 and longest_signed([], "-", 3) == 1
    assert longest_signed([1], "-", 3) == el(3, {"": 1, "1": -1})
    assert longest_signed([1, 2], "-", 3) == el(3, {"": 1, "1": -1, "2": -1, "12": 1, "21": 1, "121": -1})


N3_TABLE = {
    "++": ({"121": 1}, "π_121"),
    "+-": ({"1": 1, "121": -1}, "π_1 - π_121"),
    "-+": ({"2": 1, "12": -1, "21": -1, "121": 1}, "π_2 - π_12 - π_21 + π_121"),
    "--": ({"": 1, "1": -1, "2": -1, "12": 1, "21": 1, "121": -1}, "1 - π_1 - π_2 + π_12 + π_21 - π_121"),
}


@pytest.mark.parametrize("D", sorted(N3_TABLE))
def test_n3_table(D):
    spec, text = N3_TABLE[D]
    C = diagram_demipotent(D)
    assert C == el(3, spec)
    assert repr(C) == text
    assert C == naive_demipotent(D)


# the reversed-diagram table is indexed by signs read from node N-1 down to node 1
REVERSED_TABLE = {"++": {"212": 1}, "+-": {"2": 1, "212": -1},
                  "-+": {"1": 1, "12": -1, "21": -1, "212": 1},
                  "--": {"": 1, "1": -1, "2": -1, "12": 1, "21": 1, "212": -1}}


@pytest.mark.parametrize("T", sorted(REVERSED_TABLE))
def test_opposite_table(T):
    D = T[::-1]
    Cp = diagram_demipotent(D, opposite=True)
    assert Cp == el(3, REVERSED_TABLE[T])
    flipped = AlgebraElement(3, {dynkin_automorphism(w): c for w, c in diagram_demipotent(T).terms.items()})
    assert Cp == flipped


def test_L_R_and_palindrome():
    for D in all_diagrams(5):
        L, R = diagram_LR(D)
        assert L * R == diagram_demipotent(D)
        inv = lambda x: AlgebraElement(5, {w.inverse(): c for w, c in x.terms.items()})
        assert inv(L) == R
        C = diagram_demipotent(D)
        assert inv(C) == C


@pytest.mark.parametrize("N", range(2, 5))
def test_against_naive_definition(N):
    for D in all_diagrams(N):
        assert diagram_demipotent(D) == naive_demipotent(D)


def test_idempotent_from():
    assert idempotent_from(AlgebraElement.one(3)) == (AlgebraElement.one(3), 1)
    assert diagram_idempotent("+-++")[1] == 2
    assert diagram_idempotent("++-+++")[1] == 3


def test_family_small():
    fam = idempotent_family(2)
    assert set(map(repr, fam.idempotents)) == {"π_1", "1 - π_1"}
    fam = idempotent_family(3)
    for D, I in fam.items():
        assert I == el(3, N3_TABLE[str(D)][0])


@pytest.mark.parametrize("N", range(2, 7))
def test_branching_and_sum(N):
    sp = space(N)
    total = sp.zero()
    for D in all_diagrams(N):
        total += vec(D)
    assert np.array_equal(total, sp.unit(0))
    for D in all_diagrams(N - 1):
        assert np.array_equal(vec(D.child("+"), N) + vec(D.child("-"), N), vec(D, N))


@pytest.mark.parametrize("N", range(3, 7))
def test_sibling_rivalry(N):
    sp = space(N)
    for D in all_diagrams(N - 1):
        a, b = D.child("+"), D.child("-")
        fa, fb = (sum(diagram_factors(x), []) for x in (a, b))
        assert not np.any(sp.apply_factors(vec(a), fb))
        assert not np.any(sp.apply_factors(vec(b), fa))


@pytest.mark.parametrize("N", range(2, 6))
def test_triangularity(N):
    for D in all_diagrams(N):
        assert triangularity_report(D) == []


def test_nilpotence_reference_degrees():
    for N in range(2, 7):
        degs = nilpotence_degrees(N)
        for d, k in degs.items():
            if d.startswith("+"):
                assert DEGREES[d] == k, d
    degs7 = nilpotence_degrees(7)
    for key, k in DEGREES7.items():
        assert degs7[key + "+"] == k and degs7[key + "-"] == k


def test_census_counts():
    plus_half = lambda N: Counter(k for d, k in nilpotence_degrees(N).items() if d.startswith("+"))
    for N in range(2, 5):
        assert set(nilpotence_degrees(N).values()) == {1}
    assert plus_half(5)[2] == 2
    assert plus_half(6)[2] == 8
    assert plus_half(7)[3] == 4 and max(nilpotence_degrees(7).values()) == 3


def test_degree_bound_and_sibling_degrees():
    for N in range(2, 8):
        degs = nilpotence_degrees(N)
        for d, k in degs.items():
            assert k <= degree_bound(d)
            D = SignedDiagram.parse(d)
            assert degs[str(D.sibling())] == k
        if N >= 3:
            parent = nilpotence_degrees(N - 1)
            for d, k in degs.items():
                assert k - parent[d[:-1]] in (0, 1)


def test_psi_mirror_degrees():
    for N in range(2, 7):
        degs = nilpotence_degrees(N)
        for d, k in degs.items():
            assert degs[str(SignedDiagram.parse(d).flip())] == k


def test_prefix_product_equals_idempotent():
    for N in range(2, 7):
        sp = space(N)
        for D in all_diagrams(N):
            v = sp.unit(0)
            for k in range(1, N):
                v = sp.apply_factors(v, sum(diagram_factors(D.prefix(k)), []))
            I, _ = diagram_idempotent(D)
            assert AlgebraElement.from_vector(N, v) == I


def test_masked_words():
    assert masked_word([1], "+") == AlgebraElement.pi([1], 2)
    assert masked_word([1, 2, 1], "+-") == el(3, {"1": 1, "121": -1})
    assert universal_word(4) == (1, 2, 3, 2, 1)
    C = masked_word(universal_word(4), "-+-")
    I, _ = idempotent_from(C)
    assert I * I == I


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_universal_word(N):
    rep = check_universal_word(N)
    assert rep["matched"] == rep["total"] == 2 ** (N - 1)


@pytest.mark.parametrize("N", range(2, 7))
def test_unit_coefficients(N):
    for I in idempotent_family(N).idempotents:
        assert all(abs(c) == 1 for c in I.terms.values())


def test_leading_term_is_plus_longest():
    from zerohecke.monoid import parabolic_longest
    from zerohecke.perms import length
    for D in all_diagrams(5):
        C = diagram_demipotent(D)
        shortest = min(C.terms, key=length)
        assert shortest == parabolic_longest(D.plus_nodes(), 5)
        assert C.terms[shortest] == 1
