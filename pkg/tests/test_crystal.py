from itertools import product

import pytest

from zerohecke.crystal import (CartanType, CrystalGraph, Tableau, WordCrystal, check_stembridge,
                               promotion_search, recolor_edge, semistandard_tableaux, stembridge_statistics,
                               string_crystal, tableau_crystal, tensor, trivial_crystal, word_eps_phi,
                               word_f)
from zerohecke.errors import ShapeTooTall, SizeLimit, TypeMismatch

T = Tableau


def partitions(total, max_rows):
    def rec(rem, cap, rows):
        if rem == 0:
            yield tuple(rows)
            return
        if len(rows) == max_rows:
            return
        for r in range(min(rem, cap), 0, -1):
            yield from rec(rem - r, r, rows + [r])
    return list(rec(total, total, []))


def isomorphic(B1, B2):
    """Brute force over weight-preserving bijections along highest weight vertices."""
    h1, h2 = B1.highest_weight_vertices(), B2.highest_weight_vertices()
    if len(B1) != len(B2) or sorted(B1.wt[v] for v in h1) != sorted(B2.wt[v] for v in h2):
        return False
    for perm in product(h2, repeat=len(h1)):
        if len(set(perm)) != len(h1) or any(B1.wt[a] != B2.wt[b] for a, b in zip(h1, perm)):
            continue
        mp, ok = dict(zip(h1, perm)), True
        stack = list(zip(h1, perm))
        while stack and ok:
            a, b = stack.pop()
            for i in B1.index_set:
                fa, fb = B1.f(a, i), B2.f(b, i)
                if (fa is None) != (fb is None):
                    ok = False
                elif fa is not None and fa not in mp:
                    mp[fa] = fb
                    stack.append((fa, fb))
                elif fa is not None and mp[fa] != fb:
                    ok = False
        if ok and len(mp) == len(B1):
            return True
    return False


# ---------------------------------------------------------------- statistics

@pytest.mark.parametrize("b,i,j,key,val", [
    ([[1, 2], [2]], 1, 2, "triple", (-1, 0, -1)),
    ([[2, 3], [3]], 1, 2, "delta_depth", -1),
    ([[2, 3], [3]], 1, 2, "delta_rise", 0),
    ([[1, 1], [2]], 1, 2, "del_rise", -1),
    ([[1, 3], [3]], 1, 2, "del_depth", -1),
])
def test_type_a_statistics(b, i, j, key, val):
    B = tableau_crystal(2, (2, 1))
    assert stembridge_statistics(B, T(b), i, j)[key] == val


@pytest.mark.parametrize("b,triple", [
    ([[1, 2], [2]], (-2, 0, -2)),
    ([[-1, -1], [0]], (-2, -2, 0)),
    ([[0, 2], [1]], (-2, -1, -1)),
])
def test_type_b_triples(b, triple):
    W = WordCrystal("B2")
    assert stembridge_statistics(W, T(b), 1, 2)["triple"] == triple


def test_cartan_data():
    A, B = CartanType.parse("A2"), CartanType.parse("B2")
    assert A.cartan(1, 2) == A.cartan(2, 1) == -1 and A.cartan(1, 1) == 2
    assert B.cartan(2, 1) * B.cartan(1, 2) == 2
    assert A.simply_laced() and not B.simply_laced()


# ---------------------------------------------------------------- tableau crystals

def test_square_shape_edges():
    B = tableau_crystal(2, (2, 2))
    assert len(B) == 6
    edges = {(repr(a), i, repr(b)) for i in (1, 2) for a, b in B.f_edges[i].items()}
    assert edges == {
        ("[[1,1],[2,2]]", 2, "[[1,1],[2,3]]"),
        ("[[1,1],[2,3]]", 1, "[[1,2],[2,3]]"),
        ("[[1,1],[2,3]]", 2, "[[1,1],[3,3]]"),
        ("[[1,2],[2,3]]", 2, "[[1,2],[3,3]]"),
        ("[[1,1],[3,3]]", 1, "[[1,2],[3,3]]"),
        ("[[1,2],[3,3]]", 1, "[[2,2],[3,3]]"),
    }


def test_vertex_counts():
    assert len(tableau_crystal(2, (2, 1))) == 8
    for j in range(6):
        B = tableau_crystal(1, (j,))
        assert len(B) == j + 1 and len(B.f_edges[1]) == j
    assert len(semistandard_tableaux((3, 2), 3)) == 15


def test_reading_word():
    t = T([[1, 2, 2], [3]])
    assert t.reading_word() == (3, 1, 2, 2)
    assert t.with_word(t.reading_word()) == t
    assert t.shape == (3, 1) and t.is_semistandard()
    assert not T([[2, 1]]).is_semistandard()


def test_errors():
    with pytest.raises(ShapeTooTall):
        tableau_crystal(1, (1, 1, 1))
    with pytest.raises(TypeMismatch):
        tensor(string_crystal(1), tableau_crystal(2, (1,)))
    with pytest.raises(SizeLimit):
        promotion_search(tableau_crystal(3, (2, 2)), max_size=10)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_stembridge_sweep(n):
    for size in range(1, 6):
        for shape in partitions(size, n + 1):
            ok, log = check_stembridge(tableau_crystal(n, shape))
            assert ok, (shape, log[:3])


def test_recolored_edge_fails():
    B = tableau_crystal(2, (2, 1))
    ok, log = check_stembridge(recolor_edge(B, 1, 2))
    assert not ok and log


def test_weyl_reflection():
    B = tableau_crystal(2, (2, 1))
    for b in B.vertices:
        for i in B.index_set:
            r = B.weyl_reflection(b, i)
            assert B.weyl_reflection(r, i) == b
            assert B.epsilon(r, i) == B.phi(b, i)


# ---------------------------------------------------------------- tensor products

def test_tensor_with_trivial():
    B = tableau_crystal(2, (2, 1))
    assert isomorphic(tensor(B, trivial_crystal("A2")), B)
    assert isomorphic(tensor(trivial_crystal("A2"), B), B)


def test_two_strings():
    P = tensor(string_crystal(1), string_crystal(1))
    assert sorted(len(c) for c in P.components()) == [1, 3]


@pytest.mark.parametrize("j,k", [(j, k) for j in range(5) for k in range(5)])
def test_clebsch_gordan(j, k):
    P = tensor(string_crystal(j), string_crystal(k))
    sizes = sorted(len(c) for c in P.components())
    assert len(sizes) == min(j, k) + 1
    assert sizes == sorted(j + k + 1 - 2 * t for t in range(min(j, k) + 1))


def test_associativity():
    a, b, c = string_crystal(1), string_crystal(2), string_crystal(1)
    assert isomorphic(tensor(tensor(a, b), c), tensor(a, tensor(b, c)))
    x, y = tableau_crystal(2, (1,)), tableau_crystal(2, (1, 1))
    assert isomorphic(tensor(tensor(x, y), x), tensor(x, tensor(y, x)))


def test_tensor_matches_words():
    # the word x y is the tensor y (x) x
    ct = CartanType.parse("A2")
    box = tableau_crystal(2, (1,))
    P = tensor(tensor(box, box), box)
    letter = lambda t: t[0][0]
    for (a, b), c in P.vertices:
        word = (letter(c), letter(b), letter(a))
        for i in (1, 2):
            assert word_eps_phi(ct, word, i) == (P.epsilon(((a, b), c), i), P.phi(((a, b), c), i))
            img = P.f(((a, b), c), i)
            got = None if img is None else (letter(img[1]), letter(img[0][1]), letter(img[0][0]))
            assert word_f(ct, word, i) == got


# ---------------------------------------------------------------- promotion

def test_promotion_counts():
    box = tableau_crystal(1, (1,))
    res = promotion_search(tensor(box, box))
    assert len(res) == 2 and any(r["connected"] for r in res)
    sq = promotion_search(tableau_crystal(2, (2, 2)))
    assert len(sq) == 1 and sq[0]["connected"]
    assert len(promotion_search(tableau_crystal(2, (1,)))) == 1


def test_promotion_rotates_weights():
    B = tableau_crystal(2, (2, 1))
    for r in promotion_search(B):
        for b, c in r["pr"].items():
            w = B.wt[b]
            assert B.wt[c] == (w[-1],) + w[:-1]
