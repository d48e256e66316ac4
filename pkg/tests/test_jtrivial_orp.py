from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from zerohecke.errors import (InvalidElement, InvalidExtension, NotComparable, NotIdempotent,
                              NotSemilattice, SizeLimit)
from zerohecke.jtrivial import (FiniteMonoid, example_jtrivial, free_left_regular_band, hecke_monoid,
                                is_j_trivial, nilpotent_example, omega, radical_basis, star)
from zerohecke.monoid import pi_word
from zerohecke.ndpf import NdpfFunction, ndpf_demipotent, ndpf_monoid
from zerohecke.orp import (OrpFunction, all_orp_functions, antichain, boolean, cartan_triangularity_check,
                           catalog, chain, compose_all, e_ab, factor_idempotent, generate_orp,
                           get_poset, lfix_rfix, ndpf_from_chain_signs, orp_idempotents, parse_poset,
                           semilattice_demipotents)
from zerohecke.perms import Permutation, catalan


# ---------------------------------------------------------------- J-trivial monoids

def test_omega_examples():
    M = example_jtrivial()
    assert omega("1", M) == "1"
    assert omega("z", M) == "0"
    H = hecke_monoid(3)
    assert omega(pi_word([1, 2], 3), H) == pi_word([1, 2, 1], 3)


def test_j_triviality():
    trivial = FiniteMonoid(["e"], lambda a, b: "e", "e")
    assert is_j_trivial(trivial)
    assert is_j_trivial(example_jtrivial())
    assert not is_j_trivial(free_left_regular_band())
    assert is_j_trivial(hecke_monoid(4))


def test_star_product():
    H = hecke_monoid(3)
    p1, p2 = pi_word([1], 3), pi_word([2], 3)
    assert star(p1, p2, H) == pi_word([1, 2, 1], 3)
    for e in H.idempotents():
        assert star(e, e, H) == e
        assert star(e, H.identity, H) == e


@pytest.mark.parametrize("M", [hecke_monoid(3), hecke_monoid(4), generate_orp(chain(4)), generate_orp(chain(5))],
                         ids=["H3", "H4", "OR4", "OR5"])
def test_star_is_meet(M):
    E = M.idempotents()
    for e, f in product(E, E):
        m = star(e, f, M)
        assert star(f, e, M) == m
        assert M.j_leq(m, e) and M.j_leq(m, f)
        for z in E:
            if M.j_leq(z, e) and M.j_leq(z, f):
                assert M.j_leq(z, m)


def test_radical_basis():
    assert [(x, y) for x, y in radical_basis(nilpotent_example())] == [("x", "0")]
    H = hecke_monoid(3)
    assert len(radical_basis(H)) == 2
    band = FiniteMonoid(["1", "a"], lambda x, y: "a" if "a" in (x, y) else "1", "1")
    assert radical_basis(band) == []
    for M in (H, hecke_monoid(4), example_jtrivial(), generate_orp(chain(4))):
        assert len(radical_basis(M)) + len(M.idempotents()) == len(M)


# ---------------------------------------------------------------- posets and OR(P)

def test_parse_poset():
    P = parse_poset("# a pentagon\n0 < a < b < 1\n0 < c < 1\n")
    assert len(P) == 5 and P.leq(P.index["0"], P.index["1"])
    assert not P.leq(P.index["a"], P.index["c"])
    with pytest.raises(InvalidElement):
        parse_poset("a > b")
    with pytest.raises(InvalidElement):
        parse_poset("a < b\nb < a")


def test_poset_file(tmp_path):
    p = tmp_path / "v.poset"
    p.write_text("0 < a\n0 < b\n")
    P = get_poset(str(p))
    assert len(all_orp_functions(P)) == len(generate_orp(get_poset("V")))


def test_orp_sizes():
    assert len(generate_orp(chain(3))) == 5
    for n in range(1, 7):
        assert len(generate_orp(chain(n))) == catalan(n)
    for n in range(1, 4):
        assert len(generate_orp(antichain(n))) == 1
    with pytest.raises(SizeLimit):
        generate_orp(boolean(3), max_size=7) and generate_orp(chain(9))


def test_orp_is_closed():
    for P in (boolean(2), get_poset("N5"), get_poset("V")):
        M = generate_orp(P)
        elems = set(M.elements)
        for f, g in product(M.elements, M.elements):
            assert f.then(g) in elems


@pytest.mark.parametrize("name", sorted(catalog()))
def test_idempotents_match_brute_force(name):
    P = catalog()[name]
    if len(P) > 7:
        pytest.skip("too large")
    brute = {f for f in all_orp_functions(P) if f.is_idempotent()}
    assert {f for _, f in orp_idempotents(P)} == brute


def test_idempotent_examples():
    assert len(orp_idempotents(chain(3))) == 4
    assert len(orp_idempotents(chain(1))) == 1


def test_lfix_rfix_example():
    P = chain(3)
    f = P.function([1, 1, 2])
    lf, rf = lfix_rfix(P, f)
    assert P.image_labels(lf) == ["1", "3"] and P.image_labels(rf) == ["1", "2"]
    ident = P.function([1, 2, 3])
    assert lfix_rfix(P, ident) == (ident, ident)


@pytest.mark.parametrize("name", ["chain4", "B2", "diamond", "N5", "V", "wedge", "M3"])
def test_lfix_rfix_minimal(name):
    P = get_poset(name)
    E = [f for _, f in orp_idempotents(P)]
    below = lambda e, g: e.then(g) == g       # e <= g as idempotents: e absorbs g on the left
    for f in all_orp_functions(P):
        lf, rf = lfix_rfix(P, f)
        assert lf.then(f) == f and f.then(rf) == f
        lefts = [e for e in E if e.then(f) == f]
        rights = [e for e in E if f.then(e) == f]
        assert all(e.then(lf) == lf for e in lefts)
        assert all(rf.then(e) == rf for e in rights)
        if f.is_idempotent():
            assert lf == rf == f


@pytest.mark.parametrize("name", sorted(catalog()))
def test_cartan_triangularity(name):
    assert cartan_triangularity_check(catalog()[name])


def test_cartan_explicit_extension():
    P = get_poset("diamond")
    assert cartan_triangularity_check(P, ["0", "b", "a", "1"])
    with pytest.raises(InvalidExtension):
        cartan_triangularity_check(P, ["a", "0", "b", "1"])


def test_e_ab():
    L = chain(3)
    assert e_ab(L, "2", "2") == OrpFunction((0, 1, 2))
    for i in (1, 2):
        pi = NdpfFunction.identity(3).then(NdpfFunction([j if k == i + 1 else k for k, j in
                                                         zip(range(1, 4), range(1, 4))]))
        f = e_ab(L, str(i + 1), str(i))
        assert tuple(v + 1 for v in f.values) == tuple(i if x == i + 1 else x for x in range(1, 4))
    assert e_ab(L, "3", "1") == compose_all([e_ab(L, "3", "2"), e_ab(L, "2", "1")], 3)
    with pytest.raises(NotComparable):
        e_ab(L, "1", "3")
    with pytest.raises(NotSemilattice):
        e_ab(get_poset("wedge"), "1", "a")


def test_braid_like_relation_on_chains():
    for n in range(3, 6):
        L = chain(n)
        for a in range(n):
            for b in range(a + 1):
                for c in range(b + 1):
                    ab, bc, ac = e_ab(L, a, b), e_ab(L, b, c), e_ab(L, a, c)
                    assert compose_all([ab, bc], n) == ac
                    assert compose_all([bc, ab, bc], n) == ac
                    assert compose_all([ab, bc, ab], n) == ac


@pytest.mark.parametrize("name", ["chain3", "chain4", "B2", "B3", "diamond", "M3", "N5", "V"])
def test_factor_idempotent(name):
    L = get_poset(name)
    n = len(L)
    for labels, f in orp_idempotents(L):
        pairs = factor_idempotent(L, f)
        assert compose_all([e_ab(L, a, b) for a, b in pairs], n) == f
        for a, b in pairs:
            assert (L.index[a], L.index[b]) in L.covers()
    assert factor_idempotent(L, OrpFunction(tuple(range(n)))) == []


def test_factor_rejects_non_idempotent():
    L = boolean(3)
    f = next(g for g in all_orp_functions(L) if not g.is_idempotent())
    with pytest.raises(NotIdempotent):
        factor_idempotent(L, f)


SEMILATTICES = [n for n, P in catalog().items() if P.is_meet_semilattice() and len(P) <= 8]


@pytest.mark.parametrize("name", SEMILATTICES)
def test_semilattice_demipotents(name):
    rep = semilattice_demipotents(catalog()[name])
    for key in ("sum_is_one", "all_demipotent", "orthogonal", "idempotents_sum_to_one",
                "count_matches_idempotents"):
        assert rep[key], key


def test_single_point():
    rep = semilattice_demipotents(chain(1))
    assert len(rep["diagrams"]) == 1 and rep["diagrams"][0].C == 1 + 0 * rep["diagrams"][0].C


@pytest.mark.parametrize("n", range(2, 6))
def test_chain_matches_ndpf(n):
    rep = semilattice_demipotents(chain(n))
    M = ndpf_monoid(n)
    for d in rep["diagrams"]:
        C = ndpf_demipotent(ndpf_from_chain_signs(d.signs), M)
        assert {NdpfFunction([v + 1 for v in f.values]): c for f, c in d.C.terms.items()} == C.terms


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(["B2", "diamond", "N5", "M3"]), st.data())
def test_orp_composition_associative(name, data):
    P = get_poset(name)
    fs = all_orp_functions(P)
    f, g, h = (data.draw(st.sampled_from(fs)) for _ in range(3))
    assert f.then(g).then(h) == f.then(g.then(h))
