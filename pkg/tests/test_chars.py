import pytest

from galmod.chars import CharFn, FinAbGroup, char_act, characters_of, charfn_check_equivariance
from galmod.cyclo import CycloNumber
from galmod.errors import GroupMismatch, SizeLimit

Z = CycloNumber.zeta


def test_trivial_group():
    G = FinAbGroup([])
    chars = characters_of(G)
    assert len(chars) == 1 and chars[0].is_trivial()


def test_c2_values():
    G = FinAbGroup([2])
    vals = sorted(tuple(int(chi(g).to_rational()) for g in G.elements()) for chi in characters_of(G))
    assert vals == [(1, -1), (1, 1)]


def test_klein_four_distinct():
    G = FinAbGroup([2, 2])
    chars = characters_of(G)
    assert chars[0].is_trivial() and len(chars) == 4
    tables = {tuple(chi(g) for g in G.elements()) for chi in chars}
    assert len(tables) == 4


def test_size_limit():
    with pytest.raises(SizeLimit):
        characters_of(FinAbGroup([101, 101]))


def test_bad_chain():
    with pytest.raises(ValueError):
        FinAbGroup([4, 2])


def test_char_act_examples():
    G = FinAbGroup([2])
    triv, chi = characters_of(G)
    assert char_act(triv, "conj") == triv
    for k in (1, 3, 5, 7):
        assert char_act(chi, "galois", k) == chi
    G3 = FinAbGroup([3])
    c = characters_of(G3)[1]
    assert char_act(c, "galois", 2) == c * c
    g = G3.generators()[0]
    assert char_act(c, "eval", g) == Z(3)
    with pytest.raises(GroupMismatch):
        char_act(c, "mul", chi)


def test_equivariance_examples():
    G3 = FinAbGroup([3])
    assert charfn_check_equivariance(CharFn.ones(G3), 3)
    f = CharFn(G3, [1, Z(3), Z(3)])
    assert not charfn_check_equivariance(f, 3)
    g = CharFn(G3, [1, Z(3), Z(3, 2)])
    assert charfn_check_equivariance(g, 3)


@pytest.mark.parametrize("d", [[2], [3], [4], [2, 2], [6], [2, 4], [12], [2, 6], [3, 3]])
def test_orthogonality(d):
    G = FinAbGroup(d)
    chars = characters_of(G)
    els = G.elements()
    for a in chars:
        for b in chars:
            s = sum((a(g) * b(g.inverse()) for g in els), CycloNumber.rational(0))
            assert s == (G.order if a == b else 0)


def test_product_of_equivariant_is_equivariant():
    G = FinAbGroup([4])
    chars = characters_of(G)
    # phi -> phi(g) for a fixed g, and phi -> 2 are both equivariant
    g = G.generators()[0]
    f1 = CharFn(G, [chi(g) for chi in chars])
    f2 = CharFn(G, [2] * 4)
    assert charfn_check_equivariance(f1, 4) and charfn_check_equivariance(f2, 4)
    assert charfn_check_equivariance(f1 * f2, 4)


@pytest.mark.parametrize("d,k", [([5], 2), ([8], 3), ([2, 6], 5), ([12], 7), ([3, 3], 2)])
def test_galois_action_is_automorphism(d, k):
    from galmod.ntheory import multiplicative_order
    G = FinAbGroup(d)
    chars = characters_of(G)
    images = [chi.galois(k) for chi in chars]
    assert len(set(images)) == len(chars)
    for a in chars:
        for b in chars:
            assert (a * b).galois(k) == a.galois(k) * b.galois(k)
    m = multiplicative_order(k, G.exponent)
    for chi in chars:
        assert chi.galois(pow(k, m, G.exponent)) == chi


def test_charfn_json_round_trip():
    G = FinAbGroup([2, 2])
    f = CharFn(G, [1, Z(4), -1, CycloNumber.rational("3/2")])
    assert CharFn.from_json(G, f.to_json()) == f
