"""Cross-module algebraic properties under hypothesis."""

from hypothesis import given, strategies as st

from galmod.chars import FinAbGroup, characters_of
from galmod.cyclo import CycloNumber
from galmod.gauss import dirichlet_characters
from galmod.ntheory import totient
from galmod.relk import totval
from galmod.resolvends import GroupAlgebraElement

GROUPS = [FinAbGroup([2]), FinAbGroup([3]), FinAbGroup([4]), FinAbGroup([2, 2])]


@st.composite
def cyclo(draw, levels=(1, 3, 4, 5, 8, 12)):
    N = draw(st.sampled_from(levels))
    cs = draw(st.lists(st.integers(-3, 3), min_size=totient(N), max_size=totient(N)))
    return CycloNumber(N, cs)


@st.composite
def elements(draw):
    G = draw(st.sampled_from(GROUPS))
    a = GroupAlgebraElement(G, [draw(cyclo()) for _ in range(G.order)])
    b = GroupAlgebraElement(G, [draw(cyclo()) for _ in range(G.order)])
    return a, b


@given(elements())
def test_transform_is_a_ring_map(ab):
    a, b = ab
    for chi in characters_of(a.group):
        assert (a * b).transform(chi) == a.transform(chi) * b.transform(chi)
        assert (a + b).transform(chi) == a.transform(chi) + b.transform(chi)


@given(elements())
def test_inverse_fourier(ab):
    a, _ = ab
    assert GroupAlgebraElement.from_transforms(a.group, a.transforms()) == a


@given(cyclo(), cyclo(), st.sampled_from([2, 3, 5, 7]))
def test_totval_is_additive(x, y, p):
    if x.is_zero() or y.is_zero():
        return
    assert totval(x * y, p) == totval(x, p) + totval(y, p)
    assert totval(x.conj(), p) == totval(x, p)
    assert totval(x.inv(), p) == -totval(x, p)


@given(st.sampled_from([5, 7, 8, 12, 15]), st.data())
def test_dirichlet_characters_form_a_group(m, data):
    chars = dirichlet_characters(m)
    a = data.draw(st.sampled_from(chars))
    b = data.draw(st.sampled_from(chars))
    ab = a * b
    assert ab in chars
    for u in range(1, m):
        if a(u) is not None and a.angle(u) is not None:
            assert ab(u) == a(u) * b(u)
    assert (a * a.conj()).order() == 1
    assert a.primitive().conductor == a.conductor
    assert ab.parity() == a.parity() * b.parity()
