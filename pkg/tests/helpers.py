"""Shared generators for torsor and group-algebra test data."""

from math import lcm

from galmod.chars import FinAbGroup, GroupElement
from galmod.cyclo import CycloNumber
from galmod.fields import units
from galmod.gauss import primitive_characters
from galmod.ntheory import is_squarefree
from galmod.resolvends import GroupAlgebraElement, TorsorDescriptor, resolvend_of_torsor

C2, C3, C4, V4 = FinAbGroup([2]), FinAbGroup([3]), FinAbGroup([4]), FinAbGroup([2, 2])


def characters_of_order(o, max_conductor):
    return [c for f in range(3, max_conductor + 1) if is_squarefree(f)
            for c in primitive_characters(f) if c.order() == o]


def cyclic_torsors(group, max_conductor):
    g = group.generators()[0]
    return [TorsorDescriptor.from_character(group, chi, g)
            for chi in characters_of_order(group.order, max_conductor)]


def klein_torsors(max_conductor):
    """C2 x C2 torsors from pairs of quadratic characters with coprime conductors."""
    quad = characters_of_order(2, max_conductor)
    out = []
    for i, a in enumerate(quad):
        for b in quad[i + 1:]:
            M = lcm(a.modulus, b.modulus)
            if M != a.modulus * b.modulus or M > max_conductor:
                continue
            pairs = []
            for u in units(M):
                ea = int(a.angle(u) * 2)
                eb = int(b.angle(u) * 2)
                pairs.append((u, GroupElement(V4, [ea, eb])))
            out.append(TorsorDescriptor(V4, M, pairs))
    return out


def sqrt2():
    z = CycloNumber.zeta(8)
    return z + z.galois(7)


def crafted_nonmember(group):
    """1 + sqrt(2) g for a generator g."""
    g = group.generators()[-1]
    return GroupAlgebraElement.one(group) + GroupAlgebraElement.grouplike(g, sqrt2())


def random_rational_unit(group, rng):
    while True:
        a = GroupAlgebraElement(group, [rng.randint(-3, 3) for _ in range(group.order)])
        if a.is_invertible():
            return a


def random_grouplike(group, rng):
    els = group.elements()
    return GroupAlgebraElement.grouplike(rng.choice(els), rng.choice([1, -1, 2, CycloNumber.rational(1, 3)]))


def random_cyclo_unit(group, rng, level):
    while True:
        cs = [CycloNumber.from_exponents(level, [(rng.randrange(level), rng.randint(-2, 2))
                                                  for _ in range(2)]) for _ in range(group.order)]
        a = GroupAlgebraElement(group, cs)
        if a.is_invertible():
            return a


TORSOR_BOUND = 24
LEVEL_BOUND = 24


def torsor_pool(group):
    if group == V4:
        return klein_torsors(TORSOR_BOUND)
    return cyclic_torsors(group, TORSOR_BOUND)


def membership_suite(rng, size=500):
    """(label, element) pairs mixing members and non-members over four groups."""
    groups = [C2, C3, C4, V4]
    pools = {G: [resolvend_of_torsor(T) for T in torsor_pool(G)] for G in groups}
    kinds = ["resolvend", "translate", "grouplike", "rational", "product", "crafted", "perturbed", "cyclo"]
    out = []
    for i in range(size):
        G = groups[i % 4]
        kind = kinds[(i // 4) % len(kinds)]
        els = G.elements()
        if kind == "resolvend":
            a = rng.choice(pools[G])
        elif kind == "translate":
            a = rng.choice(pools[G]).translate(rng.choice(els)).scale(rng.choice([1, -1, 2]))
        elif kind == "grouplike":
            a = random_grouplike(G, rng)
        elif kind == "rational":
            a = random_rational_unit(G, rng)
        elif kind == "product":
            x = rng.choice(pools[G])
            y = rng.choice([b for b in pools[G] if lcm(x.level, b.level) <= LEVEL_BOUND])
            a = x * y * random_rational_unit(G, rng)
        elif kind == "crafted":
            a = crafted_nonmember(G)
        elif kind == "perturbed":
            m = min(lcm(b.level, 8) for b in pools[G])
            x = rng.choice([b for b in pools[G] if lcm(b.level, 8) == m])
            a = x * crafted_nonmember(G)
        else:
            a = random_cyclo_unit(G, rng, rng.choice([3, 4, 5, 8, 12]))
        out.append((kind, a))
    return out


def star(a):
    """The involution sum a_g g -> sum conj(a_g) g**-1."""
    return GroupAlgebraElement(a.group, {g.inverse(): c.conj() for g, c in a.items()})


def random_det_unit(group, rng):
    """Det(+-g b (b*)**-1) for a random rational unit b: a unit of absolute value one."""
    from galmod.chars import CharFn
    b = random_rational_unit(group, rng)
    g = rng.choice(group.elements())
    a = b * star(b).inv() * GroupAlgebraElement.grouplike(g, rng.choice([1, -1]))
    return CharFn(group, a.transforms())
