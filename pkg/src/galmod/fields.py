"""Abelian number fields as fixed fields inside cyclotomic fields.

A field L is given by a conductor f and a subgroup H of (Z/f)^x; L is the
fixed field of {sigma_h : h in H} inside Q(zeta_f), with sigma_a(zeta_f) =
zeta_f**a.  Its Galois group (Z/f)^x / H is presented as a FinAbGroup through
a Smith normal form of the relation lattice.

>>> L = build_field(5, [4])
>>> L.degree, discriminant(L)
(2, 5)
>>> build_field(12, [5, 7]).conductor
1
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd

from .chars import Character, FinAbGroup, GroupElement, characters_of
from .cyclo import CycloNumber
from .errors import BadSubgroup, WildRamification
from .intmat import IntegerMatrix, bareiss_det, snf
from .ntheory import crt, divisors, factorint, is_squarefree, totient, units, valuation


# -- unit groups ---------------------------------------------------------------

def _primitive_root(q):
    """Generator of (Z/q)^x for q an odd prime power."""
    p = factorint(q)[0][0]
    phi = totient(q)
    fac = [r for r, _ in factorint(phi)]
    for g in range(2, q):
        if g % p and all(pow(g, phi // r, q) != 1 for r in fac):
            return g
    return 1


def _cyclic_components(m):
    """Generators (lifted to units mod m) and orders of a cyclic decomposition."""
    parts = [p ** e for p, e in factorint(m)] if m > 1 else []
    gens = []
    for i, q in enumerate(parts):
        p = factorint(q)[0][0]
        local = []
        if p == 2:
            if q >= 4:
                local.append((q - 1, 2))
            if q >= 8:
                local.append((5, q // 4))
        else:
            local.append((_primitive_root(q), totient(q)))
        for g, o in local:
            res = [g if j == i else 1 for j in range(len(parts))]
            gens.append((crt(res, parts), o))
    return gens


class _Presentation:
    """An abelian group Z^r / (relations), rewritten in invariant-factor form."""

    def __init__(self, orders, extra_relations):
        r = len(orders)
        rows = [[o if i == j else 0 for j in range(r)] for i, o in enumerate(orders)]
        rows += [list(x) for x in extra_relations]
        if r == 0:
            self.group = FinAbGroup(())
            self._cols = []
            self._mods = []
            self._V = None
            return
        res = snf(IntegerMatrix(rows))
        diag = res.invariant_factors
        self._V = res.V.entries
        keep = [i for i, d in enumerate(diag) if d != 1]
        self._cols = keep
        self._mods = [diag[i] for i in keep]
        self.group = FinAbGroup(self._mods)

    def image(self, x):
        """Image of a vector of Z^r in the invariant-factor coordinates."""
        V = self._V
        out = []
        for c, d in zip(self._cols, self._mods):
            out.append(sum(xi * V[i][c] for i, xi in enumerate(x)) % d)
        return GroupElement(self.group, tuple(out), _checked=True)


@lru_cache(maxsize=None)
def unit_group(m):
    return UnitGroup(m)


class UnitGroup:
    """(Z/m)^x with a discrete logarithm into invariant-factor coordinates."""

    def __init__(self, m):
        self.modulus = m
        comps = _cyclic_components(m)
        self._gens = [g for g, _ in comps]
        self._orders = [o for _, o in comps]
        self._pres = _Presentation(self._orders, [])
        self.group = self._pres.group
        self._raw = {}
        for exps in product(*(range(o) for o in self._orders)):
            a = 1 % m
            for g, e in zip(self._gens, exps):
                a = a * pow(g, e, m) % m
            self._raw[a] = exps
        self._dlog = {a: self._pres.image(e) for a, e in self._raw.items()}
        self._lift = {}
        for a in sorted(self._dlog):
            self._lift.setdefault(self._dlog[a], a)

    @property
    def units(self):
        return units(self.modulus)

    def raw_log(self, a):
        """Exponents with respect to the cyclic generators (not a chain)."""
        return self._raw[a % self.modulus]

    def dlog(self, a):
        a %= self.modulus
        if a not in self._dlog:
            raise BadSubgroup("%d is not a unit modulo %d" % (a, self.modulus))
        return self._dlog[a]

    def lift(self, g):
        return self._lift[g]


# -- subgroups ----------------------------------------------------------------

def _closure(gens, m):
    span = {1 % m}
    todo = list(span)
    while todo:
        x = todo.pop()
        for g in gens:
            y = x * g % m
            if y not in span:
                span.add(y)
                todo.append(y)
    return frozenset(span)


def _generators_of(H, m):
    """A small generating set of the unit subgroup H, chosen greedily."""
    gens, span = [], frozenset({1 % m})
    for a in sorted(H):
        if a not in span:
            gens.append(a)
            span = _closure(gens, m)
    return gens


class Subgroup:
    """A subgroup of a FinAbGroup, stored as its element set."""

    __slots__ = ("group", "elements", "generators")

    def __init__(self, group, generators):
        self.group = group
        self.generators = tuple(generators)
        span = {group.identity()}
        todo = list(span)
        while todo:
            x = todo.pop()
            for g in self.generators:
                y = x * g
                if y not in span:
                    span.add(y)
                    todo.append(y)
        self.elements = frozenset(span)

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.elements

    def sorted_elements(self):
        return sorted(self.elements, key=lambda g: g.exponents)

    def to_json(self):
        return [list(g.exponents) for g in self.sorted_elements()]


# -- the fields ---------------------------------------------------------------

class AbelianField:
    """Fixed field of H inside Q(zeta_f); construct through :func:`build_field`."""

    def __init__(self, conductor, kernel):
        f = conductor
        self.conductor = f
        self.kernel = frozenset(kernel)
        self.kernel_generators = tuple(_generators_of(self.kernel, f))
        U = unit_group(f)
        self.units = U
        rel = [U.raw_log(h) for h in self.kernel_generators]
        self._pres = _Presentation(U._orders, rel)
        self.galois_group = self._pres.group
        self.degree = self.galois_group.order
        assert self.degree * len(self.kernel) == totient(f)
        self._q = {a: self._pres.image(U.raw_log(a)) for a in units(f)}
        self._lift = {}
        for a in sorted(self._q):
            self._lift.setdefault(self._q[a], a)

    # the Galois group
    def galois_element(self, a):
        """Image of sigma_a in G."""
        a %= self.conductor
        if a not in self._q:
            raise BadSubgroup("%d is not a unit modulo %d" % (a, self.conductor))
        return self._q[a]

    def lift(self, g):
        """Smallest unit a with sigma_a restricting to g."""
        return self._lift[g]

    def characters(self):
        return characters_of(self.galois_group)

    def galois_orbit_units(self):
        """Lifts of the Galois group elements, in element enumeration order."""
        return [self.lift(g) for g in self.galois_group.elements()]

    def apply(self, g, x):
        """g(x) for x in L written at level f."""
        return x.galois(self.lift(g))

    def is_tame(self):
        return is_squarefree(self.conductor)

    def dirichlet_values(self, chi):
        """Map unit a -> value exponent of chi(sigma_a) modulo the exponent of G."""
        return {a: chi.value_exponent(g) for a, g in self._q.items()}

    def key(self):
        return (self.conductor, self.degree, tuple(sorted(self.kernel)))

    def to_json(self):
        return {"conductor": self.conductor, "kernel_generators": list(self.kernel_generators)}

    def __eq__(self, other):
        return isinstance(other, AbelianField) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "AbelianField(conductor=%d, degree=%d, kernel_generators=%r)" % (
            self.conductor, self.degree, list(self.kernel_generators))


@dataclass(frozen=True)
class FieldElement:
    field: AbelianField
    value: CycloNumber

    def __post_init__(self):
        if self.value.level != self.field.conductor:
            object.__setattr__(self, "value", _at_level(self.value, self.field.conductor))
        for h in self.field.kernel_generators:
            if self.value.galois(h) != self.value:
                raise ValueError("element is not fixed by the kernel of the field")


def _at_level(x, f):
    if f % x.level == 0:
        return x.lift(f)
    return x.canonical().lift(f)


def build_field(f, H_generators=()):
    """The fixed field of <H_generators> in Q(zeta_f), re-presented at its conductor."""
    f = int(f)
    if f < 1:
        raise BadSubgroup("conductor must be positive")
    gens = []
    for h in H_generators:
        h = int(h)
        if gcd(h, f) != 1:
            raise BadSubgroup("generator %d is not coprime to %d" % (h, f))
        gens.append(h % f)
    H = _closure(gens, f)
    for d in divisors(f):
        kern = {u for u in units(f) if (u - 1) % d == 0}
        if kern <= H:
            break
    return _make_field(d, frozenset(h % d for h in H) if d > 1 else frozenset({0}))


@lru_cache(maxsize=None)
def _make_field(f, H):
    return AbelianField(f, H)


def field_from_json(d):
    return build_field(d["conductor"], d.get("kernel_generators", []))


# -- ramification --------------------------------------------------------------

@dataclass(frozen=True)
class RamificationDatum:
    prime: int
    e: int
    f_deg: int
    g: int
    inertia: Subgroup
    frobenius_class: GroupElement

    def to_json(self):
        return {"prime": self.prime, "e": self.e, "f": self.f_deg, "g": self.g,
                "inertia": self.inertia.to_json(),
                "frobenius": list(self.frobenius_class.exponents)}


def ramification_data(L, p):
    f = L.conductor
    G = L.galois_group
    if f % p:
        I = Subgroup(G, [])
        frob = L.galois_element(p % f) if f > 1 else G.identity()
    else:
        k = valuation(f, p)
        m = f // p ** k
        I = Subgroup(G, [L.galois_element(u) for u in units(f) if (u - 1) % m == 0])
        a = crt([p % m, 1], [m, p ** k]) if m > 1 else 1
        frob = L.galois_element(a)
    # canonical representative of the coset frob * I
    frob = min((frob * h for h in I.elements), key=lambda g: g.exponents)
    # residue degree: order of frob modulo I
    fdeg, x = 1, frob
    while x not in I:
        x = x * frob
        fdeg += 1
    e = I.order
    return RamificationDatum(p, e, fdeg, L.degree // (e * fdeg), I, frob)


def character_conductor(L, chi):
    """Conductor of the Dirichlet character a -> chi(sigma_a)."""
    f = L.conductor
    for d in divisors(f):
        if all(chi.value_exponent(L.galois_element(u)) == 0
               for u in units(f) if (u - 1) % d == 0):
            return d
    return f


def discriminant(L):
    """|d_L| by the conductor-discriminant formula."""
    out = 1
    for chi in L.characters():
        out *= character_conductor(L, chi)
    return out


# -- normal integral basis -----------------------------------------------------------

def trace_to_field(L, x):
    """Tr_{Q(zeta_f)/L}(x) for x at level f."""
    x = _at_level(x, L.conductor)
    out = x * 0
    for h in sorted(L.kernel):
        out = out + x.galois(h if L.conductor > 1 else 1)
    return out


def absolute_trace(L, x):
    """Tr_{L/Q}(x) for x in L."""
    from fractions import Fraction
    return Fraction(_at_level(x, L.conductor).trace(), len(L.kernel))


@lru_cache(maxsize=None)
def _nib(L):
    f = L.conductor
    if not is_squarefree(f):
        raise WildRamification("conductor %d is not squarefree: no tame normal basis" % f)
    if f == 1:
        return CycloNumber.rational(1)
    return CycloNumber.from_exponents(f, [(h, 1) for h in L.kernel])


def nib_generator(L, verify=True):
    """alpha = Tr_{Q(zeta_f)/L}(zeta_f); its Galois orbit is a Z-basis of O_L."""
    alpha = _nib(L)
    if verify:
        _verify_nib(L)
    return FieldElement(L, alpha)


def nib_orbit(L):
    """[g(alpha) for g in G] in element enumeration order."""
    alpha = _nib(L)
    return [alpha.galois(L.lift(g)) if L.conductor > 1 else alpha for g in L.galois_group.elements()]


def trace_form(L, basis=None):
    """Exact integer matrix Tr_{L/Q}(b_i b_j)."""
    if basis is None:
        basis = nib_orbit(L)
    n = len(basis)
    T = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = absolute_trace(L, basis[i] * basis[j])
            assert t.denominator == 1
            T[i][j] = T[j][i] = int(t)
    return T


@lru_cache(maxsize=None)
def _verify_nib(L):
    # the orbit lies in O_L, so it is a Z-basis iff its discriminant is d_L
    d = abs(bareiss_det(trace_form(L)))
    if d != discriminant(L):
        raise AssertionError("NIB verification failed for %r: %d != %d" % (L, d, discriminant(L)))
    from .resolvends import field_resolvents
    if any(r.is_zero() for r in field_resolvents(L).values):
        raise AssertionError("vanishing resolvent for %r" % (L,))
    return True


# -- enumeration -------------------------------------------------------------

def unit_subgroups(f):
    """All subgroups of (Z/f)^x as frozensets."""
    us = units(f)
    seen = {frozenset({1 % f})}
    frontier = list(seen)
    while frontier:
        nxt = []
        for H in frontier:
            for a in us:
                if a not in H:
                    K = _closure(list(H) + [a], f)
                    if K not in seen:
                        seen.add(K)
                        nxt.append(K)
        frontier = nxt
    return seen


def tame_fields(max_conductor, max_degree, min_degree=1):
    """Every tame abelian field with conductor and degree in range, sorted."""
    out = []
    for f in range(1, max_conductor + 1):
        if f % 2 == 0 or not is_squarefree(f):
            continue
        phi = totient(f)
        for H in unit_subgroups(f):
            n = phi // len(H)
            if not (min_degree <= n <= max_degree):
                continue
            L = build_field(f, sorted(H))
            if L.conductor == f:
                out.append(L)
    out.sort(key=lambda L: L.key())
    return out
