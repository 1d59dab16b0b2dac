"""Group algebras Q(zeta_N)[Gamma], resolvends and torsors for constant Gamma.

Conventions
-----------
* The transform of a = sum a_g g at a character phi is sum a_g phi(g); it is an
  algebra isomorphism onto functions on the dual group.
* The resolvend of a point x: Gamma -> C of a Galois algebra is
  r(x) = sum_g x(g) g**-1, so its transform at phi is the Lagrange resolvent
  sum_g x(g) phi(g)**-1.
* A torsor of conductor f is a homomorphism h: (Z/f)^x -> Gamma with image G'.
  Its algebra is Ind_{G'}^{Gamma} L', L' the fixed field of ker h.  The normal
  basis point is x(h(a)) = sigma_a(beta) on G' and 0 off G', where beta is the
  trace generator of L' at its own conductor.  The copy of L' sitting over the
  identity is the one holding beta; using sigma_a(beta) instead translates r
  by a grouplike and leaves every class-level output unchanged.
* Omega_Q acts through Gal(Q(zeta_N)/Q), N = lcm(level, exponent of Gamma).
"""

from dataclasses import dataclass, field
from math import gcd, lcm

from .chars import CharFn, FinAbGroup, GroupElement, characters_of
from .cyclo import CycloNumber
from .errors import GroupMismatch, NonInvertible, WildRamification
from .fields import _nib, build_field, unit_group
from .ntheory import is_squarefree, units


def _at(x, N):
    if N % x.level == 0:
        return x.lift(N)
    return x.canonical().lift(N)


class GroupAlgebraElement:
    """sum a_g g over Gamma with coefficients in Q(zeta_level).

    ``coeffs`` is a tuple in the element order of ``group.elements()``; every
    coefficient is stored at the common level.
    """

    __slots__ = ("group", "level", "coeffs")

    def __init__(self, group, coeffs, level=None):
        if isinstance(coeffs, dict):
            zero = CycloNumber.rational(0)
            coeffs = [coeffs.get(g, zero) for g in group.elements()]
        cs = [c if isinstance(c, CycloNumber) else CycloNumber.rational(c) for c in coeffs]
        if len(cs) != group.order:
            raise ValueError("need one coefficient per group element")
        N = level or 1
        for c in cs:
            if N % c.level:
                N = lcm(N, c.canonical().level)
        self.group = group
        self.level = N
        self.coeffs = tuple(_at(c, N) for c in cs)

    # constructors
    @classmethod
    def zero(cls, group):
        return cls(group, [0] * group.order)

    @classmethod
    def one(cls, group):
        return cls.grouplike(group.identity())

    @classmethod
    def grouplike(cls, g, scalar=1):
        G = g.group
        cs = [0] * G.order
        cs[G.index(g)] = scalar
        return cls(G, cs)

    @classmethod
    def from_transforms(cls, group, values):
        """Inverse Fourier: a_g = |G|**-1 sum_phi v(phi) phi(g)**-1."""
        chars = characters_of(group)
        if len(values) != len(chars):
            raise ValueError("need one transform value per character")
        N = group.exponent
        for v in values:
            N = lcm(N, v.level)
        vals = [_at(v, N) for v in values]
        E = group.exponent
        roots = [CycloNumber.zeta(N, k * (N // E)) for k in range(E)]
        out = []
        for g in group.elements():
            acc = CycloNumber.rational(0, N)
            for chi, v in zip(chars, vals):
                acc = acc + v * roots[-chi.value_exponent(g) % E]
            out.append(acc / group.order)
        return cls(group, out, N)

    # accessors
    def coefficient(self, g):
        return self.coeffs[self.group.index(g)]

    def items(self):
        return zip(self.group.elements(), self.coeffs)

    def support(self):
        return [g for g, c in self.items() if not c.is_zero()]

    def _check(self, other):
        if self.group != other.group:
            raise GroupMismatch("group algebra elements over different groups")

    # arithmetic
    def __add__(self, other):
        self._check(other)
        return GroupAlgebraElement(self.group, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return GroupAlgebraElement(self.group, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return GroupAlgebraElement(self.group, [-a for a in self.coeffs], self.level)

    def scale(self, c):
        return GroupAlgebraElement(self.group, [a * c for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        self._check(other)
        G = self.group
        N = lcm(self.level, other.level)
        A = [_at(c, N) for c in self.coeffs]
        B = [_at(c, N) for c in other.coeffs]
        els = G.elements()
        out = [CycloNumber.rational(0, N)] * G.order
        for i, g in enumerate(els):
            if A[i].is_zero():
                continue
            for j, h in enumerate(els):
                if B[j].is_zero():
                    continue
                k = G.index(g * h)
                out[k] = out[k] + A[i] * B[j]
        return GroupAlgebraElement(G, out, N)

    def translate(self, g):
        """g * self: a permutation of the coefficients."""
        G = self.group
        out = [None] * G.order
        for h, c in self.items():
            out[G.index(g * h)] = c
        return GroupAlgebraElement(G, out, self.level)

    def transform(self, chi):
        if chi.group != self.group:
            raise GroupMismatch("character of a different group")
        E = self.group.exponent
        N = lcm(self.level, E)
        acc = CycloNumber.rational(0, N)
        for g, c in self.items():
            if not c.is_zero():
                acc = acc + _at(c, N).mul_zeta(E, chi.value_exponent(g))
        return acc

    def transforms(self):
        return [self.transform(chi) for chi in characters_of(self.group)]

    def inv(self):
        vals = self.transforms()
        for chi, v in zip(characters_of(self.group), vals):
            if v.is_zero():
                raise NonInvertible("transform vanishes at %r" % (chi,), witness=chi)
        return GroupAlgebraElement.from_transforms(self.group, [v.inv() for v in vals])

    def is_invertible(self):
        return all(not v.is_zero() for v in self.transforms())

    def galois(self, k):
        """Coefficientwise sigma_k."""
        N = lcm(self.level, self.group.exponent)
        return GroupAlgebraElement(self.group, [_at(c, N).galois(k) for c in self.coeffs], N)

    def as_grouplike(self):
        """The group element g if self == g, else None."""
        nz = [(g, c) for g, c in self.items() if not c.is_zero()]
        if len(nz) == 1 and nz[0][1] == 1:
            return nz[0][0]
        return None

    def is_rational(self):
        return all(c.is_rational() for c in self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement) and self.group == other.group
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))

    def __hash__(self):
        return hash(self.coeffs)

    def sort_key(self):
        return tuple(c.coeffs for c in self.coeffs)

    def to_json(self):
        return {"gamma": self.group.to_json(), "level": self.level,
                "coeffs": [[list(g.exponents), c.to_json()] for g, c in self.items()]}

    @classmethod
    def from_json(cls, d):
        G = FinAbGroup(d["gamma"])
        cs = {GroupElement(G, e): CycloNumber.from_json(v) for e, v in d["coeffs"]}
        return cls(G, cs, d.get("level"))

    def __repr__(self):
        terms = ["(%s)*%r" % (c, g) for g, c in self.items() if not c.is_zero()]
        return "GroupAlgebraElement(%s)" % (" + ".join(terms) or "0")


def ga_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    raise ValueError("unknown operation %r" % (op,))


def galois_generators(N):
    """Units generating (Z/N)^x, in increasing order."""
    U = unit_group(N)
    return sorted({U.lift(g) for g in U.group.generators()}) or [1]


# -- H-membership and primitivity ----------------------------------------------------

@dataclass
class MembershipResult:
    member: bool
    level: int
    cocycle: dict = field(default_factory=dict)
    failed_at: int = None

    def __bool__(self):
        return self.member


def h_membership(a):
    """Whether sigma_k(a) a**-1 is grouplike for every generator sigma_k."""
    ainv = a.inv()
    N = lcm(a.level, a.group.exponent)
    cocycle = {}
    for k in galois_generators(N):
        g = (a.galois(k) * ainv).as_grouplike()
        if g is None:
            return MembershipResult(False, N, cocycle, k)
        cocycle[k] = g
    return MembershipResult(True, N, cocycle)


def comultiplication_defect(a):
    """u = Delta(a) (i1(a) i2(a))**-1 in the algebra over Gamma x Gamma."""
    G = a.group
    G2, pair, unpair = G.square()
    vals = a.transforms()
    for chi, v in zip(characters_of(G), vals):
        if v.is_zero():
            raise NonInvertible("transform vanishes at %r" % (chi,), witness=chi)
    idx = {chi: i for i, chi in enumerate(characters_of(G))}
    from .chars import Character
    out = []
    for psi in characters_of(G2):
        # characters of G x G split as (phi1, phi2) along the same coordinates
        phi1 = Character(G, psi.exponents[0::2])
        phi2 = Character(G, psi.exponents[1::2])
        out.append(vals[idx[phi1 * phi2]] / (vals[idx[phi1]] * vals[idx[phi2]]))
    return GroupAlgebraElement.from_transforms(G2, out), pair


def primitivity_test(a):
    """Whether some translate (g x h)**-1 u is fixed by Omega_Q.

    For constant Gamma a translate only permutes coefficients, so the first
    pair in the ordered scan succeeds whenever any pair does.
    """
    u, pair = comultiplication_defect(a)
    G = a.group
    for g in G.elements():
        for h in G.elements():
            if u.translate(pair(g, h).inverse()).is_rational():
                return True
    return False


# -- torsors -----------------------------------------------------------------

class TorsorDescriptor:
    """A homomorphism (Z/level)^x -> Gamma, closed up from generator images."""

    def __init__(self, group, level, hom):
        self.group = group
        self.level = f = int(level)
        pairs = [(int(u) % f if f > 1 else 0, g if isinstance(g, GroupElement) else GroupElement(group, g))
                 for u, g in (hom.items() if isinstance(hom, dict) else hom)]
        for u, _ in pairs:
            if gcd(u, f) != 1:
                raise ValueError("%d is not a unit modulo %d" % (u, f))
        table = {1 % f: group.identity()}
        frontier = [1 % f]
        while frontier:
            nxt = []
            for x in frontier:
                for u, g in pairs:
                    y, img = x * u % f, table[x] * g
                    if y in table:
                        if table[y] != img:
                            raise ValueError("generator images do not define a homomorphism")
                    else:
                        table[y] = img
                        nxt.append(y)
            frontier = nxt
        if len(table) != len(units(f)):
            raise ValueError("generator images do not cover (Z/%d)^x" % f)
        self.hom = table

    @classmethod
    def trivial(cls, group):
        return cls(group, 1, [])

    @classmethod
    def from_character(cls, group, chi, g):
        """The torsor a -> g**k where chi(a) = zeta**k, for a Dirichlet character chi."""
        f = chi.modulus
        o = g.order()
        pairs = []
        for u in units(f):
            t = chi.angle(u)
            k = t * o
            if k.denominator != 1:
                raise ValueError("order of g does not match the character")
            pairs.append((u, g ** int(k)))
        return cls(group, f, pairs)

    def __call__(self, a):
        return self.hom[a % self.level]

    def kernel(self):
        return sorted(a for a, g in self.hom.items() if g.is_identity())

    def image(self):
        return sorted(set(self.hom.values()))

    def field(self):
        return build_field(self.level, self.kernel())

    def is_tame(self):
        return is_squarefree(self.field().conductor)

    def __mul__(self, other):
        if other.group != self.group:
            raise GroupMismatch("torsors for different groups")
        M = lcm(self.level, other.level)
        pairs = [(a, self(a) * other(a)) for a in units(M)]
        return TorsorDescriptor(self.group, M, pairs)

    def generator_images(self):
        U = unit_group(self.level)
        gens = sorted({U.lift(g) for g in U.group.generators()})
        return [(u, self(u)) for u in gens]

    def to_json(self):
        return {"gamma": self.group.to_json(), "level": self.level,
                "hom": [[u, list(g.exponents)] for u, g in self.generator_images()]}

    @classmethod
    def from_json(cls, d):
        G = FinAbGroup(d["gamma"])
        return cls(G, d["level"], [(u, GroupElement(G, e)) for u, e in d["hom"]])

    def __eq__(self, other):
        return (isinstance(other, TorsorDescriptor) and self.group == other.group
                and self.primitive_key() == other.primitive_key())

    def __hash__(self):
        return hash(self.primitive_key())

    def primitive_key(self):
        """The homomorphism restated at the conductor of its fixed field."""
        f = self.field().conductor
        vals = []
        for b in units(f):
            a = b if f > 1 else 1
            while gcd(a, self.level) != 1:
                a += f
            vals.append((b, self(a).exponents))
        return (f, tuple(vals))

    def __repr__(self):
        return "TorsorDescriptor(%s, level=%d, %r)" % (self.group, self.level, self.generator_images())


def resolvend_of_torsor(T, rotation=None):
    """r = sum_g x(g) g**-1 for the normal basis point x described above.

    ``rotation`` (a unit) replaces beta by sigma_rotation(beta), the other
    admissible placement of the identity copy.
    """
    L = T.field()
    fp = L.conductor
    if not is_squarefree(fp):
        raise WildRamification("torsor field has non-squarefree conductor %d" % fp)
    beta = _nib(L)
    if rotation is not None and fp > 1:
        beta = beta.galois(rotation % fp)
    G = T.group
    zero = CycloNumber.rational(0)
    coeffs = {}
    seen = set()
    for a in sorted(T.hom):
        g = T(a)
        if g in seen:
            continue
        seen.add(g)
        x = beta.galois(a % fp) if fp > 1 else beta
        coeffs[g.inverse()] = x
    return GroupAlgebraElement(G, [coeffs.get(g, zero) for g in G.elements()])


@dataclass(frozen=True)
class ReducedResolvend:
    element: GroupAlgebraElement
    normalized: bool

    def transforms(self):
        return self.element.transforms()


def reduced_resolvend(a):
    """Canonical Gamma-translate: nonzero identity coefficient, then lexicographic minimum."""
    G = a.group
    best = None
    for g in G.elements():
        b = a.translate(g)
        if b.coeffs[0].is_zero():
            continue
        key = b.sort_key()
        if best is None or key < best[0]:
            best = (key, b)
    if best is None:
        return ReducedResolvend(a, False)
    return ReducedResolvend(best[1], True)


def field_resolvents(L):
    """phi -> (alpha|phi) = sum_g g(alpha) phi(g)**-1 for the trace generator alpha."""
    f = L.conductor
    G = L.galois_group
    if f == 1:
        return CharFn.ones(G)
    if not is_squarefree(f):
        raise WildRamification("conductor %d is not squarefree" % f)
    E = G.exponent
    dl = {a: L.galois_element(a) for a in units(f)}
    vals = []
    for chi in characters_of(G):
        o = chi.order()
        N = lcm(f, o)
        terms = []
        for a, g in dl.items():
            k = (-chi.value_exponent(g)) % E // (E // o)  # phi(g)**-1 = zeta_o**k
            terms.append(((a * (N // f) + k * (N // o)) % N, 1))
        vals.append(CycloNumber.from_exponents(N, terms))
    return CharFn(G, vals)


def torsor_relk_class(T):
    """Class of the torsor: trivial finite part, global part the reduced resolvend transform."""
    from .relk import IdelicCharFn, RelKRep
    r = reduced_resolvend(resolvend_of_torsor(T)).element
    return RelKRep(IdelicCharFn(T.group, {}), CharFn(T.group, r.transforms()))
