"""Gauss sums, archimedean factors, the unramified characteristic and Pfaffians.

Conventions
-----------
* ``gauss_sum(chi) = sum chi(a) zeta_f**a`` over units a mod f, for chi primitive
  of conductor f; the trivial character has Gauss sum 1.
* A character phi of G = Gal(L/Q) is attached to the Dirichlet character
  psi(a) = phi(sigma_a)**-1 modulo the conductor of L (geometric normalisation:
  sigma_a is arithmetic Frobenius at primes a).  The Galois-Gauss sum of phi is
  ``gauss_sum`` of the primitive character inducing psi.  This is the
  normalisation under which the Lagrange resolvent sum g(alpha) phi(g)**-1 of
  the trace generator alpha is exactly tau(phi) times the product of the
  unramified characteristics below.
* ``unramified_characteristic(psi, p)`` is det(-F_p**-1 | V**I_p), F_p a Frobenius,
  computed on the field cut out by the modulus of psi: it is 1 if p does not
  divide the modulus or divides the conductor, and -psi*(p) otherwise.
"""

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import gcd, lcm

from .chars import Character
from .cyclo import CycloNumber
from .errors import BadTable, BadTrace, NonIntegralExponent, NotPrimitive
from .fields import unit_group
from .ntheory import divisors, units


class DirichletCharacter:
    """A character of (Z/modulus)^x, extended by zero to non-units."""

    __slots__ = ("modulus", "character", "_conductor")

    def __init__(self, modulus, character):
        U = unit_group(modulus)
        if character.group != U.group:
            raise ValueError("character is not defined on the unit group mod %d" % modulus)
        self.modulus = modulus
        self.character = character
        self._conductor = None

    @classmethod
    def from_angles(cls, modulus, angle):
        """Build from a function unit -> Fraction in [0, 1) (chi(a) = e(angle))."""
        U = unit_group(modulus)
        G = U.group
        exps = []
        for gen, d in zip(G.generators(), G.invariant_factors):
            x = angle(U.lift(gen)) * d
            if x.denominator != 1:
                raise ValueError("angles do not define a character mod %d" % modulus)
            exps.append(int(x))
        return cls(modulus, Character(G, exps))

    @classmethod
    def trivial(cls, modulus=1):
        G = unit_group(modulus).group
        return cls(modulus, Character(G, (0,) * G.rank))

    def angle(self, a):
        """chi(a) = exp(2 pi i angle); None at non-units."""
        a %= self.modulus
        if gcd(a, self.modulus) != 1 and self.modulus > 1:
            return None
        G = self.character.group
        k = self.character.value_exponent(unit_group(self.modulus).dlog(a))
        return Fraction(k, G.exponent)

    def __call__(self, a):
        t = self.angle(a)
        if t is None:
            return CycloNumber.rational(0)
        return CycloNumber.zeta(t.denominator, t.numerator)

    def order(self):
        return self.character.order()

    def parity(self):
        """chi(-1) as +1 or -1."""
        t = self.angle(-1)
        return 1 if t == 0 else -1

    @property
    def conductor(self):
        if self._conductor is None:
            m = self.modulus
            for d in divisors(m):
                if all(self.angle(u) == 0 for u in units(m) if (u - 1) % d == 0):
                    self._conductor = d
                    break
        return self._conductor

    def is_primitive(self):
        return self.conductor == self.modulus

    def primitive(self):
        """The primitive character inducing this one."""
        f = self.conductor
        if f == self.modulus:
            return self
        m = self.modulus

        def angle(b):
            a = b if f > 1 else 1
            while gcd(a, m) != 1:
                a += f
            return self.angle(a)

        return DirichletCharacter.from_angles(f, angle)

    def conj(self):
        return DirichletCharacter(self.modulus, self.character.conj())

    def __mul__(self, other):
        if other.modulus != self.modulus:
            M = lcm(self.modulus, other.modulus)
            return self.extend(M) * other.extend(M)
        return DirichletCharacter(self.modulus, self.character * other.character)

    def extend(self, M):
        """The induced character modulo a multiple M of the modulus."""
        if M % self.modulus:
            raise ValueError("%d is not a multiple of %d" % (M, self.modulus))
        return DirichletCharacter.from_angles(M, lambda a: self.angle(a % self.modulus))

    def __eq__(self, other):
        return (isinstance(other, DirichletCharacter) and self.modulus == other.modulus
                and self.character == other.character)

    def __hash__(self):
        return hash((self.modulus, self.character.exponents))

    def to_json(self):
        return {"modulus": self.modulus, "exponents": list(self.character.exponents)}

    def __repr__(self):
        return "DirichletCharacter(%d, %r)" % (self.modulus, self.character.exponents)


def dirichlet_characters(m):
    from .chars import characters_of
    return [DirichletCharacter(m, chi) for chi in characters_of(unit_group(m).group)]


@lru_cache(maxsize=None)
def primitive_characters(f):
    """All primitive Dirichlet characters of conductor exactly f."""
    return tuple(chi for chi in dirichlet_characters(f) if chi.conductor == f)


def field_dirichlet_character(L, phi):
    """psi(a) = phi(sigma_a)**-1 modulo the conductor of L."""
    E = L.galois_group.exponent

    def angle(a):
        return Fraction(-phi.value_exponent(L.galois_element(a)), E) % 1

    return DirichletCharacter.from_angles(L.conductor, angle)


# -- Gauss sums ---------------------------------------------------------------

def gauss_sum(chi):
    """tau(chi) = sum chi(a) zeta_f**a, exact at level lcm(f, order)."""
    if not chi.is_primitive():
        raise NotPrimitive("character of modulus %d has conductor %d" % (chi.modulus, chi.conductor))
    return _imprimitive_gauss_sum(chi)


def _imprimitive_gauss_sum(chi):
    f = chi.modulus
    if f == 1:
        return CycloNumber.rational(1)
    o = chi.order()
    L = lcm(f, o)
    terms = []
    for a in units(f):
        t = chi.angle(a)
        terms.append(((t.numerator * (L // t.denominator) + a * (L // f)) % L, 1))
    return CycloNumber.from_exponents(L, terms)


def galois_gauss_sum(L, phi):
    """tau(Q, phi) for a character of Gal(L/Q), in the normalisation above."""
    return gauss_sum(field_dirichlet_character(L, phi).primitive())


def w_infinity(degree, trace):
    """i ** -((degree - trace) / 2), the archimedean factor at the real place."""
    degree, trace = int(degree), int(trace)
    if abs(trace) > degree or (degree - trace) % 2:
        raise BadTrace("trace %d is impossible for degree %d" % (trace, degree))
    return CycloNumber.zeta(4, -((degree - trace) // 2))


def epsilon_constant(chi):
    """tau(chi) * w_infinity(conj chi); |d_Q| = 1."""
    return gauss_sum(chi) * w_infinity(1, chi.parity())


def unramified_characteristic(chi, p):
    """det(-F_p**-1 on the inertia invariants) for the modulus-level field."""
    if chi.modulus % p or chi.conductor % p == 0:
        return CycloNumber.rational(1)
    return -chi.primitive()(p)


# -- nonabelian character tables ---------------------------------------------------

def _value(v):
    if isinstance(v, dict):
        return CycloNumber.from_json(v)
    return CycloNumber.rational(Fraction(v))


@dataclass(frozen=True)
class CharTable:
    name: str
    class_sizes: tuple
    degrees: tuple
    values: tuple
    power_map_2: tuple
    subgroups: tuple = ()

    @property
    def order(self):
        return sum(self.class_sizes)

    @classmethod
    def from_json(cls, d):
        try:
            values = tuple(tuple(_value(v) for v in row) for row in d["values"])
            subs = tuple((s.get("name", ""), tuple(s["class_counts"])) for s in d.get("subgroups", []))
            T = cls(d.get("name", ""), tuple(d["class_sizes"]), tuple(d["degrees"]), values,
                    tuple(d["power_map_2"]), subs)
        except (KeyError, TypeError, ValueError) as exc:
            raise BadTable("malformed character table: %s" % exc)
        T.validate()
        return T

    def to_json(self):
        return {"name": self.name, "class_sizes": list(self.class_sizes),
                "degrees": list(self.degrees),
                "values": [[v.to_json() for v in row] for row in self.values],
                "power_map_2": list(self.power_map_2),
                "subgroups": [{"name": n, "class_counts": list(c)} for n, c in self.subgroups]}

    def validate(self):
        n, k = self.order, len(self.class_sizes)
        if len(self.values) != k or any(len(r) != k for r in self.values):
            raise BadTable("character table must be square")
        if sum(d * d for d in self.degrees) != n:
            raise BadTable("sum of squared degrees is not the group order")
        if any(r[0] != d for r, d in zip(self.values, self.degrees)):
            raise BadTable("first column must hold the degrees")
        if len(self.power_map_2) != k or any(not 0 <= c < k for c in self.power_map_2):
            raise BadTable("bad power map")
        for i in range(k):
            for j in range(k):
                s = sum((self.values[i][c] * self.values[j][c].conj() * self.class_sizes[c]
                         for c in range(k)), CycloNumber.rational(0))
                if s != (n if i == j else 0):
                    raise BadTable("rows %d and %d violate orthogonality" % (i, j))
        for c in range(k):
            s = sum((v[c] * v[c].conj() for v in self.values), CycloNumber.rational(0))
            if s * self.class_sizes[c] != n:
                raise BadTable("column %d violates orthogonality" % c)
        for name, counts in self.subgroups:
            if len(counts) != k or any(not 0 <= x <= s for x, s in zip(counts, self.class_sizes)):
                raise BadTable("subgroup %r has inconsistent class counts" % name)

    def inertia_dims(self, class_counts):
        """dim V_phi**I for each row, I given by how many elements it meets per class."""
        size = sum(class_counts)
        out = []
        for row in self.values:
            s = sum((row[c] * x for c, x in enumerate(class_counts)), CycloNumber.rational(0))
            q = s.to_rational() / size
            if q.denominator != 1:
                raise BadTable("class counts do not describe a subgroup")
            out.append(int(q))
        return out


def fixtures_dir():
    env = os.environ.get("GALMOD_FIXTURES")
    if env:
        return env
    return str(resources.files("galmod") / "fixtures")


def load_table(name):
    path = os.path.join(fixtures_dir(), "%s.json" % name.lower())
    with open(path) as fh:
        return CharTable.from_json(json.load(fh))


def frobenius_schur(T, row):
    n = T.order
    s = sum((T.values[row][T.power_map_2[c]] * T.class_sizes[c] for c in range(len(T.class_sizes))),
            CycloNumber.rational(0))
    if not s.is_rational():
        raise BadTable("Frobenius-Schur sum of row %d is irrational" % row)
    nu = s.to_rational() / n
    if nu not in (-1, 0, 1):
        raise BadTable("Frobenius-Schur indicator %s of row %d is out of range" % (nu, row))
    return int(nu)


def symplectic_characters(T):
    return [i for i in range(len(T.degrees)) if frobenius_schur(T, i) == -1]


@dataclass(frozen=True)
class Place:
    prime: int
    residue_degree: int
    inertia_dims: tuple


@dataclass(frozen=True)
class SupplementedRamData:
    places: tuple

    def __post_init__(self):
        for P in self.places:
            if P.residue_degree < 1:
                raise ValueError("residue degrees are positive")

    @classmethod
    def from_json(cls, d):
        return cls(tuple(Place(int(x["prime"]), int(x["residue_degree"]), tuple(x["inertia_dims"]))
                         for x in d["places"]))

    def to_json(self):
        return {"places": [{"prime": P.prime, "residue_degree": P.residue_degree,
                            "inertia_dims": list(P.inertia_dims)} for P in self.places]}


def pfaffian_exponent(T, ram, phi, p):
    deg = T.degrees[phi]
    total = Fraction(0)
    for P in ram.places:
        if P.prime != p:
            continue
        d = P.inertia_dims[phi]
        if not 0 <= d <= deg:
            raise ValueError("dim V^I = %d is out of range for degree %d" % (d, deg))
        # (phi, Ind u) = phi(1) - dim V^I by Frobenius reciprocity
        total += Fraction(P.residue_degree * (deg - d), 2)
    if total.denominator != 1:
        raise NonIntegralExponent("exponent %s at p=%d is not an integer" % (total, p))
    return int(total)


def pfaffian(T, ram, phi, p):
    """prod over places above p of (-p) ** (f (phi(1) - dim V^I) / 2)."""
    if phi not in symplectic_characters(T):
        raise ValueError("row %d is not symplectic" % phi)
    return CycloNumber.rational(Fraction(-p) ** pfaffian_exponent(T, ram, phi, p))
