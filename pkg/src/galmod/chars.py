"""Finite abelian groups, their characters and character functions.

A group is given by invariant factors d1 | d2 | ... | dr.  Elements and
characters are both exponent vectors; the character with dual exponents x
sends the element e to zeta_E ** sum(e_i x_i E / d_i), E the exponent.

>>> G = FinAbGroup([2, 2])
>>> [chi.exponents for chi in characters_of(G)]
[(0, 0), (0, 1), (1, 0), (1, 1)]
"""

from itertools import product
from math import gcd, lcm, prod

from .cyclo import CycloNumber
from .errors import GroupMismatch, SizeLimit

MAX_CHARACTERS = 10 ** 4


class FinAbGroup:
    __slots__ = ("invariant_factors", "_elements")

    def __init__(self, invariant_factors=()):
        d = tuple(int(x) for x in invariant_factors)
        if any(x < 2 for x in d):
            raise ValueError("invariant factors must be at least 2")
        if any(d[i + 1] % d[i] for i in range(len(d) - 1)):
            raise ValueError("invariant factors must form a divisibility chain: %r" % (d,))
        self.invariant_factors = d
        self._elements = None

    @property
    def order(self):
        return prod(self.invariant_factors)

    @property
    def exponent(self):
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def rank(self):
        return len(self.invariant_factors)

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and self.invariant_factors == other.invariant_factors

    def __hash__(self):
        return hash(("FinAbGroup", self.invariant_factors))

    def __repr__(self):
        return "FinAbGroup(%r)" % (list(self.invariant_factors),)

    def __str__(self):
        return " x ".join("C%d" % d for d in self.invariant_factors) or "1"

    def identity(self):
        return GroupElement(self, (0,) * self.rank)

    def element(self, exponents):
        return GroupElement(self, exponents)

    def generators(self):
        return [GroupElement(self, tuple(int(i == j) for j in range(self.rank)))
                for i in range(self.rank)]

    def elements(self):
        """All elements, lexicographic in the exponent vectors (identity first)."""
        if self._elements is None:
            self._elements = tuple(GroupElement(self, e, _checked=True)
                                   for e in product(*(range(d) for d in self.invariant_factors)))
        return self._elements

    def index(self, g):
        """Position of g in :meth:`elements`."""
        i = 0
        for x, d in zip(g.exponents, self.invariant_factors):
            i = i * d + x
        return i

    def square(self):
        """G x G as a FinAbGroup, with the coordinate maps in and out of it.

        The factors of G x G sorted are d1, d1, d2, d2, ... which is again a
        divisibility chain; ``pair(g, h)`` places g in the even and h in the odd
        coordinates.
        """
        G2 = FinAbGroup(sorted(self.invariant_factors * 2))

        def pair(g, h):
            e = []
            for a, b in zip(g.exponents, h.exponents):
                e.extend((a, b))
            return GroupElement(G2, e)

        def unpair(x):
            return (GroupElement(self, x.exponents[0::2]), GroupElement(self, x.exponents[1::2]))

        return G2, pair, unpair

    def to_json(self):
        return list(self.invariant_factors)


class GroupElement:
    __slots__ = ("group", "exponents")

    def __init__(self, group, exponents, _checked=False):
        if not _checked:
            exponents = tuple(int(e) % d for e, d in zip(exponents, group.invariant_factors))
            if len(exponents) != group.rank:
                raise ValueError("wrong number of exponents for %s" % group)
        self.group = group
        self.exponents = exponents

    def _check(self, other):
        if self.group != other.group:
            raise GroupMismatch("elements of different groups")

    def __mul__(self, other):
        self._check(other)
        return GroupElement(self.group, [a + b for a, b in zip(self.exponents, other.exponents)])

    def inverse(self):
        return GroupElement(self.group, [-a for a in self.exponents])

    def __pow__(self, k):
        return GroupElement(self.group, [a * k for a in self.exponents])

    def is_identity(self):
        return not any(self.exponents)

    def order(self):
        o = 1
        for a, d in zip(self.exponents, self.group.invariant_factors):
            o = lcm(o, d // gcd(a, d))
        return o

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and self.group == other.group
                and self.exponents == other.exponents)

    def __hash__(self):
        return hash(("g", self.exponents))

    def __lt__(self, other):
        return self.exponents < other.exponents

    def __repr__(self):
        return "g%r" % (self.exponents,)


class Character:
    __slots__ = ("group", "exponents")

    def __init__(self, group, exponents, _checked=False):
        if not _checked:
            exponents = tuple(int(e) % d for e, d in zip(exponents, group.invariant_factors))
            if len(exponents) != group.rank:
                raise ValueError("wrong number of exponents for %s" % group)
        self.group = group
        self.exponents = exponents

    def _check(self, other):
        if self.group != other.group:
            raise GroupMismatch("characters of different groups")

    def value_exponent(self, g):
        """k in [0, E) with chi(g) = zeta_E ** k."""
        if g.group != self.group:
            raise GroupMismatch("character and element live on different groups")
        E = self.group.exponent
        return sum(e * x * (E // d) for e, x, d in
                   zip(g.exponents, self.exponents, self.group.invariant_factors)) % E

    def __call__(self, g):
        E = self.group.exponent
        k = self.value_exponent(g)
        o = self.order()
        # write the value at the order of the character, the smallest possible level
        return CycloNumber.zeta(o, k // (E // o) if o > 1 else 0)

    def __mul__(self, other):
        self._check(other)
        return Character(self.group, [a + b for a, b in zip(self.exponents, other.exponents)])

    def conj(self):
        return Character(self.group, [-a for a in self.exponents])

    def __pow__(self, k):
        return Character(self.group, [a * k for a in self.exponents])

    def galois(self, k):
        """omega_k o chi, i.e. chi**k; k must be a unit mod the exponent."""
        if gcd(k, self.group.exponent) != 1:
            raise ValueError("k=%d is not a unit modulo the group exponent" % k)
        return self ** k

    def is_trivial(self):
        return not any(self.exponents)

    def order(self):
        o = 1
        for a, d in zip(self.exponents, self.group.invariant_factors):
            o = lcm(o, d // gcd(a, d))
        return o

    def __eq__(self, other):
        return (isinstance(other, Character) and self.group == other.group
                and self.exponents == other.exponents)

    def __hash__(self):
        return hash(("chi", self.exponents))

    def __repr__(self):
        return "chi%r" % (self.exponents,)


def characters_of(G):
    """All characters of G in lexicographic dual-exponent order (trivial first)."""
    if G.order > MAX_CHARACTERS:
        raise SizeLimit("group of order %d exceeds the limit %d" % (G.order, MAX_CHARACTERS))
    return [Character(G, e, _checked=True)
            for e in product(*(range(d) for d in G.invariant_factors))]


def char_index(chi):
    return chi.group.index(chi)


def char_act(chi, action, arg=None):
    """Uniform front end: action in {'eval', 'mul', 'conj', 'galois'}."""
    if action == "eval":
        return chi(arg)
    if action == "mul":
        return chi * arg
    if action == "conj":
        return chi.conj()
    if action == "galois":
        return chi.galois(arg)
    raise ValueError("unknown character action %r" % (action,))


class CharFn:
    """A function from the characters of G to nonzero cyclotomic numbers.

    Values are stored in the enumeration order of :func:`characters_of`.
    """

    __slots__ = ("group", "values", "_equivariant")

    def __init__(self, group, values, allow_zero=False):
        if callable(values):
            values = [values(chi) for chi in characters_of(group)]
        elif isinstance(values, dict):
            values = [values[chi] for chi in characters_of(group)]
        vals = []
        for v in values:
            if not isinstance(v, CycloNumber):
                v = CycloNumber.rational(v)
            if v.is_zero() and not allow_zero:
                raise ValueError("character functions take nonzero values")
            vals.append(v)
        if len(vals) != group.order:
            raise ValueError("need one value per character")
        self.group = group
        self.values = tuple(vals)
        self._equivariant = None

    @classmethod
    def ones(cls, group):
        one = CycloNumber.rational(1)
        return cls(group, [one] * group.order)

    def __call__(self, chi):
        if chi.group != self.group:
            raise GroupMismatch("character of a different group")
        return self.values[char_index(chi)]

    def items(self):
        return zip(characters_of(self.group), self.values)

    def _check(self, other):
        if self.group != other.group:
            raise GroupMismatch("character functions on different groups")

    def __mul__(self, other):
        self._check(other)
        return CharFn(self.group, [a * b for a, b in zip(self.values, other.values)])

    def __truediv__(self, other):
        self._check(other)
        return CharFn(self.group, [a / b for a, b in zip(self.values, other.values)])

    def inv(self):
        return CharFn(self.group, [v.inv() for v in self.values])

    def __pow__(self, k):
        return CharFn(self.group, [v ** k for v in self.values])

    def is_one(self):
        return all(v == 1 for v in self.values)

    def __eq__(self, other):
        return isinstance(other, CharFn) and self.group == other.group and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def ambient_level(self):
        """lcm of the value levels and the group exponent."""
        L = self.group.exponent
        for v in self.values:
            L = lcm(L, v.level)
        return L

    @property
    def equivariant_flag(self):
        if self._equivariant is None:
            self._equivariant = charfn_check_equivariance(self, self.ambient_level())
        return self._equivariant

    def to_json(self):
        return [[list(chi.exponents), v.to_json()] for chi, v in self.items()]

    @classmethod
    def from_json(cls, group, data):
        vals = {Character(group, e): CycloNumber.from_json(v) for e, v in data}
        return cls(group, vals)

    def __repr__(self):
        return "CharFn(%s, [%s])" % (self.group, ", ".join(str(v) for v in self.values))


def charfn_check_equivariance(f, level):
    """Whether f(chi**k) == sigma_k(f(chi)) for all chi and all k prime to level."""
    G = f.group
    if level % G.exponent:
        raise ValueError("level %d is not a multiple of the group exponent %d" % (level, G.exponent))
    lifted = []
    for v in f.values:
        if level % v.level:
            v = v.canonical()
            if level % v.level:
                raise ValueError("value %s is not expressible at level %d" % (v, level))
        lifted.append(v.lift(level))
    chars = characters_of(G)
    for k in range(1, level + 1):
        if gcd(k, level) != 1:
            continue
        for chi, v in zip(chars, lifted):
            if lifted[char_index(chi ** k)] != v.galois(k):
                return False
    return True
