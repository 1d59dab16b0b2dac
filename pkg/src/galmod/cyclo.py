"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`CycloNumber` stores an element of Q(zeta_N) in the power basis
1, zeta, ..., zeta**(phi(N)-1) modulo the N-th cyclotomic polynomial.
Internally the coefficients are kept as integer numerators over one common
positive denominator, which keeps the hot loops in plain integer arithmetic.

>>> z3 = CycloNumber.zeta(3)
>>> (1 + z3) * (1 + z3 ** 2)
CycloNumber(3, ['1', '0'])
>>> CycloNumber.zeta(4) * CycloNumber.zeta(4)
CycloNumber(4, ['-1', '0'])

Binary operations lift both operands to the lcm of their levels.  Nothing is
ever descended automatically; :meth:`CycloNumber.canonical` does that on request.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import mpmath

from . import kernels
from .errors import InvalidGaloisIndex, NonInvertible
from .ntheory import divisors, ramanujan_sum, totient

# conjugate-product norms are used up to this many distinct conjugates
ORBIT_NORM_LIMIT = 24


@lru_cache(maxsize=None)
def _unit_generators(N):
    """A short generating set of (Z/N)^x, chosen greedily."""
    H = {1 % N}
    gens = []
    for k in range(2, N):
        if gcd(k, N) != 1 or k in H:
            continue
        gens.append(k)
        # <H, k> is the union of the cosets H k**i
        new, power = set(H), k
        while power not in H:
            new.update(h * power % N for h in H)
            power = power * k % N
        H = new
    return tuple(gens)


# -- cyclotomic polynomials and reduction tables ------------------------------

def _poly_divexact(num, den):
    """Exact division of integer polynomials (low degree first); den monic."""
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    assert not any(num[:dn]), "inexact cyclotomic division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(N):
    """Coefficients of Phi_N, constant term first."""
    p = [-1] + [0] * (N - 1) + [1]
    for d in divisors(N):
        if d < N:
            p = _poly_divexact(p, cyclotomic_poly(d))
    return tuple(p)


@lru_cache(maxsize=None)
def reduction_table(N):
    """Rows x**e mod Phi_N for 0 <= e < N, as lists of ints."""
    phi = cyclotomic_poly(N)
    n = len(phi) - 1
    rows = []
    cur = [1] + [0] * (n - 1)
    for _ in range(N):
        rows.append(cur)
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            nxt = [a - top * b for a, b in zip(nxt, phi)]
        cur = nxt
    return rows


def _content(vals):
    g = 0
    for v in vals:
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def _to_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c)


# -- numerical values ---------------------------------------------------------

class ComplexApprox:
    """A complex number known to ``precision_bits`` bits.

    ``error`` is an absolute error bound, ``2**-(precision_bits-8)`` times the
    size of the exact input that produced the value.
    """

    __slots__ = ("value", "precision_bits", "error")

    def __init__(self, value, precision_bits, error=None):
        if precision_bits < 53:
            raise ValueError("precision_bits must be at least 53")
        self.precision_bits = int(precision_bits)
        with mpmath.workprec(self.precision_bits + 16):
            self.value = mpmath.mpc(value)
            if error is None:
                error = mpmath.mpf(2) ** (-(self.precision_bits - 8))
            self.error = mpmath.mpf(error)

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    def __abs__(self):
        with mpmath.workprec(self.precision_bits + 16):
            return abs(self.value)

    def __complex__(self):
        return complex(self.value)

    def conjugate(self):
        return ComplexApprox(self.value.conjugate(), self.precision_bits, self.error)

    def __repr__(self):
        return "ComplexApprox(%s, %d bits)" % (mpmath.nstr(self.value, 20), self.precision_bits)


# -- the field elements -------------------------------------------------------

class CycloNumber:
    """An exact element of Q(zeta_N) (see the module docstring)."""

    __slots__ = ("level", "_num", "_den", "_hash", "_norm")

    def __init__(self, level, coeffs=None):
        level = int(level)
        if level < 1:
            raise ValueError("level must be positive")
        n = totient(level)
        if coeffs is None:
            coeffs = [0] * n
        fr = [_to_fraction(c) for c in coeffs]
        if len(fr) != n:
            raise ValueError("level %d needs %d coefficients, got %d" % (level, n, len(fr)))
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        self._set(level, [c.numerator * (den // c.denominator) for c in fr], den)

    def _set(self, level, num, den):
        if den < 0:
            num, den = [-c for c in num], -den
        g = gcd(_content(num), den)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        if not any(num):
            den = 1
        self.level = level
        self._num = tuple(num)
        self._den = den
        self._hash = None
        self._norm = None

    @classmethod
    def _raw(cls, level, num, den=1):
        obj = cls.__new__(cls)
        obj._set(level, num, den)
        return obj

    # constructors
    @classmethod
    def rational(cls, q, level=1):
        q = _to_fraction(q)
        n = totient(level)
        return cls._raw(level, [q.numerator] + [0] * (n - 1), q.denominator)

    @classmethod
    def zeta(cls, N, k=1):
        """zeta_N ** k."""
        return cls._raw(N, list(reduction_table(N)[k % N]), 1)

    @classmethod
    def root_of_unity(cls, order, k):
        return cls.zeta(order, k)

    @classmethod
    def from_exponents(cls, N, terms, den=1):
        """Element sum(c * zeta_N**e) for (e, c) in ``terms`` (integer c), over den."""
        vec = [0] * N
        for e, c in terms:
            vec[e % N] += c
        return cls._raw(N, kernels.reduce_terms(vec, reduction_table(N), N), den)

    # basic accessors
    @property
    def coeffs(self):
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    def is_zero(self):
        return not any(self._num)

    def is_rational(self):
        return not any(self._num[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self._num[0], self._den)

    def is_integral(self):
        """True iff the element lies in Z[zeta_N] (the power basis is integral)."""
        return self._den == 1

    # level handling
    def lift(self, M):
        """The same element written at level M (a multiple of the level)."""
        N = self.level
        if M == N:
            return self
        if M % N:
            raise ValueError("cannot lift level %d to %d" % (N, M))
        s = M // N
        vec = [0] * M
        for j, c in enumerate(self._num):
            if c:
                vec[j * s] += c
        return CycloNumber._raw(M, kernels.reduce_terms(vec, reduction_table(M), M), self._den)

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.rational(other, self.level)
        return NotImplemented

    def _pair(self, other):
        L = lcm(self.level, other.level)
        return L, self.lift(L), other.lift(L)

    # ring operations
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        L, a, b = self._pair(other)
        return CycloNumber._raw(L, [x * b._den + y * a._den for x, y in zip(a._num, b._num)],
                                a._den * b._den)

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber._raw(self.level, [-c for c in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloNumber._raw(self.level, [c * q.numerator for c in self._num],
                                    self._den * q.denominator)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        L, a, b = self._pair(other)
        if a.is_rational():
            r, q = a._num[0], a._den
            return CycloNumber._raw(L, [r * c for c in b._num], q * b._den)
        if b.is_rational():
            r, q = b._num[0], b._den
            return CycloNumber._raw(L, [r * c for c in a._num], q * a._den)
        num = kernels.mulmod(list(a._num), list(b._num), reduction_table(L), L)
        return CycloNumber._raw(L, num, a._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inv() ** (-k)
        result = CycloNumber.rational(1, self.level)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_zeta(self, M, e):
        """self * zeta_M**e, computed by an exponent shift."""
        L = lcm(self.level, M)
        s, t = L // self.level, L // M
        vec = [0] * L
        for j, c in enumerate(self._num):
            if c:
                vec[(j * s + e * t) % L] += c
        return CycloNumber._raw(L, kernels.reduce_terms(vec, reduction_table(L), L), self._den)

    def inv(self):
        """Multiplicative inverse by the extended Euclidean algorithm over Q."""
        if self.is_zero():
            raise NonInvertible("zero is not invertible")
        if self.is_rational():
            return CycloNumber.rational(Fraction(self._den, self._num[0]), self.level)
        N = self.level
        phi = [Fraction(c) for c in cyclotomic_poly(N)]
        a = [Fraction(c) for c in self._num]
        # invariant: s * self_poly == r (mod phi)
        r0, r1 = phi, _strip(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # r1 is a nonzero constant because Phi_N is irreducible
        c = r1[0]
        inv = [x / c for x in s1]
        n = totient(N)
        if len(inv) > n:
            # reduce mod Phi_N
            _, inv = _pdivmod(inv, phi)
        inv = inv + [Fraction(0)] * (n - len(inv))
        out = CycloNumber(N, inv)
        return out * self._den

    # Galois action
    def galois(self, k):
        """Image under zeta_N -> zeta_N**k."""
        N = self.level
        if gcd(k, N) != 1:
            raise InvalidGaloisIndex("k=%d is not coprime to level %d" % (k, N))
        k %= N
        if k == 1 or self.is_rational():
            return self
        return CycloNumber._raw(N, kernels.galois_map(list(self._num), k, reduction_table(N), N),
                                self._den)

    def conj(self):
        return self.galois(-1)

    # invariants
    def trace(self):
        """Absolute trace Tr_{Q(zeta_N)/Q}."""
        N = self.level
        t = sum(c * ramanujan_sum(N, j) for j, c in enumerate(self._num) if c)
        return Fraction(t, self._den)

    def norm(self):
        """Absolute norm N_{Q(zeta_N)/Q}.

        Elements with a short Galois orbit (resolvents, Gauss sums) multiply
        their distinct conjugates; the rest use the determinant of
        multiplication.
        """
        if self._norm is None:
            n = totient(self.level)
            if self.is_zero():
                self._norm = Fraction(0)
            elif self.is_rational():
                self._norm = Fraction(self._num[0], self._den) ** n
            else:
                self._norm = self._orbit_norm(n)
                if self._norm is None:
                    from .intmat import bareiss_det
                    self._norm = Fraction(bareiss_det(self.multiplication_matrix()), self._den ** n)
        return self._norm

    def _orbit_norm(self, n, limit=ORBIT_NORM_LIMIT):
        gens = _unit_generators(self.level)
        orbit = {self._num: self}
        frontier = [self]
        while frontier:
            nxt = []
            for y in frontier:
                for k in gens:
                    z = y.galois(k)
                    if z._num not in orbit:
                        orbit[z._num] = z
                        nxt.append(z)
                        if len(orbit) > limit:
                            return None
            frontier = nxt
        acc = None
        for y in orbit.values():
            acc = y if acc is None else acc * y
        if not acc.is_rational():
            return None
        return acc.to_rational() ** (n // len(orbit))

    def multiplication_matrix(self):
        """Integer matrix of multiplication by the numerator, columns = images of zeta**j."""
        N = self.level
        n = totient(N)
        table = reduction_table(N)
        a = list(self._num)
        cols = []
        for j in range(n):
            vec = [0] * (n + j)
            vec[j:] = a
            cols.append(kernels.reduce_terms(vec, table, N))
        # rows i, columns j
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def normalized_trace(self):
        """Tr / phi(N): independent of the level the element is written at."""
        return self.trace() / totient(self.level)

    # comparison
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        if not isinstance(other, CycloNumber):
            return NotImplemented
        if self.level == other.level:
            return self._den == other._den and self._num == other._num
        _, a, b = self._pair(other)
        return a._den == b._den and a._num == b._num

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        # the normalised trace is level independent, so equal values hash equally
        if self._hash is None:
            self._hash = hash(self.normalized_trace())
        return self._hash

    def sort_key(self):
        """Total order on values: minimal level first, then coefficients."""
        c = self.canonical()
        return (c.level,) + c.coeffs

    # minimal level
    def minimal_level(self):
        """Smallest M dividing the level with self in Q(zeta_M)."""
        N = self.level
        if self.is_rational():
            return 1
        for M in divisors(N):
            if M % 4 == 2:
                continue
            # the kernel of (Z/N)^x -> (Z/M)^x fixes exactly Q(zeta_M)
            if all(self.galois(k) == self for k in _kernel_generators(N, M)):
                return M
        return N

    def canonical(self):
        """The same element rewritten at its minimal level."""
        M = self.minimal_level()
        if M == self.level:
            return self
        return self.descend(M)

    def descend(self, M):
        """Rewrite at level M (M | level); raises ValueError if not in Q(zeta_M)."""
        N = self.level
        if N % M:
            raise ValueError("level %d does not divide %d" % (M, N))
        m = totient(M)
        basis = [CycloNumber.zeta(M, i).lift(N)._num for i in range(m)]
        sol = _solve_rational([[basis[j][i] for j in range(m)] for i in range(len(basis[0]))],
                              [Fraction(c, self._den) for c in self._num])
        if sol is None:
            raise ValueError("element is not in Q(zeta_%d)" % M)
        return CycloNumber(M, sol)

    # numerics
    def embed(self, j=1, precision_bits=128):
        """Complex value under zeta_N -> exp(2 pi i j / N)."""
        N = self.level
        if gcd(j, N) != 1:
            raise InvalidGaloisIndex("j=%d is not coprime to level %d" % (j, N))
        size = sum(abs(c) for c in self._num) / self._den
        with mpmath.workprec(precision_bits + 24):
            w = mpmath.expjpi(mpmath.mpf(2 * j) / N)
            acc = mpmath.mpc(0)
            for c in reversed(self._num):
                acc = acc * w + c
            val = acc / self._den
        err = mpmath.mpf(2) ** (-(precision_bits - 8)) * (1 + size)
        return ComplexApprox(val, precision_bits, err)

    # display / serialisation
    def to_json(self):
        return {"level": self.level, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, d):
        return cls(int(d["level"]), [Fraction(c) for c in d["coeffs"]])

    def __repr__(self):
        return "CycloNumber(%d, %r)" % (self.level, [str(c) for c in self.coeffs])

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else ("z%d" % self.level if j == 1 else "z%d^%d" % (self.level, j))
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append("%s*%s" % (c, mono))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _kernel_generators(N, M):
    """Generators of the units k mod N with k = 1 mod M."""
    gens, span = [], {1 % N}
    for k in range(1, N + 1):
        if gcd(k, N) == 1 and (k - 1) % M == 0 and k % N not in span:
            gens.append(k)
            span = _closure(span, k, N)
    return gens


def _closure(span, k, N):
    out = set(span)
    todo = list(out)
    while todo:
        y = todo.pop() * k % N
        if y not in out:
            out.add(y)
            todo.append(y)
    return out


# -- rational polynomial helpers (used only by inv) ----------------------------

def _strip(p):
    p = list(p)
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _strip([x - y for x, y in zip(a, b)])


def _pdivmod(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [Fraction(0)], _strip(a)
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return _strip(q), _strip(a[:db] or [Fraction(0)])


def _solve_rational(A, b):
    """Solve A x = b exactly (A has full column rank); None if inconsistent."""
    rows, cols = len(A), len(A[0])
    M = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(rows)]
    piv_row = 0
    pivots = []
    for c in range(cols):
        r = next((i for i in range(piv_row, rows) if M[i][c]), None)
        if r is None:
            continue
        M[piv_row], M[r] = M[r], M[piv_row]
        pv = M[piv_row][c]
        M[piv_row] = [x / pv for x in M[piv_row]]
        for i in range(rows):
            if i != piv_row and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[piv_row])]
        pivots.append(c)
        piv_row += 1
    if any(M[i][cols] for i in range(piv_row, rows)):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = M[i][cols]
    return x
