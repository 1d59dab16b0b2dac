"""Valuations of cyclotomic numbers at the primes above a rational prime.

Write N = p**r * m with p not dividing m.  The primes of Z[zeta_N] above p
correspond to the irreducible factors of Phi_m modulo p (all of degree
f = ord_m(p)), each with ramification index e = phi(p**r).  To get the
valuation at one of them we Hensel-lift the factor to G(y) modulo a high
enough power of p and work in

    Z_p[y]/G(y) [pi] / E(pi),   E(pi) = Phi_{p**r}(1 + pi)  (Eisenstein),

where pi = zeta_{p**r} - 1 is a uniformiser.  An element sum c_s pi**s with
unramified coefficients c_s has valuation min(e * v_p(c_s) + s).
"""

import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .cyclo import CycloNumber, cyclotomic_poly
from .errors import ZeroValuation
from .ntheory import factorint, multiplicative_order, totient, valuation


# -- polynomials over Z/M (lists, constant term first) ------------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod(a, M):
    return _trim([x % M for x in a])


def _add(a, b, M):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % M for i in range(n)])


def _sub(a, b, M):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % M for i in range(n)])


def _mul(a, b, M):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mod(out, M)


def _divmod(a, b, M):
    """Division by b whose leading coefficient is a unit mod M."""
    a = _mod(a, M)
    b = _trim(b)
    db = len(b) - 1
    inv = pow(b[-1], -1, M)
    if len(a) - 1 < db:
        return [], a
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % M
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % M
    return _trim(q), _trim(a[:db])


def _rem(a, b, M):
    return _divmod(a, b, M)[1]


def _monic(a, p):
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _gcd(a, b, p):
    a, b = _mod(a, p), _mod(b, p)
    while b:
        a, b = b, _rem(a, b, p)
    return _monic(a, p) if a else []


def _powmod(a, e, f, p):
    result, base = [1], _rem(a, f, p)
    while e:
        if e & 1:
            result = _rem(_mul(result, base, p), f, p)
        base = _rem(_mul(base, base, p), f, p)
        e >>= 1
    return result


def _xgcd(a, b, p):
    """s, t with s a + t b = 1 mod p (a, b coprime)."""
    r0, r1 = _mod(a, p), _mod(b, p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    inv = pow(r0[0], -1, p)
    return [x * inv % p for x in s0], [x * inv % p for x in t0]


# -- factoring Phi_m mod p -----------------------------------------------------

def _edf(f, d, p, rng):
    """Split a squarefree product of degree-d irreducibles over F_p."""
    f = _monic(f, p)
    if len(f) - 1 == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(len(f) - 1)]
        a = _trim(a)
        if len(a) < 2:
            continue
        if p == 2:
            # absolute trace map of F_{2^d}
            t, cur = [], a
            for _ in range(d):
                t = _add(t, cur, p)
                cur = _rem(_mul(cur, cur, p), f, p)
            g = _gcd(t, f, p)
        else:
            b = _sub(_powmod(a, (p ** d - 1) // 2, f, p), [1], p)
            g = _gcd(b, f, p)
        if g and 0 < len(g) - 1 < len(f) - 1:
            h = _divmod(f, g, p)[0]
            return _edf(g, d, p, rng) + _edf(h, d, p, rng)


def _ddf(f, p):
    """Distinct-degree factorisation: list of (d, product of degree-d factors)."""
    out = []
    f = _monic(f, p)
    d = 0
    xp = [0, 1]
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        xp = _powmod(xp, p, f, p)
        g = _gcd(_sub(xp, [0, 1], p), f, p)
        if len(g) > 1:
            out.append((d, g))
            f = _divmod(f, g, p)[0]
            xp = _rem(xp, f, p)
    if len(f) > 1:
        out.append((len(f) - 1, f))
    return out


@lru_cache(maxsize=None)
def factor_cyclotomic_mod_p(m, p):
    """Sorted monic irreducible factors of Phi_m over F_p (p not dividing m)."""
    rng = random.Random(1000003 * m + p)
    factors = []
    for d, g in _ddf(list(cyclotomic_poly(m)), p):
        factors.extend(_edf(g, d, p, rng))
    return tuple(sorted(tuple(f) for f in factors))


# -- Hensel lifting --------------------------------------------------------------

def _hensel_lift(f, h, k, p):
    """Lift a monic factor h of f (mod p) to a factor modulo p**k."""
    g = _divmod(f, h, p)[0]
    s, t = _xgcd(g, h, p)  # s g + t h = 1
    # standard quadratic lifting with h monic
    M = p
    while M < p ** k:
        M2 = min(M * M, p ** k)
        e = _sub(f, _mul(g, h, M2), M2)
        q, r = _divmod(_mul(s, e, M2), h, M2)
        g_new = _add(_add(g, _mul(t, e, M2), M2), _mul(q, g, M2), M2)
        h_new = _add(h, r, M2)
        b = _sub(_add(_mul(s, g_new, M2), _mul(t, h_new, M2), M2), [1], M2)
        c, d = _divmod(_mul(s, b, M2), h_new, M2)
        s = _sub(s, d, M2)
        t = _sub(_sub(t, _mul(t, b, M2), M2), _mul(c, g_new, M2), M2)
        g, h, M = g_new, h_new, M2
    return h


@lru_cache(maxsize=None)
def _lifted_factor(m, p, index, k):
    f = list(cyclotomic_poly(m))
    h = list(factor_cyclotomic_mod_p(m, p)[index])
    return tuple(_hensel_lift(f, h, k, p))


# -- primes above p ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class PrimeAbove:
    """A prime of Z[zeta_N] above p, indexed by its factor of Phi_m mod p."""

    p: int
    factor: tuple
    e: int
    f: int

    def to_json(self):
        return {"p": self.p, "factor_mod_p": list(self.factor), "e": self.e, "f": self.f}

    def __str__(self):
        return "(%d, %s)" % (self.p, self.factor)


def primes_above(N, p):
    r = valuation(N, p) if N % p == 0 else 0
    m = N // p ** r
    e = totient(p ** r)
    f = multiplicative_order(p % m, m) if m > 1 else 1
    return [PrimeAbove(p, fac, e, f) for fac in factor_cyclotomic_mod_p(m, p)]


def _binomials(n, M):
    row = [1]
    rows = [row]
    for _ in range(n):
        row = [1] + [(row[i] + row[i + 1]) % M for i in range(len(row) - 1)] + [1]
        rows.append(row)
    return rows


def cyclo_valuations(a, p):
    """Exact valuations of a nonzero CycloNumber at every prime above p.

    Returns a dict PrimeAbove -> int.  The sum of valuation * residue degree is
    the p-adic valuation of the absolute norm.
    """
    if not isinstance(a, CycloNumber):
        a = CycloNumber.rational(a)
    if a.is_zero():
        raise ZeroValuation("valuation of zero")
    N = a.level
    num, den = list(a.numerators), a.denominator
    r = valuation(N, p) if N % p == 0 else 0
    pr = p ** r
    m = N // pr
    e = totient(pr)
    primes = primes_above(N, p)
    shift = e * valuation(den, p) if den % p == 0 else 0
    # precision: a valuation never exceeds v_p of the norm of the numerator
    nv = valuation(CycloNumber._raw(N, num, 1).norm().numerator, p)
    k = nv // e + 2
    M = p ** k
    # zeta_N = zeta_m**u * zeta_pr**w
    u = pow(pr, -1, m) if m > 1 else 0
    w = pow(m, -1, pr) if pr > 1 else 0
    out = {}
    binom = _binomials(pr - 1, M) if pr > 1 else None
    Epoly = _mod([sum(binom[t][s] * c for t, c in enumerate(cyclotomic_poly(pr)) if s <= t)
                  for s in range(e + 1)], M) if pr > 1 else None
    for idx, P in enumerate(primes):
        G = list(_lifted_factor(m, p, idx, k))
        # coefficient arrays: C[s] is a polynomial in y for the pi**s term
        C = {}
        for j, c in enumerate(num):
            if not c:
                continue
            ye = (j * u) % m if m > 1 else 0
            ze = (j * w) % pr if pr > 1 else 0
            if pr > 1:
                for s, b in enumerate(binom[ze]):
                    if b:
                        C.setdefault(s, {})
                        C[s][ye] = (C[s].get(ye, 0) + c * b) % M
            else:
                C.setdefault(0, {})
                C[0][ye] = (C[0].get(ye, 0) + c) % M
        # polys in y, then reduce the pi-degree with the Eisenstein polynomial
        top = max(C) if C else 0
        polys = [[0] * m for _ in range(top + 1)]
        for s, terms in C.items():
            for ye, c in terms.items():
                polys[s][ye] = c
        polys = [_rem(_trim(q), G, M) for q in polys]
        if pr > 1:
            for s in range(len(polys) - 1, e - 1, -1):
                lead = polys[s]
                if not lead:
                    continue
                for i in range(e):
                    if Epoly[i] if i < len(Epoly) else 0:
                        polys[s - e + i] = _sub(polys[s - e + i], [x * Epoly[i] for x in lead], M)
                polys[s] = []
            polys = [_rem(q, G, M) for q in polys[:e]]
        best = None
        for s, q in enumerate(polys):
            for x in q:
                if x % M:
                    v = e * valuation(x % M, p) + s if x % M else None
                    if v is not None and (best is None or v < best):
                        best = v
        if best is None or best >= e * k:
            raise AssertionError("valuation precision exhausted at p=%d" % p)
        out[P] = best - shift
    return out


def total_valuation(a, p):
    """Sum over primes above p of valuation times residue degree, i.e. v_p of the norm."""
    if not isinstance(a, CycloNumber):
        a = CycloNumber.rational(a)
    if a.is_zero():
        raise ZeroValuation("valuation of zero")
    q = a.norm()
    return valuation(abs(q.numerator), p) - valuation(q.denominator, p)
