"""Small elementary number theory helpers (integers up to a few million)."""

from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def factorint(n):
    """Prime factorisation as a tuple of (p, e) pairs, p increasing."""
    n = int(n)
    if n < 1:
        raise ValueError("factorint needs a positive integer")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n):
    return n >= 2 and factorint(n) == ((n, 1),)


def primes_upto(n):
    return [p for p in range(2, n + 1) if is_prime(p)]


@lru_cache(maxsize=None)
def totient(n):
    r = n
    for p, _ in factorint(n):
        r -= r // p
    return r


@lru_cache(maxsize=None)
def divisors(n):
    ds = [1]
    for p, e in factorint(n):
        ds = [d * p ** k for d in ds for k in range(e + 1)]
    return tuple(sorted(ds))


def mobius(n):
    f = factorint(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def is_squarefree(n):
    return all(e == 1 for _, e in factorint(n))


def valuation(n, p):
    """p-adic valuation of a nonzero integer."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def multiplicative_order(a, m):
    if m == 1:
        return 1
    if gcd(a, m) != 1:
        raise ValueError("%d is not a unit mod %d" % (a, m))
    k, x = 1, a % m
    while x != 1:
        x = x * a % m
        k += 1
    return k


@lru_cache(maxsize=None)
def units(m):
    """Residues in [0, m) coprime to m; for m = 1 this is (0,)."""
    if m == 1:
        return (0,)
    return tuple(a for a in range(m) if gcd(a, m) == 1)


def crt(residues, moduli):
    x, m = 0, 1
    for r, n in zip(residues, moduli):
        # solve x + m t = r (mod n)
        t = ((r - x) * pow(m, -1, n)) % n if n > 1 else 0
        x += m * t
        m *= n
    return x % m


def ramanujan_sum(N, j):
    """Trace from Q(zeta_N) to Q of zeta_N**j."""
    d = N // gcd(N, j)
    return mobius(d) * totient(N) // totient(d)
