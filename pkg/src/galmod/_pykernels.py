"""Pure-Python versions of the hot cyclotomic kernels.

Vectors are plain lists of Python ints.  ``table`` is the reduction table of a
level N: ``table[e]`` is the coefficient list of x**e modulo the N-th cyclotomic
polynomial, for 0 <= e < N.  Every function here has an identical twin in the
compiled ``_ckernels`` module.
"""

BACKEND = "python"


def reduce_terms(vec, table, N):
    """Reduce sum(vec[e] * x**e) to the power basis (exponents taken mod N)."""
    n = len(table[0])
    out = [0] * n
    for e, c in enumerate(vec):
        if c:
            row = table[e % N]
            for i in range(n):
                r = row[i]
                if r:
                    out[i] += c * r
    return out


def mulmod(a, b, table, N):
    """Product of two power-basis vectors, reduced mod the cyclotomic polynomial."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    return reduce_terms(prod, table, N)


def galois_map(a, k, table, N):
    """Apply zeta -> zeta**k to a power-basis vector."""
    n = len(table[0])
    out = [0] * n
    for e, c in enumerate(a):
        if c:
            row = table[(e * k) % N]
            for i in range(n):
                r = row[i]
                if r:
                    out[i] += c * r
    return out
