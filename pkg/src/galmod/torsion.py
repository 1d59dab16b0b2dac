"""The Chase map psi: O_L (x) O_L -> Map(G, O_L), l1 (x) l2 -> (g -> g(l1) l2).

Both sides use the normal basis orbit b_i = g_i(alpha): columns are indexed by
pairs (i, j) for b_i (x) b_j, rows by pairs (g, k) for the map sending g to b_k
and every other element to 0.  The cokernel is finite of order |d_L|**(n/2).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ChtViolation
from .fields import absolute_trace, nib_generator, nib_orbit, trace_form
from .intmat import IntegerMatrix, snf
from .ntheory import factorint


@dataclass(frozen=True)
class TorsionModule:
    invariant_factors: tuple
    order: int
    per_prime_orders: dict

    def __post_init__(self):
        prod = 1
        for d in self.invariant_factors:
            prod *= d
        pp = 1
        for q in self.per_prime_orders.values():
            pp *= q
        if not (prod == self.order == pp):
            raise ValueError("inconsistent torsion module orders")

    def to_json(self):
        return {"invariant_factors": [str(d) for d in self.invariant_factors],
                "order": str(self.order),
                "per_prime": {str(p): str(q) for p, q in sorted(self.per_prime_orders.items())}}


def _inverse(T):
    n = len(T)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(T)]
    for c in range(n):
        piv = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                m = A[r][c]
                A[r] = [x - m * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


_DUAL = {}


def orbit_coordinates(L, x):
    """Integer coordinates of x in O_L with respect to the normal basis orbit."""
    key = L.key()
    if key not in _DUAL:
        basis = nib_orbit(L)
        _DUAL[key] = (basis, _inverse(trace_form(L, basis)))
    basis, Tinv = _DUAL[key]
    t = [absolute_trace(L, x * b) for b in basis]
    coords = [sum(row[m] * t[m] for m in range(len(t))) for row in Tinv]
    if any(c.denominator != 1 for c in coords):
        raise AssertionError("element is not integral in the normal basis")
    return [int(c) for c in coords]


def chase_matrix(L):
    nib_generator(L)
    basis = nib_orbit(L)
    G = L.galois_group
    els = G.elements()
    n = len(basis)
    if n == 1:
        return IntegerMatrix([[1]])
    M = [[0] * (n * n) for _ in range(n * n)]
    for gi, g in enumerate(els):
        gb = [L.apply(g, b) for b in basis]
        for i in range(n):
            for j in range(n):
                col = i * n + j
                for k, c in enumerate(orbit_coordinates(L, gb[i] * basis[j])):
                    M[gi * n + k][col] = c
    return IntegerMatrix(M)


def chase_cokernel(L):
    D = snf(chase_matrix(L)).invariant_factors
    if any(d == 0 for d in D):
        raise AssertionError("the Chase map is not injective")
    order = 1
    for d in D:
        order *= d
    per = {p: p ** e for p, e in factorint(order)} if order > 1 else {}
    return TorsionModule(tuple(D), order, per)


def cht_check(L, module=None):
    """Compare v_p |Cok psi| with (n/2) sum_chi totval_p of the discriminant class.

    Returns {p: (lhs, rhs)} over the primes dividing the conductor or the order;
    raises ChtViolation on the first mismatch.
    """
    from .relk import class_projections, delta_rep_of_field
    if module is None:
        module = chase_cokernel(L)
    n = L.degree
    rep = delta_rep_of_field(L)
    primes = sorted({p for p, _ in factorint(L.conductor)} | set(module.per_prime_orders))
    out = {}
    for p in primes:
        q = module.per_prime_orders.get(p, 1)
        lhs = 0
        while q % p == 0 and q > 1:
            q //= p
            lhs += 1
        rhs = Fraction(n, 2) * sum(class_projections(rep, p).values())
        rhs = int(rhs) if rhs.denominator == 1 else rhs
        out[p] = (lhs, rhs)
        if lhs != rhs:
            raise ChtViolation("Chase order and discriminant class disagree at p=%d" % p, lhs, rhs)
    return out
