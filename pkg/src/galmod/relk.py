"""Representatives of relative K-group classes for abelian G = Gal(L/Q).

A class is stored as a pair (x, g): x an idelic character function (a CharFn
per prime in a finite support, times an optional ``diagonal`` CharFn placed at
every finite prime) and g a global CharFn.  The diagonal image of theta is
(theta, theta**-1).

Decidable invariants
--------------------
``totval(x, p) = 2 v_p(N(x)) / phi(level)`` for a cyclotomic x does not depend on
the level x is written at; for |x|**2 = m it equals v_p(m), so Gauss sums and
resolvents of conductor f get v_p(f).  ``class_projections`` sums it over the
finite and global parts; ``arch_profile`` takes |g(chi)| at the embedding
zeta_N -> exp(2 pi i / N).

For abelian G membership in the trivial class is also decidable exactly (see
:func:`is_zero_class`): (x, g) is trivial iff g is Omega_Q-equivariant and every
x_v g is the transform of a unit of Z_(v)[G].
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath

from .chars import CharFn, FinAbGroup, characters_of, charfn_check_equivariance
from .cyclo import CycloNumber
from .errors import GroupMismatch, Singular
from .fields import absolute_trace, nib_generator, nib_orbit
from .gauss import field_dirichlet_character, galois_gauss_sum, unramified_characteristic
from .ntheory import factorint, totient
from .padic import total_valuation


def totval(x, p):
    """2 v_p(N(x)) / phi(level); an int when integral, else a Fraction."""
    q = Fraction(2 * total_valuation(x, p), totient(x.level))
    return int(q) if q.denominator == 1 else q


class IdelicCharFn:
    """Finite-idelic character function: ``local[p]`` at p, ``diagonal`` everywhere."""

    __slots__ = ("group", "local", "diagonal")

    def __init__(self, group, local=None, diagonal=None):
        local = dict(local or {})
        for p, f in local.items():
            if f.group != group:
                raise GroupMismatch("local component at %d lives on another group" % p)
        if diagonal is not None and diagonal.group != group:
            raise GroupMismatch("diagonal component lives on another group")
        self.group = group
        self.local = {int(p): f for p, f in sorted(local.items()) if not f.is_one()}
        self.diagonal = diagonal if diagonal is not None and not diagonal.is_one() else None

    @property
    def support(self):
        return sorted(self.local)

    def at(self, p):
        """The component at the prime p."""
        f = self.local.get(p)
        if self.diagonal is None:
            return f if f is not None else CharFn.ones(self.group)
        return self.diagonal if f is None else f * self.diagonal

    def __mul__(self, other):
        if other.group != self.group:
            raise GroupMismatch("idelic functions on different groups")
        local = {}
        for p in set(self.local) | set(other.local):
            a, b = self.local.get(p), other.local.get(p)
            local[p] = a * b if a is not None and b is not None else (a or b)
        d = self.diagonal if other.diagonal is None else (
            other.diagonal if self.diagonal is None else self.diagonal * other.diagonal)
        return IdelicCharFn(self.group, local, d)

    def inv(self):
        return IdelicCharFn(self.group, {p: f.inv() for p, f in self.local.items()},
                            None if self.diagonal is None else self.diagonal.inv())

    def is_one(self):
        return not self.local and self.diagonal is None

    def __eq__(self, other):
        return (isinstance(other, IdelicCharFn) and self.group == other.group
                and self.local == other.local and self.diagonal == other.diagonal)

    def to_json(self):
        d = {str(p): f.to_json() for p, f in self.local.items()}
        return d

    def __repr__(self):
        return "IdelicCharFn(support=%r, diagonal=%s)" % (self.support, self.diagonal is not None)


@dataclass(frozen=True)
class RelKRep:
    finite: IdelicCharFn
    global_: CharFn

    def __post_init__(self):
        if self.finite.group != self.global_.group:
            raise GroupMismatch("finite and global components on different groups")

    @property
    def group(self):
        return self.global_.group

    @classmethod
    def zero(cls, group):
        return cls(IdelicCharFn(group), CharFn.ones(group))

    def __add__(self, other):
        if other.group != self.group:
            raise GroupMismatch("classes over different groups")
        return RelKRep(self.finite * other.finite, self.global_ * other.global_)

    def __neg__(self):
        return RelKRep(self.finite.inv(), self.global_.inv())

    def __sub__(self, other):
        return self + (-other)

    def is_trivial_representative(self):
        return self.finite.is_one() and self.global_.is_one()

    def to_json(self):
        d = {"group": self.group.to_json(), "finite": self.finite.to_json(),
             "global": self.global_.to_json()}
        if self.finite.diagonal is not None:
            d["diagonal"] = self.finite.diagonal.to_json()
        return d

    @classmethod
    def from_json(cls, d):
        G = FinAbGroup(d["group"])
        local = {int(p): CharFn.from_json(G, v) for p, v in d.get("finite", {}).items()}
        diag = CharFn.from_json(G, d["diagonal"]) if "diagonal" in d else None
        return cls(IdelicCharFn(G, local, diag), CharFn.from_json(G, d["global"]))


def relk_group(a, b=None, op="add"):
    if op == "add":
        return a + b
    if op == "neg":
        return -a
    if op == "zero":
        return RelKRep.zero(a.group)
    if op == "diff":
        return a - b
    raise ValueError("unknown operation %r" % (op,))


# -- twisted forms -----------------------------------------------------------

@dataclass
class TwistedFormData:
    """Rank-one comparison data: local comparison elements and the global Det."""

    group: FinAbGroup
    global_iso: CharFn
    local_generators: dict = field(default_factory=dict)
    rank: int = 1


def class_of_twisted_form(T):
    if T.rank != 1:
        raise ValueError("only rank one forms are supported")
    local = {}
    for p, datum in T.local_generators.items():
        if isinstance(datum, CharFn):
            local[p] = datum
            continue
        vals = datum.transforms()
        if any(v.is_zero() for v in vals):
            raise Singular("local datum at %d is not invertible" % p)
        local[p] = CharFn(T.group, vals)
    return RelKRep(IdelicCharFn(T.group, local), T.global_iso)


@lru_cache(maxsize=None)
def _resolvents(L):
    from .resolvends import field_resolvents
    nib_generator(L)
    return field_resolvents(L)


def twisted_form_of_field(L):
    """(O_L, H^L; pi) with the trace generator used at every place."""
    return TwistedFormData(L.galois_group, _resolvents(L))


def delta_rep_of_field(L):
    """Finite part 1, global part phi -> (alpha|phi)."""
    return class_of_twisted_form(twisted_form_of_field(L))


def unramified_profile(L):
    """{q: CharFn phi -> y_q(phi)} at the primes q dividing the conductor."""
    G = L.galois_group
    psis = [field_dirichlet_character(L, phi) for phi in characters_of(G)]
    return {q: CharFn(G, [unramified_characteristic(psi, q) for psi in psis])
            for q, _ in factorint(L.conductor)}


@lru_cache(maxsize=None)
def gauss_rep_of_field(L):
    """Global part phi -> tau(phi); finite part the diagonal y = prod_q y_q."""
    nib_generator(L)
    G = L.galois_group
    tau = CharFn(G, [galois_gauss_sum(L, phi) for phi in characters_of(G)])
    y = CharFn.ones(G)
    for f in unramified_profile(L).values():
        y = y * f
    return RelKRep(IdelicCharFn(G, {}, y), tau)


# -- projections ----------------------------------------------------------------

def class_projections(r, p):
    """{chi: totval_p(x_p(chi)) + totval_p(g(chi))}."""
    x = r.finite.at(p)
    return {chi: totval(a, p) + totval(b, p)
            for (chi, a), b in zip(x.items(), r.global_.values)}


def arch_profile(r, precision=128):
    out = {}
    with mpmath.workprec(precision + 16):
        for chi, v in r.global_.items():
            out[chi] = abs(v.embed(1, precision).value)
    return out


@dataclass(frozen=True)
class ArithClassRep:
    finite: IdelicCharFn
    arch: dict
    precision_bits: int = 128

    def __post_init__(self):
        if any(v <= 0 for v in self.arch.values()):
            raise ValueError("archimedean values must be positive")

    def arch_values(self):
        return [self.arch[chi] for chi in characters_of(self.finite.group)]

    def to_json(self):
        return {"group": self.finite.group.to_json(), "finite": self.finite.to_json(),
                "arch": [[list(chi.exponents), mpmath.nstr(v, 30)] for chi, v in self.arch.items()],
                "precision_bits": self.precision_bits}


def to_arith_class(r, precision=128):
    return ArithClassRep(r.finite, arch_profile(r, precision), precision)


def embedding_matrix(L, precision=128):
    """P[i][j] = sigma_i(g_j alpha), sigma_i(zeta_f) = exp(2 pi i a_i / f), a_i = lift(g_i)."""
    basis = nib_orbit(L)
    js = L.galois_orbit_units() if L.conductor > 1 else [1]
    return [[b.embed(j, precision).value for b in basis] for j in js]


def hecke_gram_numeric(L, precision=128):
    """(P* P)[j][k] = sum_i conj(sigma_i b_j) sigma_i b_k."""
    with mpmath.workprec(precision + 16):
        P = mpmath.matrix(embedding_matrix(L, precision))
        return P.H * P


def hecke_gram_exact(L):
    """Tr_{L/Q}(conj(b_j) b_k) on the normal basis orbit."""
    basis = nib_orbit(L)
    n = len(basis)
    return [[absolute_trace(L, basis[j].conj() * basis[k]) for k in range(n)] for j in range(n)]


def pullback_discrepancy(L, precision=128):
    """max |P* P - Hecke Gram| entrywise."""
    H = hecke_gram_numeric(L, precision)
    T = hecke_gram_exact(L)
    n = len(T)
    with mpmath.workprec(precision + 16):
        return max(abs(H[j, k] - T[j][k]) for j in range(n) for k in range(n))


def metrised_class(L, metric="hecke", precision=128):
    """Arch part: the length of the phi-eigenvector sum_g conj(phi(g)) g(alpha)."""
    G = L.galois_group
    nib_generator(L)
    chars = characters_of(G)
    els = G.elements()
    arch = {}
    with mpmath.workprec(precision + 16):
        if metric == "hecke":
            H = hecke_gram_numeric(L, precision)
        elif metric == "standard":
            H = mpmath.eye(len(els))
        else:
            raise ValueError("metric must be 'hecke' or 'standard'")
        for chi in chars:
            c = mpmath.matrix([chi.conj()(g).embed(1, precision).value for g in els])
            arch[chi] = mpmath.sqrt(abs((c.H * H * c)[0, 0]))
    return ArithClassRep(IdelicCharFn(G), arch, precision)


def real_model_transform(L, precision=128):
    """phi -> sum_h (Re + Im) sigma_0(h alpha) conj(phi(h)), the real-model Det."""
    G = L.galois_group
    basis = nib_orbit(L)
    out = {}
    with mpmath.workprec(precision + 16):
        xs = [b.embed(1, precision).value for b in basis]
        for chi in characters_of(G):
            acc = mpmath.mpc(0)
            for g, x in zip(G.elements(), xs):
                acc += (x.real + x.imag) * chi.conj()(g).embed(1, precision).value
            out[chi] = acc
    return out


def w_infinity_discrepancy(L, precision=128):
    """max over phi of |Det_real(phi) / (alpha|phi) - w_inf(conj phi)|."""
    from .gauss import w_infinity
    G = L.galois_group
    c = L.galois_element(-1)
    R = _resolvents(L)
    real = real_model_transform(L, precision)
    worst = mpmath.mpf(0)
    with mpmath.workprec(precision + 16):
        for chi, r in R.items():
            trace = 1 if chi.conj().value_exponent(c) == 0 else -1
            w = w_infinity(1, trace).embed(1, precision).value
            worst = max(worst, abs(real[chi] / r.embed(1, precision).value - w))
    return worst


# -- exact triviality ---------------------------------------------------------

def _fourier_rational(group, values):
    from .resolvends import GroupAlgebraElement
    a = GroupAlgebraElement.from_transforms(group, list(values))
    if not a.is_rational():
        return None
    return [c.to_rational() for c in a.coeffs]


def _bad_primes(coeffs):
    out = set()
    for c in coeffs:
        out |= {p for p, _ in factorint(c.denominator)}
    return out


def is_zero_class(r):
    """Exact test: theta = g equivariant, and x_v g a local unit Det at every v."""
    G = r.group
    g = r.global_
    if not charfn_check_equivariance(g, g.ambient_level()):
        return False
    default = g if r.finite.diagonal is None else r.finite.diagonal * g
    checks = {}
    for z in (default, default.inv()):
        co = _fourier_rational(G, z.values)
        if co is None:
            return False
        for p in _bad_primes(co):
            checks.setdefault(p, None)
    for p in set(r.finite.local) | set(checks):
        z = r.finite.at(p) * g
        for w in (z, z.inv()):
            co = _fourier_rational(G, w.values)
            if co is None or p in _bad_primes(co):
                return False
    return True
