import cmath
import json
import random
from math import gcd

import mpmath
import pytest

from galmod.chars import characters_of
from galmod.cyclo import CycloNumber
from galmod.errors import BadTable, BadTrace, NonIntegralExponent, NotPrimitive
from galmod.gauss import (CharTable, DirichletCharacter, Place, SupplementedRamData,
                          dirichlet_characters, epsilon_constant, gauss_sum, load_table,
                          pfaffian, pfaffian_exponent, primitive_characters, symplectic_characters,
                          unramified_characteristic, w_infinity)

Z = CycloNumber.zeta


def quadratic(f):
    return [c for c in primitive_characters(f) if c.order() == 2]


def direct_sum(chi, prec=128):
    # independent oracle: complex summation of chi(a) exp(2 pi i a / f)
    f = chi.modulus
    with mpmath.workprec(prec):
        s = mpmath.mpc(0)
        for a in range(f):
            t = chi.angle(a)
            if t is not None:
                s += mpmath.expjpi(2 * mpmath.mpf(t.numerator) / t.denominator) * \
                    mpmath.expjpi(mpmath.mpf(2 * a) / f)
        return s


def test_trivial_gauss_sum():
    assert gauss_sum(DirichletCharacter.trivial()) == 1


def test_quadratic_mod_3():
    (chi,) = quadratic(3)
    assert gauss_sum(chi) == 1 + 2 * Z(3)


def test_quadratic_mod_5():
    (chi,) = quadratic(5)
    assert gauss_sum(chi) == Z(5) + Z(5, 4) - Z(5, 2) - Z(5, 3)


def test_imprimitive_rejected():
    chi = [c for c in dirichlet_characters(15) if c.conductor == 5 and c.order() == 2][0]
    with pytest.raises(NotPrimitive):
        gauss_sum(chi)
    assert chi.primitive().modulus == 5
    assert chi.primitive() == quadratic(5)[0]


def test_conductors():
    assert len(primitive_characters(1)) == 1
    assert len(primitive_characters(4)) == 1
    assert len(primitive_characters(8)) == 2
    assert primitive_characters(2) == ()
    # the number of primitive characters mod f is multiplicative with J(p) = p - 2
    assert len(primitive_characters(15)) == 3 * 1


def test_w_infinity():
    assert w_infinity(1, 1) == 1
    assert w_infinity(1, -1) == -Z(4)
    assert w_infinity(2, -2) == -1
    with pytest.raises(BadTrace):
        w_infinity(2, 1)
    with pytest.raises(BadTrace):
        w_infinity(1, 3)


def test_epsilon_constants():
    assert epsilon_constant(DirichletCharacter.trivial()) == 1
    (chi3,) = quadratic(3)
    e = epsilon_constant(chi3)
    assert e * e == 3
    with mpmath.workprec(100):
        assert abs(e.embed().value - mpmath.sqrt(3)) < 1e-25
    (chi5,) = quadratic(5)
    e = epsilon_constant(chi5)
    with mpmath.workprec(100):
        assert abs(e.embed().value - mpmath.sqrt(5)) < 1e-25


def test_unramified_characteristic_examples():
    triv = DirichletCharacter.trivial()
    for p in (2, 3, 5):
        assert unramified_characteristic(triv, p) == 1
    (chi5,) = quadratic(5)
    assert unramified_characteristic(chi5, 3) == 1
    # p | conductor: inertia has no invariants
    assert unramified_characteristic(chi5, 5) == 1
    # p divides the modulus but not the conductor: -chi*(p), the Euler factor at p
    chi15 = chi5.extend(15)
    assert unramified_characteristic(chi15, 3) == -chi5(3) == 1
    assert unramified_characteristic(DirichletCharacter.trivial(3), 3) == -1
    (chi7,) = [c for c in primitive_characters(7) if c.order() == 3][:1]
    assert unramified_characteristic(chi7.extend(21), 3) == -chi7(3)


def test_unramified_characteristic_roots_of_unity():
    for m in (15, 21, 35, 39):
        for chi in dirichlet_characters(m):
            for p in (3, 5, 7, 13):
                y = unramified_characteristic(chi, p)
                assert y ** (2 * chi.order()) == 1


def test_gauss_sum_identities_small():
    for f in range(1, 25):
        for chi in primitive_characters(f):
            tau = gauss_sum(chi)
            assert tau * gauss_sum(chi.conj()) == chi.parity() * f
            N = tau.level
            for k in range(1, N):
                if gcd(k, N) != 1:
                    continue
                # general form: sigma_k(tau(chi)) = conj(chi**k)(k) tau(chi**k)
                ck = DirichletCharacter(f, chi.character ** k)
                assert tau.galois(k) == ck.conj()(k) * gauss_sum(ck)
                if (k - 1) % chi.order() == 0:
                    assert tau.galois(k) == chi.conj()(k) * tau


def test_gauss_sums_are_not_equivariant_functions():
    # sigma_k moves tau(chi) off the line tau(chi**k): the Gauss-sum function is not Omega-fixed
    from galmod.chars import CharFn, charfn_check_equivariance
    from galmod.fields import build_field
    from galmod.gauss import galois_gauss_sum
    L = build_field(3)
    f = CharFn(L.galois_group, [galois_gauss_sum(L, phi) for phi in L.characters()])
    assert not charfn_check_equivariance(f, 6)


def test_against_direct_summation():
    r = random.Random(11)
    chars = [c for f in range(1, 41) for c in primitive_characters(f)]
    for chi in r.sample(chars, 40):
        with mpmath.workprec(128):
            assert abs(gauss_sum(chi).embed(1, 128).value - direct_sum(chi)) < 1e-30


def test_quadratic_sign():
    for f in range(3, 41):
        for chi in quadratic(f):
            s = direct_sum(chi)
            with mpmath.workprec(128):
                expect = mpmath.sqrt(f) if chi.parity() == 1 else 1j * mpmath.sqrt(f)
                assert abs(s - expect) < 1e-30
                assert abs(gauss_sum(chi).embed(1, 128).value - expect) < 1e-30


# character tables and Pfaffians

def test_bundled_tables():
    q8, d4 = load_table("q8"), load_table("d4")
    assert q8.order == 8 and d4.order == 8
    assert symplectic_characters(q8) == [4]
    assert symplectic_characters(d4) == []


def test_abelian_and_trivial_tables():
    triv = CharTable.from_json({"class_sizes": [1], "degrees": [1], "values": [[1]], "power_map_2": [0]})
    assert symplectic_characters(triv) == []
    w = {"level": 3, "coeffs": ["0", "1"]}
    w2 = {"level": 3, "coeffs": ["-1", "-1"]}
    c3 = CharTable.from_json({"class_sizes": [1, 1, 1], "degrees": [1, 1, 1],
                              "values": [[1, 1, 1], [1, w, w2], [1, w2, w]],
                              "power_map_2": [0, 2, 1]})
    assert symplectic_characters(c3) == []


def test_bad_tables():
    d = json.loads(json.dumps(load_table("q8").to_json()))
    d["degrees"][4] = 3
    with pytest.raises(BadTable):
        CharTable.from_json(d)
    d = load_table("q8").to_json()
    d["values"][1][3] = "1"
    with pytest.raises(BadTable):
        CharTable.from_json(d)


def test_q8_pfaffian_values():
    T = load_table("q8")
    centre = dict(T.subgroups)["Z"]
    dims = tuple(T.inertia_dims(centre))
    assert dims[4] == 0
    for p in (3, 5, 7):
        for f, expect in ((1, -p), (2, p * p)):
            ram = SupplementedRamData((Place(p, f, dims),))
            assert pfaffian(T, ram, 4, p) == expect
    unram = SupplementedRamData((Place(3, 1, (1, 1, 1, 1, 2)),))
    assert pfaffian(T, unram, 4, 3) == 1


def test_pfaffian_integrality_random():
    r = random.Random(13)
    for name in ("q8", "d4"):
        T = load_table(name)
        subs = [c for _, c in T.subgroups]
        for _ in range(50):
            places = tuple(Place(r.choice([3, 5, 7]), r.randint(1, 4), tuple(T.inertia_dims(r.choice(subs))))
                           for _ in range(r.randint(1, 3)))
            ram = SupplementedRamData(places)
            for phi in symplectic_characters(T):
                for p in (3, 5, 7):
                    e = pfaffian_exponent(T, ram, phi, p)
                    assert isinstance(e, int)
                    assert pfaffian(T, ram, phi, p) == CycloNumber.rational(-p) ** e


def test_inconsistent_data_is_rejected():
    T = load_table("q8")
    ram = SupplementedRamData((Place(3, 1, (1, 1, 1, 1, 1)),))
    with pytest.raises(NonIntegralExponent):
        pfaffian(T, ram, 4, 3)
    with pytest.raises(ValueError):
        pfaffian(T, ram, 0, 3)
