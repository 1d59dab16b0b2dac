import random

from hypothesis import given, strategies as st

from galmod.intmat import IntegerMatrix, bareiss_det, snf


def check_snf(M):
    res = snf(M)
    U, D, V = res.U, res.D, res.V
    assert U @ M @ V == D
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    d = res.invariant_factors
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j:
                assert D[i, j] == 0
    assert all(x >= 0 for x in d)
    for a, b in zip(d, d[1:]):
        assert (b == 0) or (a != 0 and b % a == 0)
    return res


def test_identity():
    assert check_snf(IntegerMatrix.identity(4)).invariant_factors == [1, 1, 1, 1]


def test_two_by_two():
    assert check_snf(IntegerMatrix([[2, 4], [6, 8]])).invariant_factors == [2, 4]


def test_singular():
    assert check_snf(IntegerMatrix([[1, 0], [0, 0]])).invariant_factors == [1, 0]


def test_rectangular():
    check_snf(IntegerMatrix([[2, 4, 6], [8, 10, 12]]))


def test_bareiss_against_cofactor():
    assert bareiss_det([[2, 4], [6, 8]]) == -8
    assert bareiss_det([[0, 1, 2], [3, 4, 5], [6, 7, 9]]) == -3


@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_snf_properties(rows):
    M = IntegerMatrix(rows)
    res = check_snf(M)
    det = M.det()
    if det:
        prod = 1
        for x in res.invariant_factors:
            prod *= x
        assert prod == abs(det)


def test_larger_random_nonsingular():
    r = random.Random(5)
    for _ in range(5):
        n = 12
        M = IntegerMatrix([[r.randint(-20, 20) for _ in range(n)] for _ in range(n)])
        res = check_snf(M)
        prod = 1
        for x in res.invariant_factors:
            prod *= x
        assert prod == abs(M.det())
