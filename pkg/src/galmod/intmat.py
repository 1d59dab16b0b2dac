"""Integer matrices: exact determinants and Smith normal form."""

from dataclasses import dataclass


class IntegerMatrix:
    """A rectangular matrix of Python ints, stored row-major and immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        if not entries or not entries[0]:
            raise ValueError("matrix must have at least one row and column")
        if any(len(r) != len(entries[0]) for r in entries):
            raise ValueError("matrix is not rectangular")
        self.entries = entries
        self.rows = len(entries)
        self.cols = len(entries[0])

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = list(zip(*other.entries))
        return IntegerMatrix([[sum(a * b for a, b in zip(r, c)) for c in ot] for r in self.entries])

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def tolist(self):
        return [list(r) for r in self.entries]

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det(self.entries)

    def diagonal(self):
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def __repr__(self):
        return "IntegerMatrix(%r)" % (self.tolist(),)


def bareiss_det(rows):
    """Fraction-free Gaussian elimination determinant."""
    M = [list(r) for r in rows]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pk = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pk * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * M[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SNFResult:
    """D = U * M * V with U, V unimodular and D diagonal, d1 | d2 | ... ."""

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix

    @property
    def invariant_factors(self):
        return self.D.diagonal()


def snf(M):
    """Smith normal form with transformation matrices.

    Pivots on the entry of least absolute value, which keeps intermediate
    entries small for the matrix sizes used here (a few dozen rows).

    >>> snf(IntegerMatrix([[2, 4], [6, 8]])).invariant_factors
    [2, 4]
    """
    if not isinstance(M, IntegerMatrix):
        M = IntegerMatrix(M)
    m, n = M.rows, M.cols
    A = [list(r) for r in M.entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in A:
            R[i], R[j] = R[j], R[i]
        for R in V:
            R[i], R[j] = R[j], R[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for R in A:
            R[dst] += q * R[src]
        for R in V:
            R[dst] += q * R[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                Ri = A[i]
                for j in range(t, n):
                    x = Ri[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best and best[0] == 1:
                    break
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, m) if any(A[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return SNFResult(IntegerMatrix(U), IntegerMatrix(A), IntegerMatrix(V))
