"""Exact dense linear algebra on lists of rows.

Field routines (``det``, ``rank``, ``inverse``, ``nullspace``) need entries
supporting ``+ - * /`` and comparison with 0.  ``det_ring`` and
``adjugate`` use only ring operations, so they also work over Laurent
polynomials.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations


def shape(A):
    return len(A), (len(A[0]) if A else 0)


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(A, B):
    m, p = shape(A)
    p2, q = shape(B)
    if p != p2:
        raise ValueError(f"shape mismatch {m}x{p} * {p2}x{q}")
    Bt = list(zip(*B)) if B else []
    out = []
    for row in A:
        new = []
        for col in Bt:
            acc = None
            for a, b in zip(row, col):
                if isinstance(a, int) and a == 0 or isinstance(b, int) and b == 0:
                    continue
                acc = a * b if acc is None else acc + a * b
            new.append(0 if acc is None else acc)
        out.append(new)
    return out


def transpose(A):
    return [list(r) for r in zip(*A)]


def submatrix(A, rows, cols):
    return [[A[i][j] for j in cols] for i in rows]


def det(A):
    """Determinant over a field by Gaussian elimination."""
    n = len(A)
    if n == 0:
        return Fraction(1)
    M = [list(r) for r in A]
    sign = 1
    result = None
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return M[0][0] * 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        p = M[c][c]
        result = p if result is None else result * p
        for r in range(c + 1, n):
            if M[r][c] != 0:
                f = M[r][c] / p
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return result if sign == 1 else -result


def det_ring(A):
    """Determinant using only ring operations (Laplace expansion, memoized
    over column subsets)."""
    n = len(A)
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def rec(row, cols):
        if row == n:
            return 1
        total = None
        for pos, c in enumerate(cols):
            a = A[row][c]
            if isinstance(a, int) and a == 0:
                continue
            if hasattr(a, "is_zero") and a.is_zero():
                continue
            rest = cols[:pos] + cols[pos + 1:]
            term = a * rec(row + 1, rest)
            if pos % 2:
                term = -term
            total = term if total is None else total + term
        return 0 if total is None else total

    return rec(0, tuple(range(n)))


def minor(A, rows, cols, ring=False):
    sub = submatrix(A, rows, cols)
    return det_ring(sub) if ring else det(sub)


def rank(A):
    """Rank by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in A]
    m, n = shape(M)
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, m):
            M[i] = [(M[r][c] * M[i][j] - M[i][c] * M[r][j]) / prev for j in range(n)]
        prev = M[r][c]
        r += 1
        if r == m:
            break
    return r


def inverse(A):
    n = len(A)
    M = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def rref(A):
    M = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in A]
    m, n = shape(M)
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return M, pivots


def nullspace(A):
    """Basis of ``{v : A v = 0}`` as a list of column vectors."""
    _, n = shape(A)
    R, pivots = rref(A)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -R[row][f]
        basis.append(v)
    return basis


def adjugate(A):
    """Classical adjoint, computed with ring operations only."""
    n = len(A)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows = [r for r in range(n) if r != j]
            cols = [c for c in range(n) if c != i]
            d = det_ring(submatrix(A, rows, cols))
            adj[i][j] = d if (i + j) % 2 == 0 else -d
    return adj


def all_minors(A, k, ring=False):
    """Dict of all maximal-size ``k`` row minors of an ``n x k`` matrix."""
    n = len(A)
    cols = list(range(k))
    return {J: minor(A, J, cols, ring) for J in combinations(range(n), k)}
