"""Loop-group models of the Grassmannian crystal.

A folded matrix is an ``n x n`` matrix of Laurent polynomials in ``lam``.
Its unfolding is the doubly infinite periodic matrix with
``X[r n + i, s n + j] = coefficient of lam^(r-s) in A[i, j]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebra.laurent import LaurentPoly
from .algebra.linalg import adjugate, det_ring, nullspace, rank
from .algebra.expr import DomainError
from .grassmannian import CrystalPoint, GrassmannPoint, UndefinedPointError, interval, reduce_index

LAM = LaurentPoly.gen()


def _lp(x) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly.const(x)


@dataclass(frozen=True, eq=False)
class FoldedMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(_lp(x) for x in r) for r in self.entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("folded matrices are square")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __matmul__(self, other):
        n = self.n
        A, B = self.entries, other.entries
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = LaurentPoly()
                for m in range(n):
                    if not A[i][m].is_zero() and not B[m][j].is_zero():
                        acc = acc + A[i][m] * B[m][j]
                row.append(acc)
            out.append(tuple(row))
        return FoldedMatrix(tuple(out))

    def scale(self, s):
        s = _lp(s)
        return FoldedMatrix(tuple(tuple(s * x for x in r) for r in self.entries))

    def __eq__(self, other):
        return isinstance(other, FoldedMatrix) and self.entries == other.entries

    def at(self, z):
        """Specialize ``lam = z``."""
        return [[x(z) for x in r] for r in self.entries]

    def det(self) -> LaurentPoly:
        return _lp(det_ring([list(r) for r in self.entries]))

    def exponent_range(self):
        exps = [e for r in self.entries for x in r for e, _ in x.terms()]
        return (min(exps), max(exps)) if exps else (0, 0)

    def unfold(self) -> "UnfoldedView":
        return UnfoldedView(self)

    def c_twist(self):
        """Entry ``(i,j)`` times ``(-1)^(i+j)`` and ``lam -> (-1)^n lam``."""
        n = self.n
        return FoldedMatrix(tuple(tuple(x.scale_exponents((-1) ** n) * (-1) ** (i + j)
                                        for j, x in enumerate(r)) for i, r in enumerate(self.entries)))

    def flip(self):
        """``fl(A)[i,j] = A[n-j+1, n-i+1]``."""
        n = self.n
        return FoldedMatrix(tuple(tuple(self[n - j + 1, n - i + 1] for j in range(1, n + 1))
                                  for i in range(1, n + 1)))

    def __repr__(self):
        return "FoldedMatrix(" + repr([[repr(x) for x in r] for r in self.entries]) + ")"


class UnfoldedView:
    """Read-only access to the unfolding of a folded matrix."""

    def __init__(self, A: FoldedMatrix):
        self.folded = A
        self.n = A.n

    def __getitem__(self, ij):
        p, q = ij
        n = self.n
        r, i = divmod(p - 1, n)
        s, j = divmod(q - 1, n)
        return self.folded.entries[i][j].coeff(r - s)

    def block(self, rows, cols):
        return [[self[p, q] for q in cols] for p in rows]


def fold(view_fn, n, exp_lo, exp_hi) -> FoldedMatrix:
    """Fold a periodic array given by ``view_fn(p, q)``, reading exponents in
    ``[exp_lo, exp_hi]``."""
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            row.append(LaurentPoly({m: view_fn(m * n + i, j) for m in range(exp_lo, exp_hi + 1)}))
        rows.append(tuple(row))
    return FoldedMatrix(tuple(rows))


def shift(A: FoldedMatrix, inverse=False) -> FoldedMatrix:
    """``sh(X)[p, q] = X[p-1, q-1]`` on unfoldings."""
    U = A.unfold()
    lo, hi = A.exponent_range()
    d = 1 if inverse else -1
    return fold(lambda p, q: U[p + d, q + d], A.n, lo - 1, hi + 1)


def is_lower_borel(A: FoldedMatrix) -> bool:
    """Polynomial entries, invertible diagonal constants, and no constant
    term above the diagonal."""
    n = A.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            x = A[i, j]
            if not x.is_zero() and x.valuation() < 0:
                return False
            if i == j and x.constant_term() == 0:
                return False
            if i < j and x.constant_term() != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# generators and their actions

def x_hat(n, i, a) -> FoldedMatrix:
    """``x_i(a) = Id + a E_{i,i+1}``; for ``i = 0`` the entry is ``a lam^-1`` at ``(n,1)``."""
    rows = [[LaurentPoly.const(int(r == c)) for c in range(n)] for r in range(n)]
    i %= n
    if i == 0:
        rows[n - 1][0] = rows[n - 1][0] + LaurentPoly.monomial(a, -1)
    else:
        rows[i - 1][i] = rows[i - 1][i] + a
    return FoldedMatrix(tuple(map(tuple, rows)))


def tau(A: FoldedMatrix, i, a):
    """Parameter of the right factor keeping ``x_i(a) A x_i(tau)`` lower Borel."""
    U = A.unfold()
    n = A.n
    i %= n
    ii = i if i else n
    den = U[ii, ii] + a * U[ii + 1, ii]
    if den == 0:
        raise DomainError(f"action of x_{i}({a}) undefined")
    return -a * U[ii + 1, ii + 1] / den


def u_action_borel(A: FoldedMatrix, i, a) -> FoldedMatrix:
    n = A.n
    return x_hat(n, i, a) @ A @ x_hat(n, i, tau(A, i, a))


def u_action(p: CrystalPoint, i, a) -> CrystalPoint:
    """``u . (M, t) = (u|_{lam=(-1)^(k-1) t} M, t)`` for ``u = x_i(a)``."""
    n, k, t = p.n, p.k, p.t
    u = x_hat(n, i, a).at((-1) ** (k - 1) * t)
    M = [[sum(u[r][m] * p.M.matrix[m][c] for m in range(n)) for c in range(k)] for r in range(n)]
    return CrystalPoint(GrassmannPoint(M), t)


# ---------------------------------------------------------------------------
# the maps g and h

def _ratio(p, num, den):
    d = p.P(den)
    if d == 0:
        raise UndefinedPointError(sorted({reduce_index(j, p.n) for j in den}))
    return p.P(num) / d


def g_matrix(p: CrystalPoint) -> FoldedMatrix:
    n, k, t = p.n, p.k, p.t
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            v = _ratio(p, interval(j - k + 1, j - 1) + [i], interval(j - k, j - 1))
            if j <= k:
                row.append(LaurentPoly.const(v))
            elif i >= j:
                row.append(LaurentPoly.const(t * v))
            else:
                row.append(LaurentPoly.monomial(v, 1))
        rows.append(tuple(row))
    return FoldedMatrix(tuple(rows))


def h_matrix(p: CrystalPoint) -> FoldedMatrix:
    n, k, t = p.n, p.k, p.t
    rows = []
    for i in range(1, n + 1):
        row = []
        window = interval(i - k, i)
        for j in range(1, n + 1):
            num = [x for x in window if reduce_index(x, n) != j]
            v = _ratio(p, num, interval(i - k + 1, i)) * (-1) ** (i + j)
            if i > k:
                row.append(LaurentPoly.const(v))
            elif i >= j:
                row.append(LaurentPoly.const(t * v))
            else:
                row.append(LaurentPoly.monomial(v * (-1) ** n, 1))
        rows.append(tuple(row))
    return FoldedMatrix(tuple(rows))


def inv(A: FoldedMatrix) -> FoldedMatrix:
    """``adj(A)`` followed by the sign twist and ``lam -> (-1)^n lam``."""
    adj = adjugate([list(r) for r in A.entries])
    return FoldedMatrix(tuple(tuple(_lp(x) for x in r) for r in adj)).c_twist()


def induced_crystal(A: FoldedMatrix):
    """Weight, ``phi`` and ``eps`` read off the unfolding."""
    U = A.unfold()
    n = A.n
    gam = tuple(U[i, i] for i in range(1, n + 1))
    phis, epss = [], []
    for i in range(n):
        ii = i if i else n
        phis.append(U[ii + 1, ii] / U[ii, ii])
        epss.append(U[ii + 1, ii] / U[ii + 1, ii + 1])
    return gam, tuple(phis), tuple(epss)


def induced_e(A: FoldedMatrix, i, c) -> FoldedMatrix:
    _, phis, _ = induced_crystal(A)
    return u_action_borel(A, i, (Fraction(c) - 1) / phis[i % A.n])


def chi(A: FoldedMatrix, ell: int):
    """Sum of the first nonunit subdiagonal of an ``ell``-shifted unipotent
    matrix; raises if ``A`` is not of that form."""
    U = A.unfold()
    n = A.n
    lo, hi = A.exponent_range()
    for j in range(1, n + 1):
        if U[j + ell, j] != 1:
            raise ValueError(f"entry ({j + ell},{j}) of the unfolding is not 1")
        for p in range(j + ell + 1, j + ell + 1 + (hi + 1) * n):
            if U[p, j] != 0:
                raise ValueError(f"nonzero entry ({p},{j}) below the shifted diagonal")
    return sum(U[j + ell - 1, j] for j in range(1, n + 1))


# ---------------------------------------------------------------------------
# symmetries

def first_columns(A, k, t):
    """Span of the first ``k`` columns at ``lam = (-1)^(k-1) t``."""
    B = A.at((-1) ** (k - 1) * t)
    return GrassmannPoint([row[:k] for row in B])


def schuetzenberger_S(p: CrystalPoint) -> CrystalPoint:
    return CrystalPoint(first_columns(g_matrix(p).flip(), p.k, p.t), p.t)


def perp(M: GrassmannPoint) -> GrassmannPoint:
    """Orthogonal complement for ``<v_i, v_j> = (-1)^(i+1) delta_ij``."""
    n, k = M.n, M.k
    rows = [[M.matrix[r][c] * (-1) ** r for r in range(n)] for c in range(k)]
    basis = nullspace(rows)
    return GrassmannPoint([[basis[c][r] for c in range(n - k)] for r in range(n)])


def reverse_rows(M: GrassmannPoint) -> GrassmannPoint:
    return GrassmannPoint(list(reversed(M.matrix)))


def duality_D(p: CrystalPoint) -> CrystalPoint:
    if p.k == p.n:
        raise ValueError("duality needs k < n")
    N = CrystalPoint(reverse_rows(perp(p.M)), p.t)
    return schuetzenberger_S(N)


# ---------------------------------------------------------------------------
# identity checks (return bool)

def g_properties_check(p: CrystalPoint) -> dict:
    """The four structural properties of ``g`` as named booleans."""
    from .parametrization import diagonal_form, phi_matrix, theta_inverse
    n, k, t = p.n, p.k, p.t
    A = g_matrix(p)
    D = diagonal_form(p.M)
    beta = LaurentPoly({0: t, 1: (-1) ** k})
    return {
        "first_columns_are_diagonal_form": all(A[i + 1, j + 1] == D[i][j]
                                               for i in range(n) for j in range(k)),
        "rank_at_special_point": rank(A.at((-1) ** (k - 1) * t)) == k,
        "determinant": A.det() == beta ** (n - k),
        "constant_term_is_phi": A.at(0) == phi_matrix(theta_inverse(p)),
    }


def h_g_check(p: CrystalPoint) -> bool:
    n, k, t = p.n, p.k, p.t
    beta = LaurentPoly({0: t, 1: (-1) ** k})
    return h_matrix(p) @ g_matrix(p) == FoldedMatrix.identity(n).scale(beta)


def jacobi_check(X) -> bool:
    """Minors of the sign-twisted inverse against complementary minors."""
    from .algebra.linalg import det, inverse, minor
    n = len(X)
    d = det(X)
    Y = inverse(X)
    Yc = [[Y[i][j] * (-1) ** (i + j) for j in range(n)] for i in range(n)]
    for size in range(1, n):
        for I in combinations(range(n), size):
            for J in combinations(range(n), size):
                Ib = [x for x in range(n) if x not in I]
                Jb = [x for x in range(n) if x not in J]
                if minor(Yc, I, J) * d != minor(X, Jb, Ib):
                    return False
    return True
