"""Rational k-rectangles and their parametrization of the Grassmannian.

A rational k-rectangle ``(X, t)`` has entries ``X_ij`` for ``(i, j)`` in
``rect_indices(n, k)`` and is sent by ``theta`` to a point of
``Gr(n-k, n) x C^*``.  Conventions: ``X_{i,i-1} = 1`` and
``X_{i,i+n-k} = t``; the small coordinates are ``x_ij = X_ij / X_{i,j-1}``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .algebra.expr import Expr, as_expr, expr_prod, expr_sum, var
from .algebra.linalg import det, identity, matmul
from .grassmannian import CrystalPoint, GrassmannPoint, UndefinedPointError, interval
from .tableaux import rect_indices


def xvar(i, j) -> Expr:
    return var(f"X_{i}_{j}")


T_VAR = "t"


@dataclass(eq=False)
class RationalRectangle:
    n: int
    k: int
    X: dict
    t: object

    def __post_init__(self):
        need = set(rect_indices(self.n, self.k))
        if set(self.X) != need:
            raise ValueError(f"entries must be indexed by {sorted(need)}")

    def __getitem__(self, ij):
        i, j = ij
        if j == i - 1:
            return 1
        if j == i + self.n - self.k:
            return self.t
        return self.X[i, j]

    def small(self, i, j):
        """``x_ij = X_ij / X_{i,j-1}``."""
        return self[i, j] / self[i, j - 1]

    def values(self):
        return [self.X[ij] for ij in rect_indices(self.n, self.k)]

    def env(self):
        d = {f"X_{i}_{j}": v for (i, j), v in self.X.items()}
        d[T_VAR] = self.t
        return d

    def __eq__(self, other):
        return (isinstance(other, RationalRectangle) and (self.n, self.k) == (other.n, other.k)
                and self.X == other.X and self.t == other.t)

    @classmethod
    def symbolic(cls, n, k):
        return cls(n, k, {ij: xvar(*ij) for ij in rect_indices(n, k)}, var(T_VAR))

    @classmethod
    def random(cls, n, k, rng: random.Random, hi=9):
        X = {ij: Fraction(rng.randint(1, hi), rng.randint(1, 3)) for ij in rect_indices(n, k)}
        return cls(n, k, X, Fraction(rng.randint(1, hi), rng.randint(1, 3)))


# ---------------------------------------------------------------------------
# the matrix Phi

def lower_chevalley(n, i, c):
    """``x_{-i}(c)``: ``c`` at ``(i,i)``, ``1/c`` at ``(i+1,i+1)``, 1 at ``(i+1,i)``."""
    A = identity(n, Fraction(1), Fraction(0))
    A[i - 1][i - 1] = c
    A[i][i] = 1 / c
    A[i][i - 1] = Fraction(1)
    return A


def torus(n, i, c):
    A = identity(n, Fraction(1), Fraction(0))
    A[i - 1][i - 1] = c
    return A


def interval_factor(n, i, j, cs):
    """``x_{-i}(c_i) ... x_{-(j-1)}(c_{j-1}) t_j(c_j)``."""
    if len(cs) != j - i + 1:
        raise ValueError("wrong number of parameters")
    A = identity(n, Fraction(1), Fraction(0))
    for a, c in zip(range(i, j), cs[:-1]):
        A = matmul(A, lower_chevalley(n, a, c))
    return matmul(A, torus(n, j, cs[-1]))


def phi_matrix(R: RationalRectangle):
    """The lower triangular ``n x n`` matrix whose first ``n-k`` columns span
    ``theta(R)``."""
    n, k = R.n, R.k
    r = n - k
    A = identity(n, Fraction(1), Fraction(0))
    for i in range(k, 0, -1):
        cs = [R[i, j] for j in range(i, i + r)] + [R.t]
        A = matmul(A, interval_factor(n, i, i + r, cs))
    return A


def theta(R: RationalRectangle) -> CrystalPoint:
    r = R.n - R.k
    A = phi_matrix(R)
    return CrystalPoint(GrassmannPoint([row[:r] for row in A]), R.t)


def basic_subset(n, r, i, j):
    """``J_{i,j} = [i, j] u [n-r... ]`` for ``Gr(r, n)``: ``[i,j] u [n-r+j-i+2, n]``."""
    return interval(i, j) + interval(n - r + j - i + 2, n)


def basic_ratio_sets(n, k):
    """For each entry of a k-rectangle, the numerator/denominator subsets of
    ``Gr(n-k, n)`` recovering it."""
    r = n - k
    return {(i, j): (basic_subset(n, r, i, j), basic_subset(n, r, i + 1, j))
            for i, j in rect_indices(n, k)}


def theta_inverse(p: CrystalPoint) -> RationalRectangle:
    """Rational ``(n-r)``-rectangle of a point of ``Gr(r, n)``."""
    n, r = p.n, p.k
    k = n - r
    X = {}
    for ij, (num, den) in basic_ratio_sets(n, k).items():
        d = p.P(den)
        if d == 0:
            raise UndefinedPointError(den, f"basic subset J_{{{ij[0] + 1},{ij[1]}}} outside the chart")
        X[ij] = p.P(num) / d
    return RationalRectangle(n, k, X, p.t)


# ---------------------------------------------------------------------------
# J-tableaux

@lru_cache(maxsize=None)
def jtableau_shape(n, r, J):
    """Boxes ``(a, b)`` of the shifted staircase of size ``r`` with
    ``j_b - n + r`` boxes removed from the bottom of column ``b`` when
    ``j_b > n - r``."""
    J = tuple(sorted(J))
    boxes = []
    for b in range(1, r + 1):
        height = b
        if J[b - 1] > n - r:
            height -= J[b - 1] - (n - r)
        boxes += [(a, b) for a in range(1, height + 1)]
    return tuple(boxes)


@lru_cache(maxsize=None)
def jtableaux(n, r, J):
    """All fillings ``T`` of the J-shape with values in ``[n-r]``, rows weakly
    increasing, columns strictly increasing, and ``T(a,a) = j_a`` whenever
    ``j_a <= n - r``."""
    J = tuple(sorted(J))
    boxes = jtableau_shape(n, r, J)
    m = n - r
    boxset = set(boxes)
    order = sorted(boxes)  # row by row, left to right
    out = []

    def rec(idx, T):
        if idx == len(order):
            out.append(dict(T))
            return
        a, b = order[idx]
        lo = 1
        if (a, b - 1) in boxset:
            lo = max(lo, T[a, b - 1])
        if (a - 1, b) in boxset:
            lo = max(lo, T[a - 1, b] + 1)
        if a == b:
            if J[a - 1] > m:
                return
            choices = [J[a - 1]] if J[a - 1] >= lo else []
        else:
            choices = range(lo, m + 1)
        for v in choices:
            T[a, b] = v
            rec(idx + 1, T)
            del T[a, b]

    rec(0, {})
    return tuple(tuple(sorted(T.items())) for T in out)


def jtableau_weight_indices(T):
    """Indices ``(T(a,b), T(a,b)+b-a)`` of the small coordinates in the weight."""
    return [(v, v + b - a) for (a, b), v in T]


def plucker_via_jtableaux(R: RationalRectangle, J):
    """``P_J(theta(R))`` as a sum over J-tableaux of products of ``x_ij``."""
    n, r = R.n, R.n - R.k
    total = 0
    for T in jtableaux(n, r, tuple(sorted(J))):
        w = 1
        for ij in jtableau_weight_indices(T):
            w = w * R.small(*ij)
        total = total + w
    return total


@lru_cache(maxsize=None)
def plucker_expr(n, k, J) -> Expr | None:
    """Subtraction-free expression for ``P_J`` on the chart of k-rectangles,
    or ``None`` when the coordinate vanishes identically."""
    J = tuple(sorted(J))
    r = n - k
    if len(J) != r:
        raise ValueError("wrong subset size")
    terms = []
    for T in jtableaux(n, r, J):
        factors = []
        for i, j in jtableau_weight_indices(T):
            num = xvar(i, j)
            factors.append(num if j == i else num / xvar(i, j - 1))
        terms.append(expr_prod(factors))
    return expr_sum(terms) if terms else None


# ---------------------------------------------------------------------------
# planar networks

@dataclass
class PlanarNetwork:
    """Acyclic directed graph with weighted edges, sources and sinks."""

    edges: list  # (tail, head, weight, label)
    sources: list
    sinks: list
    source_labels: list
    sink_labels: list

    def out_edges(self):
        out = {}
        for u, v, w, lab in self.edges:
            out.setdefault(u, []).append((v, w))
        return out

    def paths(self, u, v):
        """All paths ``u -> v`` as ``(vertex list, weight list)``."""
        out = self.out_edges()
        found = []

        def rec(x, verts, ws):
            if x == v:
                found.append((list(verts), list(ws)))
                return
            for y, w in out.get(x, ()):
                verts.append(y)
                ws.append(w)
                rec(y, verts, ws)
                verts.pop()
                ws.pop()

        rec(u, [u], [])
        return found

    def path_matrix(self):
        """``M[i][j]`` is the weighted count of paths from source ``i`` to sink ``j``."""
        return [[_weighted_sum(self.paths(s, t)) for t in self.sinks] for s in self.sources]


def _weighted_sum(paths):
    total = None
    for _, ws in paths:
        w = 1
        for x in ws:
            w = x if isinstance(w, int) and w == 1 else w * x
        total = w if total is None else total + w
    return 0 if total is None else total


def lindstrom_minor(N: PlanarNetwork, I, J):
    """Sum over vertex-disjoint path families from sources ``I`` to sinks ``J``
    (1-based positions) of sign times weight, by brute force."""
    I, J = list(I), list(J)
    if len(I) != len(J):
        raise ValueError("need |I| = |J|")
    plus, minus = [], []
    for perm in permutations(range(len(J))):
        sign = 1
        for a in range(len(perm)):
            for b in range(a + 1, len(perm)):
                if perm[a] > perm[b]:
                    sign = -sign
        choices = [N.paths(N.sources[I[a] - 1], N.sinks[J[perm[a]] - 1]) for a in range(len(I))]
        for fam in product(*choices):
            seen = set()
            ok = True
            for verts, _ in fam:
                if seen.intersection(verts):
                    ok = False
                    break
                seen.update(verts)
            if not ok:
                continue
            w = 1
            for _, ws in fam:
                for x in ws:
                    w = x if isinstance(w, int) and w == 1 else w * x
            (plus if sign == 1 else minus).append(w)
    if minus:
        return _plain_sum(plus) - _plain_sum(minus)
    return _plain_sum(plus)


def _plain_sum(xs):
    total = 0
    for x in xs:
        total = x if isinstance(total, int) and total == 0 else total + x
    return total


def grassmann_network(n, r, weight=None) -> PlanarNetwork:
    """The network with ``r`` sinks ``(0, j)`` and ``n`` sources representing
    ``theta`` of an ``(n-r)``-rectangle.

    ``weight(i, j)`` gives the weight of the diagonal edge labelled
    ``x_{i,j}``; by default it is the symbolic small coordinate.
    """
    m = n - r
    if weight is None:
        def weight(i, j):
            num = xvar(i, j)
            if j == i:
                return num
            if j == i + r:
                return var(T_VAR) / xvar(i, j - 1)
            return num / xvar(i, j - 1)
    edges = []
    for i in range(1, m + 1):
        for j in range(1, r + 1):
            edges.append(((i, j), (i - 1, j), 1, "1"))
        for j in range(0, r):
            edges.append(((i, j), (i - 1, j + 1), weight(i, i + j), f"x_{{{i},{i + j}}}"))
    sources = [(i, 0) if i <= m else (m, i - m) for i in range(1, n + 1)]
    sinks = [(0, j) for j in range(1, r + 1)]
    return PlanarNetwork(edges, sources, sinks, [str(i) for i in range(1, n + 1)],
                         [f"{j}'" for j in range(1, r + 1)])


def network_for(R: RationalRectangle) -> PlanarNetwork:
    return grassmann_network(R.n, R.n - R.k, lambda i, j: R.small(i, j))


def to_dot(N: PlanarNetwork, name="N") -> str:
    def vid(v):
        return f"v_{v[0]}_{v[1]}".replace("-", "m")

    verts = sorted({v for e in N.edges for v in e[:2]} | set(N.sources) | set(N.sinks))
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=point];"]
    labels = {s: lab for s, lab in zip(N.sources, N.source_labels)}
    labels.update({s: lab for s, lab in zip(N.sinks, N.sink_labels)})
    for v in verts:
        lab = labels.get(v)
        attrs = f'pos="{v[1]},{-v[0]}!"'
        if lab is not None:
            attrs += f', shape=plaintext, label="{lab}"'
        lines.append(f"  {vid(v)} [{attrs}];")
    for u, v, _, lab in N.edges:
        lines.append(f'  {vid(u)} -> {vid(v)} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# diagonal form

def diagonal_form(M: GrassmannPoint):
    """Representative with lower triangular top ``k x k`` block and unit upper
    triangular bottom ``k x k`` block."""
    n, k = M.n, M.k
    A = [list(r) for r in M.matrix]
    bottom = [A[n - k + a] for a in range(k)]
    if det(bottom) == 0:
        raise UndefinedPointError(interval(n - k + 1, n), "no diagonal form")
    from .algebra.linalg import inverse
    A = matmul(A, inverse(bottom))
    for row in range(k):
        p = A[row][row]
        if p == 0:
            raise UndefinedPointError(interval(1, row + 1) + interval(n - k + row + 2, n),
                                      "no diagonal form")
        for col in range(row + 1, k):
            fac = A[row][col] / p
            if fac != 0:
                for rr in range(n):
                    A[rr][col] -= fac * A[rr][row]
    return [tuple(r) for r in A]


# ---------------------------------------------------------------------------
# geometric Bender-Knuth moves on rational rectangles

def _bk_entry(R, i, r):
    n, k = R.n, R.k
    X = R.__getitem__
    if i != 1:
        f = X((i - 1, r - 1)) + X((i, r + 1)) if r != n - k - 1 + i else X((i - 1, r - 1))
    else:
        f = X((1, r + 1)) if r != n - k else R.t
    if i != k:
        if r != i:
            a, b = X((i, r - 1)), X((i + 1, r + 1))
            g = a * b / (a + b)
        else:
            g = X((i + 1, r + 1))
    else:
        g = X((k, r - 1)) if r != k else 1
    return f * g / X((i, r))


def geometric_bk(R: RationalRectangle, r: int) -> RationalRectangle:
    """Rational lift of the Bender-Knuth move on row ``r`` of the pattern.

    Works for numeric entries and for symbolic ``Expr`` entries alike.
    """
    n, k = R.n, R.k
    if not 1 <= r <= n - 1:
        raise ValueError(f"row {r} out of range")
    X = dict(R.X)
    for (i, j) in rect_indices(n, k):
        if j == r:
            X[i, j] = _bk_entry(R, i, r)
    return RationalRectangle(n, k, X, R.t)


def geometric_pr(R: RationalRectangle) -> RationalRectangle:
    for r in range(R.n - 1, 0, -1):
        R = geometric_bk(R, r)
    return R


def decoration_closed_form(R: RationalRectangle):
    """Positive Laurent-type formula for the decoration pulled back by theta."""
    n, k = R.n, R.k
    X = R.__getitem__
    terms = [X((k, k)), R.t / X((1, n - k))]
    for i in range(1, k + 1):
        for j in range(i + 1, i + n - k):
            terms.append(X((i, j)) / X((i, j - 1)))
    for i in range(1, k):
        for j in range(i, i + n - k):
            terms.append(X((i, j)) / X((i + 1, j + 1)))
    return _plain_sum(terms) if not isinstance(terms[0], Expr) else expr_sum(terms)
