"""The affine geometric crystal on ``Gr(k, n) x C^*``.

A point is a full-rank ``n x k`` matrix over an exact field together with a
nonzero scalar ``t``.  All structure maps are ratios of Pluecker coordinates,
so they only depend on the column span.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .algebra.expr import DomainError
from .algebra.linalg import det, rank


class UndefinedPointError(DomainError):
    """A structure map needs a Pluecker coordinate that vanishes here."""

    def __init__(self, subset, what=""):
        self.subset = tuple(subset)
        label = "{" + ",".join(map(str, self.subset)) + "}"
        super().__init__(f"P_{label} vanishes{': ' + what if what else ''}")


def reduce_index(i: int, n: int) -> int:
    return (i - 1) % n + 1


def interval(a: int, b: int):
    """Integer interval ``[a, b]`` as a list (empty when ``b < a``)."""
    return list(range(a, b + 1))


def _as_field(x):
    return Fraction(x) if isinstance(x, int) else x


@dataclass(eq=False)
class GrassmannPoint:
    """Column span of an ``n x k`` matrix of rank ``k``."""

    matrix: tuple
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        M = tuple(tuple(_as_field(x) for x in row) for row in self.matrix)
        self.matrix = M
        if not M or not M[0]:
            raise ValueError("empty matrix")
        n, k = len(M), len(M[0])
        if any(len(r) != k for r in M):
            raise ValueError("ragged matrix")
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
        if rank([list(r) for r in M]) != k:
            raise ValueError("matrix does not have full column rank")

    @property
    def n(self):
        return len(self.matrix)

    @property
    def k(self):
        return len(self.matrix[0])

    def plucker(self, J):
        """``P_J`` for a set of integers, reduced mod ``n`` into ``[n]``.

        Sets that do not have exactly ``k`` distinct residues give 0.
        """
        n, k = self.n, self.k
        key = tuple(sorted({reduce_index(j, n) for j in J}))
        if len(key) != k:
            return Fraction(0) * self.matrix[0][0]
        val = self._cache.get(key)
        if val is None:
            val = det([list(self.matrix[j - 1]) for j in key])
            self._cache[key] = val
        return val

    def plucker_ordered(self, seq):
        """Signed Pluecker coordinate for an ordered row sequence."""
        n = self.n
        idx = [reduce_index(j, n) for j in seq]
        if len(idx) != self.k or len(set(idx)) != len(idx):
            return Fraction(0) * self.matrix[0][0]
        inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
        v = self.plucker(idx)
        return -v if inversions % 2 else v

    def plucker_vector(self):
        return {J: self.plucker(J) for J in combinations(range(1, self.n + 1), self.k)}

    def nonzero_plucker(self, J, what=""):
        v = self.plucker(J)
        if v == 0:
            raise UndefinedPointError(sorted({reduce_index(j, self.n) for j in J}), what)
        return v

    def same_span(self, other: "GrassmannPoint") -> bool:
        """Projective equality of Pluecker vectors."""
        if (self.n, self.k) != (other.n, other.k):
            return False
        a, b = self.plucker_vector(), other.plucker_vector()
        ref = next((J for J in a if a[J] != 0), None)
        if ref is None or b[ref] == 0:
            return False
        return all(a[J] * b[ref] == b[J] * a[ref] for J in a)

    def columns_scaled(self):
        return [list(r) for r in self.matrix]


@dataclass(eq=False)
class CrystalPoint:
    """A point ``(M, t)`` of ``Gr(k, n) x C^*``."""

    M: GrassmannPoint
    t: object

    def __post_init__(self):
        if not isinstance(self.M, GrassmannPoint):
            self.M = GrassmannPoint(self.M)
        self.t = _as_field(self.t)
        if self.t == 0:
            raise DomainError("t must be nonzero")

    @property
    def n(self):
        return self.M.n

    @property
    def k(self):
        return self.M.k

    def P(self, J):
        return self.M.plucker(J)

    def same(self, other: "CrystalPoint") -> bool:
        return self.t == other.t and self.M.same_span(other.M)


def plucker(M: GrassmannPoint, J, ordered=False):
    return M.plucker_ordered(J) if ordered else M.plucker(J)


def plucker_relation_check(M: GrassmannPoint, I, Jseq) -> bool:
    """Grassmann-Pluecker relation for ``I`` of size ``k+1`` and ``Jseq`` of
    size ``k-1``."""
    k = M.k
    if len(I) != k + 1 or len(Jseq) != k - 1:
        raise ValueError("need |I| = k+1 and |J| = k-1")
    total = 0
    for r in range(k + 1):
        rest = list(I[:r]) + list(I[r + 1:])
        term = M.plucker_ordered(rest) * M.plucker_ordered([I[r]] + list(Jseq))
        total += term if (r + 1) % 2 == 0 else -term
    return total == 0


def three_term_check(M: GrassmannPoint, I, a, b, c, d) -> bool:
    """``P_Iab P_Icd + P_Iad P_Ibc = P_Iac P_Ibd`` for ``a < b < c < d``."""
    I = list(I)
    P = lambda *x: M.plucker(I + list(x))
    return P(a, b) * P(c, d) + P(a, d) * P(b, c) == P(a, c) * P(b, d)


# ---------------------------------------------------------------------------
# structure maps

def _ratio(p: CrystalPoint, num_sets, den_sets, what):
    num = 1
    for J in num_sets:
        num = num * p.P(J)
    den = 1
    for J in den_sets:
        den = den * p.M.nonzero_plucker(J, what)
    return num / den


def gamma(p: CrystalPoint):
    """Weight ``(gamma_1, ..., gamma_n)``."""
    n, k, t = p.n, p.k, p.t
    out = []
    for i in range(1, n + 1):
        g = _ratio(p, [interval(i - k + 1, i)], [interval(i - k, i - 1)], f"gamma_{i}")
        out.append(g * t if i > k else g)
    return tuple(out)


def phi(p: CrystalPoint, i: int):
    n, k, t = p.n, p.k, p.t
    i %= n
    v = _ratio(p, [interval(i - k + 1, i - 1) + [i + 1]], [interval(i - k + 1, i)], f"phi_{i}")
    return v / t if i == 0 else v


def eps(p: CrystalPoint, i: int):
    n, k, t = p.n, p.k, p.t
    i %= n
    v = _ratio(p, [interval(i - k + 1, i - 1) + [i + 1], interval(i - k + 1, i)],
               [interval(i - k, i - 1), interval(i - k + 2, i + 1)], f"eps_{i}")
    return v / t if i == k % n else v


def decoration(p: CrystalPoint):
    n, k, t = p.n, p.k, p.t
    total = 0
    for i in range(1, n + 1):
        if i == k:
            continue
        total += _ratio(p, [[i - k] + interval(i - k + 2, i)], [interval(i - k + 1, i)], "f")
    total += t * _ratio(p, [interval(2, k) + [n]], [interval(1, k)], "f")
    return total


@dataclass(frozen=True)
class GeomData:
    gamma: tuple
    phi: tuple
    eps: tuple
    f: object


def geom_maps(p: CrystalPoint) -> GeomData:
    n = p.n
    return GeomData(gamma(p), tuple(phi(p, i) for i in range(n)),
                    tuple(eps(p, i) for i in range(n)), decoration(p))


def alpha(gam, i):
    """Simple root character ``gamma_i / gamma_{i+1}`` with indices mod n."""
    n = len(gam)
    return gam[(i - 1) % n] / gam[i % n]


# ---------------------------------------------------------------------------
# actions

def act_x(M, n, i, a):
    """Left multiply rows by ``x_i(a)``: row ``i`` gains ``a`` times row ``i+1``;
    for ``i = 0`` row ``n`` gains ``a`` times row 1."""
    rows = [list(r) for r in M]
    src, dst = (i + 1, i) if i != 0 else (1, n)
    rows[dst - 1] = [x + a * y for x, y in zip(rows[dst - 1], rows[src - 1])]
    return rows


def chevalley_parameter(p: CrystalPoint, i: int, c):
    """Parameter ``a`` with ``e_i^c(p) = x_i(a) p``."""
    n, k, t = p.n, p.k, p.t
    i %= n
    ph = phi(p, i)
    if ph == 0:
        raise UndefinedPointError(interval(i - k + 1, i - 1) + [i + 1], f"phi_{i} = 0")
    a = (c - 1) / ph
    if i == 0:
        a = a * (-1) ** (k - 1) / t
    return a


def apply_ei(p: CrystalPoint, i: int, c) -> CrystalPoint:
    c = _as_field(c)
    if c == 0:
        raise DomainError("c must be nonzero")
    n = p.n
    i %= n
    a = chevalley_parameter(p, i, c)
    return CrystalPoint(GrassmannPoint(act_x(p.M.matrix, n, i, a)), p.t)


def cyclic_shift(p: CrystalPoint, inverse: bool = False) -> CrystalPoint:
    """Twisted cyclic shift ``PR`` and its inverse."""
    n, k, t = p.n, p.k, p.t
    rows = [list(r) for r in p.M.matrix]
    s = (-1) ** (k - 1)
    if not inverse:
        new = [[s * t * x for x in rows[-1]]] + rows[:-1]
    else:
        new = rows[1:] + [[s * x / t for x in rows[0]]]
    return CrystalPoint(GrassmannPoint(new), t)


# ---------------------------------------------------------------------------
# sampling

def random_point(n: int, k: int, rng: random.Random, lo=1, hi=9, t=None, require_all=True,
                 max_tries=1000) -> CrystalPoint:
    """Random integer-entry point whose Pluecker coordinates are nonzero
    (all of them by default, otherwise only the cyclic ones)."""
    for _ in range(max_tries):
        M = [[Fraction(rng.randint(lo, hi)) for _ in range(k)] for _ in range(n)]
        try:
            G = GrassmannPoint(M)
        except ValueError:
            continue
        sets = (combinations(range(1, n + 1), k) if require_all
                else (interval(i, i + k - 1) for i in range(1, n + 1)))
        if all(G.plucker(J) != 0 for J in sets):
            tt = t if t is not None else Fraction(rng.randint(lo, hi), rng.randint(1, 3))
            return CrystalPoint(G, tt)
    raise RuntimeError("could not sample a generic point")


CHOICES_C = (Fraction(1, 3), Fraction(1, 2), Fraction(2), Fraction(3), Fraction(5), Fraction(1))


def random_c(rng: random.Random):
    return rng.choice(CHOICES_C)
