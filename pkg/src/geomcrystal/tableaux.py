"""Semistandard tableaux, their crystal operators, Bender-Knuth moves,
promotion, evacuation, Gelfand-Tsetlin patterns and k-rectangles.

A tableau is a tuple of weakly decreasing-length rows with entries in
``[1, n]``.  Raising/lowering operators that are not defined return the
``UNDEFINED`` marker rather than raising.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, total_ordering
from itertools import combinations
from typing import Iterator


class _Undefined:
    """Result of a crystal operator outside its domain."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __bool__(self):
        return False

    def __repr__(self):
        return "UNDEFINED"


UNDEFINED = _Undefined()


class TableauError(ValueError):
    """Invalid tableau; ``row`` and ``col`` (1-based) locate the problem."""

    def __init__(self, msg, row=None, col=None):
        super().__init__(msg)
        self.msg, self.row, self.col = msg, row, col


@dataclass(frozen=True)
class Tableau:
    rows: tuple
    n: int

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        self.validate()

    def validate(self):
        rows, n = self.rows, self.n
        for a, r in enumerate(rows):
            if a and len(r) > len(rows[a - 1]):
                raise TableauError(f"row {a + 1} is longer than row {a}", a + 1, len(rows[a - 1]) + 1)
            for b, x in enumerate(r):
                if not 1 <= x <= n:
                    raise TableauError(f"entry {x} at ({a + 1},{b + 1}) outside [1,{n}]", a + 1, b + 1)
                if b and r[b - 1] > x:
                    raise TableauError(f"row {a + 1} decreases at column {b + 1}", a + 1, b + 1)
                if a and rows[a - 1][b] >= x:
                    raise TableauError(f"column {b + 1} not strictly increasing at row {a + 1}",
                                       a + 1, b + 1)

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    def is_rectangular(self) -> bool:
        return len(set(self.shape)) <= 1

    def content(self):
        c = [0] * self.n
        for r in self.rows:
            for x in r:
                c[x - 1] += 1
        return tuple(c)

    def reading_word(self):
        return [x for r in reversed(self.rows) for x in r]

    def _from_word(self, word):
        rows, pos = [], 0
        for length in reversed(self.shape):
            rows.append(tuple(word[pos:pos + length]))
            pos += length
        return Tableau(tuple(reversed(rows)), self.n)

    def columns(self):
        if not self.rows:
            return []
        return [tuple(r[c] for r in self.rows if c < len(r)) for c in range(len(self.rows[0]))]

    def __str__(self):
        return "\n".join(",".join(map(str, r)) for r in self.rows)

    @classmethod
    def parse(cls, text: str, n: int) -> "Tableau":
        """Parse one row per line, entries separated by commas."""
        rows, lines = [], []
        for ln, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            lines.append(ln)
            row = []
            for col, tok in enumerate(line.split(","), 1):
                tok = tok.strip()
                try:
                    row.append(int(tok))
                except ValueError:
                    raise TableauError(f"line {ln}, column {col}: not an integer: {tok!r}",
                                       ln, col) from None
            rows.append(tuple(row))
        try:
            return cls(tuple(rows), n)
        except TableauError as exc:
            if exc.row is None:
                raise
            ln = lines[exc.row - 1]
            raise TableauError(f"line {ln}, column {exc.col}: {exc.msg}", ln, exc.col) from None


# ---------------------------------------------------------------------------
# type A crystal operators

def _bracket(word, i):
    """Return positions of unbracketed ``i`` and ``i+1`` letters."""
    stack_hi = []
    free_lo = []
    for p, x in enumerate(word):
        if x == i + 1:
            stack_hi.append(p)
        elif x == i:
            if stack_hi:
                stack_hi.pop()
            else:
                free_lo.append(p)
    # remaining word reads i^a (i+1)^b: free i's come before free (i+1)'s
    return free_lo, stack_hi


def _check_i(T, i, allow_zero):
    if not (1 <= i <= T.n - 1 or (allow_zero and i == 0)):
        raise ValueError(f"index {i} out of range for n={T.n}")


def crystal_stats(T: Tableau, i: int):
    """Return ``(eps_i, phi_i)``.  ``i = 0`` requires a rectangular tableau."""
    _check_i(T, i, True)
    if i == 0:
        return crystal_stats(promote(T), 1)
    lo, hi = _bracket(T.reading_word(), i)
    return len(hi), len(lo)


def crystal_op(T: Tableau, i: int, direction: str):
    """Apply ``e_i`` (``direction='e'``) or ``f_i`` (``'f'``)."""
    _check_i(T, i, True)
    if direction not in ("e", "f"):
        raise ValueError("direction must be 'e' or 'f'")
    if i == 0:
        if not T.is_rectangular():
            raise ValueError("the affine operators need a rectangular tableau")
        U = crystal_op(promote(T), 1, direction)
        return UNDEFINED if U is UNDEFINED else promote_inverse(U)
    word = T.reading_word()
    lo, hi = _bracket(word, i)
    if direction == "e":
        if not hi:
            return UNDEFINED
        word[hi[0]] = i
    else:
        if not lo:
            return UNDEFINED
        word[lo[-1]] = i + 1
    return T._from_word(word)


def e(T, i):
    return crystal_op(T, i, "e")


def f(T, i):
    return crystal_op(T, i, "f")


def weight_root(n, i):
    """Simple root ``v_i - v_{i+1}`` (indices mod n) as a vector."""
    v = [0] * n
    v[(i - 1) % n] += 1
    v[i % n] -= 1
    return tuple(v)


# ---------------------------------------------------------------------------
# Bender-Knuth moves, promotion, evacuation

def bender_knuth(T: Tableau, i: int) -> Tableau:
    if not 1 <= i <= T.n - 1:
        raise ValueError(f"index {i} out of range for n={T.n}")
    rows = [list(r) for r in T.rows]
    for a, r in enumerate(rows):
        free = []
        for b, x in enumerate(r):
            if x == i:
                below = a + 1 < len(rows) and b < len(rows[a + 1]) and T.rows[a + 1][b] == i + 1
                if not below:
                    free.append(b)
            elif x == i + 1:
                above = a > 0 and T.rows[a - 1][b] == i
                if not above:
                    free.append(b)
        if not free:
            continue
        alpha = sum(1 for b in free if T.rows[a][b] == i)
        beta = len(free) - alpha
        for pos, b in enumerate(free):
            r[b] = i if pos < beta else i + 1
    return Tableau(tuple(map(tuple, rows)), T.n)


def promote(T: Tableau) -> Tableau:
    """``sigma_1 o sigma_2 o ... o sigma_{n-1}`` (``sigma_{n-1}`` acts first)."""
    for i in range(T.n - 1, 0, -1):
        T = bender_knuth(T, i)
    return T


def promote_inverse(T: Tableau) -> Tableau:
    for i in range(1, T.n):
        T = bender_knuth(T, i)
    return T


def evacuate(T: Tableau) -> Tableau:
    n = T.n
    for start in range(1, n):
        for i in range(n - 1, start - 1, -1):
            T = bender_knuth(T, i)
    return T


def rotate_tableau(T: Tableau) -> Tableau:
    """Rotate a rectangular tableau by 180 degrees and replace ``i`` by ``n+1-i``."""
    if not T.is_rectangular():
        raise ValueError("rotation needs a rectangular tableau")
    rows = tuple(tuple(T.n + 1 - x for x in reversed(r)) for r in reversed(T.rows))
    return Tableau(rows, T.n)


def complement_tableau(T: Tableau, k: int, L: int) -> Tableau:
    """Replace each column of a ``k x L`` tableau by its complement in
    ``[n]`` and reverse the order of the columns."""
    n = T.n
    cols = T.columns() if T.rows else [()] * L
    if len(cols) != L or any(len(c) != k for c in cols):
        raise ValueError("tableau is not a k x L rectangle")
    new_cols = [tuple(x for x in range(1, n + 1) if x not in c) for c in reversed(cols)]
    if n - k == 0 or L == 0:
        return Tableau((), n)
    rows = tuple(tuple(c[a] for c in new_cols) for a in range(n - k))
    return Tableau(rows, n)


# ---------------------------------------------------------------------------
# Gelfand-Tsetlin patterns

@dataclass(frozen=True)
class GTPattern:
    """``rows[j-1][i-1] = A_{ij}`` for ``1 <= i <= j <= n``."""

    rows: tuple

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[j - 1][i - 1]

    def is_valid(self) -> bool:
        n = self.n
        for j in range(1, n):
            for i in range(1, j + 1):
                if not self[i, j + 1] >= self[i, j] >= self[i + 1, j + 1]:
                    return False
        return all(x >= 0 for r in self.rows for x in r)


def gt_from_tableau(T: Tableau) -> GTPattern:
    n = T.n
    rows = []
    for j in range(1, n + 1):
        rows.append(tuple(sum(1 for x in T.rows[i - 1] if x <= j) if i <= len(T.rows) else 0
                          for i in range(1, j + 1)))
    return GTPattern(tuple(rows))


def tableau_from_gt(A: GTPattern) -> Tableau:
    n = A.n
    rows = []
    for i in range(1, n + 1):
        row = []
        prev = 0
        for j in range(i, n + 1):
            row += [j] * (A[i, j] - prev)
            prev = A[i, j]
        rows.append(tuple(row))
    return Tableau(tuple(rows), n)


@total_ordering
class _Infinity:
    """Top element of the extended integers."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("inf")

    def __repr__(self):
        return "INF"


INF = _Infinity()


def bk_piecewise_linear(A: GTPattern, r: int) -> GTPattern:
    """Bender-Knuth move on row ``r`` of a pattern, as a piecewise-linear map."""
    n = A.n
    if not 1 <= r <= n - 1:
        raise ValueError(f"row {r} out of range")

    def get(i, j):
        if i == 0:
            return INF
        if i == j + 1:
            return 0
        return A[i, j]

    rows = [list(x) for x in A.rows]
    for i in range(1, r + 1):
        lo = min(get(i - 1, r - 1), get(i, r + 1))
        hi = max(get(i, r - 1), get(i + 1, r + 1))
        rows[r - 1][i - 1] = lo + hi - A[i, r]
    return GTPattern(tuple(map(tuple, rows)))


# ---------------------------------------------------------------------------
# k-rectangles

def rect_indices(n: int, k: int):
    """Index set of a k-rectangle, in row-major order."""
    return [(i, j) for i in range(1, k + 1) for j in range(i, i + n - k)]


@dataclass(frozen=True)
class KRectangle:
    """Integer (or rational, for the geometric analogue) k-rectangle ``(B, L)``."""

    n: int
    k: int
    B: tuple  # values in rect_indices order
    L: int

    @classmethod
    def from_dict(cls, n, k, B: dict, L):
        return cls(n, k, tuple(B[ij] for ij in rect_indices(n, k)), L)

    @cached_property
    def as_dict(self):
        return dict(zip(rect_indices(self.n, self.k), self.B))

    def __getitem__(self, ij):
        i, j = ij
        if j == i - 1:
            return 0
        if j == i + self.n - self.k:
            return self.L
        return self.as_dict[ij]

    def padded(self, i, j):
        """Entry of the associated GT pattern."""
        if j < i:
            return 0
        if j > i + self.n - self.k - 1:
            return self.L
        return self.as_dict[i, j]

    def to_gt(self) -> GTPattern:
        n = self.n
        return GTPattern(tuple(tuple(self.padded(i, j) if i <= self.k else 0 for i in range(1, j + 1))
                               for j in range(1, n + 1)))

    @classmethod
    def from_gt(cls, A: GTPattern, k: int) -> "KRectangle":
        n = A.n
        L = A[1, n] if k else 0
        return cls(n, k, tuple(A[i, j] for i, j in rect_indices(n, k)), L)

    def is_valid(self) -> bool:
        if self.L < 0 or not 0 <= self.k <= self.n:
            return False
        A = self.to_gt()
        if not A.is_valid():
            return False
        # padding must be self-consistent
        return KRectangle.from_gt(A, self.k) == self

    def to_tableau(self) -> Tableau:
        T = tableau_from_gt(self.to_gt())
        return T

    @classmethod
    def from_tableau(cls, T: Tableau, k: int | None = None) -> "KRectangle":
        if not T.is_rectangular():
            raise ValueError("tableau is not rectangular")
        k = len(T.rows) if k is None else k
        if T.rows and len(T.rows) != k:
            raise ValueError("row count differs from k")
        A = gt_from_tableau(T)
        L = len(T.rows[0]) if T.rows else 0
        return cls(T.n, k, tuple(A[i, j] for i, j in rect_indices(T.n, k)), L)

    def to_json(self):
        return {"B": list(self.B), "L": self.L, "n": self.n, "k": self.k}

    @classmethod
    def from_json(cls, obj):
        n, k = int(obj["n"]), int(obj["k"])
        B = [int(x) for x in obj["B"]]
        if len(B) != k * (n - k):
            raise ValueError(f"expected {k * (n - k)} entries in B, got {len(B)}")
        return cls(n, k, tuple(B), int(obj["L"]))


def rot(b: KRectangle) -> KRectangle:
    n, k, L = b.n, b.k, b.L
    return KRectangle.from_dict(n, k, {(i, j): L - b[k - i + 1, n - j] for i, j in rect_indices(n, k)}, L)


def refl(b: KRectangle) -> KRectangle:
    n, k, L = b.n, b.k, b.L
    return KRectangle.from_dict(n, n - k, {(i, j): L - b[j - i + 1, j] for i, j in rect_indices(n, n - k)}, L)


def rect_symmetry(b: KRectangle, which: str) -> KRectangle:
    if which == "rot":
        return rot(b)
    if which == "refl":
        return refl(b)
    raise ValueError("which must be 'rot' or 'refl'")


def _columns(n, k) -> list:
    return list(combinations(range(1, n + 1), k))


def enumerate_tableaux(n: int, k: int, L: int) -> Iterator[Tableau]:
    """All semistandard ``k x L`` tableaux with entries in ``[n]``."""
    if k == 0 or L == 0:
        yield Tableau((), n)
        return
    cols = _columns(n, k)
    le = {c: [d for d in cols if all(x <= y for x, y in zip(c, d))] for c in cols}

    def rec(prefix):
        if len(prefix) == L:
            yield Tableau(tuple(tuple(c[a] for c in prefix) for a in range(k)), n)
            return
        for d in (le[prefix[-1]] if prefix else cols):
            yield from rec(prefix + [d])

    yield from rec([])


def enumerate_rectangles(n: int, k: int, L: int):
    return [KRectangle.from_tableau(T, k) for T in enumerate_tableaux(n, k, L)]
