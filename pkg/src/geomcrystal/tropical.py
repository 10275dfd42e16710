"""Symbolic structure maps on rational k-rectangles and their tropicalization.

Every map here is assembled from Pluecker coordinates of ``theta(X, t)``
(expanded as sums over J-tableaux) and is therefore subtraction free.
Tropicalizing turns it into a piecewise-linear map on integer
k-rectangles, which is compared with the combinatorial crystal on
rectangular tableaux by ``check_trop_theorems``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from .algebra.expr import Expr, eval_rational, eval_tropical, expr_prod, substitute, valuation_probe, var
from .grassmannian import interval, reduce_index
from .parametrization import T_VAR, basic_subset, plucker_expr, xvar
from .tableaux import (
    UNDEFINED,
    KRectangle,
    crystal_op,
    crystal_stats,
    enumerate_rectangles,
    promote,
    rect_indices,
    refl,
    rot,
)

C_VAR = "c"


class NotSubtractionFree(ValueError):
    pass


def chart_vars(n, k):
    return [f"X_{i}_{j}" for i, j in rect_indices(n, k)] + [T_VAR]


@dataclass(eq=False)
class SymbolicMap:
    """Map given by subtraction-free expressions in the chart variables.

    ``k_out`` is the row count of the target chart, or ``None`` for a
    scalar-valued map (a single output).
    """

    name: str
    n: int
    k_in: int
    k_out: int | None
    outputs: list
    params: tuple = ()
    inputs: list = field(init=False)

    def __post_init__(self):
        self.inputs = chart_vars(self.n, self.k_in) + list(self.params)
        allowed = set(self.inputs)
        for e in self.outputs:
            extra = e.variables() - allowed
            if extra:
                raise ValueError(f"{self.name}: unknown variables {sorted(extra)}")
        if self.k_out is not None and len(self.outputs) != len(chart_vars(self.n, self.k_out)):
            raise ValueError(f"{self.name}: wrong number of outputs")

    @property
    def output_names(self):
        return chart_vars(self.n, self.k_out) if self.k_out is not None else [self.name]

    def _env(self, point, params):
        if isinstance(point, dict):
            env = dict(point)
        else:
            env = {f"X_{i}_{j}": v for (i, j), v in zip(rect_indices(point.n, point.k), point.B)}
            env[T_VAR] = point.L
        env.update(params)
        return env

    def rational(self, env):
        return eval_rational(self.outputs, env)

    def tropical(self, env):
        return eval_tropical(self.outputs, env)

    def probe(self, env):
        return valuation_probe(self.outputs, env)


def compose(A: SymbolicMap, B: SymbolicMap, name=None) -> SymbolicMap:
    """``A o B``; ``B`` must map into the chart of ``A``."""
    if B.k_out != A.k_in or A.n != B.n:
        raise ValueError("charts do not match")
    mapping = dict(zip(chart_vars(B.n, B.k_out), B.outputs))
    outs = substitute(A.outputs, mapping)
    return SymbolicMap(name or f"{A.name}o{B.name}", A.n, B.k_in, A.k_out, outs,
                       tuple(sorted(set(A.params) | set(B.params))))


# ---------------------------------------------------------------------------
# building blocks

def _P(n, k, J):
    """Pluecker coordinate of ``Gr(n-k, n)`` on the chart of k-rectangles."""
    r = n - k
    key = tuple(sorted({reduce_index(j, n) for j in J}))
    if len(key) != r:
        return None
    return plucker_expr(n, k, key)


def _nz(n, k, J):
    e = _P(n, k, J)
    if e is None:
        raise NotSubtractionFree(f"P_{J} vanishes identically")
    return e


def _tpow(m):
    t = var(T_VAR)
    if m == 0:
        return None
    return t ** m


def _times(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a * b


def _from_basic(n, k_out, basic):
    """Chart coordinates from basic Pluecker coordinates (given up to a common
    factor) of a point of ``Gr(n - k_out, n)``."""
    r = n - k_out
    outs = []
    for i, j in rect_indices(n, k_out):
        outs.append(basic(tuple(basic_subset(n, r, i, j))) / basic(tuple(basic_subset(n, r, i + 1, j))))
    outs.append(var(T_VAR))
    return outs


# ---------------------------------------------------------------------------
# the maps

def _pr(n, k, inverse=False):
    def basic(J):
        if not inverse:
            return _times(_tpow(1) if 1 in J else None, _nz(n, k, [j - 1 for j in J]))
        return _times(_tpow(-1) if n in J else None, _nz(n, k, [j + 1 for j in J]))
    return SymbolicMap("PRinv" if inverse else "PR", n, k, k, _from_basic(n, k, basic))


def _ratio_map(name, n, k, nums, dens, tpow=0):
    num = expr_prod([_nz(n, k, J) for J in nums])
    den = expr_prod([_nz(n, k, J) for J in dens])
    e = num / den
    if tpow:
        e = e * _tpow(tpow) if tpow > 0 else e / _tpow(-tpow)
    return SymbolicMap(name, n, k, None, [e])


def _gamma(n, k, i):
    r = n - k
    return _ratio_map(f"gamma_{i}", n, k, [interval(i - r + 1, i)], [interval(i - r, i - 1)],
                      1 if i > r else 0)


def _phi(n, k, i):
    r = n - k
    i %= n
    return _ratio_map(f"phi_{i}", n, k, [interval(i - r + 1, i - 1) + [i + 1]],
                      [interval(i - r + 1, i)], -1 if i == 0 else 0)


def _eps(n, k, i):
    r = n - k
    i %= n
    return _ratio_map(f"eps_{i}", n, k,
                      [interval(i - r + 1, i - 1) + [i + 1], interval(i - r + 1, i)],
                      [interval(i - r, i - 1), interval(i - r + 2, i + 1)],
                      -1 if i == r % n else 0)


def _decoration(n, k):
    r = n - k
    terms = []
    for i in range(1, n + 1):
        if i == r:
            continue
        terms.append(_nz(n, k, [i - r] + interval(i - r + 2, i)) / _nz(n, k, interval(i - r + 1, i)))
    terms.append(var(T_VAR) * _nz(n, k, interval(2, r) + [n]) / _nz(n, k, interval(1, r)))
    from .algebra.expr import expr_sum
    return SymbolicMap("f", n, k, None, [expr_sum(terms)])


def _e1(n, k):
    """``e_1^c`` through its effect on basic Pluecker coordinates.

    ``x_1(a)`` adds ``a`` times row 2 to row 1, so only subsets containing 1
    but not 2 change: ``P_J -> P_J + a P_{J-1+2}``.  With ``a = (c-1)/phi_1``
    each such basic subset must be the denominator of ``phi_1`` and its
    partner the numerator; then the new value is ``c P_J``.
    """
    r = n - k
    num_set = tuple(sorted({reduce_index(j, n) for j in interval(2 - r, 0) + [2]}))
    den_set = tuple(sorted({reduce_index(j, n) for j in interval(2 - r, 1)}))
    c = var(C_VAR)

    def basic(J):
        J = tuple(sorted(J))
        base = _nz(n, k, J)
        if 1 in J and 2 not in J:
            partner = tuple(sorted(set(J) - {1} | {2}))
            if J != den_set or partner != num_set:
                raise NotSubtractionFree(f"update of P_{J} is not a monomial rescaling")
            return c * base
        return base

    return SymbolicMap("e1", n, k, k, _from_basic(n, k, basic), (C_VAR,))


def schuetzenberger_basic(n, r, pl, J):
    """Basic Pluecker coordinate ``P_J`` (``J = J_{i,j}`` of ``Gr(r, n)``) of the
    Schuetzenberger image, up to a common factor, from coordinates ``pl`` of
    the original point."""
    J = tuple(sorted(J))
    for i in range(1, n - r + 2):
        for j in range(i - 1, i + r):
            if tuple(basic_subset(n, r, i, j)) == J:
                m = min(j, n - r) - i + 1
                num = pl(basic_subset(n, r, n - r - i + 2, n - j))
                den = pl(interval(n - j - r + 1, n - j))
                return num, den, m
    raise ValueError(f"{J} is not a basic subset")


def _S(n, k):
    r = n - k

    def basic(J):
        num, den, m = schuetzenberger_basic(n, r, lambda I: _nz(n, k, I), J)
        return _times(_tpow(m), num / den)

    return SymbolicMap("S", n, k, k, _from_basic(n, k, basic))


def _D(n, k):
    """Duality: Schuetzenberger involution applied to the reversed orthogonal
    complement.  Pluecker coordinates of the latter are complementary
    reversed coordinates of the original point."""
    r = n - k  # original subspace dimension; the image has dimension k

    def pl_N(I):
        w0 = {n + 1 - reduce_index(j, n) for j in I}
        if len(w0) != k:
            raise NotSubtractionFree("degenerate subset")
        return _nz(n, k, sorted(set(range(1, n + 1)) - w0))

    def basic(J):
        num, den, m = schuetzenberger_basic(n, k, pl_N, J)
        return _times(_tpow(m), num / den)

    return SymbolicMap("D", n, k, r, _from_basic(n, r, basic))


@lru_cache(maxsize=None)
def build_symbolic(map_id: str, n: int, k: int, i: int | None = None) -> SymbolicMap:
    """Symbolic map on the chart of k-rectangles (``Gr(n-k, n)``).

    ``map_id`` is one of ``PR, PRinv, gamma, phi, eps, f, e1, S, D`` and the
    conjugated lowering family ``e`` (requires ``i``).
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    if map_id == "PR":
        return _pr(n, k)
    if map_id == "PRinv":
        return _pr(n, k, inverse=True)
    if map_id == "gamma":
        return _gamma(n, k, i)
    if map_id == "phi":
        return _phi(n, k, i)
    if map_id == "eps":
        return _eps(n, k, i)
    if map_id == "f":
        return _decoration(n, k)
    if map_id == "e1":
        return _e1(n, k)
    if map_id == "e":
        return conjugated_e(n, k, i)
    if map_id == "S":
        return _S(n, k)
    if map_id == "D":
        return _D(n, k)
    raise ValueError(f"unknown map {map_id!r}")


def _shift_power(i, n):
    """Power ``m`` with ``e_i = PR^m o e_1 o PR^-m`` (smallest representative)."""
    m = (i - 1) % n
    return m - n if m > n // 2 else m


def conjugated_e(n, k, i) -> SymbolicMap:
    """``e_i^c`` by substituting into ``e_1``; slower than conjugating
    tropically but useful as a cross-check."""
    m = _shift_power(i, n)
    fwd, back = (build_symbolic("PR", n, k), build_symbolic("PRinv", n, k))
    if m < 0:
        fwd, back = back, fwd
    out = build_symbolic("e1", n, k)
    for _ in range(abs(m)):
        out = compose(fwd, compose(out, back))
    return SymbolicMap(f"e{i % n}", n, k, k, out.outputs, (C_VAR,))


# ---------------------------------------------------------------------------
# tropical evaluation on integer rectangles

def rect_env(rects, n, k):
    """Column arrays for a batch of integer k-rectangles."""
    arr = np.array([list(b.B) + [b.L] for b in rects], dtype=np.int64).reshape(len(rects), -1)
    names = chart_vars(n, k)
    return {nm: arr[:, a] for a, nm in enumerate(names)}


def env_to_rects(outs, n, k):
    cols = [np.asarray(o) for o in outs]
    size = max(c.size for c in cols)
    cols = [np.broadcast_to(c, (size,)) for c in cols]
    return [KRectangle(n, k, tuple(int(c[a]) for c in cols[:-1]), int(cols[-1][a])) for a in range(size)]


def trop_env_apply(m: SymbolicMap, env):
    return m.tropical(env)


def trop_apply(m: SymbolicMap, b: KRectangle, **params):
    """Tropicalization of ``m`` at one integer rectangle."""
    if (b.n, b.k) != (m.n, m.k_in):
        raise ValueError("rectangle does not lie in the source chart")
    env = m._env(b, params)
    out = m.tropical(env)
    if m.k_out is None:
        return int(out[0])
    return KRectangle(m.n, m.k_out, tuple(int(x) for x in out[:-1]), int(out[-1]))


def trop_e(n, k, i, env, mval):
    """Tropical ``e_i`` with parameter ``mval`` via conjugation by the tropical
    cyclic shift."""
    m = _shift_power(i, n)
    fwd, back = build_symbolic("PR", n, k), build_symbolic("PRinv", n, k)
    if m < 0:
        fwd, back = back, fwd
    names = chart_vars(n, k)
    cur = dict(env)
    for _ in range(abs(m)):
        cur = dict(zip(names, back.tropical(cur)))
    cur[C_VAR] = mval
    cur = dict(zip(names, build_symbolic("e1", n, k).tropical(cur)))
    for _ in range(abs(m)):
        cur = dict(zip(names, fwd.tropical(cur)))
    return [cur[nm] for nm in names]


def is_rectangle_array(env, n, k):
    """Vectorized test that integer points of the chart are k-rectangles."""
    L = env[T_VAR]

    def A(i, j):
        if j < i or i > k:
            return 0
        if j > i + n - k - 1:
            return L
        return env[f"X_{i}_{j}"]

    ok = np.asarray(L) >= 0
    for j in range(1, n):
        for i in range(1, j + 1):
            ok = ok & (np.asarray(A(i, j + 1)) >= A(i, j)) & (np.asarray(A(i, j)) >= A(i + 1, j + 1))
    return ok


# ---------------------------------------------------------------------------
# theorem checks

def _record(check, params, ok, counterexample=None, elapsed=None):
    rec = {"check": check, "parameters": params, "status": "pass" if ok else "fail"}
    if not ok:
        rec["counterexample"] = counterexample
    if elapsed is not None:
        rec["elapsed_ms"] = elapsed
    return rec


def _rect_list(n, k, L_max):
    out = []
    for L in range(L_max + 1):
        out += enumerate_rectangles(n, k, L)
    return out


def _combinatorial_e(b: KRectangle, i, direction):
    T = crystal_op(b.to_tableau(), i, direction)
    return UNDEFINED if T is UNDEFINED else KRectangle.from_tableau(T, b.k)


def check_cyclic_shift(n, k, L_max):
    rects = _rect_list(n, k, L_max)
    env = rect_env(rects, n, k)
    got = env_to_rects(build_symbolic("PR", n, k).tropical(env), n, k)
    for b, g in zip(rects, got):
        expect = KRectangle.from_tableau(promote(b.to_tableau()), k)
        if g != expect:
            return _record("trop_PR_is_promotion", {"n": n, "k": k}, False,
                           {"b": b.to_json(), "got": g.to_json(), "expected": expect.to_json()})
    return _record("trop_PR_is_promotion", {"n": n, "k": k, "L_max": L_max, "count": len(rects)}, True)


def check_weight_maps(n, k, L_max):
    """Tropical weight equals content; tropical phi/eps are minus the
    combinatorial ones."""
    rects = _rect_list(n, k, L_max)
    env = rect_env(rects, n, k)
    out = []
    for name in ("gamma", "phi", "eps"):
        bad = None
        for i in range(n) if name != "gamma" else range(1, n + 1):
            vals = build_symbolic(name, n, k, i).tropical(env)[0]
            for b, v in zip(rects, np.broadcast_to(vals, (len(rects),))):
                T = b.to_tableau()
                if name == "gamma":
                    expect = T.content()[i - 1]
                else:
                    ep, ph = crystal_stats(T, i)
                    expect = -(ph if name == "phi" else ep)
                if int(v) != expect:
                    bad = {"b": b.to_json(), "i": i, "got": int(v), "expected": expect}
                    break
            if bad:
                break
        out.append(_record(f"trop_{name}", {"n": n, "k": k, "L_max": L_max}, bad is None, bad))
    return out


def check_raising_lowering(n, k, L_max):
    """Tropical ``e_i(+1, b)`` / ``e_i(-1, b)`` against the crystal
    operators, with definedness read off from the tropical decoration."""
    rects = _rect_list(n, k, L_max)
    env = rect_env(rects, n, k)
    fmap = build_symbolic("f", n, k)
    names = chart_vars(n, k)
    out = []
    for mval, direction in ((1, "e"), (-1, "f")):
        bad = None
        for i in range(n):
            res = trop_e(n, k, i, env, mval)
            fval = np.broadcast_to(fmap.tropical(dict(zip(names, res)))[0], (len(rects),))
            imgs = env_to_rects(res, n, k)
            for a, b in enumerate(rects):
                expect = _combinatorial_e(b, i, direction)
                defined = bool(fval[a] >= 0)
                if defined != (expect is not UNDEFINED) or (defined and imgs[a] != expect):
                    bad = {"b": b.to_json(), "i": i, "m": mval, "trop_f": int(fval[a]),
                           "got": imgs[a].to_json(),
                           "expected": None if expect is UNDEFINED else expect.to_json()}
                    break
            if bad:
                break
        out.append(_record(f"trop_{direction}_i", {"n": n, "k": k, "L_max": L_max}, bad is None, bad))
    return out


def check_decoration_box(n, k, L_max, pad=2):
    """Tropical decoration is nonnegative exactly on k-rectangles, tested on
    every integer point of a box around the rectangles."""
    fmap = build_symbolic("f", n, k)
    names = chart_vars(n, k)
    d = len(names) - 1
    for L in range(L_max + 1):
        grid = np.array(list(product(range(-pad, L + pad + 1), repeat=d)), dtype=np.int64).reshape(-1, d)
        env = {nm: grid[:, a] for a, nm in enumerate(names[:-1])}
        env[T_VAR] = np.full(len(grid), L, dtype=np.int64)
        fv = np.broadcast_to(fmap.tropical(env)[0], (len(grid),))
        valid = is_rectangle_array(env, n, k)
        mism = np.nonzero((fv >= 0) != valid)[0]
        if mism.size:
            a = int(mism[0])
            return _record("trop_f_cuts_out_rectangles", {"n": n, "k": k, "L": L}, False,
                           {"point": [int(x) for x in grid[a]], "L": L, "trop_f": int(fv[a]),
                            "is_rectangle": bool(valid[a])})
    return _record("trop_f_cuts_out_rectangles", {"n": n, "k": k, "L_max": L_max, "pad": pad}, True)


def check_symmetries(n, k, L_max):
    rects = _rect_list(n, k, L_max)
    env = rect_env(rects, n, k)
    out = []
    for name, comb, k_out in (("S", rot, k), ("D", refl, n - k)):
        got = env_to_rects(build_symbolic(name, n, k).tropical(env), n, k_out)
        bad = None
        for b, g in zip(rects, got):
            if g != comb(b):
                bad = {"b": b.to_json(), "got": g.to_json(), "expected": comb(b).to_json()}
                break
        out.append(_record(f"trop_{name}", {"n": n, "k": k, "L_max": L_max}, bad is None, bad))
    return out


def check_conjugation_spot(n=4, k=2, i=2, L_max=3):
    """Tropical conjugation of ``e_1`` agrees with substituting symbolically."""
    rects = _rect_list(n, k, L_max)
    env = rect_env(rects, n, k)
    sym = conjugated_e(n, k, i)
    bad = None
    for mval in (1, -1, 2):
        a = trop_e(n, k, i, env, mval)
        e2 = dict(env)
        e2[C_VAR] = mval
        b = sym.tropical(e2)
        if not all(np.array_equal(np.broadcast_to(x, (len(rects),)), np.broadcast_to(y, (len(rects),)))
                   for x, y in zip(a, b)):
            bad = {"m": mval}
    return _record("trop_conjugation_matches_substitution", {"n": n, "k": k, "i": i}, bad is None, bad)


def check_trop_theorems(n, k, L_max, timing=False):
    """All tropical checks for one ``(n, k)``; a list of report records."""
    out = []
    for fn in (check_cyclic_shift, check_weight_maps, check_raising_lowering,
               check_decoration_box, check_symmetries):
        t0 = time.perf_counter()
        res = fn(n, k, L_max)
        res = res if isinstance(res, list) else [res]
        if timing:
            ms = round((time.perf_counter() - t0) * 1000, 3)
            for r in res:
                r["elapsed_ms"] = ms
        out += res
    return out
