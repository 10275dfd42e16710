"""Verification suites.

Each check is a function ``(n, k, cfg, rng) -> (ok, counterexample, extra)``
registered under a suite name.  ``run_suites`` runs every registered check
for every ``(n, k)`` in the configuration and returns sorted report records.
Randomness comes from per-check substreams derived from the seed, so a
report depends only on its configuration.
"""
from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import grassmannian as gr
from . import loopgroup as lg
from . import parametrization as pm
from . import tableaux as tb
from . import tropical as tp
from .algebra.expr import DomainError, eval_rational, eval_tropical, random_expr, valuation_probe
from .algebra.linalg import det, minor

SCHEMA = "geomcrystal/1"
SUITES = ("combinatorial", "geometric", "parametrization", "tropical", "loopgroup", "symmetry")


@dataclass
class Config:
    n_values: tuple = (2, 3, 4, 5)
    k_values: tuple | None = None  # None means every 1 <= k <= n-1
    L_max: int = 3
    trials: int = 50
    seed: int = 0
    suites: tuple = SUITES
    timing: bool = False
    jobs: int = 1

    def pairs(self):
        for n in self.n_values:
            for k in range(1, n):
                if self.k_values is None or k in self.k_values:
                    yield n, k


def substream(seed, *names) -> random.Random:
    """Independent deterministic generator for one check."""
    h = hashlib.blake2b(repr((seed,) + names).encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(h, "big"))


_REGISTRY: dict = {s: [] for s in SUITES}


def check(suite, check_id, anchor, min_n=2):
    def deco(fn):
        _REGISTRY[suite].append((check_id, anchor, fn, min_n))
        return fn
    return deco


def _fmt(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, tb.Tableau):
        return [list(r) for r in x.rows]
    if isinstance(x, tb.KRectangle):
        return x.to_json()
    if isinstance(x, gr.CrystalPoint):
        return {"M": [[str(v) for v in r] for r in x.M.matrix], "t": str(x.t)}
    if isinstance(x, (list, tuple)):
        return [_fmt(v) for v in x]
    if isinstance(x, dict):
        return {str(a): _fmt(b) for a, b in x.items()}
    if isinstance(x, (np.integer,)):
        return int(x)
    return x


# ---------------------------------------------------------------------------
# combinatorial

def _tableaux(n, k, L_max):
    out = []
    for L in range(L_max + 1):
        out += list(tb.enumerate_tableaux(n, k, L))
    return out


@check("combinatorial", "promotion_order", "promotion has order n on rectangular tableaux")
def _c_pr_order(n, k, cfg, rng):
    for T in _tableaux(n, k, cfg.L_max):
        U = T
        for _ in range(n):
            U = tb.promote(U)
        if U != T:
            return False, {"T": T}, {}
    return True, None, {}


@check("combinatorial", "crystal_axioms", "rectangular tableaux form an affine crystal")
def _c_axioms(n, k, cfg, rng):
    for T in _tableaux(n, k, cfg.L_max):
        wt = T.content()
        for i in range(n):
            ep, ph = tb.crystal_stats(T, i)
            root = tb.weight_root(n, i if i else n)
            if ph - ep != wt[(i - 1) % n] - wt[i % n]:
                return False, {"T": T, "i": i, "why": "phi - eps"}, {}
            E, F = tb.e(T, i), tb.f(T, i)
            if (E is tb.UNDEFINED) != (ep == 0) or (F is tb.UNDEFINED) != (ph == 0):
                return False, {"T": T, "i": i, "why": "definedness"}, {}
            if E is not tb.UNDEFINED:
                if tb.f(E, i) != T or tb.crystal_stats(E, i) != (ep - 1, ph + 1):
                    return False, {"T": T, "i": i, "why": "e"}, {}
                if tuple(a - b for a, b in zip(E.content(), wt)) != root:
                    return False, {"T": T, "i": i, "why": "weight of e"}, {}
            if F is not tb.UNDEFINED:
                if tb.e(F, i) != T or tb.crystal_stats(F, i) != (ep + 1, ph - 1):
                    return False, {"T": T, "i": i, "why": "f"}, {}
    return True, None, {}


@check("combinatorial", "evacuation_is_rotation", "evacuation of a rectangle is rotation")
def _c_evac(n, k, cfg, rng):
    for T in _tableaux(n, k, cfg.L_max):
        R = tb.rotate_tableau(T) if T.rows else T
        if tb.evacuate(T) != R:
            return False, {"T": T}, {}
        b = tb.KRectangle.from_tableau(T, k)
        if tb.rot(b) != tb.KRectangle.from_tableau(R, k):
            return False, {"T": T, "why": "rot"}, {}
    return True, None, {}


@check("combinatorial", "reflection_is_column_complement", "refl complements columns")
def _c_refl(n, k, cfg, rng):
    for L in range(cfg.L_max + 1):
        for T in tb.enumerate_tableaux(n, k, L):
            b = tb.KRectangle.from_tableau(T, k)
            if tb.refl(b).to_tableau() != tb.complement_tableau(T, k, L):
                return False, {"T": T}, {}
    return True, None, {}


@check("combinatorial", "promotion_shifts_operators", "promotion conjugates e_{i+1} to e_i")
def _c_pr_conj(n, k, cfg, rng):
    for T in _tableaux(n, k, cfg.L_max):
        P = tb.promote(T)
        for i in range(n):
            for d in "ef":
                lhs = tb.crystal_op(P, (i + 1) % n, d)
                rhs = tb.crystal_op(T, i, d)
                rhs = rhs if rhs is tb.UNDEFINED else tb.promote(rhs)
                if lhs != rhs:
                    return False, {"T": T, "i": i, "op": d}, {}
    return True, None, {}


@check("combinatorial", "bender_knuth_piecewise_linear", "Bender-Knuth moves on patterns")
def _c_bk(n, k, cfg, rng):
    for T in _tableaux(n, k, cfg.L_max):
        A = tb.gt_from_tableau(T)
        for r in range(1, n):
            B = tb.bender_knuth(T, r)
            if tb.gt_from_tableau(B) != tb.bk_piecewise_linear(A, r) or tb.bender_knuth(B, r) != T:
                return False, {"T": T, "r": r}, {}
    return True, None, {}


@check("combinatorial", "rotation_and_reflection_twist_operators",
       "rot and refl intertwine e_i with f_{n-i} and f_i")
def _c_sym_ops(n, k, cfg, rng):
    for L in range(cfg.L_max + 1):
        for b in tb.enumerate_rectangles(n, k, L):
            for i in range(n):
                lhs = tp._combinatorial_e(b, i, "e")
                a = tp._combinatorial_e(tb.rot(b), (n - i) % n, "f")
                via_rot = a if a is tb.UNDEFINED else tb.rot(a)
                c = tp._combinatorial_e(tb.refl(b), i, "f")
                via_refl = c if c is tb.UNDEFINED else tb.refl(c)
                if lhs != via_rot or lhs != via_refl:
                    return False, {"b": b, "i": i}, {}
    return True, None, {}


# ---------------------------------------------------------------------------
# geometric

def _points(n, k, rng, trials, positive_every=2):
    """Mix of integer-entry points and totally positive points."""
    for a in range(trials):
        if a % positive_every:
            yield pm.theta(pm.RationalRectangle.random(n, n - k, rng))
        else:
            yield gr.random_point(n, k, rng)


def _over_points(n, k, cfg, rng, fn):
    """Run ``fn(p)`` on sample points; points where a needed coordinate
    vanishes are replaced by fresh ones."""
    done = skipped = 0
    gen = _points(n, k, rng, 10 ** 9)
    while done < cfg.trials:
        p = next(gen)
        try:
            bad = fn(p)
        except DomainError:
            skipped += 1
            if skipped > 10 * cfg.trials:
                return False, {"why": "too many undefined samples"}, {}
            continue
        if bad:
            return False, _fmt(bad), {}
        done += 1
    return True, None, {"trials": done}


@check("geometric", "plucker_relations", "Grassmann-Pluecker relations")
def _g_plucker(n, k, cfg, rng):
    def fn(p):
        M = p.M
        for a, b, c, d in combinations(range(1, n + 1), 4):
            for I in combinations([x for x in range(1, n + 1) if x not in (a, b, c, d)], k - 2) if k >= 2 else ():
                if not gr.three_term_check(M, I, a, b, c, d):
                    return {"I": I, "abcd": (a, b, c, d)}
        I = rng.sample(range(1, n + 1), min(k + 1, n)) if k + 1 <= n else None
        if I is not None:
            J = rng.sample(range(1, n + 1), k - 1)
            if not gr.plucker_relation_check(M, I, J):
                return {"I": I, "J": J}
        return None
    return _over_points(n, k, cfg, rng, fn)


@check("geometric", "crystal_axioms", "axioms of an affine geometric crystal")
def _g_axioms(n, k, cfg, rng):
    def fn(p):
        g = gr.gamma(p)
        for i in range(n):
            if gr.eps(p, i) != gr.phi(p, i) * gr.alpha(g, i):
                return {"p": p, "i": i, "why": "eps = phi * alpha"}
            c = gr.random_c(rng)
            q = gr.apply_ei(p, i, c)
            exp = list(g)
            exp[(i - 1) % n] *= c
            exp[i % n] /= c
            if list(gr.gamma(q)) != exp:
                return {"p": p, "i": i, "c": c, "why": "gamma"}
            if gr.phi(q, i) != gr.phi(p, i) / c or gr.eps(q, i) != gr.eps(p, i) * c:
                return {"p": p, "i": i, "c": c, "why": "phi/eps"}
            c2 = gr.random_c(rng)
            if not gr.apply_ei(q, i, c2).same(gr.apply_ei(p, i, c * c2)):
                return {"p": p, "i": i, "why": "one-parameter action"}
            if not gr.apply_ei(p, i, 1).same(p):
                return {"p": p, "i": i, "why": "identity"}
        return None
    return _over_points(n, k, cfg, rng, fn)


@check("geometric", "serre_relations", "Verma relations of the affine geometric crystal", min_n=3)
def _g_serre(n, k, cfg, rng):
    E = gr.apply_ei

    def fn(p):
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                c1, c2 = gr.random_c(rng), gr.random_c(rng)
                d = min((i - j) % n, (j - i) % n)
                if d > 1:
                    if not E(E(p, j, c2), i, c1).same(E(E(p, i, c1), j, c2)):
                        return {"p": p, "i": i, "j": j, "why": "commute"}
                elif n > 2:
                    lhs = E(E(E(p, i, c2), j, c1 * c2), i, c1)
                    rhs = E(E(E(p, j, c1), i, c1 * c2), j, c2)
                    if not lhs.same(rhs):
                        return {"p": p, "i": i, "j": j, "why": "braid"}
        return None
    return _over_points(n, k, cfg, rng, fn)


@check("geometric", "decoration", "decoration transforms under e_i")
def _g_decoration(n, k, cfg, rng):
    def fn(p):
        f0 = gr.decoration(p)
        for i in range(n):
            c = gr.random_c(rng)
            exp = f0 + (c - 1) / gr.phi(p, i) + (1 / c - 1) / gr.eps(p, i)
            if gr.decoration(gr.apply_ei(p, i, c)) != exp:
                return {"p": p, "i": i, "c": c}
        return None
    return _over_points(n, k, cfg, rng, fn)


@check("geometric", "cyclic_shift", "twisted cyclic shift rotates the Dynkin diagram")
def _g_pr(n, k, cfg, rng):
    def fn(p):
        q = gr.cyclic_shift(p)
        if not gr.cyclic_shift(q, inverse=True).same(p):
            return {"p": p, "why": "inverse"}
        Pq = q.M.plucker_vector()
        for J in Pq:
            expect = p.P([j - 1 for j in J]) * (p.t if 1 in J else 1)
            if Pq[J] != expect:
                return {"p": p, "J": J, "why": "Pluecker transform"}
        g, gq = gr.gamma(p), gr.gamma(q)
        if gq != (g[-1],) + g[:-1]:
            return {"p": p, "why": "gamma"}
        if gr.decoration(q) != gr.decoration(p):
            return {"p": p, "why": "f"}
        for i in range(n):
            if gr.phi(q, i) != gr.phi(p, i - 1) or gr.eps(q, i) != gr.eps(p, i - 1):
                return {"p": p, "i": i, "why": "phi/eps"}
            c = gr.random_c(rng)
            if not gr.cyclic_shift(gr.apply_ei(q, i, c), inverse=True).same(gr.apply_ei(p, i - 1, c)):
                return {"p": p, "i": i, "why": "e conjugation"}
        for i in range(n):
            a = Fraction(rng.randint(1, 7), rng.randint(1, 3))
            q = gr.cyclic_shift(p)
            moved = gr.CrystalPoint(gr.GrassmannPoint(gr.act_x(q.M.matrix, n, i, a)), q.t)
            lhs = gr.cyclic_shift(moved, inverse=True)
            s = (-1) ** (k - 1)
            j, b = ((i - 1) % n, a)
            if i == 1:
                b = s * a / p.t
            elif i == 0:
                b = s * p.t * a
            rhs = gr.CrystalPoint(gr.GrassmannPoint(gr.act_x(p.M.matrix, n, j, b)), p.t)
            if not lhs.same(rhs):
                return {"p": p, "i": i, "why": "generator conjugation"}
        return None
    return _over_points(n, k, cfg, rng, fn)


# ---------------------------------------------------------------------------
# parametrization

@check("parametrization", "jtableaux_expand_pluckers", "Pluecker coordinates as sums over J-tableaux")
def _p_jtab(n, k, cfg, rng):
    m = n - k  # rectangle rows; theta lands in Gr(k, n)
    for _ in range(cfg.trials):
        R = pm.RationalRectangle.random(n, m, rng)
        p = pm.theta(R)
        for J in combinations(range(1, n + 1), k):
            if p.P(J) != pm.plucker_via_jtableaux(R, J):
                return False, {"R": _fmt(R.X), "J": J}, {}
            e = pm.plucker_expr(n, m, J)
            if eval_rational(e, R.env()) != p.P(J):
                return False, {"R": _fmt(R.X), "J": J, "why": "expression"}, {}
    return True, None, {"trials": cfg.trials}


@check("parametrization", "theta_roundtrip", "theta and its inverse are mutually inverse")
def _p_roundtrip(n, k, cfg, rng):
    m = n - k
    for _ in range(cfg.trials):
        R = pm.RationalRectangle.random(n, m, rng)
        if pm.theta_inverse(pm.theta(R)) != R:
            return False, {"R": _fmt(R.X)}, {}
    done = 0
    while done < cfg.trials:
        p = gr.random_point(n, k, rng)
        try:
            R = pm.theta_inverse(p)
        except DomainError:
            continue
        if not pm.theta(R).same(p):
            return False, {"p": _fmt(p)}, {}
        done += 1
    return True, None, {"trials": cfg.trials}


@check("parametrization", "basic_pluckers_are_monomials", "basic Pluecker coordinates are monomials")
def _p_basic(n, k, cfg, rng):
    m = n - k
    for _ in range(cfg.trials):
        R = pm.RationalRectangle.random(n, m, rng)
        p = pm.theta(R)
        for i in range(1, m + 1):
            for j in range(i, i + k):
                J = pm.basic_subset(n, k, i, j)
                prod = Fraction(1)
                for a in range(i, min(j, m) + 1):
                    prod *= R[a, j]
                if p.P(J) != prod:
                    return False, {"R": _fmt(R.X), "J": J}, {}
    return True, None, {"trials": cfg.trials}


@check("parametrization", "network_matrix", "planar network represents theta")
def _p_network(n, k, cfg, rng):
    m = n - k
    for _ in range(max(1, cfg.trials // 10)):
        R = pm.RationalRectangle.random(n, m, rng)
        N = pm.network_for(R)
        A = N.path_matrix()
        if [list(r) for r in pm.theta(R).M.matrix] != [[Fraction(x) for x in r] for r in A]:
            return False, {"R": _fmt(R.X)}, {}
        for J in combinations(range(1, n + 1), k):
            if pm.lindstrom_minor(N, J, range(1, k + 1)) != det([A[j - 1] for j in J]):
                return False, {"R": _fmt(R.X), "J": J, "why": "Lindstrom"}, {}
    return True, None, {}


@check("parametrization", "diagonal_form", "diagonal form via Pluecker ratios")
def _p_diag(n, k, cfg, rng):
    def fn(p):
        D = pm.diagonal_form(p.M)
        for i in range(1, n + 1):
            for j in range(1, k + 1):
                num = p.P(gr.interval(j - k + 1, j - 1) + [i])
                if D[i - 1][j - 1] != num / p.M.nonzero_plucker(gr.interval(j - k, j - 1)):
                    return {"p": p, "ij": (i, j)}
        if not gr.GrassmannPoint(D).same_span(p.M):
            return {"p": p, "why": "span"}
        return None
    return _over_points(n, k, cfg, rng, fn)


@check("parametrization", "geometric_promotion", "rational Bender-Knuth moves lift promotion")
def _p_geom_pr(n, k, cfg, rng):
    m = n - k
    for _ in range(cfg.trials):
        R = pm.RationalRectangle.random(n, m, rng)
        if pm.geometric_pr(R) != pm.theta_inverse(gr.cyclic_shift(pm.theta(R))):
            return False, {"R": _fmt(R.X)}, {}
        if pm.decoration_closed_form(R) != gr.decoration(pm.theta(R)):
            return False, {"R": _fmt(R.X), "why": "decoration formula"}, {}
    # tropical Bender-Knuth moves
    S = pm.RationalRectangle.symbolic(n, m)
    names = tp.chart_vars(n, m)
    rects = tp._rect_list(n, m, cfg.L_max)
    env = tp.rect_env(rects, n, m)
    for r in range(1, n):
        B = pm.geometric_bk(S, r)
        outs = eval_tropical([B.X[ij] for ij in tb.rect_indices(n, m)], env)
        got = tp.env_to_rects(list(outs) + [env["t"]], n, m)
        for b, g in zip(rects, got):
            expect = tb.KRectangle.from_gt(tb.bk_piecewise_linear(b.to_gt(), r), m)
            if g != expect:
                return False, {"b": b, "r": r, "why": "tropical move"}, {}
    return True, None, {"trials": cfg.trials}


# ---------------------------------------------------------------------------
# tropical

def _trop_records(n, k, cfg):
    return tp.check_trop_theorems(n, k, cfg.L_max)


@check("tropical", "probe_agrees_with_tropicalization", "valuations tropicalize subtraction-free maps")
def _t_probe(n, k, cfg, rng):
    m = n - k
    maps = [tp.build_symbolic(x, n, m) for x in ("PR", "PRinv", "f", "e1", "S", "D")]
    maps += [tp.build_symbolic(x, n, m, i) for x in ("gamma", "phi", "eps") for i in range(n)]
    for mp in maps:
        for _ in range(cfg.trials):
            env = {v: rng.randint(-10, 10) for v in mp.inputs}
            if mp.tropical(env) != mp.probe(env):
                return False, {"map": mp.name, "env": env}, {}
    for _ in range(max(cfg.trials, 10)):
        e = random_expr(rng, depth=rng.randint(1, 8), leaf_bias=0.15)
        env = {v: rng.randint(-10, 10) for v in "abcdef"}
        if eval_tropical(e, env) != valuation_probe(e, env):
            return False, {"expr": str(e), "env": env}, {}
    return True, None, {"points": cfg.trials}


@check("tropical", "one_row_formulas", "cyclic shift and e_i on one-row rectangles")
def _t_one_row(n, k, cfg, rng):
    if k != n - 1:
        return True, None, {"skipped": "only for one-row rectangles"}
    PR, E1 = tp.build_symbolic("PR", n, 1), tp.build_symbolic("e1", n, 1)

    def xs(vals, t):
        X = [Fraction(1)] + list(vals) + [t]
        return [X[j] / X[j - 1] for j in range(1, n + 1)]

    for _ in range(cfg.trials):
        R = pm.RationalRectangle.random(n, 1, rng)
        env = R.env()
        x = xs(R.values(), R.t)
        y = xs(*(lambda o: (o[:-1], o[-1]))(PR.rational(env)))
        if y != [x[-1]] + x[:-1]:
            return False, {"R": _fmt(R.X), "why": "PR"}, {}
        c = gr.random_c(rng)
        env["c"] = c
        y = xs(*(lambda o: (o[:-1], o[-1]))(E1.rational(env)))
        if y != [x[0] * c, x[1] / c] + x[2:]:
            return False, {"R": _fmt(R.X), "why": "e1"}, {}
        phi0 = tp.build_symbolic("phi", n, 1, 0).rational(R.env())[0]
        if phi0 * R.t != np.prod(x[:-1], dtype=object):
            return False, {"R": _fmt(R.X), "why": "phi_0"}, {}
    return True, None, {}


@check("tropical", "conjugation_matches_substitution", "tropical conjugation of e_1", min_n=3)
def _t_conj(n, k, cfg, rng):
    rec = tp.check_conjugation_spot(n, n - k, 2 % n, min(cfg.L_max, 2))
    return rec["status"] == "pass", rec.get("counterexample"), {}


@check("tropical", "symbolic_maps_match_geometry", "symbolic maps agree with the geometric ones")
def _t_geom(n, k, cfg, rng):
    m = n - k
    for _ in range(max(1, cfg.trials // 5)):
        R = pm.RationalRectangle.random(n, m, rng)
        p = pm.theta(R)
        env = R.env()
        checks = {
            "PR": pm.theta_inverse(gr.cyclic_shift(p)),
            "PRinv": pm.theta_inverse(gr.cyclic_shift(p, inverse=True)),
            "S": pm.theta_inverse(lg.schuetzenberger_S(p)),
            "D": pm.theta_inverse(lg.duality_D(p)),
        }
        for name, Q in checks.items():
            if tp.build_symbolic(name, n, m).rational(env) != Q.values() + [Q.t]:
                return False, {"R": _fmt(R.X), "map": name}, {}
        for i in range(n):
            c = gr.random_c(rng)
            Q = pm.theta_inverse(gr.apply_ei(p, i, c))
            if i == 1:
                e2 = dict(env, c=c)
                if tp.build_symbolic("e1", n, m).rational(e2) != Q.values() + [Q.t]:
                    return False, {"R": _fmt(R.X), "map": "e1"}, {}
            for name, fn in (("phi", gr.phi), ("eps", gr.eps)):
                if tp.build_symbolic(name, n, m, i).rational(env)[0] != fn(p, i):
                    return False, {"R": _fmt(R.X), "map": name, "i": i}, {}
        if tp.build_symbolic("f", n, m).rational(env)[0] != gr.decoration(p):
            return False, {"R": _fmt(R.X), "map": "f"}, {}
        if [tp.build_symbolic("gamma", n, m, i).rational(env)[0] for i in range(1, n + 1)] != list(gr.gamma(p)):
            return False, {"R": _fmt(R.X), "map": "gamma"}, {}
    return True, None, {}


# ---------------------------------------------------------------------------
# loop group

@check("loopgroup", "g_structure", "g has diagonal-form columns, rank k, determinant and constant term")
def _l_props(n, k, cfg, rng):
    def fn(p):
        res = lg.g_properties_check(p)
        bad = [key for key, v in res.items() if not v]
        return {"p": p, "failed": bad} if bad else None
    return _over_points(n, k, cfg, rng, fn)


@check("loopgroup", "h_times_g", "h g is a scalar matrix")
def _l_hg(n, k, cfg, rng):
    return _over_points(n, k, cfg, rng, lambda p: None if lg.h_g_check(p) else {"p": p})


@check("loopgroup", "g_intertwines_generators", "g intertwines the unipotent actions")
def _l_intertwine(n, k, cfg, rng):
    def fn(p):
        A = lg.g_matrix(p)
        if not lg.is_lower_borel(A):
            return {"p": p, "why": "not lower Borel"}
        for i in range(n):
            a = Fraction(rng.randint(1, 7), rng.randint(1, 3))
            if lg.g_matrix(lg.u_action(p, i, a)) != lg.u_action_borel(A, i, a):
                return {"p": p, "i": i, "a": a}
        return None
    return _over_points(n, k, cfg, rng, fn)


@check("loopgroup", "induced_crystal", "crystal read off the unfolding")
def _l_induced(n, k, cfg, rng):
    def fn(p):
        A = lg.g_matrix(p)
        gam, phs, eps = lg.induced_crystal(A)
        if gam != gr.gamma(p):
            return {"p": p, "why": "gamma"}
        for i in range(n):
            if phs[i] != gr.phi(p, i) or eps[i] != gr.eps(p, i):
                return {"p": p, "i": i, "why": "phi/eps"}
            c = gr.random_c(rng)
            if lg.induced_e(A, i, c) != lg.g_matrix(gr.apply_ei(p, i, c)):
                return {"p": p, "i": i, "why": "e"}
        if lg.shift(A) != lg.g_matrix(gr.cyclic_shift(p)):
            return {"p": p, "why": "shift"}
        if lg.chi(A, n - k) != gr.decoration(p):
            return {"p": p, "why": "chi"}
        return None
    return _over_points(n, k, cfg, rng, fn)


@check("loopgroup", "inverse_twist", "sign-twisted adjugate")
def _l_inv(n, k, cfg, rng):
    for _ in range(max(1, cfg.trials // 5)):
        X = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        if det(X) == 0:
            continue
        if not lg.jacobi_check(X):
            return False, {"X": X}, {}
    for i in range(n):
        a = Fraction(rng.randint(1, 9), rng.randint(1, 3))
        if lg.inv(lg.x_hat(n, i, a)) != lg.x_hat(n, i, a):
            return False, {"i": i, "a": a}, {}
    return True, None, {}


@check("loopgroup", "fold_unfold", "folding and unfolding are inverse")
def _l_fold(n, k, cfg, rng):
    for _ in range(max(1, cfg.trials // 5)):
        A = lg.FoldedMatrix(tuple(tuple(lg.LaurentPoly({e: rng.randint(-3, 3) for e in range(-2, 3)})
                                        for _ in range(n)) for _ in range(n)))
        lo, hi = A.exponent_range()
        U = A.unfold()
        if lg.fold(lambda p, q: U[p, q], n, lo, hi) != A:
            return False, {"why": "fold"}, {}
        if lg.shift(lg.shift(A), inverse=True) != A:
            return False, {"why": "shift"}, {}
    return True, None, {}


# ---------------------------------------------------------------------------
# symmetry

@check("symmetry", "schuetzenberger", "Schuetzenberger involution")
def _s_S(n, k, cfg, rng):
    def fn(p):
        S = lg.schuetzenberger_S(p)
        if not lg.schuetzenberger_S(S).same(p):
            return {"p": p, "why": "involution"}
        if not lg.schuetzenberger_S(gr.cyclic_shift(p)).same(gr.cyclic_shift(S, inverse=True)):
            return {"p": p, "why": "shift"}
        for i in range(n):
            if gr.phi(S, i) != gr.eps(p, (n - i) % n):
                return {"p": p, "i": i, "why": "phi"}
            c = gr.random_c(rng)
            if not lg.schuetzenberger_S(gr.apply_ei(p, i, c)).same(gr.apply_ei(S, (n - i) % n, 1 / c)):
                return {"p": p, "i": i, "why": "e"}
        # basic Pluecker transform
        r = k
        ref = S.P(gr.interval(n - r + 1, n))
        for i in range(1, n - r + 2):
            for j in range(i - 1, i + r):
                J = pm.basic_subset(n, r, i, j)
                num, den, m = tp.schuetzenberger_basic(n, r, p.P, J)
                if S.P(J) / ref != p.t ** m * num / den:
                    return {"p": p, "J": J, "why": "Pluecker transform"}
        return None
    return _over_points(n, k, cfg, rng, fn)


@check("symmetry", "duality", "duality involution")
def _s_D(n, k, cfg, rng):
    def fn(p):
        D = lg.duality_D(p)
        if not lg.duality_D(D).same(p):
            return {"p": p, "why": "involution"}
        if not lg.schuetzenberger_S(D).same(lg.duality_D(lg.schuetzenberger_S(p))):
            return {"p": p, "why": "commutes with S"}
        if not gr.cyclic_shift(D).same(lg.duality_D(gr.cyclic_shift(p))):
            return {"p": p, "why": "commutes with PR"}
        for i in range(n):
            if gr.phi(D, i) != gr.eps(p, i):
                return {"p": p, "i": i, "why": "phi"}
            c = gr.random_c(rng)
            if not gr.apply_ei(D, i, c).same(lg.duality_D(gr.apply_ei(p, i, 1 / c))):
                return {"p": p, "i": i, "why": "e"}
        beta = lg.LaurentPoly({0: p.t, 1: (-1) ** (k + n)})
        if lg.g_matrix(D).scale(beta ** (n - k - 1)) != lg.inv(lg.g_matrix(p)):
            return {"p": p, "why": "inverse of g"}
        return None
    return _over_points(n, k, cfg, rng, fn)


@check("symmetry", "tropical_symmetry_chain", "tropical S and D twist the tropical e_i")
def _s_trop(n, k, cfg, rng):
    m = n - k
    rects = tp._rect_list(n, m, cfg.L_max)
    env = tp.rect_env(rects, n, m)
    names = tp.chart_vars(n, m)
    S = tp.build_symbolic("S", n, m)
    D = tp.build_symbolic("D", n, m)
    Senv = dict(zip(names, S.tropical(env)))
    Denv = dict(zip(tp.chart_vars(n, n - m), D.tropical(env)))
    for i in range(n):
        for mv in (1, -1):
            lhs = S.tropical(dict(zip(names, tp.trop_e(n, m, i, env, mv))))
            rhs = tp.trop_e(n, m, (n - i) % n, Senv, -mv)
            if not all(np.array_equal(np.broadcast_to(a, (len(rects),)), np.broadcast_to(b, (len(rects),)))
                       for a, b in zip(lhs, rhs)):
                return False, {"i": i, "m": mv, "why": "S"}, {}
            lhs = D.tropical(dict(zip(names, tp.trop_e(n, m, i, env, mv))))
            rhs = tp.trop_e(n, n - m, i, Denv, -mv)
            if not all(np.array_equal(np.broadcast_to(a, (len(rects),)), np.broadcast_to(b, (len(rects),)))
                       for a, b in zip(lhs, rhs)):
                return False, {"i": i, "m": mv, "why": "D"}, {}
    return True, None, {"count": len(rects)}


# ---------------------------------------------------------------------------
# runner

def _run_task(args):
    suite, n, k, cfg = args
    records = []
    params = {"n": n, "k": k}
    if suite == "tropical":
        t0 = time.perf_counter()
        for r in _trop_records(n, n - k, cfg):
            rec = {"suite": suite, "check_id": r["check"], "anchor": _TROP_ANCHORS.get(r["check"], r["check"]),
                   "parameters": dict(params, L_max=cfg.L_max), "status": r["status"]}
            if "counterexample" in r:
                rec["counterexample"] = _fmt(r["counterexample"])
            if cfg.timing:
                rec["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
            records.append(rec)
    for check_id, anchor, fn, min_n in _REGISTRY[suite]:
        if n < min_n:
            continue
        rng = substream(cfg.seed, suite, check_id, n, k)
        t0 = time.perf_counter()
        try:
            ok, cex, extra = fn(n, k, cfg, rng)
        except Exception as exc:  # a crash is a failure with a diagnostic
            ok, cex, extra = False, {"exception": f"{type(exc).__name__}: {exc}"}, {}
        rec = {"suite": suite, "check_id": check_id, "anchor": anchor,
               "parameters": dict(params, **_param_extra(suite, cfg), **extra),
               "status": "pass" if ok else "fail"}
        if not ok:
            rec["counterexample"] = _fmt(cex)
        if cfg.timing:
            rec["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        records.append(rec)
    return records


_TROP_ANCHORS = {
    "trop_PR_is_promotion": "tropical cyclic shift is promotion",
    "trop_gamma": "tropical weight is the content",
    "trop_phi": "tropical phi_i is minus the combinatorial phi_i",
    "trop_eps": "tropical eps_i is minus the combinatorial eps_i",
    "trop_e_i": "tropical e_i with definedness from the decoration",
    "trop_f_i": "tropical f_i with definedness from the decoration",
    "trop_f_cuts_out_rectangles": "tropical decoration is nonnegative exactly on rectangles",
    "trop_S": "tropical Schuetzenberger involution is rot",
    "trop_D": "tropical duality is refl",
}


def _param_extra(suite, cfg):
    if suite in ("combinatorial",):
        return {"L_max": cfg.L_max}
    return {}


def _sort_key(rec):
    return (rec["suite"], rec["check_id"], json.dumps(rec["parameters"], sort_keys=True))


def run_suites(cfg: Config):
    tasks = [(s, n, k, cfg) for s in cfg.suites for n, k in cfg.pairs()]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as ex:
            chunks = list(ex.map(_run_task, tasks))
    else:
        chunks = [_run_task(t) for t in tasks]
    records = [r for c in chunks for r in c]
    records.sort(key=_sort_key)
    return records


def report(cfg: Config, records) -> dict:
    conf = asdict(cfg)
    conf.pop("jobs")
    conf.pop("timing")
    return {"schema": SCHEMA, "config": _fmt(conf), "checks": records,
            "summary": {"total": len(records), "failed": sum(r["status"] != "pass" for r in records)}}
