import random
from fractions import Fraction
from itertools import combinations

import pytest

from geomcrystal import grassmannian as gr
from geomcrystal import parametrization as pm
from geomcrystal import tableaux as tb
from geomcrystal.algebra import eval_rational, eval_tropical, var
from geomcrystal.algebra.linalg import det

NM = [(n, m) for n in range(2, 7) for m in range(1, n)]


def rect(n, m, seed):
    return pm.RationalRectangle.random(n, m, random.Random(seed))


def test_interval_factor_example():
    c2, c3, c4 = Fraction(2), Fraction(3, 5), Fraction(7)
    A = pm.interval_factor(5, 2, 4, [c2, c3, c4])
    expect = [[1, 0, 0, 0, 0],
              [0, c2, 0, 0, 0],
              [0, 1, c3 / c2, 0, 0],
              [0, 0, 1, c4 / c3, 0],
              [0, 0, 0, 0, 1]]
    assert A == expect


def test_phi_matrix_n5():
    R = rect(5, 3, 42)
    x = R.small
    expect = [
        [x(1, 1), 0, 0, 0, 0],
        [x(2, 2), x(1, 2) * x(2, 2), 0, 0, 0],
        [x(3, 3), (x(1, 2) + x(2, 3)) * x(3, 3), x(1, 3) * x(2, 3) * x(3, 3), 0, 0],
        [1, x(1, 2) + x(2, 3) + x(3, 4), x(1, 3) * (x(2, 3) + x(3, 4)), x(2, 4) * x(3, 4), 0],
        [0, 1, x(1, 3), x(2, 4), x(3, 5)],
    ]
    assert pm.phi_matrix(R) == expect
    assert pm.theta(R).M.matrix == tuple(tuple(r[:2]) for r in expect)


def test_network_example():
    xs = {(i, j): var(f"x{i}{j}") for i in range(1, 3) for j in range(1, 5)}
    N = pm.grassmann_network(5, 3, lambda i, j: xs[i, j])
    vals = {f"x{i}{j}": Fraction(2 * i + j, i + 1) for (i, j) in xs}
    x = {ij: vals[f"x{ij[0]}{ij[1]}"] for ij in xs}
    expect = [
        [x[1, 1], 0, 0],
        [x[2, 2], x[1, 2] * x[2, 2], 0],
        [1, x[1, 2] + x[2, 3], x[1, 3] * x[2, 3]],
        [0, 1, x[1, 3] + x[2, 4]],
        [0, 0, 1],
    ]
    got = [[e if isinstance(e, int) else eval_rational(e, vals) for e in row]
           for row in N.path_matrix()]
    assert got == expect
    minor = pm.lindstrom_minor(N, [3, 4], [2, 3])
    assert eval_rational(minor, vals) == (x[1, 2] * x[1, 3] + x[1, 2] * x[2, 4]
                                          + x[2, 3] * x[2, 4])


@pytest.mark.parametrize("n,r", [(n, r) for n in range(2, 7) for r in range(1, n)])
def test_network_edge_count_and_dot(n, r):
    N = pm.grassmann_network(n, r)
    assert len(N.edges) == 2 * r * (n - r)
    dot = pm.to_dot(N)
    assert dot.startswith("digraph") and dot.count("->") == len(N.edges)


@pytest.mark.parametrize("n,m", [(n, m) for n, m in NM if n <= 5])
def test_network_matrix_is_phi(n, m):
    R = rect(n, m, n * 10 + m)
    r = n - m
    M = pm.network_for(R).path_matrix()
    assert [list(row) for row in M] == [list(row[:r]) for row in pm.phi_matrix(R)]


def test_jtableaux_example():
    tabs = pm.jtableaux(8, 3, (4, 5, 7))
    assert [dict(T) for T in tabs] == [
        {(1, 1): 4, (1, 2): 4, (1, 3): 4, (2, 2): 5},
        {(1, 1): 4, (1, 2): 4, (1, 3): 5, (2, 2): 5},
    ]
    weights = sorted(sorted(pm.jtableau_weight_indices(T)) for T in tabs)
    assert weights == [[(4, 4), (4, 5), (4, 6), (5, 5)], [(4, 4), (4, 5), (5, 5), (5, 7)]]
    # the weights really expand the Pluecker coordinate
    R = rect(8, 5, 3)
    assert pm.theta(R).P([4, 5, 7]) == pm.plucker_via_jtableaux(R, [4, 5, 7])


def test_empty_jtableau():
    assert pm.jtableaux(6, 2, (5, 6)) == ((),)
    R = rect(6, 4, 1)
    assert pm.plucker_via_jtableaux(R, [5, 6]) == 1


@pytest.mark.parametrize("n,m", NM)
def test_pluckers_via_jtableaux(n, m):
    R = rect(n, m, 7 * n + m)
    p = pm.theta(R)
    for J in combinations(range(1, n + 1), n - m):
        assert p.P(J) == pm.plucker_via_jtableaux(R, J)
        e = pm.plucker_expr(n, m, J)
        assert p.P(J) == (0 if e is None else eval_rational(e, R.env()))


@pytest.mark.parametrize("n,m", NM)
def test_theta_roundtrip(n, m):
    for s in range(4):
        R = rect(n, m, 100 * s + 10 * n + m)
        assert pm.theta_inverse(pm.theta(R)) == R


@pytest.mark.parametrize("n,m", NM)
def test_basic_pluckers_are_monomials(n, m):
    r = n - m
    R = rect(n, m, n + m)
    p = pm.theta(R)
    for i in range(1, m + 1):
        for j in range(i, i + r):
            J = pm.basic_subset(n, r, i, j)
            assert len(pm.jtableaux(n, r, tuple(sorted(J)))) == 1
            prod = Fraction(1)
            for a in range(i, min(j, m) + 1):
                prod *= R[a, j]
            assert p.P(J) == prod


def test_theta_inverse_names_vanishing_subset():
    p = gr.CrystalPoint(gr.GrassmannPoint([[1, 0], [0, 1], [1, 0], [0, 1]]), 1)
    with pytest.raises(gr.UndefinedPointError):
        pm.theta_inverse(p)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 7) for k in range(1, n)])
def test_diagonal_form(n, k):
    p = gr.random_point(n, k, random.Random(n * 9 + k))
    D = pm.diagonal_form(p.M)
    for a in range(k):
        assert D[a][a] != 0 and all(D[a][b] == 0 for b in range(a + 1, k))
        row = D[n - k + a]
        assert row[a] == 1 and all(row[b] == 0 for b in range(a))
    assert gr.GrassmannPoint(D).same_span(p.M)
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            num = p.P(gr.interval(j - k + 1, j - 1) + [i])
            assert D[i - 1][j - 1] == num / p.P(gr.interval(j - k, j - 1))


@pytest.mark.parametrize("n,m", NM)
def test_geometric_promotion(n, m):
    R = rect(n, m, 3 * n + m)
    assert pm.geometric_pr(R) == pm.theta_inverse(gr.cyclic_shift(pm.theta(R)))
    assert pm.decoration_closed_form(R) == gr.decoration(pm.theta(R))
    for r in range(1, n):
        assert pm.geometric_bk(pm.geometric_bk(R, r), r) == R


@pytest.mark.parametrize("n,m", [(4, 2), (5, 3), (5, 1)])
def test_tropical_bender_knuth(n, m):
    S = pm.RationalRectangle.symbolic(n, m)
    for L in range(3):
        for b in tb.enumerate_rectangles(n, m, L):
            env = {f"X_{i}_{j}": b[i, j] for i, j in tb.rect_indices(n, m)}
            env["t"] = b.L
            for r in range(1, n):
                B = pm.geometric_bk(S, r)
                got = tb.KRectangle(n, m, tuple(eval_tropical(B.X[ij], env)
                                                for ij in tb.rect_indices(n, m)), b.L)
                assert got == tb.KRectangle.from_gt(tb.bk_piecewise_linear(b.to_gt(), r), m)


def test_det_of_phi():
    R = rect(5, 2, 9)
    d = det(pm.phi_matrix(R))
    assert d == R.t ** 2
