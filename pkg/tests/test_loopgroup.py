import random
from fractions import Fraction

import pytest

from geomcrystal import grassmannian as gr
from geomcrystal import loopgroup as lg
from geomcrystal import parametrization as pm
from geomcrystal import tropical as tp
from geomcrystal.algebra import LaurentPoly

LAM = lg.LAM
NK = [(n, k) for n in range(2, 6) for k in range(1, n)]


def point(n, k, seed):
    return gr.random_point(n, k, random.Random(seed))


def test_unfold_example():
    A = lg.FoldedMatrix((
        (2 * LAM ** -1 + 3 + 4 * LAM + 5 * LAM ** 2, LAM ** -1 + 7 + 8 * LAM),
        (-3 * LAM ** -1 + 1 + LAM ** 2, -2 * LAM ** -1 + 5 + 6 * LAM),
    ))
    U = A.unfold()
    shown = [
        [3, 7, 2, 1, 0, 0],
        [1, 5, -3, -2, 0, 0],
        [4, 8, 3, 7, 2, 1],
        [0, 6, 1, 5, -3, -2],
        [5, 0, 4, 8, 3, 7],
        [1, 0, 0, 6, 1, 5],
    ]
    assert U.block(range(1, 7), range(1, 7)) == shown
    assert lg.fold(lambda p, q: U[p, q], 2, -1, 2) == A


def test_unfolding_is_multiplicative():
    rng = random.Random(1)

    def rand():
        return lg.FoldedMatrix(tuple(tuple(LaurentPoly({e: rng.randint(-3, 3) for e in (-1, 0, 1)})
                                           for _ in range(3)) for _ in range(3)))

    A, B = rand(), rand()
    UA, UB, UAB = A.unfold(), B.unfold(), (A @ B).unfold()
    for p in range(1, 7):
        for q in range(1, 7):
            assert UAB[p, q] == sum(UA[p, m] * UB[m, q] for m in range(q - 3 * 3, p + 3 * 3 + 1))


def test_g_matrix_gr25():
    p = point(5, 2, 1)
    P, t = p.P, p.t
    r = lambda a, b: P(a) / P(b)  # noqa: E731
    expect = lg.FoldedMatrix((
        (r([1, 5], [4, 5]), 0, LAM, LAM * r([1, 3], [2, 3]), LAM * r([1, 4], [3, 4])),
        (r([2, 5], [4, 5]), r([1, 2], [1, 5]), 0, LAM, LAM * r([2, 4], [3, 4])),
        (r([3, 5], [4, 5]), r([1, 3], [1, 5]), t * r([2, 3], [1, 2]), 0, LAM),
        (1, r([1, 4], [1, 5]), t * r([2, 4], [1, 2]), t * r([3, 4], [2, 3]), 0),
        (0, 1, t * r([2, 5], [1, 2]), t * r([3, 5], [2, 3]), t * r([4, 5], [3, 4])),
    ))
    assert lg.g_matrix(p) == expect
    chi = (r([3, 5], [4, 5]) + r([1, 4], [1, 5]) + t * r([2, 5], [1, 2])
           + r([1, 3], [2, 3]) + r([2, 4], [3, 4]))
    assert lg.chi(lg.g_matrix(p), 3) == chi == gr.decoration(p)


def test_g_matrix_gr34():
    p = point(4, 3, 2)
    P, t = p.P, p.t
    expect = lg.FoldedMatrix((
        (P([1, 3, 4]) / P([2, 3, 4]), 0, 0, LAM),
        (1, P([1, 2, 4]) / P([1, 3, 4]), 0, 0),
        (0, 1, P([1, 2, 3]) / P([1, 2, 4]), 0),
        (0, 0, 1, t * P([2, 3, 4]) / P([1, 2, 3])),
    ))
    assert lg.g_matrix(p) == expect


def test_h_matrix_n5_k3():
    p = point(5, 3, 3)
    P, t = p.P, p.t
    r = lambda a, b: P(a) / P(b)  # noqa: E731
    expect = lg.FoldedMatrix((
        (t * r([3, 4, 5], [1, 4, 5]), 0, -LAM, LAM * r([1, 3, 5], [1, 4, 5]), -LAM * r([1, 3, 4], [1, 4, 5])),
        (-t * r([2, 4, 5], [1, 2, 5]), t * r([1, 4, 5], [1, 2, 5]), 0, -LAM, LAM * r([1, 2, 4], [1, 2, 5])),
        (t * r([2, 3, 5], [1, 2, 3]), -t * r([1, 3, 5], [1, 2, 3]), t * r([1, 2, 5], [1, 2, 3]), 0, -LAM),
        (-1, r([1, 3, 4], [2, 3, 4]), -r([1, 2, 4], [2, 3, 4]), r([1, 2, 3], [2, 3, 4]), 0),
        (0, -1, r([2, 4, 5], [3, 4, 5]), -r([2, 3, 5], [3, 4, 5]), r([2, 3, 4], [3, 4, 5])),
    ))
    assert lg.h_matrix(p) == expect


@pytest.mark.parametrize("n,k", NK)
def test_g_structure(n, k):
    for s in range(3):
        p = point(n, k, 100 * s + 10 * n + k)
        assert all(lg.g_properties_check(p).values()), lg.g_properties_check(p)
        assert lg.h_g_check(p)
        assert lg.is_lower_borel(lg.g_matrix(p))


@pytest.mark.parametrize("n,k", NK)
def test_g_intertwines(n, k):
    rng = random.Random(n * 7 + k)
    p = point(n, k, n * 3 + k)
    A = lg.g_matrix(p)
    for i in range(n):
        a = Fraction(rng.randint(1, 7), rng.randint(1, 3))
        assert lg.g_matrix(lg.u_action(p, i, a)) == lg.u_action_borel(A, i, a)


@pytest.mark.parametrize("n,k", NK)
def test_induced_crystal(n, k):
    rng = random.Random(n * 11 + k)
    p = point(n, k, n * 5 + k)
    A = lg.g_matrix(p)
    gam, phs, eps = lg.induced_crystal(A)
    assert gam == gr.gamma(p)
    assert phs == tuple(gr.phi(p, i) for i in range(n))
    assert eps == tuple(gr.eps(p, i) for i in range(n))
    for i in range(n):
        c = gr.random_c(rng)
        assert lg.induced_e(A, i, c) == lg.g_matrix(gr.apply_ei(p, i, c))
    assert lg.shift(A) == lg.g_matrix(gr.cyclic_shift(p))
    assert lg.chi(A, n - k) == gr.decoration(p)


def test_chi_of_generator():
    A = lg.x_hat(4, 2, Fraction(5, 3))
    assert lg.chi(A, 0) == Fraction(5, 3)
    with pytest.raises(ValueError):
        lg.chi(A, 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_inverse_twist(n):
    rng = random.Random(n)
    X = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
    X[0][0] += 20
    assert lg.jacobi_check(X)
    for i in range(n):
        a = Fraction(rng.randint(1, 9), 2)
        assert lg.inv(lg.x_hat(n, i, a)) == lg.x_hat(n, i, a)


def test_schuetzenberger_gr25_example():
    p = point(5, 2, 4)
    P, t = p.P, p.t
    expect = [
        (t * P([4, 5]) / P([3, 4]), 0),
        (t * P([3, 5]) / P([2, 3]), t * P([3, 4]) / P([2, 3])),
        (t * P([2, 5]) / P([1, 2]), t * P([2, 4]) / P([1, 2])),
        (1, P([1, 4]) / P([1, 5])),
        (0, 1),
    ]
    S = lg.schuetzenberger_S(p)
    assert pm.diagonal_form(S.M) == pm.diagonal_form(gr.GrassmannPoint(expect))


@pytest.mark.parametrize("n,k", NK)
def test_schuetzenberger(n, k):
    rng = random.Random(n * 13 + k)
    p = point(n, k, n * 17 + k)
    S = lg.schuetzenberger_S(p)
    assert lg.schuetzenberger_S(S).same(p)
    assert lg.schuetzenberger_S(gr.cyclic_shift(p)).same(gr.cyclic_shift(S, inverse=True))
    for i in range(n):
        assert gr.phi(S, i) == gr.eps(p, (n - i) % n)
        c = gr.random_c(rng)
        assert lg.schuetzenberger_S(gr.apply_ei(p, i, c)).same(gr.apply_ei(S, (n - i) % n, 1 / c))


@pytest.mark.parametrize("n,k", NK)
def test_duality(n, k):
    rng = random.Random(n * 19 + k)
    p = point(n, k, n * 23 + k)
    D = lg.duality_D(p)
    assert D.k == n - k
    assert lg.duality_D(D).same(p)
    assert lg.schuetzenberger_S(D).same(lg.duality_D(lg.schuetzenberger_S(p)))
    assert gr.cyclic_shift(D).same(lg.duality_D(gr.cyclic_shift(p)))
    for i in range(n):
        assert gr.phi(D, i) == gr.eps(p, i)
        c = gr.random_c(rng)
        assert gr.apply_ei(D, i, c).same(lg.duality_D(gr.apply_ei(p, i, 1 / c)))
    beta = LaurentPoly({0: p.t, 1: (-1) ** (k + n)})
    assert lg.g_matrix(D).scale(beta ** (n - k - 1)) == lg.inv(lg.g_matrix(p))


def test_perp_is_orthogonal():
    p = point(5, 2, 9)
    Q = lg.perp(p.M)
    for a in range(2):
        for b in range(3):
            assert sum((-1) ** r * p.M.matrix[r][a] * Q.matrix[r][b] for r in range(5)) == 0


@pytest.mark.parametrize("n,m", [(3, 1), (4, 2), (5, 2), (5, 3)])
def test_symbolic_symmetries_match_loop_group(n, m):
    rng = random.Random(n + 31 * m)
    S, D = tp.build_symbolic("S", n, m), tp.build_symbolic("D", n, m)
    for _ in range(4):
        R = pm.RationalRectangle.random(n, m, rng)
        p = pm.theta(R)
        assert S.rational(R.env()) == pm.theta_inverse(lg.schuetzenberger_S(p)).values() + [R.t]
        assert D.rational(R.env()) == pm.theta_inverse(lg.duality_D(p)).values() + [R.t]
