from itertools import combinations

import pytest
import sympy as sp

from macdaha import macops, polyx
from macdaha.coeff import ONE, q, t, th, x
from macdaha.macops import (
    DivergentLimit, ScaledOp, SymShiftOp, build_D, build_M, build_M_schur, build_M_tinf, dual_M,
    t_infty,
)
from conftest import QS, TS, XS, agree, to_sympy


def oracle_M(alpha, n, N, f):
    """sum_I x_I^n prod_{i in I, j notin I} (t x_i - x_j)/(x_i - x_j) f(q x_I), in sympy."""
    xs = XS[:N]
    total = 0
    for I in combinations(range(N), alpha):
        c = sp.prod([xs[i] ** n for i in I])
        for i in I:
            for j in range(N):
                if j not in I:
                    c *= (TS * xs[i] - xs[j]) / (xs[i] - xs[j])
        total += c * f.subs({xs[i]: QS * xs[i] for i in I}, simultaneous=True)
    return total


@pytest.mark.parametrize("alpha,n,N", [(1, 0, 2), (1, 2, 2), (1, -1, 3), (2, 1, 3), (2, -1, 3), (3, 1, 3)])
def test_M_action_matches_oracle(alpha, n, N):
    for f in (ONE, polyx.power_sum(1, N), polyx.monomial_sym((2, -1) + (0,) * (N - 2), N)):
        got = build_M(alpha, n, N).act(f)
        assert agree(got, oracle_M(alpha, n, N, to_sympy(f)), seed=alpha * 10 + n)


def test_M_vanishes_past_N():
    assert build_M(3, 0, 2).is_zero()
    assert build_M(3, 0, 2).act(polyx.power_sum(1, 2)).is_zero()


@pytest.mark.parametrize("N", [2, 3])
def test_M2_on_one_loses_schur_positivity(N):
    got = build_M(1, 2, N).act(ONE)
    pad = (0,) * (N - 2)
    want = t() ** (N - 1) * polyx.gen_schur((2, 0) + pad) - t() ** (N - 2) * polyx.gen_schur((1, 1) + pad)
    assert got == want


def test_M_preserves_symmetric_laurent():
    f = polyx.monomial_sym((1, 0, -2), 3)
    g = build_M(2, 1, 3).act(f)
    assert polyx.is_laurent(g) and polyx.is_symmetric(g, 3)


def test_schur_operator_at_single_row():
    assert build_M_schur((2,), 3) == build_M(1, 2, 3)
    assert build_M_schur((1, 1), 3) == build_M(2, 1, 3)


def test_dual_is_reflected_inverse_t():
    N = 2
    d = dual_M(1, 1, N)
    assert set(d.terms) == {(-1, 0), (0, -1)}
    c = d.terms[(-1, 0)]
    assert c == x(1) * (x(1) / t() - x(2)) / (x(1) - x(2))


def test_composition_pulls_coefficients_through_shifts():
    N = 2
    a = SymShiftOp.shift(N, (1, 0), x(1))
    b = SymShiftOp.mult(N, x(1) + x(2))
    assert (a * b).terms == {(1, 0): x(1) * (q() * x(1) + x(2))}


def test_t_infinity_limit():
    # t^-(alpha(N-alpha)) M_{alpha;n} -> the t = infinity operator
    for alpha, n, N in [(1, 0, 2), (1, 1, 3), (2, -1, 3)]:
        lim = t_infty(ScaledOp(build_M(alpha, n, N), alpha * (N - alpha)))
        assert lim == build_M_tinf(alpha, n, N)


def test_t_infinity_divergence_is_reported():
    with pytest.raises(DivergentLimit):
        t_infty(ScaledOp(build_M(1, 0, 3), 1))


def test_tinf_boundary_values():
    assert build_M_tinf(0, 5, 3) == SymShiftOp.identity(3)
    assert build_M_tinf(4, 0, 3).is_zero()
    assert build_M_tinf(3, 1, 3).act(ONE) == x(1) * x(2) * x(3)


def test_DofM():
    for n in (-1, 0, 2):
        assert macops.verify_DofM(n, 2).passed


def test_eigenvalues_N2():
    rep = macops.eigen_suite(2, lams=((1, 0), (2, 1)))
    assert rep.passed, rep.summary_lines()


def test_eigenvalue_formula_small():
    # e_1 of (theta q^l1, theta^-1 q^l2) times theta
    ev = macops.eigenvalue((1, 0), 1, 2)
    assert ev == th() * (th() * q() + 1 / th())


def test_constant_term_form_small():
    rep = macops.ct_form_suite(2, n_window=(0, 1), box=(-1, 1))
    assert rep.passed, rep.summary_lines()


def test_constant_term_kernel_symmetric_in_order():
    # the one-variable kernel is just P(1/u)
    k = macops.ct_kernel(1, x(1) ** 2)
    assert k == 1 / macops._u(1) ** 2
