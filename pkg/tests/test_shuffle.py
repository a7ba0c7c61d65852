import random

import sympy as sp
from hypothesis import given, settings, strategies as st

from macdaha import shuffle
from macdaha.coeff import ONE, q, t, x
from macdaha.macops import build_D
from macdaha.shuffle import ShufElem, one, random_sym, squarefree_part, verify_morphism
from conftest import QS, TS, XS, agree


def sym_zeta_oracle():
    x1, x2 = XS[:2]
    zeta = lambda r: (1 - TS * r) * (TS - QS * r) / ((1 - r) * (1 - QS * r))  # noqa: E731
    return zeta(x1 / x2) + zeta(x2 / x1)


def test_unit_product_against_oracle():
    assert agree((one(1) * one(1)).value, sym_zeta_oracle())


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([(1, 1), (1, 2), (2, 1)]))
def test_coset_sum_matches_full_symmetrization(seed, shape):
    rng = random.Random(seed)
    P, P2 = random_sym(shape[0], rng), random_sym(shape[1], rng)
    assert shuffle.shuffle(P, P2) == shuffle.shuffle_by_full_sym(P, P2)


@settings(max_examples=8, deadline=None)
@given(st.lists(st.integers(-1, 1), min_size=3, max_size=3))
def test_shuffle_is_associative(ns):
    a, b, c = (ShufElem(1, x(1) ** n) for n in ns)
    assert ((a * b) * c).value == (a * (b * c)).value


def test_units_commute():
    for a, b in [(1, 1), (1, 2)]:
        assert shuffle.comac_form(a, b).is_zero()


def test_x_powers_do_not_commute():
    assert (ShufElem(1, x(1)) * one(1)) != (one(1) * ShufElem(1, x(1)))


def test_identity_suite_small_window():
    rep = shuffle.shuffle_identity_suite(window=(0, 0), kwin=(0, 1))
    assert rep.passed, rep.summary_lines()


def test_star_product_is_the_t_leading_part():
    P, P2 = ShufElem(1, x(1)), one(1)
    deg, lead = shuffle.star_limit(P, P2)
    assert deg == 4
    assert lead == shuffle.star(P, P2).value


def test_morphism_holds_on_distinct_shifts():
    N = 3
    rng = random.Random(3)
    for a, b in [(1, 1), (1, 2), (2, 1)]:
        P, P2 = random_sym(a, rng), random_sym(b, rng)
        assert verify_morphism(P, P2, N, part="distinct").status == "pass"


def test_full_product_carries_squared_shifts():
    """The literal product has Gamma_i^2 terms that D_2 cannot produce."""
    N = 2
    lhs = build_D(1, ONE, N) * build_D(1, ONE, N)
    assert (2, 0) in lhs.terms and (0, 2) in lhs.terms
    rhs = build_D(2, (one(1) * one(1)).value, N)
    assert squarefree_part(lhs) == rhs
    assert lhs != rhs
    assert verify_morphism(one(1), one(1), N, part="full").status == "fail"


def test_overflow_vanishes():
    N = 2
    lhs = build_D(1, ONE, N) * build_D(2, ONE, N)
    assert squarefree_part(lhs).is_zero()
