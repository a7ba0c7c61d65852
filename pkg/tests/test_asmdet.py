import json

import pytest
from hypothesis import given, settings, strategies as st

from macdaha import asmdet
from macdaha.asmdet import ASMatrix, enumerate_asm, enumerate_asm_bruteforce
from macdaha.coeff import q


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 7), (4, 42)])
def test_counts_and_bruteforce_agree(n, count):
    asms = enumerate_asm(n)
    assert len(asms) == count
    assert asms == enumerate_asm_bruteforce(n)


def test_count_five():
    assert len(enumerate_asm(5)) == 429


def test_size_limits():
    with pytest.raises(ValueError):
        enumerate_asm(6)
    with pytest.raises(ValueError):
        enumerate_asm(0)


def test_three_by_three_statistics():
    stats = sorted((a.I, a.Nneg, a.m) for a in enumerate_asm(3))
    assert stats == sorted([(0, 0, (2, 1, 0)), (1, 0, (1, 2, 0)), (1, 0, (2, 0, 1)), (3, 0, (0, 1, 2)),
                            (2, 0, (0, 2, 1)), (2, 0, (1, 0, 2)), (2, 1, (1, 1, 1))])


def test_permutation_matrices_have_inversion_statistic():
    ident = ASMatrix(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    anti = ASMatrix(3, ((0, 0, 1), (0, 1, 0), (1, 0, 0)))
    assert (ident.I, anti.I) == (0, 3)
    assert ident.m == (2, 1, 0)


def test_json_export():
    data = json.loads(asmdet.asm_json(3))
    assert len(data) == 7
    middle = [d for d in data if d["Nneg"] == 1]
    assert middle == [{"entries": [[0, 1, 0], [1, -1, 1], [0, 1, 0]], "I": 2, "Nneg": 1, "m": [1, 1, 1]}]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lambda_determinant(n):
    assert asmdet.lambda_det_check(n).passed


def test_quantum_determinant_printed_expansions():
    for a in [(0, 1), (2, -1), (1, 0, 0), (2, 1, -1)]:
        _, rep = asmdet.qdet_tinf(a, 3)
        assert rep.passed, rep.summary_lines()
        assert any(c.name.startswith("qdet-printed") for c in rep.checks)


def test_quantum_determinant_rejects_large_alpha():
    with pytest.raises(ValueError):
        asmdet.qdet_tinf((0, 0, 0), 2)


@settings(max_examples=20, deadline=None)
@given(st.integers(-3, 4), st.integers(-3, 4))
def test_polynomial_forms_differ_by_exchange_terms(a, b):
    assert asmdet.formal_difference(a, b) == {}


def test_mtwopol_operator_forms():
    rep = asmdet.mtwopol_check(2, 1, 3)
    assert rep.passed, rep.summary_lines()


def test_quadratic_identities_hold_with_corrected_mnnplus():
    rep = asmdet.quadratic_identity_suite((0, 0), (0, 1), 2)
    failed = {c.name for c in rep.checks if c.status != "pass"}
    assert failed == {"Mnnplus-as-written-n0"}


def test_closing_determinants():
    rep = asmdet.qt_determinant_instances((0, 0), 2)
    failed = {c.name for c in rep.checks if c.status != "pass"}
    assert failed == {"qtdet-n,n-as-written-n0"}


def test_quadratic_eha_form():
    rep = asmdet.eha_poly_check(0, 2)
    assert rep.passed, rep.summary_lines()


def test_cubic_eha_form_needs_corrected_coefficients():
    rep = asmdet.eha_poly_check(0, 3)
    status = {c.name: c.status for c in rep.checks}
    assert status["D3-corrected-n0"] == "pass" and status["Mnnn-corrected-n0"] == "pass"
    assert status["D3-as-written-n0"] == "fail" and status["Mnnn-as-written-n0"] == "fail"


def test_m_system_small():
    rep = asmdet.msystem_suite(2, (-1, 1))
    assert rep.passed, rep.summary_lines()


def test_nu_matches_definition():
    from macdaha.macops import build_M
    N = 2
    assert asmdet.nu(1, 0, N) == build_M(1, 1, N) * build_M(1, 0, N) - q() * (build_M(1, 2, N) * build_M(1, -1, N))
