from fractions import Fraction
from math import comb

import pytest

from schurspecht.combinat import conjugate, max_exchange_vector, min_exchange_vector, partitions_up_to
from schurspecht.criteria import (CriterionReport, Witness, c_scalar, change_of_basis_matrix, d_coeff,
                                  eigen_sum, gamma_two_row_verdict, gr_verdict, identify_coker,
                                  multirow_coker_verdict, phi_coeffs, psi_coeffs, sgr_verdict, sigma_sum)

TWO_ROW = [(a, b) for a in range(1, 11) for b in range(1, a + 1) if a + b <= 10]


@pytest.mark.parametrize("args,value", [((3, 2, 1, 1), 3), ((2, 2, 2, 2), 6), ((4, 3, 0, 2), 1)])
def test_c_scalar_examples(args, value):
    assert c_scalar(*args) == value


def test_eigen_sum_examples():
    assert eigen_sum(psi_coeffs(2, 1), 3, 2, 1) == 3
    assert eigen_sum(psi_coeffs(4, 2), 5, 4, 3) == 0
    assert eigen_sum([0, 0, 0], 3, 2, 2) == 0
    with pytest.raises(ValueError):
        eigen_sum([1], 3, 2, 3)


def test_identify_coker_examples():
    assert identify_coker([0, 1], 2, 1).index == 0
    ident = identify_coker([1, 0, 0], 2, 2)
    assert ident.index is None and not ident.irreducible
    two = identify_coker(psi_coeffs(2, 2), 2, 2)
    assert two.index is None and two.zeros == (0, 2)


@pytest.mark.parametrize("args,value", [((2, 2, 2, 2), 0), ((3, 2, 2, 2), -2), ((3, 2, 1, 1), 3)])
def test_sigma_sum_examples(args, value):
    assert sigma_sum(*args) == value


@pytest.mark.parametrize("a,b", [ab for ab in TWO_ROW if ab[1] <= 6])
def test_sigma_sum_closed_forms(a, b):
    for j in range(1, b + 1):
        assert sigma_sum(a, b, 1, j) == j * (a - b + j + 1)
        assert sigma_sum(a, b, b, j) == 1 - (-1) ** j * comb(a - b + j, j)
        if b >= 2:
            val = (b - 1) * j * (a - b + j + 1) - comb(j, 2) * comb(a - b + j + 2, 2)
            assert sigma_sum(a, b, 2, j) == val
            assert (val == 0) == (4 * (b - 1) == (j - 1) * (a - b + j + 2))


@pytest.mark.parametrize("a,b", TWO_ROW)
def test_sigma_sum_is_psi_eigenvalue(a, b):
    for k in range(1, b + 1):
        for j in range(1, b + 1):
            assert sigma_sum(a, b, k, j) == eigen_sum(psi_coeffs(b, k), a, b, j)


@pytest.mark.parametrize("b", range(0, 13))
def test_basis_change_is_involution(b):
    A = change_of_basis_matrix(b)
    for i in range(b + 1):
        for l in range(b + 1):
            assert sum(A[i][j] * A[j][l] for j in range(b + 1)) == (i == l)


def test_psi_is_binomial_identity_minus_phi():
    for b in range(1, 8):
        for k in range(1, b + 1):
            phi, psi = phi_coeffs(b, k), psi_coeffs(b, k)
            assert phi[0] == comb(b, k)
            assert psi == [comb(b, k) - phi[0]] + [-x for x in phi[1:]]


def test_multirow_examples():
    psi2 = lambda c, a, b: psi_coeffs(b, 2)  # noqa: E731
    rep = multirow_coker_verdict((5, 4), psi2)
    assert not rep.verdict and rep.witnesses == [Witness(1, 3, 0)]
    psi1 = lambda c, a, b: psi_coeffs(b, 1)  # noqa: E731
    for mu in [(3, 2), (4, 4, 1), (2, 2, 2, 2)]:
        assert multirow_coker_verdict(mu, psi1).verdict
    rep = multirow_coker_verdict((2, 1), lambda c, a, b: [1, 1])
    assert Witness(1, 0, 1) in rep.witnesses
    with pytest.raises(ValueError):
        multirow_coker_verdict((3,), psi1)


def test_sgr_verdict_examples():
    rep = sgr_verdict((2, 2), (2,))
    assert not rep.verdict and rep.witnesses == [Witness(1, 2, 0)]
    assert sgr_verdict((2, 2), (2,), "short").witnesses == rep.witnesses
    lam = (2, 2, 2, 2, 1)
    full = sgr_verdict(lam, (2,), "full")
    assert not full.verdict and [(w.c, w.j) for w in full.witnesses] == [(1, 3)]
    assert sgr_verdict(lam, (2,), "short").verdict
    with pytest.raises(ValueError):
        sgr_verdict(lam, (2,), "medium")


@pytest.mark.parametrize("lam", [p for p in partitions_up_to(8) if p[0] > 1])
def test_all_ones_always_pass(lam):
    ones = min_exchange_vector(lam)
    assert sgr_verdict(lam, ones).verdict
    assert gr_verdict(lam, ones).verdict


@pytest.mark.parametrize("lam", [p for p in partitions_up_to(8) if p[0] > 1])
def test_max_vector_reproduces_distinct_column_hypothesis(lam):
    mu = conjugate(lam)
    hyp = all(mu[c] > mu[c + 1] for c in range(len(mu) - 1) if mu[c + 1] > 1)
    k = max_exchange_vector(lam)
    assert sgr_verdict(lam, k).verdict == hyp
    assert gr_verdict(lam, k).verdict == hyp


@pytest.mark.parametrize("args,value", [((2, 2, 2, 2, 2), 0), ((3, 2, 2, 1, 1), 3), ((3, 3, 2, 3, 2), -2)])
def test_d_coeff_examples(args, value):
    assert d_coeff(*args) == value


def test_d_coeff_range():
    with pytest.raises(ValueError):
        d_coeff(3, 2, 1, 2, 0)


@pytest.mark.parametrize("args,value", [((3, 2, 2), True), ((2, 2, 2), False), ((1, 1, 1), True)])
def test_gamma_verdict_examples(args, value):
    assert gamma_two_row_verdict(*args) is value


def test_gamma_verdict_exhaustive():
    # raises internally if the closed form and the coefficient test ever disagree
    for a, b in TWO_ROW:
        for k in range(1, b + 1):
            assert gamma_two_row_verdict(a, b, k) == (a > k or a == b == k == 1)
    with pytest.raises(ValueError):
        gamma_two_row_verdict(2, 3, 1)


def test_gr_verdict_examples():
    rep = gr_verdict((2, 2), (2,))
    assert not rep.verdict and rep.witnesses[0].c == 1
    assert rep.extra["two_column_iff"] is False
    assert gr_verdict(conjugate((3, 2)), (2,)).verdict


def test_report_consistency():
    with pytest.raises(ValueError):
        CriterionReport(True, [Witness(1, 1, 0)])
    with pytest.raises(ValueError):
        CriterionReport(False, [])
    d = CriterionReport(False, [Witness(1, 2, Fraction(1, 3))], "x").as_dict()
    assert d["witnesses"] == [{"c": 1, "j": 2, "value": "1/3"}]
