import pytest
from hypothesis import given, strategies as st

from frozen_values import U1_CUBED, U1_SQUARED, U2_INV, U2_INV_SQUARED, U3_CUBED, U3_INV, U3_SQUARED
from oracles import matpow_naive, sympy_charpoly, sympy_squarefree
from pell_lab.pellmat import (
    CLOSED_FORM_INVERSES, CLOSED_FORMS, EIGEN_SYSTEMS, GENERATORS, IDENTITY, PERMUTATION_MATRICES,
    U1, U1T, U2, U3, ZERO, CharPoly, Mat3, adjugate, char_poly, closed_form_u1, closed_form_u1T,
    closed_form_u2, closed_form_u2_inv, closed_form_u3, closed_form_u3_inv, det, diagonal_power_check,
    eigen_residual, intro_mat2_check, inverse_unimodular, mat_pow, similar_over_rationals, trace,
)
from pell_lab.sequences import DomainError, term
from pell_lab.zsqrt2 import LAMBDA, Zsqrt2
from pell_lab.pellmat import EigenTriple

small = st.integers(min_value=-50, max_value=50)
mats = st.builds(lambda xs: Mat3.of([xs[0:3], xs[3:6], xs[6:9]]), st.lists(small, min_size=9, max_size=9))


def test_printed_examples():
    assert mat_pow(U1, 2).tolist() == U1_SQUARED
    assert mat_pow(U2, 0) == IDENTITY
    assert mat_pow(U3, 2).tolist() == U3_SQUARED
    assert closed_form_u1(2).tolist() == U1_SQUARED
    assert closed_form_u1(1) == U1
    assert closed_form_u1(3).tolist() == U1_CUBED
    assert closed_form_u1T(2) == closed_form_u1(2).T
    assert closed_form_u1T(1) == U1T
    assert closed_form_u1T(4) == closed_form_u1(4).T
    assert closed_form_u2(1) == U2
    assert closed_form_u2(2).tolist() == U3_SQUARED
    assert closed_form_u3(1) == U3
    assert closed_form_u3(2).tolist() == U3_SQUARED
    assert closed_form_u3(3).tolist() == U3_CUBED
    assert closed_form_u2_inv(1).tolist() == U2_INV
    assert closed_form_u3_inv(1).tolist() == U3_INV
    assert closed_form_u2_inv(2).tolist() == U2_INV_SQUARED
    assert closed_form_u3_inv(2).tolist() == U2_INV_SQUARED


@pytest.mark.parametrize("name", list(CLOSED_FORMS))
def test_closed_forms_against_naive_oracle(name):
    gen, closed = CLOSED_FORMS[name]
    for n in range(1, 40):
        assert closed(n).tolist() == matpow_naive(gen.tolist(), n)


@pytest.mark.parametrize("name", list(CLOSED_FORMS))
def test_closed_forms_match_mat_pow(name):
    gen, closed = CLOSED_FORMS[name]
    for n in range(1, 201):
        assert closed(n) == mat_pow(gen, n)


@pytest.mark.parametrize("name", list(CLOSED_FORM_INVERSES))
def test_inverse_closed_forms(name):
    gen, closed_inv = CLOSED_FORM_INVERSES[name]
    inv = inverse_unimodular(gen)
    for n in range(1, 201):
        assert closed_inv(n) @ mat_pow(gen, n) == IDENTITY
        assert closed_inv(n) == mat_pow(inv, n)


def test_domain_errors():
    for fn in (closed_form_u1, closed_form_u1T, closed_form_u2, closed_form_u2_inv,
               closed_form_u3, closed_form_u3_inv, intro_mat2_check, diagonal_power_check):
        with pytest.raises(DomainError):
            fn(0)
    with pytest.raises(DomainError):
        mat_pow(U2, -1)
    with pytest.raises(DomainError):
        inverse_unimodular(U1)


def test_trace_and_det():
    assert trace(mat_pow(U1, 2)) == 6
    assert trace(IDENTITY) == 3
    assert trace(U1) == 2
    assert (det(U1), det(U2), det(U3)) == (0, 1, -1)
    for n in range(1, 201):
        assert det(mat_pow(U1, n)) == 0
        assert det(mat_pow(U2, n)) == 1
        assert det(mat_pow(U3, n)) == (-1) ** n
        assert trace(mat_pow(U1, n)) == 2 * (term("E", n - 1) + term("E", n))


def test_u2_and_u3_squares_coincide():
    assert mat_pow(U2, 2) == mat_pow(U3, 2)


def test_eigen_systems():
    for name, triples in EIGEN_SYSTEMS.items():
        for t in triples:
            assert eigen_residual(GENERATORS[name], t)
    wrong = EigenTriple(LAMBDA, (Zsqrt2(1), Zsqrt2(0), Zsqrt2(0)))
    assert not eigen_residual(U2, wrong)
    zero_vec = EigenTriple(LAMBDA, (Zsqrt2(0),) * 3)
    assert not eigen_residual(U2, zero_vec)


def test_char_poly_examples():
    assert char_poly(U1) == CharPoly(-2, -1, 0)
    assert str(char_poly(U1)) == "x^3 - 2x^2 - x"
    assert char_poly(IDENTITY) == CharPoly(-3, 3, -1)
    assert str(char_poly(U3)) == "x^3 - 3x^2 + x + 1"
    assert not char_poly(IDENTITY).is_squarefree()


def test_similarity():
    assert similar_over_rationals(U1, U1T) is True
    assert similar_over_rationals(U1, IDENTITY) is False
    assert similar_over_rationals(U2, U3) is False
    assert similar_over_rationals(IDENTITY, IDENTITY) is None


def test_intro_and_diagonal():
    for n in (1, 3, 50):
        assert intro_mat2_check(n)
    for n in range(1, 200):
        assert diagonal_power_check(n)


def test_permutation_matrices():
    assert len(set(PERMUTATION_MATRICES)) == 6
    for p in PERMUTATION_MATRICES:
        assert p @ p.T == IDENTITY
        assert det(p) in (1, -1)


@given(mats)
def test_char_poly_matches_sympy(m):
    coeffs, _ = sympy_charpoly(m.tolist())
    assert list(char_poly(m).coeffs()) == coeffs
    assert char_poly(m).is_squarefree() == sympy_squarefree(m.tolist())


@given(mats, mats, mats)
def test_matmul_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)


@given(mats, mats)
def test_det_multiplicative(a, b):
    assert det(a @ b) == det(a) * det(b)


@given(mats)
def test_adjugate(m):
    assert m @ adjugate(m) == IDENTITY * det(m)


@given(mats, st.integers(min_value=0, max_value=12))
def test_mat_pow_matches_naive(m, n):
    assert mat_pow(m, n).tolist() == matpow_naive(m.tolist(), n)


def test_zero_matrix():
    assert mat_pow(ZERO, 3) == ZERO
    assert det(ZERO) == 0
