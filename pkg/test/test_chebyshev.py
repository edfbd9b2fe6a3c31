"""
test_chebyshev contains tests for py_qpp/chebyshev.py
"""
import fractions

import pytest

import py_qpp as pq


F = fractions.Fraction


def test_u_poly_recurrence():
    """
    test_u_poly_recurrence tests the first values of U_n at an integer and a rational point.
    """
    assert [pq.u_poly(n, 2) for n in range(4)] == [1, 4, 15, 56]
    assert pq.u_poly(2, F(1, 3)) == F(-5, 9)


def test_u_poly_negative():
    """
    test_u_poly_negative tests U_{-1} = 0 and U_{-n} = -U_{n-2}.
    """
    assert pq.u_poly(-1, 3) == 0
    for n in range(2, 9):
        assert pq.u_poly(-n, F(1, 2)) == -pq.u_poly(n - 2, F(1, 2))


def test_u_half():
    """
    test_u_half tests the period-6 closed form against the recurrence for |n| <= 1000.
    """
    for n in range(-1000, 1001):
        assert pq.u_half(n) == pq.u_poly(n, F(1, 2)), n


def test_genfun():
    """
    test_genfun tests (sum U_m(1/2) z^m)(1 - z + z^2) = 1 up to the degree of the partial sum.
    """
    assert pq.genfun_check(1)
    assert pq.genfun_check(40)
    prod = pq.genfun_product(6)
    # only the two tail terms survive above degree 6
    assert {e for e, _ in prod.items()} <= {0, 7, 8}


def test_classify():
    """
    test_classify tests the interval endpoints on both branches.
    """
    # n = 2 = w_1
    assert [pq.classify(m, 2, 1).case_id for m in (-4, -3, 0, 1, 3, 4, 5)] == ["I1", "I2", "I3", "I4", "I4", "I5", "I6"]
    # n = 1 = w_{-1}
    assert [pq.classify(m, 1, -1).case_id for m in (-3, -2, 0, 1, 2, 3, 4)] == ["I1'", "I2'", "I3'", "I4'", "I4'", "I5'", "I6'"]
    with pytest.raises(pq.NotPentagonal):
        pq.classify(0, 3, 1)


def test_piecewise_values():
    """
    test_piecewise_values tests the hand-checked corner values of the piecewise formula.
    """
    assert pq.piecewise_coeff(0, 0) == 1
    assert pq.piecewise_coeff(-2, 1) == -1
    assert pq.piecewise_coeff(-4, 2) == 0
    assert pq.piecewise_coeff(-100, 26) == 0
    assert all(pq.piecewise_coeff(m, 3) == 0 for m in range(-20, 20))


@pytest.mark.parametrize("n", [0, 1, 2, 5, 7])
def test_piecewise_against_series(n: int):
    """
    test_piecewise_against_series tests the piecewise formula against the coefficients of
    (q;q)_inf * S(z,q) over a window of m.

    Args:
        n (int): A pentagonal power of q.
    """
    product = pq.euler(n) * pq.s_series(n)
    for m in range(-3 * n - 5, 3 * n + 16):
        assert pq.piecewise_coeff(m, n) == product.coeff(m, n)
