"""
hypergeometric contains identity checks for the basic hypergeometric sum with
parameters alpha, beta, gamma and its specializations.
"""
from __future__ import annotations
import fractions
from typing import Tuple

from py_qpp import series as sr
from py_qpp import qtoolkit as qt
from . import IdentityCheck, Sides


M = qt.Monomial
F = fractions.Fraction

# (alpha, beta, gamma) away from 0, alpha q, gamma q, q^-j and alpha gamma q^{j+2}
MAIN_ID_GRID: Tuple[Tuple[sr.Rational, sr.Rational, sr.Rational], ...] = (
    (2, 3, 5),
    (F(1, 2), -1, F(1, 3)),
    (3, -2, F(1, 5)),
    (-1, 7, 2),
    (F(1, 3), 5, F(-1, 2)),
    (5, F(1, 2), -3),
)

CHAN_MAO_GRID: Tuple[sr.Rational, ...] = (2, F(1, 2), -3)


def main_id_sides(alpha: sr.Rational, beta: sr.Rational, gamma: sr.Rational, order: int) -> Tuple[sr.QSeries, sr.QSeries]:
    """
    main_id_sides returns both sides of
    sum (alpha, gamma;q)_n q^n / (beta, alpha gamma q^2/beta;q)_n
      = (1-alpha)(1-gamma) q (alpha q, gamma q;q)_inf / ((1-beta) beta (beta q, alpha gamma q^2/beta;q)_inf (1-alpha q/beta)(1-gamma q/beta))
      + (1-q/beta)(1-alpha gamma q/beta) / ((1-alpha q/beta)(1-gamma q/beta)).

    Args:
        alpha (sr.Rational): The parameter alpha.
        beta (sr.Rational): The parameter beta, neither 0 nor 1.
        gamma (sr.Rational): The parameter gamma.
        order (int): The truncation order.

    Returns:
        Tuple[QSeries, QSeries]: The left and right sides.
    """
    a, b, c = sr.rational(alpha), sr.rational(beta), sr.rational(gamma)
    ac_b = sr.rational(F(a) * c / b)
    a_b, c_b, inv_b = sr.rational(F(a) / b), sr.rational(F(c) / b), sr.reciprocal(b)

    numer, denom = (M(a), M(c)), (M(b), M(ac_b, 0, 2))
    lhs = qt.sum_bivariate_terms(lambda n: qt.qpoch_ratio(numer, denom, n, order).shift(n), order)

    spec = qt.ProductSpec.of([M(a, 0, 1), M(c, 0, 1)], [M(b, 0, 1), M(ac_b, 0, 2)])
    scalar = F((1 - a) * (1 - c)) / (1 - b) * inv_b
    first = (qt.qproduct(spec, order) * sr.rational(scalar)).shift(1)
    first = first.div_binomial(-a_b, 0, 1).div_binomial(-c_b, 0, 1)
    second = sr.QSeries.one(order).mul_binomial(-inv_b, 0, 1).mul_binomial(-ac_b, 0, 1)
    second = second.div_binomial(-c_b, 0, 1).div_binomial(-a_b, 0, 1)
    return lhs, first + second


class MainId(IdentityCheck):
    ID = "main-id"
    DESCRIPTION = "sum (alpha,gamma;q)_n q^n/(beta,alpha gamma q^2/beta;q)_n in closed form"
    ANCHOR = "a three-parameter basic hypergeometric summation"
    DEFAULT_ORDER = 30

    def sides(self, order: int) -> Sides:
        return [main_id_sides(a, b, c, order) for a, b, c in MAIN_ID_GRID]


def _xq_pair(x: sr.Rational) -> Tuple[qt.Monomial, qt.Monomial]:
    # xq and q/x
    return M(x, 0, 1), M(sr.reciprocal(x), 0, 1)


Z_PAIR_Q = (M(1, 1, 1), M(1, -1, 1))


class ChanMao1(IdentityCheck):
    ID = "chan-mao-1"
    DESCRIPTION = "sum (x,1/x;q)_n q^n/(zq,q/z;q)_n after clearing (1-z/x)(1-xz)"
    ANCHOR = "Chan and Mao's first identity"
    DEFAULT_ORDER = 20
    MULTIPLIER = "1 - (x + 1/x) z + z^2"

    def sides(self, order: int) -> Sides:
        out = []
        for x in CHAN_MAO_GRID:
            inv = sr.reciprocal(x)
            multiplier = sr.LaurentPoly({0: 1, 1: -(x + inv), 2: 1})
            numer = (M(x), M(inv))
            total = qt.sum_bivariate_terms(lambda n: qt.poch_ratio(numer, Z_PAIR_Q, n, order).shift(n), order)
            ratio = qt.product(qt.ProductSpec.of(_xq_pair(x), Z_PAIR_Q), order)
            k = sr.rational((1 - x) * (1 - inv))
            rhs = ratio.scale(sr.LaurentPoly({1: k})) + sr.LaurentPoly({0: 1, 1: -2, 2: 1})
            out.append((total.scale(multiplier), rhs))
        return out


class ChanMao2(IdentityCheck):
    ID = "chan-mao-2"
    DESCRIPTION = "sum (x,q/x;q)_n q^n/(z,q/z;q)_{n+1} after clearing (1-z)(x-z)"
    ANCHOR = "Chan and Mao's second identity"
    DEFAULT_ORDER = 20
    MULTIPLIER = "(1 - z)(x - z)"

    def sides(self, order: int) -> Sides:
        out = []
        for x in CHAN_MAO_GRID:
            inv = sr.reciprocal(x)
            numer = (M(x), M(inv, 0, 1))

            def term(n: int) -> sr.BivarSeries:
                t = qt.poch_ratio(numer, Z_PAIR_Q, n, order)
                return t.div_binomial(-1, -1, n + 1).shift(n)

            lhs = qt.sum_bivariate_terms(term, order).scale(sr.LaurentPoly({0: x, 1: -1}))
            ratio = qt.product(qt.ProductSpec.of(_xq_pair(x), Z_PAIR_Q), order)
            rhs = (ratio * sr.rational(x - 1) + sr.LaurentPoly({0: 1, 1: -1})).div_binomial(-inv, -1, 1)
            out.append((lhs, rhs))
        return out


class Bibasic1(IdentityCheck):
    ID = "bibasic-1"
    DESCRIPTION = "4 sum (-q;q)_{n-1}^2 q^n/(-q^2;q^2)_n in three product forms"
    ANCHOR = "closed-form evaluation of a bibasic sum"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        # (-q;q)_{n-1}^2 = (-1;q)_n^2 / 4, so the leading 4 cancels
        numer, denom = (M(-1), M(-1)), (M(-1, 0, 2, 2),)
        lhs = qt.sum_bivariate_terms(lambda n: qt.qpoch_ratio(numer, denom, n, order).shift(n), order)
        legs = (
            qt.ProductSpec([(M(-1, 0, 1), 2), (M(-1, 0, 2, 2), -1)]),
            qt.ProductSpec([(M.q(2), 3), (M.q(1), -2), (M.q(4), -1)]),
            qt.ProductSpec([(M(1, 0, 2, 4), 1), (M(1, 0, 1, 2), -2)]),
        )
        return [(lhs, 2 * qt.qproduct(spec, order) - 1) for spec in legs]


class Bibasic2(IdentityCheck):
    ID = "bibasic-2"
    DESCRIPTION = "1 + 3 sum (-q;q)_n (q^3;q^3)_{n-1} q^n/((q;q)_{n-1} (-q^3;q^3)_n) in product form"
    ANCHOR = "closed-form evaluation of a sum mixing bases q and q^3"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        numer, denom = (M(-1, 0, 1), M.q(3)), (M.q(1), M(-1, 0, 3, 3))

        def term(n: int) -> sr.QSeries:
            if n == 0:
                return sr.QSeries.zero(order)
            t = qt.qpoch_ratio(numer, denom, n - 1, order)
            return t.mul_binomial(1, 0, n).div_binomial(1, 0, 3 * n).shift(n)

        lhs = 1 + 3 * qt.sum_bivariate_terms(term, order)
        spec = qt.ProductSpec.of([M.q(3), M(-1, 0, 1)], [M(-1, 0, 3, 3), M.q(1)])
        rhs = F(3, 2) * qt.qproduct(spec, order) - F(1, 2)
        return [(lhs, rhs)]
