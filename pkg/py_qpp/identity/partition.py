"""
partition contains identity checks about p(n), self-conjugate partitions and the
classical product expansions around Euler's product.
"""
from __future__ import annotations

from py_qpp import series as sr
from py_qpp import qtoolkit as qt
from py_qpp import combinatorics as cb
from . import IdentityCheck, Sides, coefficients


M = qt.Monomial


def _minus_q(order: int) -> sr.QSeries:
    # (-q;q)_inf
    return qt.qpoch_infinite(M(-1, 0, 1), order)


def _q_odd(order: int) -> sr.QSeries:
    # (q;q^2)_inf
    return qt.qpoch_infinite(M(1, 0, 1, 2), order)


def _euler_of(step: int, order: int) -> sr.QSeries:
    # (q^step;q^step)_inf
    return qt.qpoch_infinite(M.q(step), order)


def _selfconj_series(order: int) -> sr.QSeries:
    return coefficients(cb.selfconj_count, order)


class Pentagonal(IdentityCheck):
    ID = "pentagonal"
    DESCRIPTION = "(q;q)_inf equals the pentagonal-number series"
    ANCHOR = "Euler's pentagonal number theorem"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        return [(qt.euler(order), qt.pentagonal_series(order))]


class GfPar(IdentityCheck):
    ID = "gfpar"
    DESCRIPTION = "sum p(n) q^n equals 1/(q;q)_inf"
    ANCHOR = "Euler's generating function for p(n)"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        return [(coefficients(cb.partition_count, order), qt.partition_series(order))]


class EulerProduct(IdentityCheck):
    ID = "euler-product"
    DESCRIPTION = "(q;q)_inf (-q;q)_inf equals (q^2;q^2)_inf"
    ANCHOR = "Euler's product identity"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        return [(qt.euler(order) * _minus_q(order), _euler_of(2, order))]


class Gordon(IdentityCheck):
    ID = "gordon"
    DESCRIPTION = "sum (6n+1) q^{(3n^2+n)/2} equals (q;q)_inf^3 (q;q^2)_inf^2"
    ANCHOR = "Ramanujan's identity proved by Gordon"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        return [(qt.gordon_series(order), qt.euler(order) ** 3 * _q_odd(order) ** 2)]


class Jtp(IdentityCheck):
    ID = "jtp"
    DESCRIPTION = "1 + 2 sum (-1)^j q^{j^2} equals (q;q)_inf/(-q;q)_inf"
    ANCHOR = "Jacobi triple product"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        return [(qt.jtp_square_series(order), qt.euler(order) / _minus_q(order))]


class Psi(IdentityCheck):
    ID = "psi"
    DESCRIPTION = "sum q^{2n^2-n} equals (q^2;q^2)_inf^2/(q;q)_inf"
    ANCHOR = "Gauss' triangular series identity"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        return [(qt.psi_series(order), _euler_of(2, order) ** 2 * qt.partition_series(order))]


def _mod8(a: int, b: int) -> qt.ProductSpec:
    # (-q^a, -q^b, q^8;q^8)_inf / (q;q)_inf^2
    return qt.ProductSpec([(M(-1, 0, a, 8), 1), (M(-1, 0, b, 8), 1), (M.q(8), 1), (M.q(1), -2)])


class DissparEven(IdentityCheck):
    ID = "disspar-even"
    DESCRIPTION = "sum p(2n) q^n equals (-q^3,-q^5,q^8;q^8)_inf/(q;q)_inf^2"
    ANCHOR = "2-dissection of Gauss' triangular series"
    DEFAULT_ORDER = 30

    def sides(self, order: int) -> Sides:
        lhs = coefficients(lambda n: cb.partition_count(2 * n), order)
        return [(lhs, qt.qproduct(_mod8(3, 5), order))]


class DissparOdd(IdentityCheck):
    ID = "disspar-odd"
    DESCRIPTION = "sum p(2n+1) q^n equals (-q,-q^7,q^8;q^8)_inf/(q;q)_inf^2"
    ANCHOR = "2-dissection of Gauss' triangular series"
    DEFAULT_ORDER = 30

    def sides(self, order: int) -> Sides:
        lhs = coefficients(lambda n: cb.partition_count(2 * n + 1), order)
        return [(lhs, qt.qproduct(_mod8(1, 7), order))]


def _slater_sum(order: int, odd: bool) -> sr.QSeries:
    # sum q^{2n^2+2n*odd} / (q;q)_{2n+odd}
    def term(n: int) -> sr.QSeries:
        e = 2 * n * n + (2 * n if odd else 0)
        if e > order:
            return sr.QSeries.zero(order)
        return qt.qpoch_ratio((), (M.q(1),), 2 * n + int(odd), order).shift(e)

    return qt.sum_bivariate_terms(term, order)


class _Slater(IdentityCheck):
    ODD = False
    DEFAULT_ORDER = 25

    def sides(self, order: int) -> Sides:
        r = int(self.ODD)
        lhs = coefficients(lambda n: cb.selfconj_count(2 * n + r), order)
        a, b = (1, 7) if self.ODD else (3, 5)
        product = qt.qproduct(
            qt.ProductSpec([(M(-1, 0, a, 8), 1), (M(-1, 0, b, 8), 1), (M.q(8), 1), (M.q(2), -1)]), order
        )
        p_dissected = coefficients(lambda n: cb.partition_count(2 * n + r), order)
        theta = qt.euler(order) / _minus_q(order)
        return [
            (lhs, _slater_sum(order, self.ODD)),
            (lhs, product),
            (lhs, theta * p_dissected),
        ]


class Slater38(_Slater):
    ID = "slater-38"
    DESCRIPTION = "sum p_sc(2n) q^n equals sum q^{2n^2}/(q;q)_{2n} and its product forms"
    ANCHOR = "Slater's identity 38"


class Slater39(_Slater):
    ID = "slater-39"
    DESCRIPTION = "sum p_sc(2n+1) q^n equals sum q^{2n^2+2n}/(q;q)_{2n+1} and its product forms"
    ANCHOR = "Slater's identity 39"
    ODD = True


class SelfConjGf(IdentityCheck):
    ID = "selfconj-gf"
    DESCRIPTION = "sum p_sc(n) q^n equals (-q;q^2)_inf and sum q^{n^2}/(q^2;q^2)_n"
    ANCHOR = "self-conjugate partitions and distinct odd parts"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        lhs = _selfconj_series(order)

        def term(n: int) -> sr.QSeries:
            if n * n > order:
                return sr.QSeries.zero(order)
            return qt.qpoch_ratio((), (M.q(2),), n, order).shift(n * n)

        return [
            (lhs, qt.qpoch_infinite(M(-1, 0, 1, 2), order)),
            (lhs, qt.sum_bivariate_terms(term, order)),
        ]


class Claim1(IdentityCheck):
    ID = "claim1"
    DESCRIPTION = "p_sc(n) = p(n) + 2 sum_{j>=1} (-1)^j p(n-2j^2)"
    ANCHOR = "self-conjugate partitions through p(n)"
    DEFAULT_ORDER = 100

    def sides(self, order: int) -> Sides:
        def rhs(n: int) -> int:
            total = cb.partition_count(n)
            j = 1
            while 2 * j * j <= n:
                total += 2 * (-1) ** j * cb.partition_count(n - 2 * j * j)
                j += 1
            return total

        return [(_selfconj_series(order), coefficients(rhs, order))]


class ParLemma(IdentityCheck):
    ID = "parlemma"
    DESCRIPTION = "sum a(n) q^n equals (-q;q)_inf/(q;q)_inf^2"
    ANCHOR = "alternating convolution of p(n)"
    DEFAULT_ORDER = 30

    def sides(self, order: int) -> Sides:
        rhs = _minus_q(order) * qt.partition_series(order) ** 2
        return [(coefficients(cb.a_of_n, order), rhs)]


class ParLemmaOdd(IdentityCheck):
    ID = "parlemma-odd"
    DESCRIPTION = "sum_{k<=2n+1} (-1)^k p(k) p(2n+1-k) vanishes"
    ANCHOR = "alternating convolution of p(n), odd companion"
    DEFAULT_ORDER = 30

    def sides(self, order: int) -> Sides:
        return [(coefficients(cb.a_of_n_odd, order), sr.QSeries.zero(order))]


class DiffEuler(IdentityCheck):
    ID = "diffeuler"
    DESCRIPTION = "sum n p(n) q^n equals (1/(q;q)_inf) sum n q^n/(1-q^n)"
    ANCHOR = "logarithmic derivative of Euler's product"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        lhs = qt.partition_series(order).q_derivative()
        return [(lhs, qt.partition_series(order) * qt.lambert_all(order))]


def _signed_n_psc(order: int) -> sr.QSeries:
    # sum (-1)^n n p_sc(n) q^n
    return coefficients(lambda n: (-1) ** n * n * cb.selfconj_count(n), order)


class DiffPsc(IdentityCheck):
    ID = "diffpsc"
    DESCRIPTION = "sum (-1)^n n p_sc(n) q^n equals -(q;q^2)_inf sum over odd n of n q^n/(1-q^n)"
    ANCHOR = "logarithmic derivative of (-q;q^2)_inf"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        return [(_signed_n_psc(order), -(_q_odd(order) * qt.lambert_odd(order)))]


class LogDiffSp(IdentityCheck):
    ID = "logdiffsp"
    DESCRIPTION = "3 L_all + 2 L_odd equals 3 (q;q)_inf sum n p(n) q^n - 2 (-q;q)_inf sum (-1)^n n p_sc(n) q^n"
    ANCHOR = "Lambert series through p(n) and p_sc(n)"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        lhs = 3 * qt.lambert_all(order) + 2 * qt.lambert_odd(order)
        n_p = coefficients(lambda n: n * cb.partition_count(n), order)
        rhs = 3 * qt.euler(order) * n_p - 2 * _minus_q(order) * _signed_n_psc(order)
        return [(lhs, rhs)]
