"""
spt contains identity checks about the smallest parts function and the double
series built from the Bailey pair behind its generating function.
"""
from __future__ import annotations
import fractions
import functools
from typing import List, Tuple

from py_qpp import series as sr
from py_qpp import qtoolkit as qt
from py_qpp import combinatorics as cb
from . import IdentityCheck, Sides, bodies, coefficients


M = qt.Monomial

# enumeration of partitions bounds every check that counts smallest parts directly
SPT_ENUMERATION_LIMIT = 25


def _e4(order: int) -> sr.QSeries:
    # eta(tau)^4 / eta(2 tau)^2 has offset 0
    return qt.eta_quotient([(1, 4), (2, -2)], order).assert_integral()


def _theta_over_minus(order: int) -> sr.QSeries:
    # (q;q)_inf / (-q;q)_inf
    return qt.euler(order) / qt.qpoch_infinite(M(-1, 0, 1), order)


def blospt_term(n: int, order: int) -> sr.QSeries:
    """
    blospt_term returns q^n (q;q)_{n-1}^2 / (-q;q)_n^2 for n >= 1.

    Args:
        n (int): A positive index.
        order (int): The truncation order.

    Returns:
        QSeries: The n-th term.
    """
    if n > order:
        return sr.QSeries.zero(order)
    t = qt.qpoch_ratio((M.q(1), M.q(1)), (M(-1, 0, 1), M(-1, 0, 1)), n - 1, order)
    return t.div_binomial(1, 0, n).div_binomial(1, 0, n).shift(n)


def _inner_step(k: int, order: int) -> sr.QSeries:
    # q^k (5 + 6q^k + 5q^{2k}) / (1 - q^{2k})^2
    t = sr.QSeries.from_terms({k: 5, 2 * k: 6, 3 * k: 5}, order)
    return t.div_binomial(-1, 0, 2 * k).div_binomial(-1, 0, 2 * k)


def _inner_tail(n: int, order: int) -> sr.QSeries:
    # q^n / (1 + q^n)^2
    return sr.QSeries.from_terms({n: 1}, order).div_binomial(1, 0, n).div_binomial(1, 0, n)


@functools.lru_cache(maxsize=16)
def blospt_sums(order: int) -> Tuple[sr.QSeries, sr.QSeries]:
    """
    blospt_sums returns the pair (sum_{n>=1} B_n, sum_{n>=1} B_n I_n) where B_n is
    blospt_term(n) and I_n = sum_{k<n} q^k (5+6q^k+5q^{2k})/(1-q^{2k})^2 + q^n/(1+q^n)^2.

    Args:
        order (int): The truncation order.

    Returns:
        Tuple[QSeries, QSeries]: The single and the double series.
    """
    inner: List[sr.QSeries] = [sr.QSeries.zero(order)]
    partial = sr.QSeries.zero(order)
    for n in range(1, order + 1):
        inner.append(partial + _inner_tail(n, order))
        partial = partial + _inner_step(n, order)
    single = qt.sum_bivariate_terms(lambda n: blospt_term(n, order), order, start=1)
    double = qt.sum_bivariate_terms(lambda n: blospt_term(n, order) * inner[n], order, start=1)
    return single, double


class GfSpt(IdentityCheck):
    ID = "gf-spt"
    DESCRIPTION = "sum q^n/((1-q^n)^2 (q^{n+1};q)_inf) counts smallest parts"
    ANCHOR = "generating function of spt(n)"
    DEFAULT_ORDER = SPT_ENUMERATION_LIMIT
    MAX_ORDER = SPT_ENUMERATION_LIMIT

    def sides(self, order: int) -> Sides:
        return [(qt.spt_series(order), coefficients(cb.spt_count, order))]


class GfSptNew(IdentityCheck):
    ID = "gf-spt-new"
    DESCRIPTION = (
        "sum q^n/((1-q^n)^2 (q^{n+1};q)_inf) equals "
        "(1/(q;q)_inf)(L_all + sum (-1)^n q^{n(3n+1)/2}(1+q^n)/(1-q^n)^2)"
    )
    ANCHOR = "spt generating function through the pentagonal-weighted sum"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        def lhs_term(n: int) -> sr.QSeries:
            if n == 0:
                return sr.QSeries.zero(order)
            t = qt.qproduct(qt.ProductSpec.of([], [M.q(n + 1, 1)]), order)
            return t.div_binomial(-1, 0, n).div_binomial(-1, 0, n).shift(n)

        weighted = sr.QSeries.zero(order)
        n = 1
        while n * (3 * n + 1) // 2 <= order:
            t = sr.QSeries.from_terms({n * (3 * n + 1) // 2: (-1) ** n}, order)
            weighted = weighted + t.mul_binomial(1, 0, n).div_binomial(-1, 0, n).div_binomial(-1, 0, n)
            n += 1
        lhs = qt.sum_bivariate_terms(lhs_term, order)
        rhs = qt.partition_series(order) * (qt.lambert_all(order) + weighted)
        return [(lhs, rhs), (qt.spt_series(order), rhs)]


class SptPn(IdentityCheck):
    ID = "sptpn"
    DESCRIPTION = "spt(n) = n p(n) - N_2(n)/2"
    ANCHOR = "spt through the second rank moment"
    DEFAULT_ORDER = SPT_ENUMERATION_LIMIT
    MAX_ORDER = SPT_ENUMERATION_LIMIT

    def sides(self, order: int) -> Sides:
        rhs = coefficients(
            lambda n: n * cb.partition_count(n) - fractions.Fraction(cb.rank_moment2(n), 2), order
        )
        return [(coefficients(cb.spt_count, order), rhs)]


class WatsonSpl(IdentityCheck):
    ID = "watson-spl"
    DESCRIPTION = "sum (z,1/z;q)_n q^n/(q;q)_n as a product times a pentagonal-weighted sum"
    ANCHOR = "specialization of Watson's q-analogue of Whipple's theorem"
    DEFAULT_ORDER = 20

    def sides(self, order: int) -> Sides:
        z_pair = (M(1, 1, 0), M(1, -1, 0))
        zq_pair = (M(1, 1, 1), M(1, -1, 1))
        lhs = qt.sum_bivariate_terms(lambda n: qt.poch_ratio(z_pair, (M.q(1),), n, order).shift(n), order)

        def tail(n: int) -> sr.BivarSeries:
            if n == 0:
                return sr.BivarSeries.one(order)
            w = n * (3 * n + 1) // 2
            if w > order:
                return sr.BivarSeries.zero(order)
            t = qt.poch_ratio(z_pair, zq_pair, n, order).mul_binomial(1, 0, n)
            return (t * (-1) ** n).shift(w)

        spec = qt.ProductSpec([(zq_pair[0], 1), (zq_pair[1], 1), (M.q(1), -2)])
        rhs = qt.product(spec, order) * qt.sum_bivariate_terms(tail, order)
        return [(lhs, rhs)]


class Diff2(IdentityCheck):
    ID = "diff2"
    DESCRIPTION = "-1/2 [d^2/dz^2 (zq,q/z;q)_inf]_{z=1} equals (q;q)_inf^2 L_all"
    ANCHOR = "Andrews' differentiation identity"
    DEFAULT_ORDER = 30

    def sides(self, order: int) -> Sides:
        f = qt.product(qt.ProductSpec.of([M(1, 1, 1), M(1, -1, 1)]), order)
        lhs = f.diff_z().diff_z().eval_z(1) * fractions.Fraction(-1, 2)
        return [(lhs, qt.euler(order) ** 2 * qt.lambert_all(order))]


class BloSpt(IdentityCheck):
    ID = "blospt"
    DESCRIPTION = "4 sum q^n (q;q)_{n-1}^2/(-q;q)_n^2 equals 1 - eta(tau)^4/eta(2 tau)^2"
    ANCHOR = "spt-type double series through an eta quotient"
    DEFAULT_ORDER = 30

    def sides(self, order: int) -> Sides:
        single, _ = blospt_sums(order)
        lhs = 4 * single
        return [(lhs, 1 - _e4(order)), (lhs, 1 - _theta_over_minus(order) ** 2)]


class Th3(IdentityCheck):
    ID = "th3"
    DESCRIPTION = "5 sum B_n - 4 sum B_n I_n equals ((q;q)_inf/(-q;q)_inf)^2 (3 L_all + 2 L_odd)"
    ANCHOR = "double series with the inner sum of q^k(5+6q^k+5q^{2k})/(1-q^{2k})^2"
    DEFAULT_ORDER = 30

    def sides(self, order: int) -> Sides:
        single, double = blospt_sums(order)
        rhs = _theta_over_minus(order) ** 2 * (3 * qt.lambert_all(order) + 2 * qt.lambert_odd(order))
        return [(5 * single - 4 * double, rhs)]


class SptMod(IdentityCheck):
    ID = "spt-mod"
    DESCRIPTION = "4 sum B_n I_n equals 5/4 - 31/24 eta^4(tau)/eta^2(2tau) + 1/24 theta(tau)/eta(tau)"
    ANCHOR = "the double series as a weakly holomorphic form"
    DEFAULT_ORDER = 30

    def sides(self, order: int) -> Sides:
        _, double = blospt_sums(order)
        shimura = (qt.theta_shimura(order) / qt.eta_quotient([(1, 1)], order)).assert_integral()
        rhs = fractions.Fraction(5, 4) - fractions.Fraction(31, 24) * _e4(order) + fractions.Fraction(1, 24) * shimura
        return [(4 * double, rhs)]


class Ded13(IdentityCheck):
    ID = "ded13"
    DESCRIPTION = "4 sum B_n I_n equals -5/4 (E - 1) - E (5 L_all - 4 L_even) with E = eta^4(tau)/eta^2(2tau)"
    ANCHOR = "Lambert-series evaluation of the double series"
    DEFAULT_ORDER = 30

    def sides(self, order: int) -> Sides:
        _, double = blospt_sums(order)
        e4 = _e4(order)
        rhs = fractions.Fraction(-5, 4) * (e4 - 1) - e4 * (5 * qt.lambert_all(order) - 4 * qt.lambert_even(order))
        return [(4 * double, rhs)]


class EtaTheta(IdentityCheck):
    ID = "etatheta"
    DESCRIPTION = "eta(tau)^5/eta(2tau)^2 equals sum (n/12) n q^{n^2/24}"
    ANCHOR = "weight 3/2 eta quotient as a theta series"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        return [bodies(qt.eta_quotient([(1, 5), (2, -2)], order), qt.eta_theta_series(order))]
