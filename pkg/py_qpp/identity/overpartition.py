"""
overpartition contains identity checks that compare the overpartition pair rank table
with the bivariate series S(z,q) and with the Chebyshev description of its coefficients.
"""
from __future__ import annotations
import fractions
from typing import Dict, Iterable, Set

from py_qpp import series as sr
from py_qpp import qtoolkit as qt
from py_qpp import combinatorics as cb
from py_qpp import chebyshev as ch
from . import IdentityCheck, Sides, coefficients, reflect


# checks backed by the N-table enumerate every overpartition pair up to their order
NTABLE_DEFAULT_ORDER = 8
NTABLE_MAX_ORDER = 15

SYMMETRY_WEIGHTS = ((1, 1), (2, 3))


def _table(order: int) -> cb.NTable:
    return cb.build_ntable(order)


def _signed_series(table: cb.NTable, order: int) -> sr.BivarSeries:
    return sr.BivarSeries([sr.LaurentPoly(table.signed_coefficients(n)) for n in range(order + 1)])


def _weighted_series(table: cb.NTable, d: sr.Rational, e: sr.Rational, order: int) -> sr.BivarSeries:
    return sr.BivarSeries([table.generating_coefficient(d, e, n) for n in range(order + 1)])


class PairCount(IdentityCheck):
    ID = "pair-count"
    DESCRIPTION = "the number of overpartition pairs of n has generating function (-q;q)_inf^2/(q;q)_inf^2"
    ANCHOR = "overpartition pair enumeration"
    DEFAULT_ORDER = NTABLE_DEFAULT_ORDER
    MAX_ORDER = NTABLE_MAX_ORDER

    def sides(self, order: int) -> Sides:
        table = _table(order)
        return [(coefficients(table.total, order), qt.overpartition_pair_series(order))]


class BloRank(IdentityCheck):
    ID = "blorank"
    DESCRIPTION = "sum N(r,s,m,n) d^r e^s z^m q^n equals sum (-1/d,-1/e;q)_n (deq)^n/(zq,q/z;q)_n"
    ANCHOR = "rank generating function of overpartition pairs"
    DEFAULT_ORDER = NTABLE_DEFAULT_ORDER
    MAX_ORDER = NTABLE_MAX_ORDER

    def sides(self, order: int) -> Sides:
        table = _table(order)
        return [
            (_weighted_series(table, d, e, order), cb.blorank_series(d, e, order)) for d, e in cb.CALIBRATION_GRID
        ]


class CorBlo(IdentityCheck):
    ID = "corblo"
    DESCRIPTION = "the z^m q^n coefficient of S(z,q) is sum_{r,s} (-1)^{r+s+m} N(r,s,m-2s+2r,n)"
    ANCHOR = "S(z,q) as a signed count of overpartition pairs"
    DEFAULT_ORDER = NTABLE_DEFAULT_ORDER
    MAX_ORDER = NTABLE_MAX_ORDER

    def sides(self, order: int) -> Sides:
        return [(qt.s_series(order), _signed_series(_table(order), order))]


def _support(a: sr.LaurentPoly) -> Set[int]:
    return {m for m, _ in a.items()}


def _rows(order: int, value, windows: Iterable[Set[int]]) -> sr.BivarSeries:
    rows: Dict[int, Dict[int, sr.Rational]] = {}
    for n, window in zip(range(order + 1), windows):
        rows[n] = {m: value(m, n) for m in window}
    return sr.BivarSeries([sr.LaurentPoly(rows[n]) for n in range(order + 1)])


class BloCoeff(IdentityCheck):
    """
    BloCoeff compares the coefficients of (q;q)_inf S(z,q) with the piecewise Chebyshev
    formula over every q-power, and with the pentagonal multi-sum of the N-table where
    the table reaches.
    """

    ID = "blocoeff"
    DESCRIPTION = "coefficients of (q;q)_inf S(z,q) agree with the Chebyshev piecewise formula and the N-table multi-sum"
    ANCHOR = "coefficients of (q;q)_inf S(z,q) at pentagonal powers of q"
    DEFAULT_ORDER = 26
    TABLE_ORDER = NTABLE_DEFAULT_ORDER

    def sides(self, order: int) -> Sides:
        lhs = qt.euler(order) * qt.s_series(order)
        windows = [set(range(-3 * n - 5, 3 * n + 16)) | _support(lhs[n]) for n in range(order + 1)]
        piecewise = _rows(order, ch.piecewise_coeff, windows)
        cap = min(order, self.TABLE_ORDER)
        table = _table(cap)
        multisum = _rows(cap, lambda m, n: cb.blocoeff_multisum(m, n, table), windows)
        return [(lhs, piecewise), (lhs.truncate(cap), multisum)]


class IdenP(IdentityCheck):
    ID = "idenp"
    DESCRIPTION = (
        "-1/24 sum_j a(j) sum (-1)^{r+s+m} m^2(m^2+11) N(r,s,m-2s+2r,n-j) equals "
        "sum_k (-1)^k (3(n-k^2) p(n-k^2) - 2n(-1)^n p(n-2k^2))"
    )
    ANCHOR = "fourth rank moment of overpartition pairs through p(n)"
    DEFAULT_ORDER = 10
    MAX_ORDER = NTABLE_MAX_ORDER

    def sides(self, order: int) -> Sides:
        table = _table(order)
        lhs = coefficients(lambda n: cb.idenp_lhs(n, table), order, start=1)
        rhs = coefficients(cb.idenp_rhs, order, start=1)
        return [(lhs, rhs)]


class Symmetry(IdentityCheck):
    ID = "symmetry"
    DESCRIPTION = "N(r,s,m,n) = N(r,s,-m,n) and the signed coefficients of S(z,q) are even in m"
    ANCHOR = "z -> 1/z invariance of the overpartition pair rank generating function"
    DEFAULT_ORDER = NTABLE_DEFAULT_ORDER
    MAX_ORDER = NTABLE_MAX_ORDER

    def sides(self, order: int) -> Sides:
        table = _table(order)
        out = []
        for d, e in SYMMETRY_WEIGHTS:
            weighted = _weighted_series(table, d, e, order)
            out.append((weighted, reflect(weighted)))
        signed = _signed_series(table, order)
        out.append((signed, reflect(signed)))
        return out


class Symmetry1(IdentityCheck):
    ID = "symmetry1"
    DESCRIPTION = "sum_m m(m-1)(m-2)(m-3) c(m,n) equals sum_m m^2(m^2+11) c(m,n) for the coefficients of S(z,q)"
    ANCHOR = "symmetrization of the fourth falling moment"
    DEFAULT_ORDER = 20

    def sides(self, order: int) -> Sides:
        s = qt.s_series(order)

        def moment(weight):
            return coefficients(lambda n: sum(weight(m) * c for m, c in s[n].items()), order)

        return [(moment(cb.falling_weight), moment(cb.fourth_moment_weight))]


class ChebyshevGenfun(IdentityCheck):
    ID = "chebyshev-genfun"
    DESCRIPTION = "sum U_m(1/2) z^m equals 1/(1 - z + z^2)"
    ANCHOR = "generating function of Chebyshev polynomials of the second kind"
    DEFAULT_ORDER = 40

    def sides(self, order: int) -> Sides:
        prod = ch.genfun_product(order)
        half = fractions.Fraction(1, 2)
        return [
            (coefficients(prod.coeff, order), sr.QSeries.one(order)),
            (coefficients(ch.u_half, order), coefficients(lambda m: ch.u_poly(m, half), order)),
        ]
