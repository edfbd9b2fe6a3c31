"""
quintuple contains identity checks around the quintuple product D(z,q) and the
bivariate series S(z,q) whose z-derivatives at z = 1 produce spt-type series.
"""
from __future__ import annotations
import fractions
import math
from typing import Tuple

from py_qpp import series as sr
from py_qpp import qtoolkit as qt
from . import IdentityCheck, Sides
from .spt import blospt_sums


M = qt.Monomial

# z - 1 + z^-1
SPT_ANA_MULTIPLIER = sr.LaurentPoly({1: 1, 0: -1, -1: 1})

SAMPLE_POINTS: Tuple[sr.Rational, ...] = (2, fractions.Fraction(1, 2), -3)


def derivative_at_one(f: sr.BivarSeries, k: int) -> sr.QSeries:
    """
    derivative_at_one returns [d^k f / dz^k]_{z=1}.

    Args:
        f (BivarSeries): The series.
        k (int): The number of z-derivatives.

    Returns:
        QSeries: The specialized derivative.
    """
    for _ in range(k):
        f = f.diff_z()
    return f.eval_z(1)


def _lambert_mix(order: int) -> sr.QSeries:
    return 3 * qt.lambert_all(order) + 2 * qt.lambert_odd(order)


class DzqForms(IdentityCheck):
    ID = "dzq-forms"
    DESCRIPTION = "(zq,q/z;q)_inf (z^2q,q/z^2;q^2)_inf equals (q/z^2,z^2q;q)_inf/(-q/z,-zq;q)_inf"
    ANCHOR = "two product forms of D(z,q)"
    DEFAULT_ORDER = 20

    def sides(self, order: int) -> Sides:
        return [(qt.quintuple_d(order), qt.dtilde(order))]


class Qpi(IdentityCheck):
    ID = "qpi"
    DESCRIPTION = "sum q^{(3n^2+n)/2}(z^{3n}-z^{-3n-1}) equals (q,zq,q/z;q)_inf (z^2q,q/z^2;q^2)_inf (1-1/z)"
    ANCHOR = "quintuple product identity"
    DEFAULT_ORDER = 20

    def sides(self, order: int) -> Sides:
        spec = qt.ProductSpec.of([M.q(1)]) * qt.quintuple_spec()
        return [(qt.quintuple_lhs(order), qt.product(spec, order).mul_binomial(-1, -1, 0))]


class QpiHalf(IdentityCheck):
    ID = "qpi-half"
    DESCRIPTION = (
        "sum (z^{3n} q^{3n^2-2n} - z^{-3n-1} q^{(3n+1)(n+1)}) equals "
        "(q^2,zq,q/z;q^2)_inf (z^2q^4,q^4/z^2;q^4)_inf (1-z^2)"
    )
    ANCHOR = "quintuple product identity on base q^2"
    DEFAULT_ORDER = 20

    def sides(self, order: int) -> Sides:
        terms = {}
        bound = math.isqrt(order) + 2
        for n in range(-bound, bound + 1):
            a, b = 3 * n * n - 2 * n, (3 * n + 1) * (n + 1)
            if a <= order:
                terms[(3 * n, a)] = terms.get((3 * n, a), 0) + 1
            if b <= order:
                terms[(-3 * n - 1, b)] = terms.get((-3 * n - 1, b), 0) - 1
        lhs = sr.BivarSeries.from_terms(terms, order)
        spec = qt.ProductSpec.of([M.q(2), M(1, 1, 1, 2), M(1, -1, 1, 2), M(1, 2, 4, 4), M(1, -2, 4, 4)])
        return [(lhs, qt.product(spec, order).mul_binomial(-1, 2, 0))]


class QuintupleDeriv(IdentityCheck):
    ID = "quintuple-deriv"
    DESCRIPTION = "[d^2 D(z,q)/dz^2]_{z=1} equals -2 (q;q)_inf^2 (q;q^2)_inf^2 (3 L_all + 2 L_odd)"
    ANCHOR = "second z-derivative of the quintuple product at z = 1"
    DEFAULT_ORDER = 30

    def sides(self, order: int) -> Sides:
        lhs = derivative_at_one(qt.quintuple_d(order), 2)
        q_odd = qt.qpoch_infinite(M(1, 0, 1, 2), order)
        rhs = -2 * qt.euler(order) ** 2 * q_odd**2 * _lambert_mix(order)
        return [(lhs, rhs)]


class SptAna(IdentityCheck):
    ID = "spt-ana"
    DESCRIPTION = "(z - 1 + 1/z) S(z,q) equals 1 - (1-z)(1-1/z) D~(z,q)"
    ANCHOR = "S(z,q) through the quintuple-type product D~"
    DEFAULT_ORDER = 20
    MULTIPLIER = "z - 1 + z^-1"

    def sides(self, order: int) -> Sides:
        s = qt.s_series(order)
        dtilde = qt.dtilde(order)
        cleared = (s.scale(SPT_ANA_MULTIPLIER), 1 - dtilde.scale(sr.LaurentPoly({0: 2, 1: -1, -1: -1})))
        out = [cleared]
        # the uncleared form at rational points
        for v in SAMPLE_POINTS:
            inv = sr.reciprocal(v)
            k = (1 - v) * (1 - inv) * -sr.reciprocal(v * (1 - inv + inv * inv))
            tail = (1 + inv) * sr.reciprocal(v * (1 + inv**3))
            out.append((s.eval_z(v), dtilde.eval_z(v) * sr.rational(k) + sr.rational(tail)))
        return out


class Deri4th(IdentityCheck):
    ID = "deri4th"
    DESCRIPTION = "-1/24 [d^4 S(z,q)/dz^4]_{z=1} equals 5 sum B_n - 4 sum B_n I_n"
    ANCHOR = "fourth z-derivative of S(z,q) at z = 1"
    DEFAULT_ORDER = 20

    def sides(self, order: int) -> Sides:
        lhs = derivative_at_one(qt.s_series(order), 4) * fractions.Fraction(-1, 24)
        single, double = blospt_sums(order)
        return [(lhs, 5 * single - 4 * double)]


class DiffkLemma(IdentityCheck):
    ID = "diffk-lemma"
    DESCRIPTION = (
        "-(-1)^k/k! [d^k ((2-z-1/z) f)]_{z=1} equals sum_{l=2}^{k} (-1)^l/(l-2)! [d^{l-2} f]_{z=1}"
    )
    ANCHOR = "derivatives of (1-z)(1-1/z) f at z = 1"
    DEFAULT_ORDER = 20
    KS = (2, 3, 4)

    def sides(self, order: int) -> Sides:
        weight = sr.LaurentPoly({0: 2, 1: -1, -1: -1})
        fixtures = (
            qt.quintuple_d(order),
            qt.product(qt.ProductSpec.of([M(1, 1, 1), M(1, -1, 1)]), order),
            qt.s_series(order),
        )
        out = []
        for f in fixtures:
            g = f.scale(weight)
            for k in self.KS:
                lhs = derivative_at_one(g, k) * fractions.Fraction(-((-1) ** k), math.factorial(k))
                rhs = sr.QSeries.zero(order)
                for ell in range(2, k + 1):
                    rhs = rhs + derivative_at_one(f, ell - 2) * fractions.Fraction((-1) ** ell, math.factorial(ell - 2))
                out.append((lhs, rhs))
        return out
