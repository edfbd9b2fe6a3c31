"""
test_series contains tests for py_qpp/series.py
"""
import fractions
import json
import random

import pytest

import py_qpp as pq

from .conftest import random_rational

F = fractions.Fraction
CASES = 200
ORDER = 8


def _random_qseries(rng: random.Random, order: int = ORDER) -> pq.QSeries:
    return pq.QSeries([random_rational(rng) for _ in range(order + 1)])


def _random_laurent(rng: random.Random) -> pq.LaurentPoly:
    return pq.LaurentPoly({e: random_rational(rng) for e in range(rng.randint(-2, 0), rng.randint(0, 2) + 1)})


def _random_bivar(rng: random.Random, order: int = ORDER) -> pq.BivarSeries:
    return pq.BivarSeries([_random_laurent(rng) for _ in range(order + 1)])


def _unit_bivar(rng: random.Random) -> pq.BivarSeries:
    s = _random_bivar(rng)
    head = pq.LaurentPoly.monomial(rng.choice([1, -2, F(1, 3)]), rng.randint(-2, 2))
    return pq.BivarSeries((head,) + s.coeffs[1:])


class TestRational:
    """
    TestRational is the collection of tests of the exact rational helpers.
    """

    def test_rational(self) -> None:
        assert pq.rational(F(6, 3)) == 2
        assert type(pq.rational(F(6, 3))) is int
        assert pq.rational("-3/4") == F(-3, 4)
        with pytest.raises(TypeError):
            pq.rational(True)
        with pytest.raises(TypeError):
            pq.rational(0.5)

    def test_format_rational(self) -> None:
        assert pq.format_rational(F(-3, 4)) == "-3/4"
        assert pq.format_rational(7) == "7"
        assert pq.reciprocal(F(2, 3)) == F(3, 2)
        assert pq.reciprocal(-1) == -1


class TestLaurentPoly:
    """
    TestLaurentPoly is the collection of tests of Laurent polynomials in z.
    """

    def test_zero_terms_dropped(self) -> None:
        p = pq.LaurentPoly({-1: 0, 0: 2, 3: F(1, 2)})
        assert p.terms == {0: 2, 3: F(1, 2)}
        assert (p - p).is_zero

    def test_mul(self) -> None:
        # (z + 1/z)(z - 1/z) = z^2 - z^-2
        p = pq.LaurentPoly({1: 1, -1: 1}) * pq.LaurentPoly({1: 1, -1: -1})
        assert p == pq.LaurentPoly({2: 1, -2: -1})

    def test_diff(self) -> None:
        p = pq.LaurentPoly({-2: 1, 0: 5, 3: 2})
        assert p.diff() == pq.LaurentPoly({-3: -2, 2: 6})

    def test_evaluate(self) -> None:
        p = pq.LaurentPoly({-1: 1, 0: -1, 1: 1})
        assert p.evaluate(1) == 1
        assert p.evaluate(2) == F(3, 2)
        with pytest.raises(pq.ZeroSubstitutionWithNegativeExponent):
            p.evaluate(0)
        assert pq.LaurentPoly({0: 3, 2: 1}).evaluate(0) == 3

    def test_inverse(self) -> None:
        assert pq.LaurentPoly({3: F(2, 5)}).inverse() == pq.LaurentPoly({-3: F(5, 2)})
        with pytest.raises(pq.NonUnitConstantTerm):
            pq.LaurentPoly({0: 1, 1: 1}).inverse()

    def test_str(self) -> None:
        assert str(pq.LaurentPoly({0: 2, 2: -1, -2: -1})) == "2 - z^2 - z^-2"
        assert str(pq.LaurentPoly()) == "0"


class TestRingAxioms:
    """
    TestRingAxioms is the collection of tests that truncated series form a commutative ring.
    """

    def test_qseries(self, rng: random.Random) -> None:
        for _ in range(CASES):
            a, b, c = (_random_qseries(rng) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a - a == pq.QSeries.zero(ORDER)
            assert a * pq.QSeries.one(ORDER) == a

    def test_bivar(self, rng: random.Random) -> None:
        for _ in range(CASES):
            a, b, c = (_random_bivar(rng) for _ in range(3))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_mixed_operands(self, rng: random.Random) -> None:
        a = _random_qseries(rng)
        b = _random_bivar(rng)
        assert a * b == a.lift() * b
        assert b + a == b + a.lift()
        assert F(1, 2) * a == a * F(1, 2)
        p = pq.LaurentPoly({1: 1})
        assert p * b == b.scale(p)

    def test_mixed_order_truncates(self) -> None:
        a = pq.QSeries.one(10)
        b = pq.QSeries.one(4)
        assert (a + b).order == 4
        assert (a * b).order == 4


class TestInvert:
    """
    TestInvert is the collection of tests of series inversion.
    """

    def test_qseries(self, rng: random.Random) -> None:
        for _ in range(CASES):
            a = _random_qseries(rng) + 1
            if a[0] == 0:
                continue
            assert a * a.invert() == pq.QSeries.one(ORDER)

    def test_bivar(self, rng: random.Random) -> None:
        for _ in range(CASES):
            a = _unit_bivar(rng)
            assert a * pq.invert(a) == pq.BivarSeries.one(ORDER)

    def test_non_unit(self) -> None:
        with pytest.raises(pq.NonUnitConstantTerm):
            pq.QSeries([0, 1, 2]).invert()
        with pytest.raises(pq.NonUnitConstantTerm):
            pq.BivarSeries([{0: 1, 1: 1}, {0: 1}]).invert()

    def test_geometric(self) -> None:
        assert pq.QSeries([1, -1, 0, 0, 0]).invert() == pq.QSeries([1, 1, 1, 1, 1])


class TestBinomial:
    """
    TestBinomial is the collection of tests of the linear-time binomial kernels.
    """

    def test_div_undoes_mul(self, rng: random.Random) -> None:
        a = _random_bivar(rng)
        for c, e, k in ((-1, 1, 1), (F(2, 3), -2, 2), (3, 0, 5)):
            assert a.mul_binomial(c, e, k).div_binomial(c, e, k) == a

    def test_mul_matches_product(self) -> None:
        a = pq.QSeries([1, 2, 3, 4, 5])
        factor = pq.QSeries.from_terms({0: 1, 2: -3}, 4)
        assert a.mul_binomial(-3, 0, 2) == a * factor

    def test_div_k0(self) -> None:
        a = pq.QSeries([1, 2, 3])
        assert a.div_binomial(1, 0, 0) == a * F(1, 2)
        with pytest.raises(pq.NonUnitConstantTerm):
            a.div_binomial(-1, 0, 0)
        with pytest.raises(pq.NonUnitConstantTerm):
            pq.BivarSeries.one(3).div_binomial(1, 1, 0)

    def test_z_on_qseries(self) -> None:
        with pytest.raises(ValueError):
            pq.QSeries([1, 1]).mul_binomial(1, 1, 1)


class TestDiffEval:
    """
    TestDiffEval is the collection of tests of z-differentiation and substitution.
    """

    def test_leibniz(self, rng: random.Random) -> None:
        for _ in range(CASES // 2):
            a, b = _random_bivar(rng), _random_bivar(rng)
            assert pq.diff_z(a * b) == pq.diff_z(a) * b + a * pq.diff_z(b)

    def test_eval_is_homomorphism(self, rng: random.Random) -> None:
        a, b = _random_bivar(rng), _random_bivar(rng)
        for v in (1, -1, F(2, 3)):
            assert pq.eval_z(a * b, v) == pq.eval_z(a, v) * pq.eval_z(b, v)

    def test_eval_zero(self) -> None:
        a = pq.BivarSeries([{0: 1}, {-1: 1, 1: 1}])
        with pytest.raises(pq.ZeroSubstitutionWithNegativeExponent):
            pq.eval_z(a, 0)

    def test_coeff(self) -> None:
        # the q^1 term of S(z,q) is 2 - z^2 - z^-2
        a = pq.BivarSeries([{0: 1}, {0: 2, 2: -1, -2: -1}])
        assert pq.coeff(a, 2, 1) == -1
        assert pq.coeff(a, 5, 1) == 0
        with pytest.raises(pq.OrderExceeded):
            pq.coeff(a, 0, 2)
        assert pq.coeff(pq.QSeries([1, 4]), 0, 1) == 4
        assert pq.coeff(pq.QSeries([1, 4]), 1, 1) == 0


class TestShiftTruncate:
    """
    TestShiftTruncate is the collection of tests of q-shifts and truncation.
    """

    def test_shift(self) -> None:
        a = pq.QSeries([1, 2, 3, 4])
        assert a.shift(2) == pq.QSeries([0, 0, 1, 2])
        assert a.shift(9) == pq.QSeries.zero(3)
        assert a.valuation() == 0
        assert a.shift(2).valuation() == 2
        assert pq.QSeries.zero(3).valuation() is None

    def test_truncate(self) -> None:
        a = pq.QSeries([1, 2, 3, 4])
        assert a.truncate(1) == pq.QSeries([1, 2])
        with pytest.raises(pq.OrderExceeded):
            a.truncate(5)
        with pytest.raises(pq.OrderExceeded):
            a[4]

    def test_pow(self) -> None:
        a = pq.QSeries([1, -1, 0, 0])
        assert a**2 == pq.QSeries([1, -2, 1, 0])
        assert a**-1 == pq.QSeries([1, 1, 1, 1])
        assert a**0 == pq.QSeries.one(3)


class TestFracQSeries:
    """
    TestFracQSeries is the collection of tests of series with offsets on the 1/24 grid.
    """

    def test_offsets_add(self) -> None:
        a = pq.FracQSeries(F(1, 24), pq.QSeries([1, 1, 0]))
        b = pq.FracQSeries(F(-1, 24), pq.QSeries([1, -1, 0]))
        prod = pq.frac_mul(a, b)
        assert prod.offset == 0
        assert pq.assert_integral(prod) == pq.QSeries([1, 0, -1])
        assert pq.frac_div(a, a) == pq.FracQSeries(0, pq.QSeries.one(2))

    def test_non_integral(self) -> None:
        a = pq.FracQSeries(F(5, 24), pq.QSeries.one(3))
        with pytest.raises(pq.NonIntegralOffset):
            pq.assert_integral(a)

    def test_bad_offset(self) -> None:
        with pytest.raises(ValueError):
            pq.FracQSeries(F(1, 7), pq.QSeries.one(3))
        with pytest.raises(TypeError):
            pq.FracQSeries(0, pq.BivarSeries.one(3))


class TestFirstMismatch:
    """
    TestFirstMismatch is the collection of tests of side-by-side comparison.
    """

    def test_equal(self) -> None:
        a = pq.QSeries([1, 2, 3])
        assert pq.first_mismatch(a, a) is None

    def test_qseries(self) -> None:
        a = pq.QSeries([1, 2, 3, 4])
        b = pq.QSeries([1, 2, 5, 7])
        assert pq.first_mismatch(a, b) == pq.Mismatch(None, 2, 3, 5)

    def test_least_n_then_m(self) -> None:
        a = pq.BivarSeries([{0: 1}, {-1: 1, 3: 2}, {-5: 1}])
        b = pq.BivarSeries([{0: 1}, {-1: 1, 2: 1, 3: 1}, {}])
        assert pq.first_mismatch(a, b) == pq.Mismatch(2, 1, 0, 1)

    def test_mixed(self) -> None:
        a = pq.QSeries([1, 2])
        b = pq.BivarSeries([{0: 1}, {0: 2, 1: 1}])
        assert pq.first_mismatch(a, b) == pq.Mismatch(1, 1, 0, 1)

    def test_smaller_order(self) -> None:
        a = pq.QSeries([1, 2, 3])
        b = pq.QSeries([1, 2])
        assert pq.first_mismatch(a, b) is None


class TestSerialization:
    """
    TestSerialization is the collection of tests of the row and JSON forms.
    """

    def test_rows(self) -> None:
        a = pq.BivarSeries([{0: 1}, {-2: -1, 0: 2, 2: -1}])
        assert pq.series_to_rows(a) == [(0, 0, 1), (-2, 1, -1), (0, 1, 2), (2, 1, -1)]
        assert pq.series_to_rows(pq.QSeries([0, F(1, 2)])) == [(None, 1, F(1, 2))]

    def test_json(self) -> None:
        a = pq.BivarSeries([{0: 1}, {-1: F(-3, 4)}, {}])
        records = pq.series_to_json(a)
        assert records[1] == {"m": -1, "n": 1, "num": "-3", "den": "4"}
        back = pq.series_from_json(json.loads(json.dumps(records)), 2)
        assert back == a

    def test_json_qseries(self) -> None:
        a = pq.QSeries([1, 0, 5])
        assert pq.series_from_json(pq.series_to_json(a), 2) == a
