"""
series contains exact truncated formal series arithmetic.

Series are dense in q (the coefficients of q^0..q^N are all stored) and sparse in
the single symbolic variable z. Coefficients are exact rationals: Python ints when
integral and fractions.Fraction otherwise.
"""
from __future__ import annotations
import abc
import fractions
from typing import Any, Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from py_qpp import model as md


Rational = Union[int, fractions.Fraction]


class NonUnitConstantTerm(ValueError):
    """
    NonUnitConstantTerm is raised when a series whose q^0 coefficient is not an
    invertible monomial is inverted or divided by.
    """


class ZeroSubstitutionWithNegativeExponent(ZeroDivisionError):
    """
    ZeroSubstitutionWithNegativeExponent is raised when z := 0 is substituted into a
    coefficient carrying a negative power of z.
    """


class OrderExceeded(IndexError):
    """
    OrderExceeded is raised when a coefficient beyond the truncation order is requested.
    """


class NonIntegralOffset(ValueError):
    """
    NonIntegralOffset is raised when a fractional-offset series is unwrapped while its
    offset is not 0.
    """


def rational(x: Any) -> Rational:
    """
    rational converts the given value into the canonical exact rational representation.

    Args:
        x (Any): An int, a fractions.Fraction or a string like "-3/4".

    Raises:
        TypeError: If the value cannot be read as an exact rational.

    Returns:
        Rational: An int when the value is integral, a reduced Fraction otherwise.
    """
    if isinstance(x, bool):
        raise TypeError("A bool is not a rational")
    if isinstance(x, int):
        return x
    if isinstance(x, fractions.Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return rational(fractions.Fraction(x.strip()))
    raise TypeError(f"Cannot read {type(x).__name__} as an exact rational")


def _norm(x: Rational) -> Rational:
    # hot path variant of rational(): results of int/Fraction arithmetic only
    if type(x) is fractions.Fraction and x.denominator == 1:
        return x.numerator
    return x


def reciprocal(x: Rational) -> Rational:
    """
    reciprocal returns 1/x exactly.

    Args:
        x (Rational): A nonzero rational.

    Returns:
        Rational: The reciprocal.
    """
    return _norm(fractions.Fraction(1) / x)


def format_rational(x: Rational) -> str:
    """
    format_rational prints a rational as "num/den", or "num" when integral.

    Args:
        x (Rational): The rational.

    Returns:
        str: The text form.
    """
    x = fractions.Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class LaurentPoly:
    """
    LaurentPoly is a finite Laurent polynomial in z with exact rational coefficients.

    The zero polynomial is the empty map and zero coefficients are never stored.
    Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, Any]] = None) -> None:
        """
        Args:
            terms (Optional[Mapping[int, Any]], optional): z-exponent to coefficient. Defaults to None.
        """
        self._terms: Dict[int, Rational] = {}
        for e, c in (terms or {}).items():
            if isinstance(e, bool) or not isinstance(e, int):
                raise TypeError("z-exponents of LaurentPoly must be int")
            c = rational(c)
            if c:
                self._terms[e] = c

    @classmethod
    def _raw(cls, terms: Dict[int, Rational]) -> LaurentPoly:
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def constant(cls, c: Any) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Any, e: int) -> LaurentPoly:
        """
        monomial creates c*z^e.

        Args:
            c (Any): The coefficient.
            e (int): The z-exponent.

        Returns:
            LaurentPoly: The monomial.
        """
        return cls({e: c})

    @classmethod
    def coerce(cls, x: Any) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        return cls.constant(x)

    @property
    def terms(self) -> Dict[int, Rational]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Rational]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, e: int) -> Rational:
        return self._terms.get(e, 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def min_exp(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    @property
    def max_exp(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: Any) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.constant(other)
            except TypeError:
                return NotImplemented
        if len(other._terms) > len(self._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for e, c in small.items():
            v = _norm(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Any) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.constant(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Any) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            try:
                return self.scale(rational(other))
            except TypeError:
                return NotImplemented
        out: Dict[int, Rational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Rational) -> LaurentPoly:
        if not c:
            return LaurentPoly._raw({})
        return LaurentPoly._raw({e: _norm(c * v) for e, v in self._terms.items()})

    def shift(self, e: int) -> LaurentPoly:
        """
        shift multiplies the polynomial by z^e.

        Args:
            e (int): The z-exponent to add.

        Returns:
            LaurentPoly: The shifted polynomial.
        """
        return LaurentPoly._raw({k + e: c for k, c in self._terms.items()})

    def scale_shift(self, c: Rational, e: int) -> LaurentPoly:
        if not c:
            return LaurentPoly._raw({})
        return LaurentPoly._raw({k + e: _norm(c * v) for k, v in self._terms.items()})

    def diff(self) -> LaurentPoly:
        """
        diff differentiates with respect to z.

        Returns:
            LaurentPoly: d/dz of the polynomial.
        """
        return LaurentPoly._raw({e - 1: e * c for e, c in self._terms.items() if e != 0})

    def evaluate(self, v: Any) -> Rational:
        """
        evaluate substitutes z := v.

        Args:
            v (Any): The rational value of z.

        Raises:
            ZeroSubstitutionWithNegativeExponent: If v is 0 and a negative power of z is present.

        Returns:
            Rational: The value.
        """
        v = rational(v)
        if v == 0:
            if any(e < 0 for e in self._terms):
                raise ZeroSubstitutionWithNegativeExponent("z := 0 in a coefficient with negative z-exponents")
            return self._terms.get(0, 0)
        if v == 1:
            return _norm(sum(self._terms.values()))
        fv = fractions.Fraction(v)
        return _norm(sum(c * fv**e for e, c in self._terms.items()))

    def inverse(self) -> LaurentPoly:
        """
        inverse inverts a nonzero monomial.

        Raises:
            NonUnitConstantTerm: If the polynomial is not a single nonzero monomial.

        Returns:
            LaurentPoly: 1/(c*z^e) = (1/c)*z^(-e).
        """
        if not self.is_monomial:
            raise NonUnitConstantTerm(f"{self} is not an invertible monomial")
        ((e, c),) = self._terms.items()
        return LaurentPoly._raw({-e: reciprocal(c)})

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        try:
            return self._terms == LaurentPoly.constant(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._terms.items()))})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for e, c in sorted(self._terms.items(), key=lambda t: (abs(t[0]), -t[0])):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = format_rational(mag)
            else:
                zpart = "z" if e == 1 else f"z^{e}"
                body = zpart if mag == 1 else f"{format_rational(mag)}*{zpart}"
            if not out:
                out = f"-{body}" if sign == "-" else body
            else:
                out += f" {sign} {body}"
        return out


class _TruncatedSeries(abc.ABC):
    """
    _TruncatedSeries is the abstract base for power series in q truncated at an
    inclusive order N. Mixed-order arithmetic truncates to the smaller order.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[Any]) -> None:
        """
        Args:
            coeffs (Sequence[Any]): The coefficients of q^0..q^N.
        """
        if len(coeffs) == 0:
            cls_name = self.__class__.__name__
            raise ValueError(f"Data in {cls_name} must hold at least the q^0 coefficient")
        self._coeffs = tuple(self._coerce(c) for c in coeffs)

    @classmethod
    def _raw(cls, coeffs: Sequence[Any]):
        s = cls.__new__(cls)
        s._coeffs = tuple(coeffs)
        return s

    @classmethod
    @abc.abstractmethod
    def _coerce(cls, c: Any) -> Any:
        """
        _coerce converts a raw value into the coefficient ring.
        """

    @staticmethod
    @abc.abstractmethod
    def _zero() -> Any:
        """
        _zero returns the zero of the coefficient ring.
        """

    @staticmethod
    @abc.abstractmethod
    def _monomial_mul(x: Any, c: Rational, e: int) -> Any:
        """
        _monomial_mul returns c*z^e*x for a coefficient x.
        """

    @abc.abstractmethod
    def _operand(self, other: Any) -> Any:
        """
        _operand turns the other operand of a binary operation into a series of this
        class, into a coefficient-ring scalar wrapped in a 1-tuple, or NotImplemented.
        """

    @staticmethod
    @abc.abstractmethod
    def _convolve(a: Sequence[Any], b: Sequence[Any], order: int) -> List[Any]:
        """
        _convolve returns the truncated Cauchy product of two coefficient sequences.
        """

    @abc.abstractmethod
    def invert(self):
        """
        invert returns the multiplicative inverse to the truncation order.
        """

    @classmethod
    def zero(cls, order: int):
        order = md.Order(order).data
        return cls._raw([cls._zero()] * (order + 1))

    @classmethod
    def one(cls, order: int):
        s = cls.zero(order)
        return s + 1

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> Tuple[Any, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Any:
        if not 0 <= n <= self.order:
            raise OrderExceeded(f"q^{n} is beyond the truncation order {self.order}")
        return self._coeffs[n]

    def __iter__(self) -> Iterator[Any]:
        return iter(self._coeffs)

    def truncate(self, order: int):
        """
        truncate drops every coefficient above the given order.

        Args:
            order (int): The new order; at most the current one.

        Returns:
            The truncated series.
        """
        order = md.Order(order).data
        if order > self.order:
            raise OrderExceeded(f"Cannot raise the truncation order from {self.order} to {order}")
        return self._raw(self._coeffs[: order + 1])

    def valuation(self) -> Optional[int]:
        """
        valuation returns the least n whose q^n coefficient is nonzero.

        Returns:
            Optional[int]: The q-valuation, or None for the zero series.
        """
        for n, c in enumerate(self._coeffs):
            if c:
                return n
        return None

    def shift(self, k: int):
        """
        shift multiplies the series by q^k.

        Args:
            k (int): A non-negative q-exponent.

        Returns:
            The shifted series, same order.
        """
        k = md.NonNegativeInt(k).data
        if k > self.order:
            return self.zero(self.order)
        return self._raw([self._zero()] * k + list(self._coeffs[: self.order + 1 - k]))

    def _scale(self, c: Any):
        return self._raw([x * c if x else x for x in self._coeffs])

    def __add__(self, other: Any):
        other = self._operand(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, tuple):
            (c,) = other
            return self._raw((self._coeffs[0] + c,) + self._coeffs[1:])
        n = min(self.order, other.order) + 1
        return self._raw([a + b for a, b in zip(self._coeffs[:n], other._coeffs[:n])])

    __radd__ = __add__

    def __neg__(self):
        return self._raw([-c for c in self._coeffs])

    def __sub__(self, other: Any):
        other = self._operand(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, tuple):
            (c,) = other
            return self + (-c)
        return self + (-other)

    def __rsub__(self, other: Any):
        return (-self) + other

    def __mul__(self, other: Any):
        other = self._operand(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, tuple):
            (c,) = other
            return self._scale(c)
        n = min(self.order, other.order)
        return self._raw(self._convolve(self._coeffs, other._coeffs, n))

    __rmul__ = __mul__

    def __truediv__(self, other: Any):
        if isinstance(other, _TruncatedSeries):
            return self * other.invert()
        other = self._operand(other)
        if other is NotImplemented:
            return NotImplemented
        (c,) = other
        return self * self._invert_scalar(c)

    def _invert_scalar(self, c: Any) -> Any:
        return reciprocal(c)

    def __pow__(self, k: int):
        """
        __pow__ raises the series to a signed integer power.
        """
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.invert()
        out = self.one(self.order)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, _TruncatedSeries):
            return NotImplemented
        return type(self) is type(other) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._coeffs))

    def mul_binomial(self, c: Any, e: int = 0, k: int = 0):
        """
        mul_binomial multiplies the series by (1 + c*z^e*q^k) in linear time.

        Args:
            c (Any): The scalar c.
            e (int, optional): The z-exponent. Defaults to 0.
            k (int, optional): The non-negative q-exponent. Defaults to 0.

        Returns:
            The product, same order.
        """
        c = rational(c)
        k = md.NonNegativeInt(k).data
        a = self._coeffs
        out = list(a)
        for n in range(k, self.order + 1):
            src = a[n - k]
            if src:
                out[n] = out[n] + self._monomial_mul(src, c, e)
        return self._raw(out)

    def div_binomial(self, c: Any, e: int = 0, k: int = 0):
        """
        div_binomial divides the series by (1 + c*z^e*q^k) in linear time, using
        b_n = a_n - c*z^e*b_{n-k}.

        Args:
            c (Any): The scalar c.
            e (int, optional): The z-exponent. Defaults to 0.
            k (int, optional): The non-negative q-exponent. Defaults to 0.

        Raises:
            NonUnitConstantTerm: If k is 0 and the factor is not a nonzero scalar.

        Returns:
            The quotient, same order.
        """
        c = rational(c)
        k = md.NonNegativeInt(k).data
        if k == 0:
            if e != 0 or 1 + c == 0:
                raise NonUnitConstantTerm(f"1 + ({format_rational(c)})*z^{e} cannot be inverted")
            return self * reciprocal(1 + c)
        out = list(self._coeffs)
        for n in range(k, self.order + 1):
            prev = out[n - k]
            if prev:
                out[n] = out[n] - self._monomial_mul(prev, c, e)
        return self._raw(out)


class QSeries(_TruncatedSeries):
    """
    QSeries is a power series in q with exact rational coefficients, truncated at an
    inclusive order.
    """

    __slots__ = ()

    @classmethod
    def _coerce(cls, c: Any) -> Rational:
        return rational(c)

    @staticmethod
    def _zero() -> Rational:
        return 0

    @staticmethod
    def _monomial_mul(x: Rational, c: Rational, e: int) -> Rational:
        if e != 0:
            raise ValueError("A QSeries carries no z")
        return _norm(c * x)

    def _operand(self, other: Any) -> Any:
        if isinstance(other, QSeries):
            return other
        if isinstance(other, _TruncatedSeries):
            return NotImplemented
        try:
            return (rational(other),)
        except TypeError:
            return NotImplemented

    @classmethod
    def _raw(cls, coeffs: Sequence[Any]) -> QSeries:
        s = cls.__new__(cls)
        s._coeffs = tuple(_norm(c) for c in coeffs)
        return s

    def _scale(self, c: Rational) -> QSeries:
        return QSeries._raw([x * c for x in self._coeffs])

    @staticmethod
    def _convolve(a: Sequence[Rational], b: Sequence[Rational], order: int) -> List[Rational]:
        nz = [i for i in range(order + 1) if a[i]]
        out = []
        for n in range(order + 1):
            acc = 0
            for i in nz:
                if i > n:
                    break
                bj = b[n - i]
                if bj:
                    acc += a[i] * bj
            out.append(_norm(acc))
        return out

    def invert(self) -> QSeries:
        """
        invert returns 1/a to the truncation order by forward substitution.

        Raises:
            NonUnitConstantTerm: If the q^0 coefficient is 0.

        Returns:
            QSeries: The inverse.
        """
        a = self._coeffs
        if not a[0]:
            raise NonUnitConstantTerm("The q^0 coefficient of the series is 0")
        inv0 = reciprocal(a[0])
        nz = [i for i in range(1, len(a)) if a[i]]
        b = [inv0]
        for n in range(1, len(a)):
            acc = 0
            for i in nz:
                if i > n:
                    break
                acc += a[i] * b[n - i]
            b.append(_norm(-acc * inv0))
        return QSeries._raw(b)

    def q_derivative(self) -> QSeries:
        """
        q_derivative applies q*d/dq, mapping c_n to n*c_n.

        Returns:
            QSeries: The derivative series.
        """
        return QSeries._raw([n * c for n, c in enumerate(self._coeffs)])

    def lift(self) -> BivarSeries:
        """
        lift views the series as a z-free BivarSeries.

        Returns:
            BivarSeries: The same series with constant Laurent coefficients.
        """
        return BivarSeries._raw([LaurentPoly._raw({0: c} if c else {}) for c in self._coeffs])

    @classmethod
    def from_terms(cls, terms: Mapping[int, Any], order: int) -> QSeries:
        """
        from_terms builds a series from a sparse map n -> coefficient; terms beyond
        the order are dropped.

        Args:
            terms (Mapping[int, Any]): q-exponent to coefficient.
            order (int): The truncation order.

        Returns:
            QSeries: The series.
        """
        order = md.Order(order).data
        out = [0] * (order + 1)
        for n, c in terms.items():
            if 0 <= n <= order:
                out[n] = _norm(out[n] + rational(c))
        return cls._raw(out)

    def __repr__(self) -> str:
        return f"QSeries(order={self.order}, coeffs={list(self._coeffs)})"

    def __str__(self) -> str:
        parts = [f"{format_rational(c)}*q^{n}" for n, c in enumerate(self._coeffs) if c]
        return " + ".join(parts) if parts else "0"


class BivarSeries(_TruncatedSeries):
    """
    BivarSeries is a power series in q whose coefficients are Laurent polynomials in
    z, truncated at an inclusive order.
    """

    __slots__ = ()

    @classmethod
    def _coerce(cls, c: Any) -> LaurentPoly:
        if isinstance(c, LaurentPoly):
            return c
        if isinstance(c, Mapping):
            return LaurentPoly(c)
        return LaurentPoly.constant(c)

    @staticmethod
    def _zero() -> LaurentPoly:
        return LaurentPoly._raw({})

    @staticmethod
    def _monomial_mul(x: LaurentPoly, c: Rational, e: int) -> LaurentPoly:
        return x.scale_shift(c, e)

    def _operand(self, other: Any) -> Any:
        if isinstance(other, BivarSeries):
            return other
        if isinstance(other, QSeries):
            return other.lift()
        if isinstance(other, LaurentPoly):
            return (other,)
        try:
            return (LaurentPoly.constant(rational(other)),)
        except TypeError:
            return NotImplemented

    def _scale(self, c: LaurentPoly) -> BivarSeries:
        if c.is_monomial:
            ((e, v),) = c._terms.items()
            return BivarSeries._raw([x.scale_shift(v, e) for x in self._coeffs])
        return BivarSeries._raw([x * c for x in self._coeffs])

    def _invert_scalar(self, c: LaurentPoly) -> LaurentPoly:
        return c.inverse()

    def scale(self, p: Any) -> BivarSeries:
        """
        scale multiplies every q-coefficient by a scalar or a z-only Laurent polynomial.

        Args:
            p (Any): The multiplier.

        Returns:
            BivarSeries: The scaled series.
        """
        return self._scale(LaurentPoly.coerce(p))

    @staticmethod
    def _convolve(a: Sequence[LaurentPoly], b: Sequence[LaurentPoly], order: int) -> List[LaurentPoly]:
        at = [x._terms for x in a[: order + 1]]
        bt = [x._terms for x in b[: order + 1]]
        nz = [i for i in range(order + 1) if at[i]]
        out = []
        for n in range(order + 1):
            acc: Dict[int, Rational] = {}
            for i in nz:
                if i > n:
                    break
                right = bt[n - i]
                if not right:
                    continue
                for e1, c1 in at[i].items():
                    for e2, c2 in right.items():
                        e = e1 + e2
                        acc[e] = acc.get(e, 0) + c1 * c2
            out.append(LaurentPoly._raw({e: _norm(c) for e, c in acc.items() if c}))
        return out

    def invert(self) -> BivarSeries:
        """
        invert returns 1/a to the truncation order by forward substitution.

        Raises:
            NonUnitConstantTerm: If the q^0 coefficient is not a nonzero monomial c*z^e.

        Returns:
            BivarSeries: The inverse.
        """
        a = self._coeffs
        if not a[0].is_monomial:
            raise NonUnitConstantTerm(f"The q^0 coefficient {a[0]} is not a nonzero monomial")
        ((e0, c0),) = a[0]._terms.items()
        inv0 = reciprocal(c0)
        nz = [i for i in range(1, len(a)) if a[i]]
        b = [LaurentPoly._raw({-e0: inv0})]
        for n in range(1, len(a)):
            acc: Dict[int, Rational] = {}
            for i in nz:
                if i > n:
                    break
                right = b[n - i]._terms
                for e1, c1 in a[i]._terms.items():
                    for e2, c2 in right.items():
                        e = e1 + e2
                        acc[e] = acc.get(e, 0) + c1 * c2
            b.append(LaurentPoly._raw({e - e0: _norm(-c * inv0) for e, c in acc.items() if c}))
        return BivarSeries._raw(b)

    def diff_z(self) -> BivarSeries:
        return BivarSeries._raw([c.diff() for c in self._coeffs])

    def eval_z(self, v: Any) -> QSeries:
        return QSeries._raw([c.evaluate(v) for c in self._coeffs])

    def coeff(self, m: int, n: int) -> Rational:
        return self[n].coeff(m)

    @property
    def is_z_free(self) -> bool:
        return all(not c or set(c._terms) == {0} for c in self._coeffs)

    @classmethod
    def from_terms(cls, terms: Mapping[Tuple[int, int], Any], order: int) -> BivarSeries:
        """
        from_terms builds a series from a sparse map (m, n) -> coefficient of z^m q^n;
        terms beyond the order are dropped.

        Args:
            terms (Mapping[Tuple[int, int], Any]): (z-exponent, q-exponent) to coefficient.
            order (int): The truncation order.

        Returns:
            BivarSeries: The series.
        """
        order = md.Order(order).data
        rows: List[Dict[int, Any]] = [{} for _ in range(order + 1)]
        for (m, n), c in terms.items():
            if 0 <= n <= order:
                rows[n][m] = rows[n].get(m, 0) + rational(c)
        return cls([LaurentPoly(r) for r in rows])

    def __repr__(self) -> str:
        return f"BivarSeries(order={self.order}, coeffs={list(self._coeffs)!r})"

    def __str__(self) -> str:
        parts = [f"({c})*q^{n}" for n, c in enumerate(self._coeffs) if c]
        return " + ".join(parts) if parts else "0"


Series = Union[QSeries, BivarSeries]


class FracQSeries:
    """
    FracQSeries represents q^offset * body where the offset lives on the 1/24 grid,
    the home of eta quotients and theta series.
    """

    __slots__ = ("_offset", "_body")

    def __init__(self, offset: Any, body: QSeries) -> None:
        """
        Args:
            offset (Any): The rational q-exponent offset; its denominator must divide 24.
            body (QSeries): The integer-exponent series.
        """
        if not isinstance(body, QSeries):
            raise TypeError("Body of FracQSeries must be a QSeries")
        self._offset = md.Offset24(fractions.Fraction(offset)).data
        self._body = body

    @property
    def offset(self) -> fractions.Fraction:
        return self._offset

    @property
    def body(self) -> QSeries:
        return self._body

    @property
    def order(self) -> int:
        return self._body.order

    def __mul__(self, other: Any) -> FracQSeries:
        if isinstance(other, FracQSeries):
            return FracQSeries(self._offset + other._offset, self._body * other._body)
        if isinstance(other, QSeries):
            return FracQSeries(self._offset, self._body * other)
        return FracQSeries(self._offset, self._body * rational(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> FracQSeries:
        if isinstance(other, FracQSeries):
            return FracQSeries(self._offset - other._offset, self._body * other._body.invert())
        if isinstance(other, QSeries):
            return FracQSeries(self._offset, self._body * other.invert())
        return FracQSeries(self._offset, self._body * reciprocal(rational(other)))

    def assert_integral(self) -> QSeries:
        """
        assert_integral unwraps the body of a series whose offset is 0.

        Raises:
            NonIntegralOffset: If the offset is not 0.

        Returns:
            QSeries: The body.
        """
        if self._offset != 0:
            raise NonIntegralOffset(f"Offset {self._offset} of the series is not 0")
        return self._body

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, FracQSeries):
            return NotImplemented
        return self._offset == other._offset and self._body == other._body

    def __hash__(self) -> int:
        return hash((self._offset, self._body))

    def __repr__(self) -> str:
        return f"FracQSeries(offset={self._offset}, body={self._body!r})"


class Mismatch(NamedTuple):
    """
    Mismatch is the first differing coefficient of two series.
    """

    m: Optional[int]
    n: int
    lhs: Rational
    rhs: Rational


def add(a: Series, b: Series) -> Series:
    return a + b


def mul(a: Series, b: Series) -> Series:
    return a * b


def invert(a: Series) -> Series:
    return a.invert()


def diff_z(a: BivarSeries) -> BivarSeries:
    """
    diff_z differentiates every q-coefficient with respect to z.

    Args:
        a (BivarSeries): The series.

    Returns:
        BivarSeries: d/dz of the series.
    """
    return a.diff_z()


def eval_z(a: BivarSeries, v: Any) -> QSeries:
    """
    eval_z substitutes z := v in every q-coefficient.

    Args:
        a (BivarSeries): The series.
        v (Any): The rational value of z.

    Raises:
        ZeroSubstitutionWithNegativeExponent: If v is 0 and a coefficient has negative z-exponents.

    Returns:
        QSeries: The specialized series.
    """
    return a.eval_z(v)


def coeff(a: Series, m: int, n: int) -> Rational:
    """
    coeff returns the coefficient of z^m q^n, zero when absent.

    Args:
        a (Series): The series; a QSeries only has m = 0 terms.
        m (int): The z-exponent.
        n (int): The q-exponent.

    Raises:
        OrderExceeded: If n is beyond the truncation order.

    Returns:
        Rational: The coefficient.
    """
    if isinstance(a, QSeries):
        c = a[n]
        return c if m == 0 else 0
    return a.coeff(m, n)


def frac_mul(a: FracQSeries, b: FracQSeries) -> FracQSeries:
    return a * b


def frac_div(a: FracQSeries, b: FracQSeries) -> FracQSeries:
    return a / b


def assert_integral(a: FracQSeries) -> QSeries:
    return a.assert_integral()


def first_mismatch(a: Series, b: Series) -> Optional[Mismatch]:
    """
    first_mismatch finds the lexicographically least (n, then m) coefficient where
    two series differ, up to the smaller truncation order.

    Args:
        a (Series): The left side.
        b (Series): The right side.

    Returns:
        Optional[Mismatch]: The first mismatch; m is None when both sides are QSeries.
    """
    order = min(a.order, b.order)
    if isinstance(a, QSeries) and isinstance(b, QSeries):
        for n in range(order + 1):
            if a[n] != b[n]:
                return Mismatch(None, n, a[n], b[n])
        return None
    if isinstance(a, QSeries):
        a = a.lift()
    if isinstance(b, QSeries):
        b = b.lift()
    for n in range(order + 1):
        left, right = a[n], b[n]
        if left == right:
            continue
        for m in sorted(set(left._terms) | set(right._terms)):
            if left.coeff(m) != right.coeff(m):
                return Mismatch(m, n, left.coeff(m), right.coeff(m))
    return None


def series_to_rows(a: Series) -> List[Tuple[Optional[int], int, Rational]]:
    """
    series_to_rows lists the nonzero coefficients of a series as (m, n, coefficient)
    sorted by (n, m); m is None for a QSeries.

    Args:
        a (Series): The series.

    Returns:
        List[Tuple[Optional[int], int, Rational]]: The rows.
    """
    rows = []
    for n, c in enumerate(a.coeffs):
        if isinstance(a, QSeries):
            if c:
                rows.append((None, n, c))
        else:
            rows.extend((m, n, v) for m, v in c.items())
    return rows


def series_to_json(a: Series) -> List[Dict[str, Any]]:
    """
    series_to_json serializes a series to JSON-ready records
    {"m": int|None, "n": int, "num": str, "den": str}.

    Args:
        a (Series): The series.

    Returns:
        List[Dict[str, Any]]: The records.
    """
    out = []
    for m, n, c in series_to_rows(a):
        f = fractions.Fraction(c)
        out.append({"m": m, "n": n, "num": str(f.numerator), "den": str(f.denominator)})
    return out


def series_from_json(records: Sequence[Mapping[str, Any]], order: int) -> Series:
    """
    series_from_json reads back the records of series_to_json.

    Args:
        records (Sequence[Mapping[str, Any]]): The records.
        order (int): The truncation order of the result.

    Returns:
        Series: A QSeries if every m is None, otherwise a BivarSeries.
    """
    values = {}
    for r in records:
        values[(r["m"], int(r["n"]))] = fractions.Fraction(int(r["num"]), int(r["den"]))
    if all(m is None for m, _ in values):
        return QSeries.from_terms({n: c for (_, n), c in values.items()}, order)
    return BivarSeries.from_terms({(m or 0, n): c for (m, n), c in values.items()}, order)
