"""
qtoolkit contains builders for the named q-products and q-series: Pochhammer symbols
with monomial arguments, classical theta-type expansions, Lambert series, eta
quotients and the partial-sum driver used by every series left side.
"""
from __future__ import annotations
import fractions
import functools
from typing import Any, Callable, Iterable, Optional, Sequence, Tuple, Union

from loguru import logger

from py_qpp import model as md
from py_qpp import series as sr


class DivergentFormalProduct(ValueError):
    """
    DivergentFormalProduct is raised when an infinite Pochhammer symbol is requested
    for an argument without a positive power of q.
    """


class ValuationViolation(ValueError):
    """
    ValuationViolation is raised when the n-th term handed to sum_bivariate_terms has
    q-valuation below n.
    """


class Monomial:
    """
    Monomial is a Pochhammer argument scalar * z^z_exp * q^q_exp, paired with the
    exponent q_step of the base q^q_step.
    """

    __slots__ = ("scalar", "z_exp", "q_exp", "q_step")

    def __init__(self, scalar: Any, z_exp: int = 0, q_exp: int = 0, q_step: int = 1) -> None:
        """
        Args:
            scalar (Any): The rational scalar.
            z_exp (int, optional): The power of z. Defaults to 0.
            q_exp (int, optional): The non-negative power of q. Defaults to 0.
            q_step (int, optional): The base is q^q_step. Defaults to 1.
        """
        self.scalar = sr.rational(scalar)
        self.z_exp = md.Int(z_exp).data
        self.q_exp = md.NonNegativeInt(q_exp).data
        self.q_step = md.QStep(q_step).data

    @classmethod
    def q(cls, q_exp: int = 1, q_step: Optional[int] = None) -> Monomial:
        """
        q creates the plain argument q^q_exp, on base q^q_exp unless told otherwise.

        Args:
            q_exp (int, optional): The power of q. Defaults to 1.
            q_step (Optional[int], optional): The base exponent. Defaults to q_exp.

        Returns:
            Monomial: The argument.
        """
        return cls(1, 0, q_exp, q_exp if q_step is None else q_step)

    @property
    def is_z_free(self) -> bool:
        return self.z_exp == 0

    def factor_exp(self, j: int) -> int:
        """
        factor_exp returns the q-exponent of the j-th factor (1 - A q^{j*q_step}).
        """
        return self.q_exp + j * self.q_step

    def _key(self) -> Tuple[Any, ...]:
        return (self.scalar, self.z_exp, self.q_exp, self.q_step)

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Monomial) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"Monomial({sr.format_rational(self.scalar)}, z^{self.z_exp}, q^{self.q_exp}; q^{self.q_step})"


class ProductSpec:
    """
    ProductSpec is a finite list of infinite Pochhammer symbols with signed
    multiplicities, e.g. (z^-2 q, z^2 q; q)_inf / (-z^-1 q, -z q; q)_inf.
    """

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[Tuple[Monomial, int]] = ()) -> None:
        """
        Args:
            factors (Iterable[Tuple[Monomial, int]], optional): (argument, multiplicity) pairs. Defaults to ().
        """
        self.factors: Tuple[Tuple[Monomial, int], ...] = tuple(factors)
        for a, mult in self.factors:
            if not isinstance(a, Monomial):
                raise TypeError("Factors of ProductSpec must be Monomial")
            if md.Int(mult).data == 0:
                raise ValueError("Multiplicities of ProductSpec must be nonzero")

    @classmethod
    def of(cls, numer: Iterable[Monomial] = (), denom: Iterable[Monomial] = ()) -> ProductSpec:
        """
        of creates the spec of prod (numer;q)_inf / prod (denom;q)_inf.
        """
        return cls([(a, 1) for a in numer] + [(b, -1) for b in denom])

    def __mul__(self, other: ProductSpec) -> ProductSpec:
        return ProductSpec(self.factors + other.factors)

    def inverse(self) -> ProductSpec:
        return ProductSpec((a, -mult) for a, mult in self.factors)

    def __repr__(self) -> str:
        return f"ProductSpec({list(self.factors)})"


def _kind(bivariate: bool):
    return sr.BivarSeries if bivariate else sr.QSeries


def _check_kind(a: Monomial, bivariate: bool) -> None:
    if not bivariate and not a.is_z_free:
        raise ValueError(f"{a} carries z and cannot build a QSeries")


@functools.lru_cache(maxsize=4096)
def _ratio(numer: Tuple[Monomial, ...], denom: Tuple[Monomial, ...], n: int, order: int, bivariate: bool):
    if n == 0:
        return _kind(bivariate).one(order)
    s = _ratio(numer, denom, n - 1, order, bivariate)
    for a in numer:
        s = s.mul_binomial(-a.scalar, a.z_exp, a.factor_exp(n - 1))
    for b in denom:
        s = s.div_binomial(-b.scalar, b.z_exp, b.factor_exp(n - 1))
    return s


def poch_ratio(numer: Sequence[Monomial], denom: Sequence[Monomial], n: int, order: int) -> sr.BivarSeries:
    """
    poch_ratio returns prod (a;q)_n / prod (b;q)_n over the listed arguments, truncated
    at the order. Results are memoized and built incrementally in n.

    Args:
        numer (Sequence[Monomial]): Numerator arguments.
        denom (Sequence[Monomial]): Denominator arguments.
        n (int): The common length n of every symbol.
        order (int): The truncation order.

    Raises:
        NonUnitConstantTerm: If a denominator factor of q-exponent 0 is not a nonzero scalar.

    Returns:
        BivarSeries: The ratio.
    """
    n = md.NonNegativeInt(n).data
    order = md.Order(order).data
    return _ratio(tuple(numer), tuple(denom), n, order, True)


def qpoch_ratio(numer: Sequence[Monomial], denom: Sequence[Monomial], n: int, order: int) -> sr.QSeries:
    """
    qpoch_ratio is poch_ratio for z-free arguments, returning a QSeries.
    """
    for a in list(numer) + list(denom):
        _check_kind(a, False)
    n = md.NonNegativeInt(n).data
    order = md.Order(order).data
    return _ratio(tuple(numer), tuple(denom), n, order, False)


def poch_finite(a: Monomial, n: int, order: int) -> sr.BivarSeries:
    """
    poch_finite returns (A;q)_n = prod_{j=0}^{n-1} (1 - A q^{j*step}) truncated at the order.

    Args:
        a (Monomial): The argument A.
        n (int): The number of factors.
        order (int): The truncation order.

    Returns:
        BivarSeries: The finite product.
    """
    return poch_ratio((a,), (), n, order)


def qpoch_finite(a: Monomial, n: int, order: int) -> sr.QSeries:
    return qpoch_ratio((a,), (), n, order)


@functools.lru_cache(maxsize=512)
def _infinite(a: Monomial, order: int, bivariate: bool):
    s = _kind(bivariate).one(order)
    if a.scalar == 0:
        return s
    j = 0
    while a.factor_exp(j) <= order:
        s = s.mul_binomial(-a.scalar, a.z_exp, a.factor_exp(j))
        j += 1
    return s


def _check_convergent(a: Monomial) -> None:
    if a.q_exp == 0 and a.scalar != 0:
        raise DivergentFormalProduct(f"({a};q)_inf has a factor of q-exponent 0")


def poch_infinite(a: Monomial, order: int) -> sr.BivarSeries:
    """
    poch_infinite returns (A;q)_inf, dropping the factors of q-valuation above the order.

    Args:
        a (Monomial): The argument A; its power of q must be positive.
        order (int): The truncation order.

    Raises:
        DivergentFormalProduct: If A has q-exponent 0.

    Returns:
        BivarSeries: The product, exact to the order.
    """
    _check_convergent(a)
    return _infinite(a, md.Order(order).data, True)


def qpoch_infinite(a: Monomial, order: int) -> sr.QSeries:
    _check_kind(a, False)
    _check_convergent(a)
    return _infinite(a, md.Order(order).data, False)


def _apply(spec: ProductSpec, s):
    order = s.order
    for a, mult in spec.factors:
        _check_convergent(a)
        for _ in range(abs(mult)):
            j = 0
            while a.factor_exp(j) <= order:
                if mult > 0:
                    s = s.mul_binomial(-a.scalar, a.z_exp, a.factor_exp(j))
                else:
                    s = s.div_binomial(-a.scalar, a.z_exp, a.factor_exp(j))
                j += 1
    return s


def product(spec: ProductSpec, order: int) -> sr.BivarSeries:
    """
    product multiplies and divides the infinite Pochhammer symbols of a spec, one
    binomial factor at a time.

    Args:
        spec (ProductSpec): The spec.
        order (int): The truncation order.

    Raises:
        DivergentFormalProduct: If an argument has q-exponent 0.

    Returns:
        BivarSeries: The product.
    """
    return _apply(spec, sr.BivarSeries.one(md.Order(order).data))


def qproduct(spec: ProductSpec, order: int) -> sr.QSeries:
    for a, _ in spec.factors:
        _check_kind(a, False)
    return _apply(spec, sr.QSeries.one(md.Order(order).data))


@functools.lru_cache(maxsize=64)
def euler(order: int) -> sr.QSeries:
    """
    euler returns (q;q)_inf.
    """
    logger.debug(f"building (q;q)_inf to order {order}")
    return qpoch_infinite(Monomial.q(1), order)


@functools.lru_cache(maxsize=64)
def partition_series(order: int) -> sr.QSeries:
    """
    partition_series returns 1/(q;q)_inf = sum p(n) q^n.
    """
    return euler(order).invert()


def overpartition_series(order: int) -> sr.QSeries:
    """
    overpartition_series returns (-q;q)_inf/(q;q)_inf.
    """
    return qproduct(ProductSpec.of([Monomial(-1, 0, 1)], [Monomial.q(1)]), order)


def overpartition_pair_series(order: int) -> sr.QSeries:
    """
    overpartition_pair_series returns (-q;q)_inf^2/(q;q)_inf^2.
    """
    return qproduct(ProductSpec([(Monomial(-1, 0, 1), 2), (Monomial.q(1), -2)]), order)


def lambert_series(residue: int, modulus: int, order: int) -> sr.QSeries:
    """
    lambert_series returns sum over n = residue (mod modulus), n >= 1, of n q^n/(1-q^n).

    Args:
        residue (int): The residue class of n.
        modulus (int): The modulus.
        order (int): The truncation order.

    Returns:
        QSeries: The Lambert series.
    """
    modulus = md.PositiveInt(modulus).data
    order = md.Order(order).data
    out = [0] * (order + 1)
    for n in range(1, order + 1):
        if (n - residue) % modulus:
            continue
        for k in range(n, order + 1, n):
            out[k] += n
    return sr.QSeries._raw(out)


def lambert_all(order: int) -> sr.QSeries:
    """
    lambert_all returns sum n q^n/(1-q^n) = sum sigma(n) q^n.
    """
    return lambert_series(0, 1, order)


def lambert_odd(order: int) -> sr.QSeries:
    """
    lambert_odd returns sum over odd n of n q^n/(1-q^n).
    """
    return lambert_series(1, 2, order)


def lambert_even(order: int) -> sr.QSeries:
    """
    lambert_even returns sum n q^{2n}/(1-q^{2n}).
    """
    order = md.Order(order).data
    out = [0] * (order + 1)
    for n in range(1, order // 2 + 1):
        for k in range(2 * n, order + 1, 2 * n):
            out[k] += n
    return sr.QSeries._raw(out)


def _bilateral(order: int, exponent: Callable[[int], int]) -> Iterable[int]:
    # exponent is a convex quadratic in n with its minimum near n = 0
    n = 0
    while exponent(n) <= order:
        yield n
        n += 1
    n = -1
    while exponent(n) <= order:
        yield n
        n -= 1


def pentagonal_series(order: int) -> sr.QSeries:
    """
    pentagonal_series returns sum over integers k of (-1)^k q^{k(3k+1)/2}.
    """
    order = md.Order(order).data
    terms = {}
    for k in _bilateral(order, lambda k: k * (3 * k + 1) // 2):
        terms[k * (3 * k + 1) // 2] = (-1) ** abs(k)
    return sr.QSeries.from_terms(terms, order)


def quintuple_lhs(order: int) -> sr.BivarSeries:
    """
    quintuple_lhs returns sum over integers n of q^{(3n^2+n)/2} (z^{3n} - z^{-3n-1}).

    Args:
        order (int): The truncation order.

    Returns:
        BivarSeries: The bilateral sum.
    """
    order = md.Order(order).data
    terms = {}
    for n in _bilateral(order, lambda n: n * (3 * n + 1) // 2):
        e = n * (3 * n + 1) // 2
        terms[(3 * n, e)] = terms.get((3 * n, e), 0) + 1
        terms[(-3 * n - 1, e)] = terms.get((-3 * n - 1, e), 0) - 1
    return sr.BivarSeries.from_terms(terms, order)


def gordon_series(order: int) -> sr.QSeries:
    """
    gordon_series returns sum over integers n of (6n+1) q^{(3n^2+n)/2}.
    """
    order = md.Order(order).data
    terms = {}
    for n in _bilateral(order, lambda n: n * (3 * n + 1) // 2):
        terms[n * (3 * n + 1) // 2] = 6 * n + 1
    return sr.QSeries.from_terms(terms, order)


def jtp_square_series(order: int) -> sr.QSeries:
    """
    jtp_square_series returns 1 + 2 sum_{j>=1} (-1)^j q^{j^2}.
    """
    order = md.Order(order).data
    terms = {0: 1}
    j = 1
    while j * j <= order:
        terms[j * j] = 2 * (-1) ** j
        j += 1
    return sr.QSeries.from_terms(terms, order)


def psi_series(order: int) -> sr.QSeries:
    """
    psi_series returns Gauss' triangular series sum over integers n of q^{2n^2-n}.
    """
    order = md.Order(order).data
    terms = {}
    for n in _bilateral(order, lambda n: 2 * n * n - n):
        terms[2 * n * n - n] = 1
    return sr.QSeries.from_terms(terms, order)


EtaSpec = Sequence[Tuple[int, int]]


def eta_quotient(spec: EtaSpec, order: int) -> sr.FracQSeries:
    """
    eta_quotient returns prod eta(d tau)^e as q^{sum e*d/24} * prod (q^d;q^d)_inf^e.

    Args:
        spec (EtaSpec): (d, e) pairs with d positive.
        order (int): The truncation order of the body.

    Returns:
        FracQSeries: The eta quotient.
    """
    offset = fractions.Fraction(0)
    factors = []
    for d, e in spec:
        d = md.PositiveInt(d).data
        e = md.Int(e).data
        offset += fractions.Fraction(e * d, 24)
        if e:
            factors.append((Monomial.q(d), e))
    return sr.FracQSeries(offset, qproduct(ProductSpec(factors), order))


def parse_eta_spec(text: str) -> Tuple[Tuple[int, int], ...]:
    """
    parse_eta_spec reads "1^4,2^-2" into ((1, 4), (2, -2)).

    Args:
        text (str): Comma separated d^e items.

    Raises:
        ValueError: If an item is malformed.

    Returns:
        Tuple[Tuple[int, int], ...]: The spec.
    """
    out = []
    for item in filter(None, (t.strip() for t in text.split(","))):
        d, sep, e = item.partition("^")
        if not sep:
            raise ValueError(f"Eta factor {item!r} must look like d^e")
        out.append((int(d), int(e)))
    return tuple(out)


def chi12(n: int) -> int:
    """
    chi12 returns 1 if n = 1 (mod 6), -1 if n = 5 (mod 6) and 0 otherwise.
    """
    r = n % 6
    if r == 1:
        return 1
    if r == 5:
        return -1
    return 0


def theta_shimura(order: int) -> sr.FracQSeries:
    """
    theta_shimura returns sum_{n>=1} chi12(n) n^3 q^{n^2/24} with offset 1/24; the body
    sits on the integer grid (n^2-1)/24.

    Args:
        order (int): The truncation order of the body.

    Returns:
        FracQSeries: The theta series.
    """
    order = md.Order(order).data
    terms = {}
    n = 1
    while (n * n - 1) // 24 <= order:
        if chi12(n):
            terms[(n * n - 1) // 24] = chi12(n) * n**3
        n += 1
    return sr.FracQSeries(fractions.Fraction(1, 24), sr.QSeries.from_terms(terms, order))


def eta_theta_series(order: int) -> sr.FracQSeries:
    """
    eta_theta_series returns sum_{n>=1} chi12(n) n q^{n^2/24} with offset 1/24.
    """
    order = md.Order(order).data
    terms = {}
    n = 1
    while (n * n - 1) // 24 <= order:
        if chi12(n):
            terms[(n * n - 1) // 24] = chi12(n) * n
        n += 1
    return sr.FracQSeries(fractions.Fraction(1, 24), sr.QSeries.from_terms(terms, order))


TermBuilder = Callable[[int], Union[sr.QSeries, sr.BivarSeries]]


def sum_bivariate_terms(term_builder: TermBuilder, order: int, start: int = 0) -> Union[sr.QSeries, sr.BivarSeries]:
    """
    sum_bivariate_terms sums term(n) for start <= n <= order. The sum is exact to the
    order because term(n) must have q-valuation at least n.

    Args:
        term_builder (TermBuilder): A pure function n -> series.
        order (int): The truncation order.
        start (int, optional): The first n. Defaults to 0.

    Raises:
        ValuationViolation: If a term has q-valuation below its index.

    Returns:
        Union[QSeries, BivarSeries]: The truncated sum.
    """
    order = md.Order(order).data
    total = None
    for n in range(start, order + 1):
        term = term_builder(n)
        v = term.valuation()
        if v is not None and v < n:
            raise ValuationViolation(f"Term {n} has q-valuation {v} < {n}")
        total = term if total is None else total + term
    if total is None:
        return sr.QSeries.zero(order)
    return total.truncate(min(order, total.order))


# z^2, z^-2, -z, -z^-1 with q-exponents 0, 0, 1, 1
S_NUMER = (Monomial(1, 2, 0), Monomial(1, -2, 0))
S_DENOM = (Monomial(-1, 1, 1), Monomial(-1, -1, 1))


def s_series(order: int) -> sr.BivarSeries:
    """
    s_series returns S(z,q) = sum_{n>=0} (z^2;q)_n (z^-2;q)_n q^n / ((-zq;q)_n (-z^-1 q;q)_n).

    Args:
        order (int): The truncation order.

    Returns:
        BivarSeries: S(z,q).
    """
    order = md.Order(order).data
    return sum_bivariate_terms(lambda n: poch_ratio(S_NUMER, S_DENOM, n, order).shift(n), order)


def dtilde_spec() -> ProductSpec:
    """
    dtilde_spec returns (z^-2 q, z^2 q;q)_inf / (-z^-1 q, -z q;q)_inf.
    """
    return ProductSpec.of(
        [Monomial(1, -2, 1), Monomial(1, 2, 1)],
        [Monomial(-1, -1, 1), Monomial(-1, 1, 1)],
    )


def dtilde(order: int) -> sr.BivarSeries:
    return product(dtilde_spec(), order)


def quintuple_spec() -> ProductSpec:
    """
    quintuple_spec returns the four-factor form (zq, z^-1 q;q)_inf (z^2 q, z^-2 q;q^2)_inf of D(z,q).
    """
    return ProductSpec.of(
        [Monomial(1, 1, 1), Monomial(1, -1, 1), Monomial(1, 2, 1, 2), Monomial(1, -2, 1, 2)]
    )


def quintuple_d(order: int) -> sr.BivarSeries:
    return product(quintuple_spec(), order)


def spt_series(order: int) -> sr.QSeries:
    """
    spt_series returns sum_{n>=1} q^n / ((1-q^n)^2 (q^{n+1};q)_inf), evaluated as
    1/(q;q)_inf times sum q^n (q;q)_n/(1-q^n)^2.

    Args:
        order (int): The truncation order.

    Returns:
        QSeries: sum spt(n) q^n.
    """
    order = md.Order(order).data

    def term(n: int) -> sr.QSeries:
        if n == 0:
            return sr.QSeries.zero(order)
        t = qpoch_finite(Monomial.q(1), n, order)
        t = t.div_binomial(-1, 0, n).div_binomial(-1, 0, n)
        return t.shift(n)

    return sum_bivariate_terms(term, order) * partition_series(order)
