"""
chebyshev contains Chebyshev polynomials of the second kind evaluated exactly, and the
piecewise description of the coefficients of (q;q)_inf * S(z,q) at pentagonal q-powers.
"""
from __future__ import annotations
import enum
from typing import Any, Callable, Dict, NamedTuple

from py_qpp import model as md
from py_qpp import series as sr
from py_qpp import combinatorics as cb


class NotPentagonal(ValueError):
    """
    NotPentagonal is raised when n is not the pentagonal number of the given index.
    """


def u_poly(n: int, x: Any) -> sr.Rational:
    """
    u_poly evaluates U_n(x) by U_{n+1} = 2x U_n - U_{n-1}, with U_{-1} = 0 and
    U_{-n} = -U_{n-2} for n > 1.

    Args:
        n (int): Any integer index.
        x (Any): A rational point.

    Returns:
        Rational: U_n(x).
    """
    n = md.Int(n).data
    x = sr.rational(x)
    if n == -1:
        return 0
    if n < -1:
        return -u_poly(-n - 2, x)
    prev, cur = 0, 1
    for _ in range(n):
        prev, cur = cur, sr.rational(2 * x * cur - prev)
    return cur


_HALF_PERIOD = (1, 1, 0, -1, -1, 0)


def u_half(n: int) -> int:
    """
    u_half returns U_n(1/2), which has period 6.
    """
    if n < -1:
        return -u_half(-n - 2)
    return _HALF_PERIOD[n % 6]


def genfun_check(order: int) -> bool:
    """
    genfun_check verifies (sum_{m<=M} U_m(1/2) z^m)(1 - z + z^2) = 1 up to z^M.

    Args:
        order (int): The degree M, at least 1.

    Returns:
        bool: Whether the identity holds to degree M.
    """
    order = md.PositiveInt(order).data
    prod = genfun_product(order)
    return all(prod.coeff(m) == (1 if m == 0 else 0) for m in range(order + 1))


def genfun_product(order: int) -> sr.LaurentPoly:
    """
    genfun_product returns (sum_{m<=M} U_m(1/2) z^m)(1 - z + z^2).
    """
    partial = sr.LaurentPoly({m: u_half(m) for m in range(order + 1)})
    return partial * sr.LaurentPoly({0: 1, 1: -1, 2: 1})


class Branch(enum.Enum):
    """
    Branch is the enum class for the two piecewise systems: n = w_l with l >= 0, and
    n = w_{-l} with l >= 1.
    """

    NON_NEGATIVE = "non-negative"
    NEGATIVE = "negative"


class IntervalCase(NamedTuple):
    """
    IntervalCase names the interval I1..I6 (primed on the negative branch) holding m.
    """

    index: int
    branch: Branch

    @property
    def case_id(self) -> str:
        return f"I{self.index}" + ("'" if self.branch is Branch.NEGATIVE else "")


def _pentagonal(ell: int) -> int:
    return (3 * ell * ell + ell) // 2


def classify(m: int, n: int, ell: int) -> IntervalCase:
    """
    classify returns the interval containing m. The endpoints depend on L = |ell|:
    on the non-negative branch I1 = (-inf, -3L), I2 = {-3L}, I3 = (-3L, 1), I4 = [1, 3L+1),
    I5 = {3L+1}, I6 = (3L+1, inf); on the negative branch I1' = (-inf, -3L],
    I2' = {-3L+1}, I3' = (-3L+1, 1), I4' = [1, 3L), I5' = {3L}, I6' = [3L+1, inf).

    Args:
        m (int): The power of z.
        n (int): The pentagonal number.
        ell (int): Its index.

    Raises:
        NotPentagonal: If n is not (3*ell^2 + ell)/2.

    Returns:
        IntervalCase: The case.
    """
    if n != _pentagonal(ell):
        raise NotPentagonal(f"{n} is not the pentagonal number of index {ell}")
    big = abs(ell)
    if ell >= 0:
        if m < -3 * big:
            return IntervalCase(1, Branch.NON_NEGATIVE)
        if m == -3 * big:
            return IntervalCase(2, Branch.NON_NEGATIVE)
        if m < 1:
            return IntervalCase(3, Branch.NON_NEGATIVE)
        if m < 3 * big + 1:
            return IntervalCase(4, Branch.NON_NEGATIVE)
        if m == 3 * big + 1:
            return IntervalCase(5, Branch.NON_NEGATIVE)
        return IntervalCase(6, Branch.NON_NEGATIVE)
    if m <= -3 * big:
        return IntervalCase(1, Branch.NEGATIVE)
    if m == -3 * big + 1:
        return IntervalCase(2, Branch.NEGATIVE)
    if m < 1:
        return IntervalCase(3, Branch.NEGATIVE)
    if m < 3 * big:
        return IntervalCase(4, Branch.NEGATIVE)
    if m == 3 * big:
        return IntervalCase(5, Branch.NEGATIVE)
    return IntervalCase(6, Branch.NEGATIVE)


U = u_half

# (m, L, sign) -> value per case; sign is (-1)^L
_NON_NEGATIVE: Dict[int, Callable[[int, int, int], int]] = {
    1: lambda m, L, sg: 0,
    2: lambda m, L, sg: U(1),
    3: lambda m, L, sg: U(m + 3 * L + 1),
    4: lambda m, L, sg: U(m + 3 * L + 1) + sg * U(m - 1),
    5: lambda m, L, sg: -U(1) + U(6 * L + 2) + sg * U(3 * L),
    6: lambda m, L, sg: -U(m - 3 * L) + U(m + 3 * L + 1) + sg * U(m - 1),
}

_NEGATIVE: Dict[int, Callable[[int, int, int], int]] = {
    1: lambda m, L, sg: 0,
    2: lambda m, L, sg: -U(1),
    3: lambda m, L, sg: -U(m + 3 * L),
    4: lambda m, L, sg: -U(m + 3 * L) + sg * U(m - 1),
    5: lambda m, L, sg: -U(6 * L) + U(1) + sg * U(3 * L - 1),
    6: lambda m, L, sg: -U(m + 3 * L) + U(m - 3 * L + 1) + sg * U(m - 1),
}


def piecewise_coeff(m: int, n: int) -> int:
    """
    piecewise_coeff returns the coefficient of z^m q^n in (q;q)_inf * S(z,q) from the
    Chebyshev description: 0 unless n is pentagonal, otherwise the value of the case
    classify selects.

    Args:
        m (int): The power of z.
        n (int): The power of q.

    Returns:
        int: The coefficient.
    """
    n = md.NonNegativeInt(n).data
    ell = cb.is_pentagonal(n)
    if ell is None:
        return 0
    case = classify(m, n, ell)
    big = abs(ell)
    sign = (-1) ** big
    table = _NON_NEGATIVE if case.branch is Branch.NON_NEGATIVE else _NEGATIVE
    value = table[case.index](m, big, sign)
    if case.index == 5:
        # I5 is the endpoint of I6's formula
        assert value == table[6](m, big, sign), f"{case.case_id} disagrees with I6 at m={m}, n={n}"
    return value
