"""
identity contains shared resources for identity checks
"""
from __future__ import annotations
import abc
import time
from typing import Any, Callable, ClassVar, Dict, List, NamedTuple, Optional, Tuple

from loguru import logger

from py_qpp import model as md
from py_qpp import series as sr


Sides = List[Tuple[sr.Series, sr.Series]]


class UnknownCheckId(LookupError):
    """
    UnknownCheckId is raised when an id is not in the registry.
    """


class IdentityReport(NamedTuple):
    """
    IdentityReport is the outcome of one identity check.
    """

    id: str
    passed: bool
    order_checked: int
    first_mismatch: Optional[sr.Mismatch]
    elapsed_ms: int

    def to_json(self) -> Dict[str, Any]:
        """
        to_json converts the report to the JSON report schema. Rationals are strings.

        Returns:
            Dict[str, Any]: The record.
        """
        mm = None
        if self.first_mismatch is not None:
            m, n, lhs, rhs = self.first_mismatch
            mm = {"m": m, "n": n, "lhs": sr.format_rational(lhs), "rhs": sr.format_rational(rhs)}
        return {
            "id": self.id,
            "pass": self.passed,
            "order": self.order_checked,
            "first_mismatch": mm,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_row(self) -> Tuple[Any, ...]:
        """
        to_row flattens the report for CSV output.
        """
        mm = self.first_mismatch
        if mm is None:
            return (self.id, self.passed, self.order_checked, "", "", "", "", self.elapsed_ms)
        return (
            self.id,
            self.passed,
            self.order_checked,
            "" if mm.m is None else mm.m,
            mm.n,
            sr.format_rational(mm.lhs),
            sr.format_rational(mm.rhs),
            self.elapsed_ms,
        )

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.id} order={self.order_checked} ({self.elapsed_ms} ms)"
        if self.first_mismatch is not None:
            m, n, lhs, rhs = self.first_mismatch
            where = f"q^{n}" if m is None else f"z^{m} q^{n}"
            line += f": {where} lhs={sr.format_rational(lhs)} rhs={sr.format_rational(rhs)}"
        return line


REPORT_HEADER = ("id", "pass", "order", "m", "n", "lhs", "rhs", "elapsed_ms")


def _mismatch_key(mm: sr.Mismatch) -> Tuple[int, int]:
    return (mm.n, 0 if mm.m is None else mm.m)


class IdentityCheck(abc.ABC):
    """
    IdentityCheck is the abstract base class for identity checks.
    Each check builds one or more (left side, right side) pairs with the engine and
    compares them coefficient by coefficient.
    """

    ID: ClassVar[str]
    DESCRIPTION: ClassVar[str]
    ANCHOR: ClassVar[str]
    DEFAULT_ORDER: ClassVar[int] = 30
    # enumeration-backed checks cap the order
    MAX_ORDER: ClassVar[Optional[int]] = None
    # the Laurent polynomial both sides were multiplied by, if any
    MULTIPLIER: ClassVar[str] = ""

    def effective_order(self, order: int) -> int:
        order = md.PositiveInt(order).data
        if self.MAX_ORDER is not None:
            return min(order, self.MAX_ORDER)
        return order

    @abc.abstractmethod
    def sides(self, order: int) -> Sides:
        """
        sides builds the pairs of series that must agree to the order.

        Args:
            order (int): The truncation order.

        Returns:
            Sides: The (lhs, rhs) pairs.
        """

    def run(self, order: Optional[int] = None) -> IdentityReport:
        """
        run checks the identity and reports the least mismatch, by n then m, over all pairs.

        Args:
            order (Optional[int], optional): The requested order. Defaults to DEFAULT_ORDER.

        Returns:
            IdentityReport: The report.
        """
        order = self.effective_order(self.DEFAULT_ORDER if order is None else order)
        logger.debug(f"check {self.ID} starts at order {order}")
        start = time.perf_counter()
        worst: Optional[sr.Mismatch] = None
        for lhs, rhs in self.sides(order):
            mm = sr.first_mismatch(lhs, rhs)
            if mm is not None and (worst is None or _mismatch_key(mm) < _mismatch_key(worst)):
                worst = mm
        elapsed_ms = int((time.perf_counter() - start) * 1000)
        report = IdentityReport(self.ID, worst is None, order, worst, elapsed_ms)
        logger.debug(f"check {self.ID} finished: passed={report.passed} elapsed_ms={elapsed_ms}")
        return report

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.ID!r})"


def coefficients(f: Callable[[int], Any], order: int, start: int = 0) -> sr.QSeries:
    """
    coefficients builds the QSeries sum f(n) q^n over start <= n <= order.

    Args:
        f (Callable[[int], Any]): The coefficient function.
        order (int): The truncation order.
        start (int, optional): The first n; earlier coefficients are 0. Defaults to 0.

    Returns:
        QSeries: The series.
    """
    order = md.Order(order).data
    return sr.QSeries([f(n) if n >= start else 0 for n in range(order + 1)])


def bodies(a: sr.FracQSeries, b: sr.FracQSeries) -> Tuple[sr.QSeries, sr.QSeries]:
    """
    bodies returns the bodies of two fractional series after checking their offsets agree.

    Raises:
        NonIntegralOffset: If the offsets differ.
    """
    if a.offset != b.offset:
        raise sr.NonIntegralOffset(f"Offsets {a.offset} and {b.offset} differ")
    return a.body, b.body


def reflect(a: sr.BivarSeries) -> sr.BivarSeries:
    """
    reflect substitutes z -> 1/z.
    """
    return sr.BivarSeries._raw([sr.LaurentPoly._raw({-e: c for e, c in p.items()}) for p in a.coeffs])

