"""
congruence contains Ramanujan's congruences for p(n) and Andrews' congruences for spt(n).
"""
from __future__ import annotations
import abc
from typing import Callable, ClassVar

from py_qpp import series as sr
from py_qpp import qtoolkit as qt
from py_qpp import combinatorics as cb
from . import IdentityCheck, Sides, coefficients


class _Congruence(IdentityCheck):
    """
    _Congruence checks f(MODULUS*n + RESIDUE) = 0 (mod MODULUS) for every argument the
    sweep reaches. The residues form a series in n that must vanish.
    """

    MODULUS: ClassVar[int]
    RESIDUE: ClassVar[int]

    @abc.abstractmethod
    def counts(self, order: int) -> Callable[[int], int]:
        """
        counts returns the counting function to sweep, valid for arguments up to the order.
        """

    def span(self, order: int) -> int:
        """
        span returns the largest n whose argument MODULUS*n + RESIDUE the sweep reaches,
        or -1 when even n = 0 is beyond the order.
        """
        if order < self.RESIDUE:
            return -1
        return (order - self.RESIDUE) // self.MODULUS

    def sides(self, order: int) -> Sides:
        n_max = self.span(order)
        if n_max < 0:
            return []
        f = self.counts(order)
        residues = coefficients(lambda n: f(self.MODULUS * n + self.RESIDUE) % self.MODULUS, n_max)
        return [(residues, sr.QSeries.zero(n_max))]


class _PartitionCongruence(_Congruence):
    DEFAULT_ORDER = 50

    def counts(self, order: int) -> Callable[[int], int]:
        return cb.partition_count

    def span(self, order: int) -> int:
        # the order bounds n itself for p
        return order


class _SptCongruence(_Congruence):
    DEFAULT_ORDER = 200

    def counts(self, order: int) -> Callable[[int], int]:
        s = qt.spt_series(order)
        return lambda n: s[n]


class CongP5(_PartitionCongruence):
    ID = "cong-p-5"
    DESCRIPTION = "p(5n+4) = 0 (mod 5)"
    ANCHOR = "Ramanujan's congruence modulo 5"
    MODULUS, RESIDUE = 5, 4


class CongP7(_PartitionCongruence):
    ID = "cong-p-7"
    DESCRIPTION = "p(7n+5) = 0 (mod 7)"
    ANCHOR = "Ramanujan's congruence modulo 7"
    MODULUS, RESIDUE = 7, 5


class CongP11(_PartitionCongruence):
    ID = "cong-p-11"
    DESCRIPTION = "p(11n+6) = 0 (mod 11)"
    ANCHOR = "Ramanujan's congruence modulo 11"
    MODULUS, RESIDUE = 11, 6


class CongSpt5(_SptCongruence):
    ID = "cong-spt-5"
    DESCRIPTION = "spt(5n+4) = 0 (mod 5)"
    ANCHOR = "Andrews' spt congruence modulo 5"
    MODULUS, RESIDUE = 5, 4


class CongSpt7(_SptCongruence):
    ID = "cong-spt-7"
    DESCRIPTION = "spt(7n+5) = 0 (mod 7)"
    ANCHOR = "Andrews' spt congruence modulo 7"
    MODULUS, RESIDUE = 7, 5


class CongSpt13(_SptCongruence):
    ID = "cong-spt-13"
    DESCRIPTION = "spt(13n+6) = 0 (mod 13)"
    ANCHOR = "Andrews' spt congruence modulo 13"
    MODULUS, RESIDUE = 13, 6
