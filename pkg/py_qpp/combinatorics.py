"""
combinatorics contains the enumeration oracles: partitions, self-conjugate partitions,
smallest parts, ranks, overpartitions and the overpartition-pair table N(r,s,m,n).
"""
from __future__ import annotations
import collections
import csv
import enum
import fractions
import functools
import io
import itertools
import math
import types
from typing import Any, Dict, FrozenSet, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from loguru import logger

from py_qpp import model as md
from py_qpp import series as sr
from py_qpp import qtoolkit as qt


class DivisionByZeroParameter(ZeroDivisionError):
    """
    DivisionByZeroParameter is raised when d or e of the pair generating function is 0.
    """


class TableTooSmall(ValueError):
    """
    TableTooSmall is raised when an NTable is asked about n beyond its max_n.
    """


# A partition is a weakly decreasing tuple of positive integers.
Partition = Tuple[int, ...]


_P_CACHE: List[int] = [1]


def partition_count(n: int) -> int:
    """
    partition_count returns p(n) by Euler's pentagonal-number recurrence.
    p(n) is 0 for negative n.

    Args:
        n (int): The integer.

    Returns:
        int: p(n).
    """
    n = md.Int(n).data
    if n < 0:
        return 0
    while len(_P_CACHE) <= n:
        m = len(_P_CACHE)
        total = 0
        k = 1
        while k * (3 * k - 1) // 2 <= m:
            sign = 1 if k % 2 else -1
            total += sign * _P_CACHE[m - k * (3 * k - 1) // 2]
            g = k * (3 * k + 1) // 2
            if g <= m:
                total += sign * _P_CACHE[m - g]
            k += 1
        _P_CACHE.append(total)
    return _P_CACHE[n]


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions(n: int) -> Iterator[Partition]:
    """
    partitions yields every partition of n, largest first part first.

    Args:
        n (int): A non-negative integer.

    Yields:
        Partition: The partitions.
    """
    n = md.NonNegativeInt(n).data
    yield from _partitions(n, n)


def conjugate(p: Partition) -> Partition:
    """
    conjugate returns the partition whose parts are the column lengths of p.
    """
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def partition_rank(p: Partition) -> int:
    """
    partition_rank returns Dyson's rank: largest part minus number of parts.
    """
    if not p:
        return 0
    return p[0] - len(p)


@functools.lru_cache(maxsize=1024)
def selfconj_count(n: int) -> int:
    """
    selfconj_count returns p_sc(n), counted as partitions of n into distinct odd parts.
    It is 0 for negative n.

    Args:
        n (int): The integer.

    Returns:
        int: p_sc(n).
    """
    if n < 0:
        return 0
    ways = [1] + [0] * n
    for part in range(1, n + 1, 2):
        for total in range(n, part - 1, -1):
            ways[total] += ways[total - part]
    return ways[n]


@functools.lru_cache(maxsize=1024)
def spt_count(n: int) -> int:
    """
    spt_count returns the total number of smallest parts over all partitions of n.

    Args:
        n (int): A non-negative integer.

    Returns:
        int: spt(n).
    """
    return sum(p.count(p[-1]) for p in partitions(n) if p)


@functools.lru_cache(maxsize=1024)
def rank_moment2(n: int) -> int:
    """
    rank_moment2 returns the second rank moment N2(n), the sum of rank^2 over the
    partitions of n.
    """
    return sum(partition_rank(p) ** 2 for p in partitions(n))


def a_of_n(n: int) -> int:
    """
    a_of_n returns the alternating convolution sum_{k=0}^{2n} (-1)^k p(k) p(2n-k).

    Args:
        n (int): A non-negative integer.

    Returns:
        int: a(n).
    """
    n = md.NonNegativeInt(n).data
    return sum((-1) ** k * partition_count(k) * partition_count(2 * n - k) for k in range(2 * n + 1))


def a_of_n_odd(n: int) -> int:
    """
    a_of_n_odd returns sum_{k=0}^{2n+1} (-1)^k p(k) p(2n+1-k), which vanishes.
    """
    n = md.NonNegativeInt(n).data
    return sum((-1) ** k * partition_count(k) * partition_count(2 * n + 1 - k) for k in range(2 * n + 2))


class Overpartition(NamedTuple):
    """
    Overpartition is a partition whose part values may carry an overline on their
    first occurrence. Overlines attach to values.
    """

    parts: Partition
    overlined: FrozenSet[int] = frozenset()

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def n_overlined(self) -> int:
        return len(self.overlined)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def __str__(self) -> str:
        out = []
        seen = set()
        for v in self.parts:
            if v in self.overlined and v not in seen:
                out.append(f"{v}̅")
            else:
                out.append(str(v))
            seen.add(v)
        return "(" + ",".join(out) + ")"


def overpartitions(n: int) -> Iterator[Overpartition]:
    """
    overpartitions yields every overpartition of n.

    Args:
        n (int): A non-negative integer.

    Yields:
        Overpartition: The overpartitions.
    """
    for p in partitions(n):
        values = sorted(set(p), reverse=True)
        for k in range(len(values) + 1):
            for chosen in itertools.combinations(values, k):
                yield Overpartition(p, frozenset(chosen))


class OverpartitionPair(NamedTuple):
    """
    OverpartitionPair is a pair (lambda, mu) of overpartitions.
    """

    lam: Overpartition
    mu: Overpartition

    @property
    def size(self) -> int:
        return self.lam.size + self.mu.size


def enumerate_pairs(n: int) -> List[OverpartitionPair]:
    """
    enumerate_pairs lists every overpartition pair of n exactly once.

    Args:
        n (int): A non-negative integer.

    Returns:
        List[OverpartitionPair]: The pairs.
    """
    n = md.NonNegativeInt(n).data
    out = []
    for k in range(n + 1):
        mus = list(overpartitions(n - k))
        for lam in overpartitions(k):
            out.extend(OverpartitionPair(lam, mu) for mu in mus)
    return out


class PairStats(NamedTuple):
    """
    PairStats holds the statistics (r, s, rank) of an overpartition pair.
    """

    r: int
    s: int
    rank: int


class RankConvention(enum.Enum):
    """
    RankConvention is the enum class for readings of the pair rank
    l - n(lambda) - n(mu) - chi.

    LITERAL counts every part of mu in n(mu); OVERLINED_MU counts only the overlined
    parts of mu. The strict members set chi = 1 only when the largest value is attained
    by a non-overlined part of mu and by no part of lambda and no overlined part of mu;
    the loose members drop the last two conditions.
    """

    LITERAL = "literal"
    LITERAL_LOOSE = "literal-loose"
    OVERLINED_MU = "overlined-mu"
    OVERLINED_MU_LOOSE = "overlined-mu-loose"

    @property
    def counts_all_mu_parts(self) -> bool:
        return self in (RankConvention.LITERAL, RankConvention.LITERAL_LOOSE)

    @property
    def strict_tie(self) -> bool:
        return self in (RankConvention.LITERAL, RankConvention.OVERLINED_MU)


# the convention the pair generating function selects, see calibrate_rank_convention
DEFAULT_RANK_CONVENTION = RankConvention.OVERLINED_MU


class _Shape(NamedTuple):
    length: int
    n_overlined: int
    largest: int
    top_overlined: bool
    top_plain: bool


def _shape(op: Overpartition) -> _Shape:
    top = op.largest
    top_overlined = top in op.overlined
    mult = op.parts.count(top) if top else 0
    return _Shape(op.length, op.n_overlined, top, top_overlined, mult > int(top_overlined))


def _stats(lam: _Shape, mu: _Shape, convention: RankConvention) -> PairStats:
    r = lam.n_overlined + (mu.length - mu.n_overlined)
    s = mu.length
    top = max(lam.largest, mu.largest)
    if top == 0:
        return PairStats(r, s, 0)
    chi = mu.largest == top and mu.top_plain
    if convention.strict_tie:
        chi = chi and lam.largest < top and not mu.top_overlined
    mu_count = mu.length if convention.counts_all_mu_parts else mu.n_overlined
    return PairStats(r, s, top - lam.length - mu_count - int(chi))


def pair_stats(p: OverpartitionPair, convention: RankConvention = DEFAULT_RANK_CONVENTION) -> PairStats:
    """
    pair_stats computes (r, s, rank) of a pair: r counts overlined parts of lambda plus
    non-overlined parts of mu, s counts the parts of mu. The empty pair has rank 0.

    Args:
        p (OverpartitionPair): The pair.
        convention (RankConvention, optional): The rank reading. Defaults to DEFAULT_RANK_CONVENTION.

    Returns:
        PairStats: The statistics.
    """
    return _stats(_shape(p.lam), _shape(p.mu), convention)


class PentagonalIndex(NamedTuple):
    """
    PentagonalIndex is a pentagonal number value = (3*ell^2 + ell)/2 with its index ell.
    """

    ell: int
    value: int


def pentagonal_numbers_upto(n: int) -> List[PentagonalIndex]:
    """
    pentagonal_numbers_upto lists every ell of either sign with (3*ell^2 + ell)/2 <= n,
    in increasing order of value.

    Args:
        n (int): A non-negative bound.

    Returns:
        List[PentagonalIndex]: The indices.
    """
    n = md.NonNegativeInt(n).data
    out = []
    ell = 0
    while True:
        found = False
        for cand in ((0,) if ell == 0 else (-ell, ell)):
            value = (3 * cand * cand + cand) // 2
            if value <= n:
                out.append(PentagonalIndex(cand, value))
                found = True
        if not found:
            return out
        ell += 1


def is_pentagonal(n: int) -> Optional[int]:
    """
    is_pentagonal returns the unique ell with (3*ell^2 + ell)/2 = n, if any.

    Args:
        n (int): A non-negative integer.

    Returns:
        Optional[int]: ell, or None when n is not pentagonal.
    """
    n = md.NonNegativeInt(n).data
    d = 1 + 24 * n
    s = math.isqrt(d)
    if s * s != d:
        return None
    if (s - 1) % 6 == 0:
        return (s - 1) // 6
    if (s + 1) % 6 == 0:
        return -(s + 1) // 6
    return None


class NTable:
    """
    NTable holds N(r,s,m,n), the number of overpartition pairs of n with rank m and
    statistics r and s, for every n <= max_n.
    """

    HEADER = ("r", "s", "m", "n", "count")

    def __init__(self, max_n: int, counts: Mapping[Tuple[int, int, int, int], int]) -> None:
        """
        Args:
            max_n (int): The largest n enumerated.
            counts (Mapping[Tuple[int, int, int, int], int]): (r, s, m, n) -> count.
        """
        self._max_n = md.MaxN(max_n).data
        self._counts: Dict[Tuple[int, int, int, int], int] = {}
        self._by_n: Dict[int, List[Tuple[int, int, int, int]]] = collections.defaultdict(list)
        for key, c in counts.items():
            r, s, m, n = key
            if c < 0 or n > self._max_n:
                raise ValueError(f"Data in {self.__class__.__name__} holds an invalid entry {key}: {c}")
            if c:
                self._counts[key] = c
                self._by_n[n].append((r, s, m, c))
        self._signed: Dict[int, Dict[int, int]] = {}

    @property
    def max_n(self) -> int:
        return self._max_n

    @property
    def counts(self) -> Mapping[Tuple[int, int, int, int], int]:
        return types.MappingProxyType(self._counts)

    def _check(self, n: int) -> None:
        if n > self._max_n:
            raise TableTooSmall(f"n = {n} is beyond the table's max_n = {self._max_n}")

    def count(self, r: int, s: int, m: int, n: int) -> int:
        self._check(n)
        return self._counts.get((r, s, m, n), 0)

    def total(self, n: int) -> int:
        """
        total returns the number of overpartition pairs of n.
        """
        self._check(n)
        return sum(c for _, _, _, c in self._by_n.get(n, ()))

    def generating_coefficient(self, d: Any, e: Any, n: int) -> sr.LaurentPoly:
        """
        generating_coefficient returns sum N(r,s,m,n) d^r e^s z^m, the q^n coefficient of
        the pair generating function.

        Args:
            d (Any): The rational weight of r.
            e (Any): The rational weight of s.
            n (int): The size.

        Returns:
            LaurentPoly: The coefficient.
        """
        self._check(n)
        d, e = sr.rational(d), sr.rational(e)
        terms: Dict[int, Any] = collections.defaultdict(int)
        for r, s, m, c in self._by_n.get(n, ()):
            terms[m] += c * fractions.Fraction(d) ** r * fractions.Fraction(e) ** s
        return sr.LaurentPoly(terms)

    def signed_coefficients(self, n: int) -> Dict[int, int]:
        """
        signed_coefficients returns m -> sum_{r,s} N(r,s,m-2s+2r,n) (-1)^{r+s+m}.

        Args:
            n (int): The size.

        Returns:
            Dict[int, int]: The nonzero signed sums keyed by m.
        """
        self._check(n)
        if n not in self._signed:
            acc: Dict[int, int] = collections.defaultdict(int)
            for r, s, rank, c in self._by_n.get(n, ()):
                m = rank + 2 * s - 2 * r
                acc[m] += (-1) ** ((r + s + m) % 2) * c
            self._signed[n] = {m: c for m, c in acc.items() if c}
        return dict(self._signed[n])

    def signed_coefficient(self, m: int, n: int) -> int:
        return self.signed_coefficients(n).get(m, 0)

    def to_rows(self, min_n: int = 0) -> List[Tuple[int, int, int, int, int]]:
        """
        to_rows returns (r, s, m, n, count) rows with n >= min_n sorted by n, r, s then m.
        """
        rows = [(r, s, m, n, c) for (r, s, m, n), c in self._counts.items() if n >= min_n]
        rows.sort(key=lambda row: (row[3], row[0], row[1], row[2]))
        return rows

    def to_csv(self, min_n: int = 0) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.HEADER)
        w.writerows(self.to_rows(min_n))
        return buf.getvalue()

    def to_json(self, min_n: int = 0) -> List[Dict[str, int]]:
        return [dict(zip(self.HEADER, row)) for row in self.to_rows(min_n)]

    def __repr__(self) -> str:
        return f"NTable(max_n={self._max_n}, entries={len(self._counts)})"


@functools.lru_cache(maxsize=64)
def _shapes(k: int) -> Dict[_Shape, int]:
    return dict(collections.Counter(_shape(op) for op in overpartitions(k)))


# tables are large; keep the few most recent
@functools.lru_cache(maxsize=4)
def build_ntable(max_n: int, convention: RankConvention = DEFAULT_RANK_CONVENTION) -> NTable:
    """
    build_ntable enumerates every overpartition pair of n <= max_n and aggregates their
    statistics. Pairs are grouped by the shape of each slot, which is all the statistics
    depend on.

    Args:
        max_n (int): The largest n.
        convention (RankConvention, optional): The rank reading. Defaults to DEFAULT_RANK_CONVENTION.

    Returns:
        NTable: The table.
    """
    max_n = md.MaxN(max_n).data
    counts: Dict[Tuple[int, int, int, int], int] = collections.defaultdict(int)
    for n in range(max_n + 1):
        for k in range(n + 1):
            for lam, lc in _shapes(k).items():
                for mu, mc in _shapes(n - k).items():
                    st = _stats(lam, mu, convention)
                    counts[(st.r, st.s, st.rank, n)] += lc * mc
    table = NTable(max_n, counts)
    logger.debug(f"built NTable max_n={max_n} convention={convention.value} entries={len(table.counts)}")
    return table


def blorank_series(d: Any, e: Any, order: int) -> sr.BivarSeries:
    """
    blorank_series returns sum_{n>=0} (-1/d, -1/e;q)_n (deq)^n / (zq, q/z;q)_n.

    Args:
        d (Any): A nonzero rational.
        e (Any): A nonzero rational.
        order (int): The truncation order.

    Raises:
        DivisionByZeroParameter: If d or e is 0.

    Returns:
        BivarSeries: The pair generating function at (d, e).
    """
    d, e = sr.rational(d), sr.rational(e)
    if d == 0 or e == 0:
        raise DivisionByZeroParameter("d and e must be nonzero")
    order = md.Order(order).data
    numer = (qt.Monomial(-sr.reciprocal(d)), qt.Monomial(-sr.reciprocal(e)))
    denom = (qt.Monomial(1, 1, 1), qt.Monomial(1, -1, 1))
    de = fractions.Fraction(d) * e

    def term(n: int) -> sr.BivarSeries:
        return (qt.poch_ratio(numer, denom, n, order) * sr.rational(de**n)).shift(n)

    return qt.sum_bivariate_terms(term, order)


CALIBRATION_GRID = ((1, 1), (2, 1), (fractions.Fraction(1, 2), 3))


def calibrate_rank_convention(
    max_n: int = 4, grid: Sequence[Tuple[Any, Any]] = CALIBRATION_GRID
) -> Optional[RankConvention]:
    """
    calibrate_rank_convention returns the first rank reading whose table reproduces
    the pair generating function at every (d, e) of the grid for n <= max_n.

    Args:
        max_n (int, optional): The largest n compared. Defaults to 4.
        grid (Sequence[Tuple[Any, Any]], optional): The (d, e) values. Defaults to CALIBRATION_GRID.

    Returns:
        Optional[RankConvention]: The matching convention, or None.
    """
    series = [blorank_series(d, e, max_n) for d, e in grid]
    for convention in RankConvention:
        table = build_ntable(max_n, convention)
        if all(
            s[n] == table.generating_coefficient(d, e, n) for (d, e), s in zip(grid, series) for n in range(max_n + 1)
        ):
            logger.debug(f"rank convention {convention.value} matches up to n = {max_n}")
            return convention
    return None


def blocoeff_multisum(m: int, n: int, table: NTable) -> int:
    """
    blocoeff_multisum returns sum over r, s >= 0 and every k with 0 <= w_k <= n of
    N(r,s,m-2s+2r,n-w_k) (-1)^{r+s+m+k}, w_k being the pentagonal numbers.

    Args:
        m (int): The power of z.
        n (int): The power of q.
        table (NTable): A table with max_n >= n.

    Raises:
        TableTooSmall: If n exceeds the table.

    Returns:
        int: The multi-sum.
    """
    n = md.NonNegativeInt(n).data
    table._check(n)
    return sum((-1) ** abs(pi.ell) * table.signed_coefficient(m, n - pi.value) for pi in pentagonal_numbers_upto(n))


def fourth_moment_weight(m: int) -> int:
    """
    fourth_moment_weight returns m^2 (m^2 + 11), the even part of m(m-1)(m-2)(m-3).
    """
    return m * m * (m * m + 11)


def falling_weight(m: int) -> int:
    """
    falling_weight returns m(m-1)(m-2)(m-3).
    """
    return m * (m - 1) * (m - 2) * (m - 3)


def idenp_lhs(n: int, table: NTable) -> sr.Rational:
    """
    idenp_lhs returns -1/24 sum_{0<=j<n} a(j) sum_{r,s,m} (-1)^{r+s+m} m^2(m^2+11)
    N(r,s,m-2s+2r,n-j).

    Args:
        n (int): A positive integer.
        table (NTable): A table with max_n >= n.

    Raises:
        TableTooSmall: If n exceeds the table.

    Returns:
        Rational: The multi-sum.
    """
    n = md.PositiveInt(n).data
    table._check(n)
    total = 0
    for j in range(n):
        inner = sum(fourth_moment_weight(m) * c for m, c in table.signed_coefficients(n - j).items())
        total += a_of_n(j) * inner
    return sr.rational(fractions.Fraction(-total, 24))


def idenp_rhs(n: int) -> int:
    """
    idenp_rhs returns sum over integers k of (-1)^k (3(n-k^2) p(n-k^2) - 2n (-1)^n p(n-2k^2)).

    Args:
        n (int): A positive integer.

    Returns:
        int: The finite sum.
    """
    n = md.PositiveInt(n).data
    sign_n = (-1) ** n
    total = 0
    k = math.isqrt(n)
    for j in range(-k, k + 1):
        total += (-1) ** abs(j) * (
            3 * (n - j * j) * partition_count(n - j * j) - 2 * n * sign_n * partition_count(n - 2 * j * j)
        )
    return total


def overpartition_count(n: int) -> int:
    """
    overpartition_count returns the number of overpartitions of n via the series.
    """
    n = md.NonNegativeInt(n).data
    return qt.overpartition_series(n)[n]


def pair_count(n: int) -> int:
    """
    pair_count returns the number of overpartition pairs of n via the series.
    """
    n = md.NonNegativeInt(n).data
    return qt.overpartition_pair_series(n)[n]
