"""
test_combinatorics contains tests for py_qpp/combinatorics.py
"""
import fractions

import pytest

import py_qpp as pq

from .conftest import TABLE_MAX_N

F = fractions.Fraction


class TestPartitions:
    """
    TestPartitions is the collection of tests of partition counting.
    """

    def test_partition_count(self) -> None:
        assert [pq.partition_count(n) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        assert pq.partition_count(100) == 190569292
        assert pq.partition_count(-3) == 0

    def test_partitions_enumeration(self) -> None:
        assert list(pq.partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert list(pq.partitions(0)) == [()]
        for n in range(1, 12):
            assert sum(1 for _ in pq.partitions(n)) == pq.partition_count(n)

    def test_conjugate_and_rank(self) -> None:
        assert pq.conjugate((4, 2, 1)) == (3, 2, 1, 1)
        assert pq.conjugate((3, 2, 1)) == (3, 2, 1)
        assert pq.partition_rank((4, 2, 1)) == 1
        assert pq.partition_rank(()) == 0

    def test_selfconj_count(self) -> None:
        for n in range(15):
            by_shape = sum(1 for p in pq.partitions(n) if pq.conjugate(p) == p)
            assert pq.selfconj_count(n) == by_shape
        assert pq.selfconj_count(-1) == 0

    def test_spt_and_moment(self) -> None:
        assert [pq.spt_count(n) for n in range(1, 6)] == [1, 3, 5, 10, 14]
        # spt(n) = n p(n) - N2(n)/2
        for n in range(1, 12):
            assert 2 * pq.spt_count(n) == 2 * n * pq.partition_count(n) - pq.rank_moment2(n)

    def test_a_of_n(self) -> None:
        assert pq.a_of_n(0) == 1
        assert pq.a_of_n(1) == 3
        assert all(pq.a_of_n_odd(n) == 0 for n in range(10))
        with pytest.raises(ValueError):
            pq.a_of_n(-1)


class TestOverpartitions:
    """
    TestOverpartitions is the collection of tests of overpartitions and their pairs.
    """

    def test_overpartitions(self) -> None:
        assert sorted(str(op) for op in pq.overpartitions(2)) == ["(1,1)", "(1̅,1)", "(2)", "(2̅)"]
        for n in range(8):
            assert sum(1 for _ in pq.overpartitions(n)) == pq.overpartition_count(n)

    def test_pairs(self) -> None:
        assert len(pq.enumerate_pairs(0)) == 1
        assert len(pq.enumerate_pairs(1)) == 4
        for n in range(6):
            assert len(pq.enumerate_pairs(n)) == pq.pair_count(n)

    def test_stats_of_one(self) -> None:
        one = pq.Overpartition((1,))
        bar = pq.Overpartition((1,), frozenset({1}))
        empty = pq.Overpartition(())
        P = pq.OverpartitionPair
        assert pq.pair_stats(P(one, empty)) == pq.PairStats(0, 0, 0)
        assert pq.pair_stats(P(bar, empty)) == pq.PairStats(1, 0, 0)
        assert pq.pair_stats(P(empty, one)) == pq.PairStats(1, 1, 0)
        assert pq.pair_stats(P(empty, bar)) == pq.PairStats(0, 1, 0)
        assert pq.pair_stats(P(empty, empty)) == pq.PairStats(0, 0, 0)

    def test_literal_reading(self) -> None:
        P = pq.OverpartitionPair
        pair = P(pq.Overpartition(()), pq.Overpartition((1,)))
        assert pq.pair_stats(pair, pq.RankConvention.LITERAL).rank == -1

    def test_calibration(self) -> None:
        assert pq.calibrate_rank_convention() is pq.RankConvention.OVERLINED_MU
        assert pq.DEFAULT_RANK_CONVENTION is pq.RankConvention.OVERLINED_MU


class TestPentagonal:
    """
    TestPentagonal is the collection of tests of pentagonal number helpers.
    """

    def test_is_pentagonal(self) -> None:
        assert pq.is_pentagonal(0) == 0
        assert pq.is_pentagonal(1) == -1
        assert pq.is_pentagonal(2) == 1
        assert pq.is_pentagonal(26) == 4
        assert pq.is_pentagonal(22) == -4
        assert pq.is_pentagonal(3) is None

    def test_upto(self) -> None:
        values = [pi.value for pi in pq.pentagonal_numbers_upto(15)]
        assert values == [0, 1, 2, 5, 7, 12, 15]
        for pi in pq.pentagonal_numbers_upto(40):
            assert pq.is_pentagonal(pi.value) == pi.ell


class TestNTable:
    """
    TestNTable is the collection of tests of the N(r,s,m,n) table.
    """

    def test_totals(self, table: pq.NTable) -> None:
        assert table.max_n == TABLE_MAX_N
        for n in range(TABLE_MAX_N + 1):
            assert table.total(n) == pq.pair_count(n)

    def test_rows_of_one(self, table: pq.NTable) -> None:
        rows = table.to_rows(min_n=1)
        ones = [row for row in rows if row[3] == 1]
        assert sorted(ones) == [(0, 0, 0, 1, 1), (0, 1, 0, 1, 1), (1, 0, 0, 1, 1), (1, 1, 0, 1, 1)]
        assert all(row[3] >= 1 for row in rows)

    def test_csv(self) -> None:
        text = pq.build_ntable(1).to_csv(min_n=1)
        lines = text.splitlines()
        assert lines[0] == "r,s,m,n,count"
        assert len(lines) == 5

    def test_json(self) -> None:
        records = pq.build_ntable(1).to_json()
        assert records[0] == {"r": 0, "s": 0, "m": 0, "n": 0, "count": 1}

    def test_too_small(self, table: pq.NTable) -> None:
        with pytest.raises(pq.TableTooSmall):
            table.count(0, 0, 0, TABLE_MAX_N + 1)
        with pytest.raises(pq.TableTooSmall):
            pq.blocoeff_multisum(0, TABLE_MAX_N + 1, table)

    def test_invalid_entries(self) -> None:
        with pytest.raises(ValueError):
            pq.NTable(1, {(0, 0, 0, 2): 1})
        with pytest.raises(ValueError):
            pq.NTable(1, {(0, 0, 0, 1): -1})

    def test_signed_coefficients_of_one(self, table: pq.NTable) -> None:
        assert table.signed_coefficients(1) == {0: 2, -2: -1, 2: -1}

    def test_rank_reflection(self, table: pq.NTable) -> None:
        for (r, s, m, n), c in table.counts.items():
            assert table.count(r, s, -m, n) == c

    def test_shifted_reflection_fails(self, table: pq.NTable) -> None:
        # reflecting m - 2s + 2r per (r, s) does not preserve counts
        assert table.count(1, 0, 0, 1) == 1
        assert table.count(1, 0, -4, 1) == 0

    def test_signed_even(self, table: pq.NTable) -> None:
        for n in range(TABLE_MAX_N + 1):
            signed = table.signed_coefficients(n)
            assert all(signed.get(-m, 0) == c for m, c in signed.items())

    def test_generating_coefficient(self, table: pq.NTable) -> None:
        for d, e in ((1, 1), (F(1, 2), 3), (-2, F(2, 5))):
            s = pq.blorank_series(d, e, 5)
            for n in range(6):
                assert table.generating_coefficient(d, e, n) == s[n]

    def test_zero_parameter(self) -> None:
        with pytest.raises(pq.DivisionByZeroParameter):
            pq.blorank_series(0, 1, 3)

    def test_cache_bounded(self) -> None:
        for n in range(6):
            pq.build_ntable(n)
        info = pq.build_ntable.cache_info()
        assert info.maxsize is not None
        assert info.currsize <= info.maxsize

    @pytest.mark.slow
    def test_totals_to_fifteen(self) -> None:
        """
        test_totals_to_fifteen tests the largest table the checks build against the pair counts.
        """
        big = pq.build_ntable(15)
        for n in range(16):
            assert big.total(n) == pq.pair_count(n)
        for (r, s, m, n), c in big.counts.items():
            assert big.count(r, s, -m, n) == c


class TestMultisums:
    """
    TestMultisums is the collection of tests of the finite multi-sums over the table.
    """

    def test_idenp_rhs(self) -> None:
        assert pq.idenp_rhs(1) == 5
        assert pq.idenp_rhs(2) == 6

    def test_idenp(self, table: pq.NTable) -> None:
        for n in range(1, TABLE_MAX_N + 1):
            assert pq.idenp_lhs(n, table) == pq.idenp_rhs(n)

    @pytest.mark.slow
    def test_idenp_to_fifteen(self) -> None:
        big = pq.build_ntable(15)
        for n in range(1, 16):
            assert pq.idenp_lhs(n, big) == pq.idenp_rhs(n), n

    def test_blocoeff_zero_off_pentagonal(self, table: pq.NTable) -> None:
        for n in (3, 4, 6, 8):
            assert all(pq.blocoeff_multisum(m, n, table) == 0 for m in range(-3 * n - 5, 3 * n + 16))

    def test_weights(self) -> None:
        for m in range(-6, 7):
            even = (pq.falling_weight(m) + pq.falling_weight(-m)) // 2
            assert even == pq.fourth_moment_weight(m)
