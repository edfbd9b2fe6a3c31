"""
test_model contains tests for py_qpp/model.py
"""
import fractions

import pytest

import py_qpp as pq


class TestModel:
    """
    TestModel is the collection of tests of the value models.
    """

    @pytest.mark.parametrize("cls, value", [(pq.Int, -3), (pq.NonNegativeInt, 0), (pq.PositiveInt, 1), (pq.Order, 40)])
    def test_valid_ints(self, cls, value: int) -> None:
        assert cls(value).data == value

    @pytest.mark.parametrize(
        "cls, value, exc",
        [
            (pq.Int, "3", TypeError),
            (pq.Int, True, TypeError),
            (pq.NonNegativeInt, -1, ValueError),
            (pq.PositiveInt, 0, ValueError),
            (pq.Order, -5, ValueError),
            (pq.QStep, 0, ValueError),
        ],
    )
    def test_invalid_ints(self, cls, value, exc) -> None:
        with pytest.raises(exc):
            cls(value)

    def test_offset24(self) -> None:
        """
        test_offset24 tests that offsets must sit on the 1/24 grid.
        """
        assert pq.Offset24(fractions.Fraction(5, 24)).data == fractions.Fraction(5, 24)
        assert pq.Offset24(fractions.Fraction(1, 8)).is_integral is False
        assert pq.Offset24(fractions.Fraction(48, 24)).is_integral is True
        with pytest.raises(ValueError):
            pq.Offset24(fractions.Fraction(1, 5))

    def test_check_id(self) -> None:
        assert pq.CheckID("pentagonal").data == "pentagonal"
        with pytest.raises(ValueError):
            pq.CheckID("")
        with pytest.raises(ValueError):
            pq.CheckID(" pentagonal")
        with pytest.raises(TypeError):
            pq.CheckID(3)

    def test_eq(self) -> None:
        assert pq.Order(3) == pq.Order(3)
        assert pq.Order(3) != pq.Order(4)
