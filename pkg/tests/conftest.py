import pytest

from agfuzzy.algebra import CayleyTable, left_zero_table, subtraction_table


@pytest.fixture
def z3sub() -> CayleyTable:
    return subtraction_table(3)


@pytest.fixture
def left_zero() -> CayleyTable:
    return left_zero_table(2)


@pytest.fixture
def non_medial() -> CayleyTable:
    return CayleyTable([[0, 0], [1, 0]])
