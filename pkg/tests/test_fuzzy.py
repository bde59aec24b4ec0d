import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agfuzzy.algebra import CayleyTable
from agfuzzy.enumeration import ag_groupoids
from agfuzzy.errors import CapabilityError, PreconditionError, UsageError
from agfuzzy.fuzzy import (
    CrispSubset,
    FuzzyPoint,
    FuzzySpace,
    FuzzySubset,
    GradeChain,
    characteristic,
    check_fuzzy_subgroupoid,
    crisp_product,
    format_fuzzy,
    fuzzy_points_of,
    generated_left_ideal,
    generated_left_ideal_oracle,
    intersection,
    is_fuzzy_bi_ideal,
    is_fuzzy_ideal,
    is_fuzzy_interior_ideal,
    is_fuzzy_left_ideal,
    is_fuzzy_right_ideal,
    is_fuzzy_subgroupoid,
    level_set,
    parse_fuzzy,
    product,
    subset_of,
    top,
    union,
    union_of_points,
    zero,
)

AG3 = ag_groupoids(3)


@st.composite
def table_and_subsets(draw, count=1, k=2):
    t = draw(st.sampled_from(AG3))
    grades = st.lists(st.integers(0, k), min_size=3, max_size=3)
    return t, [FuzzySubset(tuple(draw(grades)), k) for _ in range(count)]


def indicator(n, elements, k=1):
    return characteristic(CrispSubset.of(n, elements), GradeChain(k))


def test_indicator_products(z3sub):
    assert format_fuzzy(product(indicator(3, [1]), indicator(3, [2]), z3sub)) == "k=1; 0 1 0"
    assert format_fuzzy(product(indicator(3, [1]), indicator(3, [1]), z3sub)) == "k=1; 1 0 0"


def test_product_with_zero_and_top(z3sub):
    f = parse_fuzzy("k=2; 1 2 0")
    assert product(f, zero(z3sub, 2), z3sub) == zero(z3sub, 2)
    S = top(z3sub, 2)
    assert product(S, S, z3sub) == S


def test_subgroupoid_witness(z3sub):
    w = check_fuzzy_subgroupoid(indicator(3, [1]), z3sub)
    assert w.elements == (1, 1)


def test_literal_round_trip_and_errors():
    f = parse_fuzzy("k=2; 0 1 2")
    assert format_fuzzy(f) == "k=2; 0 1 2"
    for bad in ["k=2; 0 3", "0 1", "k=0; 0", "k=2;"]:
        with pytest.raises(UsageError):
            parse_fuzzy(bad)


def test_mismatch_errors(z3sub):
    with pytest.raises(UsageError):
        product(parse_fuzzy("k=1; 0 1"), parse_fuzzy("k=1; 0 1 0"), z3sub)
    with pytest.raises(UsageError):
        union(parse_fuzzy("k=1; 0 1 0"), parse_fuzzy("k=2; 0 1 0"))


def test_level_set_threshold():
    f = parse_fuzzy("k=2; 0 1 2")
    assert level_set(f, 2).elements() == [2]
    with pytest.raises(UsageError):
        level_set(f, 0)


def test_points_rebuild_subset():
    f = parse_fuzzy("k=2; 0 1 2")
    assert union_of_points(fuzzy_points_of(f), 3, GradeChain(2)) == f


@settings(max_examples=150, deadline=None)
@given(table_and_subsets(count=1))
def test_pointwise_and_product_forms(data):
    t, (f,) = data
    S = top(t, f.resolution)
    assert is_fuzzy_subgroupoid(f, t) == subset_of(product(f, f, t), f)
    assert is_fuzzy_left_ideal(f, t) == subset_of(product(S, f, t), f)
    assert is_fuzzy_right_ideal(f, t) == subset_of(product(f, S, t), f)
    assert is_fuzzy_ideal(f, t) == (is_fuzzy_left_ideal(f, t) and is_fuzzy_right_ideal(f, t))


@settings(max_examples=100, deadline=None)
@given(table_and_subsets(count=3))
def test_product_identities(data):
    t, (f, g, h) = data
    assert product(product(f, g, t), h, t) == product(product(h, g, t), f, t)
    # product is monotone and distributes over unions
    assert product(f, union(g, h), t) == union(product(f, g, t), product(f, h, t))
    assert subset_of(product(f, intersection(g, h), t), product(f, g, t))


@pytest.mark.parametrize("k", [1, 2])
def test_space_masks_match_scalar_predicates(k):
    checks = {
        "left": is_fuzzy_left_ideal,
        "right": is_fuzzy_right_ideal,
        "two-sided": is_fuzzy_ideal,
        "subgroupoid": is_fuzzy_subgroupoid,
        "bi": is_fuzzy_bi_ideal,
        "interior": is_fuzzy_interior_ideal,
    }
    for t in AG3[::7]:
        space = FuzzySpace(t, GradeChain(k))
        for kind, check in checks.items():
            mask = space.mask(kind)
            assert [check(space.subset(i), t) for i in range(space.size)] == mask.tolist()


def test_space_products_match_value_product():
    t = AG3[40]
    space = FuzzySpace(t, GradeChain(2))
    for i, j in [(0, 0), (5, 17), (26, 26), (13, 4)]:
        assert space.subset(int(space.products[i, j])) == product(space.subset(i), space.subset(j), t)


def test_space_budget():
    with pytest.raises(CapabilityError):
        FuzzySpace(CayleyTable([[0] * 5] * 5), GradeChain(9))


def test_generated_ideal_examples(z3sub):
    chain = GradeChain(2)
    assert format_fuzzy(generated_left_ideal(FuzzyPoint(1, 2), z3sub, chain)) == "k=2; 2 2 2"
    assert generated_left_ideal_oracle(FuzzyPoint(1, 2), z3sub, chain) == generated_left_ideal(
        FuzzyPoint(1, 2), z3sub, chain)


def test_generated_ideal_requires_left_identity(left_zero):
    with pytest.raises(PreconditionError):
        generated_left_ideal(FuzzyPoint(0, 1), left_zero, GradeChain(1))


@pytest.mark.parametrize("k", [1, 2])
def test_oracle_is_least_left_ideal_above_point(k):
    # brute force over all fuzzy subsets: intersection of left ideals containing the point
    chain = GradeChain(k)
    for t in AG3[::5]:
        space = FuzzySpace(t, chain)
        lefts = [space.subset(i) for i in space.members("left")]
        for a, lam in itertools.product(range(3), range(1, k + 1)):
            above = [f for f in lefts if f[a] >= lam]
            least = above[0]
            for f in above[1:]:
                least = intersection(least, f)
            assert generated_left_ideal_oracle(FuzzyPoint(a, lam), t, chain) == least


def test_characteristic_products_match_crisp():
    for t in AG3[::3]:
        for a, b in itertools.product(range(8), repeat=2):
            A, B = CrispSubset.from_mask(3, a), CrispSubset.from_mask(3, b)
            lhs = product(characteristic(A, 1), characteristic(B, 1), t)
            assert lhs == characteristic(crisp_product(t, A, B), 1)


def test_level_sets_of_left_ideals_are_left_ideals():
    t = AG3[60]
    space = FuzzySpace(t, GradeChain(2))
    for i in space.members("left"):
        f = space.subset(i)
        for lam in (1, 2):
            A = level_set(f, lam)
            if A:
                assert crisp_product(t, CrispSubset(np.ones(3, bool)), A).issubset(A)
