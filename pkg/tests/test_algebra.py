import pytest

from agfuzzy.algebra import (
    CayleyTable,
    apply,
    canonical_form,
    check_aux_identity,
    check_left_invertive,
    check_medial,
    check_paramedial,
    evaluate_identity,
    format_table,
    is_associative,
    is_commutative,
    is_isomorphic,
    left_identities,
    parse_table,
    parse_tables,
    relabel,
    right_identities,
)
from agfuzzy.enumeration import ag_groupoids
from agfuzzy.errors import CapabilityError, TableFormatError, UsageError


def test_subtraction_products(z3sub):
    assert apply(z3sub, 1, 2) == 1
    assert apply(z3sub, 2, 1) == 2
    assert check_left_invertive(z3sub) is None


def test_apply_out_of_range(z3sub):
    with pytest.raises(UsageError):
        apply(z3sub, 3, 0)


def test_left_zero_witness_is_lexicographically_first(left_zero):
    w = check_left_invertive(left_zero)
    assert w.elements == (0, 0, 1)
    assert (w.lhs, w.rhs) == (0, 1)
    assert evaluate_identity(left_zero, "left-invertive", w.elements) == (w.lhs, w.rhs)


def test_left_zero_is_medial(left_zero):
    assert check_medial(left_zero) is None


def test_non_medial_witness(non_medial):
    w = check_medial(non_medial)
    assert w is not None
    lhs, rhs = evaluate_identity(non_medial, "medial", w.elements)
    assert lhs != rhs


def test_aux_witness_on_left_zero(left_zero):
    w = check_aux_identity(left_zero)
    assert w.elements == (0, 1, 0)
    assert (w.lhs, w.rhs) == (0, 1)


def test_rejects_ragged_rows():
    with pytest.raises(UsageError):
        CayleyTable([[0, 1], [0]])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ag_groupoids_are_medial(n):
    for t in ag_groupoids(n, up_to_iso=n == 4):
        assert check_medial(t) is None


@pytest.mark.parametrize("n", [1, 2, 3])
def test_left_identity_gives_paramedial_and_aux(n):
    for t in ag_groupoids(n, left_identity=True):
        assert check_paramedial(t) is None
        assert check_aux_identity(t) is None


@pytest.mark.parametrize("n", [1, 2, 3])
def test_right_identity_forces_commutative_monoid(n):
    for t in ag_groupoids(n):
        if right_identities(t):
            assert is_commutative(t) and is_associative(t)
            assert left_identities(t) == right_identities(t)


def test_canonical_form_is_idempotent_and_invariant():
    for t in ag_groupoids(3):
        c = canonical_form(t)
        assert canonical_form(c) == c
        assert canonical_form(relabel(t, (2, 0, 1))) == c
        assert is_isomorphic(t, c)


def test_canonical_bound():
    with pytest.raises(CapabilityError):
        canonical_form(CayleyTable([[0] * 7] * 7))


def test_round_trip(z3sub):
    assert parse_table(format_table(z3sub)) == z3sub
    two = format_table(z3sub) + "\n# comment\n" + format_table(z3sub)
    assert parse_tables(two) == [z3sub, z3sub]


@pytest.mark.parametrize("text,line,column", [
    ("x\n0\n", 1, 1),
    ("2\n0 0\n", 1, None),
    ("2\n0 0\n1\n", 3, None),
    ("2\n0 0\n1 5\n", 3, 3),
    ("2\n0 0\n1 -1\n", 3, 3),
])
def test_parse_errors_name_position(text, line, column):
    with pytest.raises(TableFormatError) as err:
        parse_table(text)
    assert err.value.line == line
    if column is not None:
        assert err.value.column == column
