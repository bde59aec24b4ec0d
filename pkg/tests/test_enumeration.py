import pytest

from agfuzzy.algebra import check_left_invertive, left_identities
from agfuzzy.enumeration import EnumSpec, enumerate_ag, enumerate_naive
from agfuzzy.errors import CapabilityError

# counts computed by the naive filter (orders <= 3) and the backtracking search
COUNTS = {
    1: (1, 1, 1, 1),
    2: (6, 3, 4, 2),
    3: (105, 20, 30, 6),
    4: (7336, 331, 448, 25),
}


@pytest.mark.parametrize("n", sorted(COUNTS))
def test_frozen_counts(n):
    labeled, iso, li, li_iso = COUNTS[n]
    assert enumerate_ag(EnumSpec(n)).count_labeled == labeled
    assert enumerate_ag(EnumSpec(n, up_to_isomorphism=True)).count_iso_classes == iso
    assert enumerate_ag(EnumSpec(n, require_left_identity=True)).count_labeled == li
    assert enumerate_ag(EnumSpec(n, True, True)).count_iso_classes == li_iso


def test_naive_matches_order_two():
    for flags in [(False, False), (True, False), (False, True), (True, True)]:
        spec = EnumSpec(2, *flags)
        assert enumerate_naive(spec).tables == enumerate_ag(spec).tables


def test_every_table_is_ag_and_sorted():
    tables = enumerate_ag(EnumSpec(3)).tables
    assert all(check_left_invertive(t) is None for t in tables)
    assert [t.flat() for t in tables] == sorted(t.flat() for t in tables)


def test_left_identity_filter():
    assert all(left_identities(t) for t in enumerate_ag(EnumSpec(3, True)).tables)


def test_limit_truncates():
    res = enumerate_ag(EnumSpec(3, limit=5))
    assert len(res.tables) == 5
    assert not res.exhausted
    assert res.count_labeled is None
    assert res.tables == enumerate_ag(EnumSpec(3)).tables[:5]
    assert enumerate_ag(EnumSpec(1, limit=5)).exhausted


def test_summary_line():
    assert enumerate_ag(EnumSpec(1)).summary() == "count_labeled=1 count_iso=- exhausted=true"


def test_bounds():
    with pytest.raises(CapabilityError):
        enumerate_ag(EnumSpec(6))
    with pytest.raises(CapabilityError):
        enumerate_ag(EnumSpec(0))
    with pytest.raises(CapabilityError):
        enumerate_naive(EnumSpec(4))


def test_jobs_do_not_change_output():
    spec = EnumSpec(4, up_to_isomorphism=True)
    assert enumerate_ag(spec, jobs=2).tables == enumerate_ag(spec).tables
