import numpy as np
import pytest

from agfuzzy.algebra import CayleyTable
from agfuzzy.enumeration import ag_groupoids
from agfuzzy.errors import CapabilityError, LawViolation, PreconditionError, UsageError
from agfuzzy.fuzzy import CrispSubset, GradeChain, characteristic, is_fuzzy_left_ideal, parse_fuzzy
from agfuzzy.ideals import (
    build_monoid,
    enumerate_crisp_ideals,
    enumerate_fuzzy_ideals,
    family_report,
    idempotent_left_ideal_monoid,
    is_crisp_ideal,
    is_fuzzy_prime,
    is_fully_fuzzy_quasi_prime,
    quasi_prime_semilattice,
    left_ideal_profile,
)

AG3_LI = ag_groupoids(3, left_identity=True)


def test_subtraction_ideals_are_trivial(z3sub):
    fam = enumerate_crisp_ideals(z3sub, "left")
    assert [m.elements() for m in fam.members] == [[0, 1, 2]]
    fuzzy = enumerate_fuzzy_ideals(z3sub, GradeChain(2), "left")
    assert fuzzy.literals() == ["k=2; 0 0 0", "k=2; 1 1 1", "k=2; 2 2 2"]


@pytest.mark.parametrize("kind", ["left", "right", "two-sided"])
@pytest.mark.parametrize("k", [1, 2])
def test_level_chain_matches_direct(kind, k):
    for t in ag_groupoids(3):
        a = enumerate_fuzzy_ideals(t, GradeChain(k), kind, "direct")
        b = enumerate_fuzzy_ideals(t, GradeChain(k), kind, "level-chain")
        assert np.array_equal(a.grades, b.grades)


def test_fuzzy_members_are_ideals():
    t = AG3_LI[3]
    fam = enumerate_fuzzy_ideals(t, GradeChain(2), "left")
    assert all(is_fuzzy_left_ideal(f, t) for f in fam)


def test_k1_family_is_characteristic_functions():
    for t in ag_groupoids(3)[::4]:
        crisp = enumerate_crisp_ideals(t, "left").members
        fuzzy = enumerate_fuzzy_ideals(t, GradeChain(1), "left")
        expect = {characteristic(A, 1) for A in crisp} | {characteristic(CrispSubset((0, 0, 0)), 1)}
        assert set(fuzzy.members) == expect
        assert all(is_crisp_ideal(t, A, "left") for A in crisp)


def test_direct_budget():
    with pytest.raises(CapabilityError):
        enumerate_fuzzy_ideals(CayleyTable([[0] * 5] * 5), GradeChain(9), "left", "direct")


def test_prime_requires_membership(z3sub):
    with pytest.raises(UsageError):
        is_fuzzy_prime(parse_fuzzy("k=2; 0 1 2"), z3sub, GradeChain(2))


def test_monoid_has_top_identity():
    for k in (1, 2):
        for t in AG3_LI:
            m = idempotent_left_ideal_monoid(t, GradeChain(k))
            assert m.elements[m.identity].grades == (k, k, k)


def test_monoid_requires_left_identity(left_zero):
    with pytest.raises(PreconditionError):
        idempotent_left_ideal_monoid(left_zero, GradeChain(1))


def test_build_monoid_reports_law():
    op = np.array([[0, 0], [1, 1]])
    with pytest.raises(LawViolation):
        build_monoid([parse_fuzzy("k=1; 0 1"), parse_fuzzy("k=1; 1 1")], op, 0)


def test_semilattice_precondition():
    for t in AG3_LI:
        chain = GradeChain(2)
        if is_fully_fuzzy_quasi_prime(t, chain):
            assert len(quasi_prime_semilattice(t, chain).elements) >= 1
        else:
            with pytest.raises(PreconditionError):
                quasi_prime_semilattice(t, chain)


def test_profile_all_equal():
    for t in AG3_LI:
        assert left_ideal_profile(t, GradeChain(2)).all_equal()


def test_family_report_shape(z3sub):
    rep = family_report(enumerate_fuzzy_ideals(z3sub, GradeChain(1), "left"))
    assert rep["members"] == ["k=1; 0 0 0", "k=1; 1 1 1"]
    assert rep["products"] == [[0, 0], [0, 1]]
