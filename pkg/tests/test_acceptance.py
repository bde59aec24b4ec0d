"""The ten acceptance criteria, one test each, each printing a pass/fail line."""

import itertools
import json
import time

import pytest

from agfuzzy.algebra import check_aux_identity, check_medial, check_paramedial, left_identities, left_zero_table
from agfuzzy.cli import main
from agfuzzy.enumeration import EnumSpec, ag_groupoids, enumerate_ag, enumerate_naive
from agfuzzy.fuzzy import (
    CrispSubset,
    GradeChain,
    characteristic,
    crisp_product,
    is_fuzzy_bi_ideal,
    is_fuzzy_idempotent,
    is_fuzzy_ideal,
    is_fuzzy_interior_ideal,
    is_fuzzy_left_ideal,
    is_fuzzy_right_ideal,
    is_fuzzy_subgroupoid,
    product,
)
from agfuzzy.harness import CheckSpec, Population, recheck_witness, run_check
from agfuzzy.ideals import (
    enumerate_crisp_ideals,
    enumerate_fuzzy_ideals,
    idempotent_left_ideal_monoid,
    is_crisp_ideal,
    is_crisp_prime,
    is_crisp_quasi_prime,
    is_crisp_semiprime,
    is_fuzzy_prime,
    is_fuzzy_quasi_prime,
    is_fuzzy_semiprime,
)

FLAGS = [(False, False), (True, False), (False, True), (True, True)]


@pytest.fixture
def verdict(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


def test_criterion_01_enumeration_oracle(verdict):
    start = time.perf_counter()
    mismatches = [(n, flags) for n in (1, 2, 3) for flags in FLAGS
                  if enumerate_ag(EnumSpec(n, *flags)).tables != enumerate_naive(EnumSpec(n, *flags)).tables]
    elapsed = time.perf_counter() - start
    verdict(1, not mismatches and elapsed < 10,
            f"12 enumerate/naive comparisons, mismatches={mismatches}, {elapsed:.2f}s (< 10s)")


def test_criterion_02_structural_laws(verdict):
    checked = bad = 0
    for n in (1, 2, 3, 4):
        for t in ag_groupoids(n):
            checked += 1
            bad += check_medial(t) is not None
            if left_identities(t):
                bad += check_paramedial(t) is not None
                bad += check_aux_identity(t) is not None
    verdict(2, bad == 0, f"{checked} AG-groupoids of order <= 4, violations={bad}")


def test_criterion_03_fuzzy_product_identities(verdict):
    start = time.perf_counter()
    reports = []
    for sid in ("P1", "C1"):
        reports.append(run_check(CheckSpec(sid, k=1, population=Population((1, 2, 3)))))
        reports.append(run_check(CheckSpec(sid, k=2, population=Population((4,)), tuple_budget=0, samples=1000)))
    elapsed = time.perf_counter() - start
    exhaustive_ok = all(r.exhaustive for r in reports[0::2])
    ok = all(r.verdict == "verified" for r in reports) and exhaustive_ok and elapsed < 120
    detail = ", ".join(f"{r.statement}/k={r.chain}:{r.verdict}:{r.cases_tested}" for r in reports)
    verdict(3, ok, f"{detail}; {elapsed:.1f}s (< 120s)")


def test_criterion_04_generated_ideal_vs_oracle(verdict):
    reports = [run_check(CheckSpec("T3", k=k, population=Population((1, 2, 3, 4)))) for k in (1, 2)]
    ok = all(r.verdict == "verified" and r.violations == 0 for r in reports)
    verdict(4, ok, ", ".join(f"k={r.chain}: {r.structures_tested} groupoids, {r.cases_tested} anchor/level cases"
                             for r in reports))


def test_criterion_05_pointwise_vs_product_forms(verdict):
    reports = [run_check(CheckSpec(sid, k=k)) for sid in ("L1i", "L1ii", "L1iii", "L1iv") for k in (1, 2)]
    ok = all(r.verdict == "verified" and r.exhaustive for r in reports)
    verdict(5, ok, f"{sum(r.cases_tested for r in reports)} subset decisions over n <= 3, k <= 2")


def test_criterion_06_ordered_structures(verdict):
    reports = [run_check(CheckSpec(sid, k=k)) for sid in ("T7", "P7", "T8", "T9") for k in (1, 2)]
    ok = all(r.verdict == "verified" for r in reports)
    verdict(6, ok, ", ".join(f"{r.statement}/k={r.chain}:{r.verdict}" for r in reports))


def test_criterion_07_monoid_constructions(verdict):
    reports = [run_check(CheckSpec(sid, k=k)) for sid in ("T5", "T2") for k in (1, 2)]
    top_is_identity = True
    for k in (1, 2):
        for n in (1, 2, 3):
            for t in ag_groupoids(n, left_identity=True):
                m = idempotent_left_ideal_monoid(t, GradeChain(k))
                top_is_identity &= m.elements[m.identity].grades == (k,) * n
    ok = all(r.verdict == "verified" for r in reports) and top_is_identity
    verdict(7, ok, ", ".join(f"{r.statement}/k={r.chain}:{r.verdict}" for r in reports)
            + f", top is identity: {top_is_identity}")


def _crisp_subgroupoid(t, A):
    return crisp_product(t, A, A).issubset(A)


def test_criterion_08_crisp_fuzzy_bridge(verdict):
    decisions = disagreements = 0
    fuzzy_checks = {
        "left": is_fuzzy_left_ideal, "right": is_fuzzy_right_ideal, "two-sided": is_fuzzy_ideal,
        "bi": is_fuzzy_bi_ideal, "interior": is_fuzzy_interior_ideal,
    }
    chain = GradeChain(1)
    for n in (1, 2, 3):
        for t in ag_groupoids(n):
            subsets = [CrispSubset.from_mask(n, m) for m in range(1 << n)]
            for A, B in itertools.product(subsets, repeat=2):
                decisions += 1
                disagreements += product(characteristic(A, 1), characteristic(B, 1), t) != characteristic(
                    crisp_product(t, A, B), 1)
            for A in subsets[1:]:
                cA = characteristic(A, 1)
                for kind, fuzzy in fuzzy_checks.items():
                    decisions += 1
                    disagreements += fuzzy(cA, t) != is_crisp_ideal(t, A, kind)
                decisions += 2
                disagreements += is_fuzzy_subgroupoid(cA, t) != _crisp_subgroupoid(t, A)
                disagreements += is_fuzzy_idempotent(cA, t) != (crisp_product(t, A, A) == A)
            left = enumerate_fuzzy_ideals(t, chain, "left")
            two = enumerate_fuzzy_ideals(t, chain, "two-sided")
            for A in enumerate_crisp_ideals(t, "left").members:
                decisions += 2
                disagreements += is_fuzzy_quasi_prime(characteristic(A, 1), t, chain, left) != is_crisp_quasi_prime(A, t)
                disagreements += is_fuzzy_semiprime(characteristic(A, 1), t, chain, left) != is_crisp_semiprime(A, t)
            for A in enumerate_crisp_ideals(t, "two-sided").members:
                decisions += 1
                disagreements += is_fuzzy_prime(characteristic(A, 1), t, chain, two) != is_crisp_prime(A, t)
    verdict(8, disagreements == 0, f"{decisions} crisp/fuzzy decisions at k=1, disagreements={disagreements}")


def test_criterion_09_negative_control(verdict):
    rep = run_check(CheckSpec("P1", k=1, population=Population(tables=(left_zero_table(2),)), hypotheses=()))
    ok = rep.verdict == "falsified" and recheck_witness(rep)
    verdict(9, ok, f"P1 over the left-zero magma: {rep.verdict}, witness {json.dumps(rep.witness['subsets'])}")


def test_criterion_10_determinism(verdict, tmp_path, capsys):
    outs = []
    for name in ("a.json", "b.json"):
        target = tmp_path / name
        code = main(["suite", "--orders", "1,2,3", "--k", "1,2", "--seed", "11", "--out", str(target)])
        capsys.readouterr()
        outs.append((code, target.read_bytes()))
    ok = outs[0] == outs[1] and outs[0][0] == 0
    verdict(10, ok, f"two suite runs, exit codes {[c for c, _ in outs]}, identical bytes: {outs[0][1] == outs[1][1]}")
