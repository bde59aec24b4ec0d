"""Run registered statements over enumerated populations and collect reports."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import __version__
from .algebra import CayleyTable, left_zero_table
from .enumeration import EnumSpec, enumerate_ag
from .errors import CapabilityError, UsageError
from .fuzzy import GradeChain
from .statements import (
    DEFAULT_SAMPLES,
    DEFAULT_TUPLE_BUDGET,
    HYPOTHESES,
    REGISTRY,
    STATEMENT_IDS,
    Context,
)

NON_MEDIAL_TABLE = CayleyTable([[0, 0], [1, 0]])


@dataclass(frozen=True)
class Population:
    orders: tuple = (1, 2, 3)
    up_to_isomorphism: bool = False
    tables: tuple | None = None  # explicit structures override enumeration

    def structures(self) -> list[CayleyTable]:
        if self.tables is not None:
            return list(self.tables)
        out = []
        for n in self.orders:
            out.extend(enumerate_ag(EnumSpec(n, up_to_isomorphism=self.up_to_isomorphism)).tables)
        return out

    def describe(self) -> dict:
        if self.tables is not None:
            return {"explicit_tables": [t.rows for t in self.tables]}
        return {"orders": list(self.orders),
                "labeling": "iso-classes" if self.up_to_isomorphism else "labeled"}


@dataclass(frozen=True)
class CheckSpec:
    statement: str
    k: int = 2
    population: Population = Population()
    hypotheses: tuple | None = None  # None means the statement's own hypotheses
    tuple_budget: int = DEFAULT_TUPLE_BUDGET
    samples: int = DEFAULT_SAMPLES
    seed: int = 0

    def filters(self) -> tuple:
        return REGISTRY[self.statement].hypotheses if self.hypotheses is None else tuple(self.hypotheses)


@dataclass
class CheckReport:
    statement: str
    description: str
    hypotheses: list
    chain: int
    population: dict
    structures_tested: int = 0
    hypothesis_excluded: int = 0
    vacuous: int = 0
    budget_skipped: int = 0
    cases_tested: int = 0
    exhaustive: bool = True
    violations: int = 0
    verdict: str = "skipped-no-population"
    witness: dict | None = None
    seed: int = 0
    note: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def falsified(self) -> bool:
        return self.verdict == "falsified"


def _tally_structure(spec: CheckSpec, ids: list, filters: dict, t: CayleyTable, pos: int) -> dict:
    """Evaluate the given statements on one structure."""
    ctx = Context(t, GradeChain(spec.k), seed=spec.seed, tuple_budget=spec.tuple_budget, samples=spec.samples)
    out = {}
    hyp_cache: dict = {}
    for sid in ids:
        try:
            ok = True
            for h in filters[sid]:
                if h not in hyp_cache:
                    hyp_cache[h] = HYPOTHESES[h](ctx)
                if not hyp_cache[h]:
                    ok = False
                    break
            if not ok:
                out[sid] = ("excluded", None)
                continue
            out[sid] = ("ran", REGISTRY[sid].run(ctx))
        except CapabilityError:
            out[sid] = ("budget", None)
    return out


def _chunk_worker(args):
    spec, ids, filters, items = args
    return [(pos, _tally_structure(spec, ids, filters, t, pos)) for pos, t in items]


def _evaluate(spec: CheckSpec, ids: list, jobs: int = 1) -> list[CheckReport]:
    for sid in ids:
        if sid not in REGISTRY:
            raise UsageError(f"unknown statement id {sid!r}")
    filters = {}
    for sid in ids:
        fs = REGISTRY[sid].hypotheses if spec.hypotheses is None else tuple(spec.hypotheses)
        unknown = [h for h in fs if h not in HYPOTHESES]
        if unknown:
            raise UsageError(f"unknown hypothesis {unknown[0]!r}")
        filters[sid] = fs
    structures = spec.population.structures()
    items = list(enumerate(structures))
    if jobs > 1 and len(items) > 1:
        size = max(1, len(items) // (jobs * 4))
        chunks = [items[i:i + size] for i in range(0, len(items), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for part in pool.map(_chunk_worker, [(spec, ids, filters, c) for c in chunks]) for r in part]
        results.sort(key=lambda r: r[0])
    else:
        results = [(pos, _tally_structure(spec, ids, filters, t, pos)) for pos, t in items]

    reports = []
    for sid in ids:
        st = REGISTRY[sid]
        rep = CheckReport(sid, st.description, list(filters[sid]), spec.k, spec.population.describe(),
                          seed=spec.seed, note=st.note)
        for pos, per in results:
            status, outcome = per[sid]
            if status == "excluded":
                rep.hypothesis_excluded += 1
                continue
            if status == "budget":
                rep.budget_skipped += 1
                rep.exhaustive = False
                continue
            if outcome.cases == 0 and not outcome.exhaustive:
                rep.budget_skipped += 1
                rep.exhaustive = False
                continue
            rep.structures_tested += 1
            rep.cases_tested += outcome.cases
            rep.exhaustive &= outcome.exhaustive
            rep.vacuous += int(outcome.vacuous)
            if outcome.witness is not None:
                rep.violations += 1
                if rep.witness is None:
                    rep.witness = {"table": structures[pos].rows, **outcome.witness}
        if rep.violations:
            rep.verdict = "falsified"
        elif rep.structures_tested:
            rep.verdict = "verified"
        reports.append(rep)
    return reports


def run_check(spec: CheckSpec, jobs: int = 1) -> CheckReport:
    return _evaluate(spec, [spec.statement], jobs)[0]


def run_suite(orders, chains, ids=None, seed: int = 0, up_to_isomorphism: bool = False,
              samples: int = DEFAULT_SAMPLES, jobs: int = 1) -> list[CheckReport]:
    """Every selected statement over the cartesian product of orders and chains."""
    orders = tuple(orders)
    if not orders:
        return []
    selected = list(STATEMENT_IDS) if ids is None else [i for i in STATEMENT_IDS if i in set(ids)]
    if ids is not None:
        unknown = sorted(set(ids) - set(STATEMENT_IDS))
        if unknown:
            raise UsageError(f"unknown statement id {unknown[0]!r}")
    population = Population(orders, up_to_isomorphism)
    reports = []
    for k in chains:
        spec = CheckSpec(selected[0] if selected else "P1", k=k, population=population, seed=seed, samples=samples)
        reports.extend(_evaluate(spec, selected, jobs))
    return reports


def recheck_witness(report: CheckReport) -> bool:
    """Re-derive the reported violation without the index tables used to find it."""
    if report.witness is None:
        return False
    t = CayleyTable(report.witness["table"])
    return bool(REGISTRY[report.statement].recheck(t, GradeChain(report.chain), report.witness))


def negative_control() -> list[CheckReport]:
    """AG-only statements run on non-AG magmas; each must come back falsified."""
    runs = [
        CheckSpec("P1", k=1, population=Population(tables=(left_zero_table(2),)), hypotheses=()),
        CheckSpec("C1", k=1, population=Population(tables=(NON_MEDIAL_TABLE,)), hypotheses=()),
        CheckSpec("L3", k=1, population=Population((1, 2, 3)), hypotheses=("ag",)),
    ]
    return [run_check(spec) for spec in runs]


def summarize(reports: list[CheckReport]) -> dict:
    counts = {"verified": 0, "falsified": 0, "skipped-no-population": 0}
    for r in reports:
        counts[r.verdict] += 1
    return counts


def suite_document(reports: list[CheckReport], population: dict, seed: int) -> str:
    doc = {
        "tool": "agfuzzy",
        "version": __version__,
        "population": population,
        "seed": seed,
        "summary": summarize(reports),
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def summary_table(reports: list[CheckReport]) -> str:
    lines = [f"{'id':<7}{'k':>2} {'verdict':<22}{'structures':>11}{'excluded':>9}{'cases':>12}"]
    for r in reports:
        flag = "" if r.exhaustive else " (sampled)"
        lines.append(f"{r.statement:<7}{r.chain:>2} {r.verdict:<22}{r.structures_tested:>11}"
                     f"{r.hypothesis_excluded:>9}{r.cases_tested:>12}{flag}")
    return "\n".join(lines)
