"""Command-line entry point: ``agfuzzy <command> ...``.

Exit codes: 0 success, 1 a witness or falsification was found, 2 usage,
format, bound or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .algebra import IDENTITIES, check_identity, format_table, left_identities, parse_table
from .enumeration import ENUM_BOUND, EnumSpec, enumerate_ag
from .errors import AgFuzzyError
from .fuzzy import DEFAULT_RESOLUTION, FuzzyPoint, GradeChain, format_fuzzy, generated_left_ideal, \
    generated_left_ideal_oracle, parse_fuzzy, product
from .harness import CheckSpec, Population, run_check, run_suite, suite_document, summary_table
from .ideals import enumerate_fuzzy_ideals, family_report
from .statements import DEFAULT_SAMPLES, STATEMENT_IDS

JOBS_ENV = "AGFUZZY_JOBS"


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _read_table(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageFailure(f"cannot read {path}: {exc.strerror}") from None
    return parse_table(text)


class UsageFailure(Exception):
    pass


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args) -> int:
    if args.order > args.bound:
        raise UsageFailure(f"order {args.order} exceeds the enumeration bound {args.bound}")
    spec = EnumSpec(args.order, args.left_identity, args.up_to_iso, args.limit)
    result = enumerate_ag(spec, bound=args.bound, jobs=args.jobs)
    body = "\n".join(format_table(t) for t in result.tables)
    _emit(body + ("\n" if body else "") + "# " + result.summary() + "\n", args.out)
    if args.out:
        print(result.summary())
    return 0


def cmd_check(args) -> int:
    t = _read_table(args.table)
    w = check_identity(t, args.identity)
    if w is None:
        print("pass")
        return 0
    print(f"witness {args.identity} at {w.elements}: lhs={w.lhs} rhs={w.rhs}")
    return 1


def cmd_product(args) -> int:
    t = _read_table(args.table)
    f, g = parse_fuzzy(args.f), parse_fuzzy(args.g)
    print(format_fuzzy(product(f, g, t)))
    return 0


def cmd_gen_ideal(args) -> int:
    t = _read_table(args.table)
    chain = GradeChain(args.k)
    chain.validate(args.level)
    if args.level < 1:
        raise UsageFailure("level must be at least 1")
    if not (0 <= args.anchor < t.order):
        raise UsageFailure(f"anchor {args.anchor} outside the carrier 0..{t.order - 1}")
    point = FuzzyPoint(args.anchor, args.level)
    if not args.oracle:
        print(format_fuzzy(generated_left_ideal(point, t, chain)))
        return 0
    oracle = generated_left_ideal_oracle(point, t, chain)
    if not left_identities(t):
        print(f"oracle {format_fuzzy(oracle)}")
        return 0
    formula = generated_left_ideal(point, t, chain)
    print(f"formula {format_fuzzy(formula)}")
    print(f"oracle {format_fuzzy(oracle)}")
    print("agree" if formula == oracle else "disagree")
    return 0 if formula == oracle else 1


def cmd_ideals(args) -> int:
    t = _read_table(args.table)
    fam = enumerate_fuzzy_ideals(t, GradeChain(args.k), args.kind, args.method)
    print(json.dumps(family_report(fam), sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    spec = CheckSpec(args.statement, k=args.k, population=Population(tuple(args.orders), args.up_to_iso),
                     samples=args.samples, seed=args.seed)
    report = run_check(spec, jobs=args.jobs)
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    return 1 if report.falsified else 0


def cmd_suite(args) -> int:
    reports = run_suite(args.orders, args.k, ids=args.ids, seed=args.seed, up_to_isomorphism=args.up_to_iso,
                        samples=args.samples, jobs=args.jobs)
    population = Population(tuple(args.orders), args.up_to_iso).describe()
    population["chains"] = list(args.k)
    doc = suite_document(reports, population, args.seed)
    if args.out:
        Path(args.out).write_text(doc)
        print(summary_table(reports))
    else:
        sys.stdout.write(doc)
    return 1 if any(r.falsified for r in reports) else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="agfuzzy", description="AG-groupoid and fuzzy-ideal workbench")
    p.add_argument("--version", action="version", version=f"agfuzzy {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list AG-groupoids of a given order")
    e.add_argument("order", type=int)
    e.add_argument("--left-identity", action="store_true", help="keep tables with a left identity")
    e.add_argument("--up-to-iso", action="store_true", help="one canonical table per class")
    e.add_argument("--limit", type=int, default=None)
    e.add_argument("--bound", type=int, default=ENUM_BOUND, help="largest order accepted (default %(default)s)")
    e.add_argument("--out", default=None)
    e.add_argument("--jobs", type=int, default=_default_jobs())
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("check", help="check a named identity on a table")
    c.add_argument("table", help="table file, or - for stdin")
    c.add_argument("--identity", default="left-invertive", choices=sorted(IDENTITIES))
    c.set_defaults(func=cmd_check)

    pr = sub.add_parser("product", help="sup-min product of two fuzzy subsets")
    pr.add_argument("table")
    pr.add_argument("f", help='literal such as "k=2; 0 1 2"')
    pr.add_argument("g")
    pr.set_defaults(func=cmd_product)

    g = sub.add_parser("gen-ideal", help="fuzzy left ideal generated by a fuzzy point")
    g.add_argument("table")
    g.add_argument("anchor", type=int)
    g.add_argument("level", type=int)
    g.add_argument("--k", type=int, default=DEFAULT_RESOLUTION)
    g.add_argument("--oracle", action="store_true", help="also compute the closure fixpoint")
    g.set_defaults(func=cmd_gen_ideal)

    i = sub.add_parser("ideals", help="list the fuzzy ideals of a table")
    i.add_argument("table")
    i.add_argument("--kind", default="left", choices=["left", "right", "two-sided"])
    i.add_argument("--k", type=int, default=DEFAULT_RESOLUTION)
    i.add_argument("--method", default="auto", choices=["auto", "direct", "level-chain"])
    i.set_defaults(func=cmd_ideals)

    def population_flags(q):
        q.add_argument("--orders", type=_int_list, default=[1, 2, 3])
        q.add_argument("--up-to-iso", action="store_true")
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
        q.add_argument("--jobs", type=int, default=_default_jobs())

    v = sub.add_parser("verify", help="run one statement check")
    v.add_argument("statement", choices=STATEMENT_IDS)
    v.add_argument("--k", type=int, default=DEFAULT_RESOLUTION)
    population_flags(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("suite", help="run every statement check")
    s.add_argument("--k", type=_int_list, default=[DEFAULT_RESOLUTION])
    s.add_argument("--ids", type=lambda x: [i for i in x.split(",") if i], default=None)
    s.add_argument("--out", default=None)
    population_flags(s)
    s.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AgFuzzyError, UsageFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
