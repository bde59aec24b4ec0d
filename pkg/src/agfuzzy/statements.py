"""Registry of checkable statements about fuzzy subsets of AG-groupoids.

Each statement has a vectorised ``run(ctx)`` over one structure and one
grade chain, returning an :class:`Outcome`, and a ``recheck(t, chain,
witness)`` that re-derives a reported violation through the value-level API
(``fuzzy.product``, the scalar ``check_*`` predicates, level-chain families)
rather than the index tables ``run`` used.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from .algebra import CayleyTable, is_ag, is_associative, is_commutative, left_identities
from .errors import LawViolation, PreconditionError
from .fuzzy import (
    FuzzyPoint,
    FuzzySpace,
    GradeChain,
    check_fuzzy_bi_ideal,
    format_fuzzy,
    generated_left_ideal,
    generated_left_ideal_oracle,
    intersection,
    is_fuzzy_bi_ideal,
    is_fuzzy_ideal,
    is_fuzzy_idempotent,
    is_fuzzy_interior_ideal,
    is_fuzzy_left_ideal,
    is_fuzzy_right_ideal,
    is_fuzzy_subgroupoid,
    parse_fuzzy,
    product,
    subset_of,
    top,
    union,
)
from .ideals import (
    FuzzyIdealFamily,
    _all_prime,
    enumerate_fuzzy_ideals,
    idempotent_left_ideal_monoid,
    incomparable_pair,
    is_fully_fuzzy_prime,
    is_fully_fuzzy_quasi_prime,
    prime_violation,
    quasi_prime_semilattice,
    left_ideal_profile,
)

DEFAULT_TUPLE_BUDGET = 600_000
DEFAULT_SAMPLES = 2000


@dataclass
class Outcome:
    cases: int
    exhaustive: bool = True
    witness: dict | None = None
    vacuous: bool = False


class Context:
    """One structure over one chain, with lazily built shared data."""

    def __init__(self, table: CayleyTable, chain: GradeChain, seed: int = 0,
                 tuple_budget: int = DEFAULT_TUPLE_BUDGET, samples: int = DEFAULT_SAMPLES):
        self.table = table
        self.chain = chain
        self.seed = seed
        self.tuple_budget = tuple_budget
        self.samples = samples

    @cached_property
    def space(self) -> FuzzySpace:
        return FuzzySpace(self.table, self.chain)

    @property
    def P(self) -> np.ndarray:
        return self.space.products

    @property
    def m(self) -> int:
        return self.space.size

    @property
    def top(self) -> int:
        return self.space.top

    @cached_property
    def has_left_identity(self) -> bool:
        return bool(left_identities(self.table))

    def family(self, kind: str) -> FuzzyIdealFamily:
        cache = self.__dict__.setdefault("_families", {})
        if kind not in cache:
            mask = self.space.mask(kind)
            cache[kind] = FuzzyIdealFamily(kind, self.chain, self.table, np.array(self.space.grades[mask]))
        return cache[kind]

    def rng(self, statement_id: str) -> np.random.Generator:
        key = [self.seed, zlib.crc32(statement_id.encode()), zlib.crc32(bytes(self.table.flat())),
               self.chain.resolution]
        return np.random.default_rng(key)

    def tuples(self, arity: int, statement_id: str, m: int | None = None):
        """All index tuples if within budget (lexicographic), else seeded samples."""
        m = self.m if m is None else m
        if m ** arity <= self.tuple_budget:
            grids = np.indices((m,) * arity).reshape(arity, -1).T
            return grids, True
        return self.rng(statement_id).integers(0, m, size=(self.samples, arity)), False

    def lit(self, i) -> str:
        return format_fuzzy(self.space.subset(int(i)))


# -- registry ------------------------------------------------------------------------

@dataclass
class Statement:
    id: str
    description: str
    hypotheses: tuple
    run: Callable[[Context], Outcome]
    recheck: Callable = field(default=lambda t, chain, w: False)
    note: str | None = None


REGISTRY: dict[str, Statement] = {}

STATEMENT_IDS = (
    "P1", "C1", "T1a", "T1b", "P2-fwd", "P2-rev", "L1i", "L1ii", "L1iii", "L1iv", "L2", "L3",
    "L4", "P3", "C2", "T2", "T3", "P4", "T4i", "T4ii", "T5", "L5", "L6", "R1", "R2", "L7", "L8",
    "L9", "L10", "P5i", "P5ii", "L11", "L12", "P6", "C3", "T6", "T7", "P7", "T8", "C4", "T9",
)


def statement(sid: str, description: str, hypotheses=("ag",), note=None):
    def register(run):
        st = Statement(sid, description, tuple(hypotheses), run, note=note)
        REGISTRY[sid] = st

        def recheck(fn):
            st.recheck = fn
            return fn

        run.recheck = recheck
        return run

    return register


def _subsets(w: dict) -> dict:
    return {name: parse_fuzzy(text) for name, text in w["subsets"].items()}


# -- hypotheses -----------------------------------------------------------------------

def _surjective_product(ctx: Context) -> bool:
    return len(np.unique(ctx.P)) == ctx.m


HYPOTHESES: dict[str, Callable[[Context], bool]] = {
    "ag": lambda ctx: is_ag(ctx.table),
    "left-identity": lambda ctx: ctx.has_left_identity,
    "commutative-semigroup": lambda ctx: is_commutative(ctx.table) and is_associative(ctx.table),
    "surjective-product": _surjective_product,
    "fully-quasi-prime": lambda ctx: is_fully_fuzzy_quasi_prime(ctx.table, ctx.chain, ctx.family("left")),
}


# -- identities in F(S) -------------------------------------------------------------------

_NAMES = ("f", "g", "h", "k")


def _identity(sid, description, hypotheses, arity, lhs, rhs):
    @statement(sid, description, hypotheses)
    def run(ctx: Context) -> Outcome:
        idx, exhaustive = ctx.tuples(arity, sid)
        P = ctx.P

        def o(a, b):
            return P[a, b]

        cols = [idx[:, i] for i in range(arity)]
        bad = np.flatnonzero(lhs(o, *cols) != rhs(o, *cols))
        witness = None
        if len(bad):
            row = idx[bad[0]]
            witness = {"subsets": {_NAMES[i]: ctx.lit(row[i]) for i in range(arity)}}
        return Outcome(len(idx), exhaustive, witness)

    @run.recheck
    def recheck(t, chain, w):
        fs = [_subsets(w)[_NAMES[i]] for i in range(arity)]

        def o(a, b):
            return product(a, b, t)

        return lhs(o, *fs) != rhs(o, *fs)

    return run


_identity("P1", "(f o g) o h = (h o g) o f for all fuzzy subsets", ("ag",), 3,
          lambda o, f, g, h: o(o(f, g), h), lambda o, f, g, h: o(o(h, g), f))
_identity("C1", "(f o g) o (h o k) = (f o h) o (g o k) for all fuzzy subsets", ("ag",), 4,
          lambda o, f, g, h, k: o(o(f, g), o(h, k)), lambda o, f, g, h, k: o(o(f, h), o(g, k)))
_identity("T1a", "f o (g o h) = g o (f o h) with a left identity", ("ag", "left-identity"), 3,
          lambda o, f, g, h: o(f, o(g, h)), lambda o, f, g, h: o(g, o(f, h)))
_identity("T1b", "(f o g) o (h o k) = (k o h) o (g o f) with a left identity", ("ag", "left-identity"), 4,
          lambda o, f, g, h, k: o(o(f, g), o(h, k)), lambda o, f, g, h, k: o(o(k, h), o(g, f)))
_identity("P2-fwd", "S a commutative semigroup implies (f o g) o h = f o (h o g)",
          ("ag", "commutative-semigroup"), 3,
          lambda o, f, g, h: o(o(f, g), h), lambda o, f, g, h: o(f, o(h, g)))


def _universal(ctx: Context, lhs, rhs, sid: str):
    """Exhaustively decide a three-variable identity; None when out of budget."""
    m = ctx.m
    if m ** 3 > 20 * ctx.tuple_budget:
        return None
    P = ctx.P
    f = np.arange(m)
    for a in range(m):
        L = lhs(lambda x, y: P[x, y], a, f[:, None], f[None, :])
        R = rhs(lambda x, y: P[x, y], a, f[:, None], f[None, :])
        bad = np.argwhere(L != R)
        if len(bad):
            return (a, int(bad[0][0]), int(bad[0][1]))
    return True


@statement("P2-rev", "F(S) = F(S)^2 and (f o g) o h = f o (h o g) for all f, g, h imply S is a "
           "commutative semigroup", ("ag", "surjective-product"),
           note="F(S) = F(S)^2 is decided over the chain: every chain-valued subset is a product")
def p2_rev(ctx: Context) -> Outcome:
    lhs = lambda o, f, g, h: o(o(f, g), h)  # noqa: E731
    rhs = lambda o, f, g, h: o(f, o(h, g))  # noqa: E731
    holds = _universal(ctx, lhs, rhs, "P2-rev")
    if holds is None:
        return Outcome(0, exhaustive=False)
    if holds is not True:
        return Outcome(1, vacuous=True)
    t = ctx.table
    if is_commutative(t) and is_associative(t):
        return Outcome(1)
    return Outcome(1, witness={"subsets": {}, "commutative": is_commutative(t),
                               "associative": is_associative(t)})


@p2_rev.recheck
def _(t, chain, w):
    ctx = Context(t, chain)
    lhs = lambda o, f, g, h: o(o(f, g), h)  # noqa: E731
    rhs = lambda o, f, g, h: o(f, o(h, g))  # noqa: E731
    return (_surjective_product(ctx) and _universal(ctx, lhs, rhs, "P2-rev") is True
            and not (is_commutative(t) and is_associative(t)))


@statement("C2", "(f o g) o h = g o (f o h) for all f, g, h exactly when (f o g) o h = g o (h o f) "
           "for all f, g, h")
def c2(ctx: Context) -> Outcome:
    first = _universal(ctx, lambda o, f, g, h: o(o(f, g), h), lambda o, f, g, h: o(g, o(f, h)), "C2")
    second = _universal(ctx, lambda o, f, g, h: o(o(f, g), h), lambda o, f, g, h: o(g, o(h, f)), "C2")
    if first is None or second is None:
        return Outcome(0, exhaustive=False)
    if (first is True) == (second is True):
        return Outcome(2 * ctx.m ** 3)
    failing, triple = ("i", first) if first is not True else ("ii", second)
    return Outcome(2 * ctx.m ** 3, witness={
        "failing_form": failing,
        "subsets": {n: ctx.lit(i) for n, i in zip(_NAMES, triple)},
    })


@c2.recheck
def _(t, chain, w):
    s = _subsets(w)
    f, g, h = s["f"], s["g"], s["h"]
    lhs = product(product(f, g, t), h, t)
    if w["failing_form"] == "i":
        fails = lhs != product(g, product(f, h, t), t)
        other = _universal(Context(t, chain), lambda o, f, g, h: o(o(f, g), h),
                           lambda o, f, g, h: o(g, o(h, f)), "C2")
    else:
        fails = lhs != product(g, product(h, f, t), t)
        other = _universal(Context(t, chain), lambda o, f, g, h: o(o(f, g), h),
                           lambda o, f, g, h: o(g, o(f, h)), "C2")
    return fails and other is True


# -- pointwise/product characterisations -------------------------------------------------

def _equivalence(ctx: Context, pointwise: np.ndarray, product_form: np.ndarray) -> Outcome:
    bad = np.flatnonzero(pointwise != product_form)
    witness = None
    if len(bad):
        i = bad[0]
        witness = {"subsets": {"f": ctx.lit(i)}, "pointwise": bool(pointwise[i]),
                   "product_form": bool(product_form[i])}
    return Outcome(ctx.m, True, witness)


def _lemma1(sid, description, pointwise_kind, inclusion):
    @statement(sid, description)
    def run(ctx: Context) -> Outcome:
        S = ctx.space
        f = np.arange(ctx.m)
        return _equivalence(ctx, S.mask(pointwise_kind), inclusion(S, ctx.P, f, ctx.top))

    scalar = {"subgroupoid": is_fuzzy_subgroupoid, "left": is_fuzzy_left_ideal,
              "right": is_fuzzy_right_ideal, "two-sided": is_fuzzy_ideal}[pointwise_kind]

    @run.recheck
    def recheck(t, chain, w):
        f = _subsets(w)["f"]
        S = top(t, chain)
        forms = {
            "subgroupoid": subset_of(product(f, f, t), f),
            "left": subset_of(product(S, f, t), f),
            "right": subset_of(product(f, S, t), f),
            "two-sided": subset_of(product(S, f, t), f) and subset_of(product(f, S, t), f),
        }
        return scalar(f, t) != forms[pointwise_kind]

    return run


_lemma1("L1i", "f is a fuzzy subgroupoid iff f o f is within f", "subgroupoid",
        lambda S, P, f, top: S.leq(P[f, f], f))
_lemma1("L1ii", "f is a fuzzy left ideal iff S o f is within f", "left",
        lambda S, P, f, top: S.leq(P[top, f], f))
_lemma1("L1iii", "f is a fuzzy right ideal iff f o S is within f", "right",
        lambda S, P, f, top: S.leq(P[f, top], f))
_lemma1("L1iv", "f is a fuzzy ideal iff S o f and f o S are within f", "two-sided",
        lambda S, P, f, top: S.leq(P[top, f], f) & S.leq(P[f, top], f))


_SCALAR = {
    "subgroupoid": is_fuzzy_subgroupoid,
    "left": is_fuzzy_left_ideal,
    "right": is_fuzzy_right_ideal,
    "two-sided": is_fuzzy_ideal,
    "bi": is_fuzzy_bi_ideal,
    "interior": is_fuzzy_interior_ideal,
    "idempotent": is_fuzzy_idempotent,
}


def _implication(ctx: Context, premise: np.ndarray, conclusion: np.ndarray, extra=None) -> Outcome:
    bad = np.flatnonzero(premise & ~conclusion)
    witness = None
    if len(bad):
        witness = {"subsets": {"f": ctx.lit(bad[0])}}
        if extra:
            witness.update(extra(bad[0]))
    return Outcome(int(premise.sum()), True, witness)


def _pointwise_implication(sid, description, hypotheses, premise_kinds, conclusion_kinds):
    @statement(sid, description, hypotheses)
    def run(ctx: Context) -> Outcome:
        S = ctx.space
        premise = np.ones(ctx.m, dtype=bool)
        for kind in premise_kinds:
            premise &= S.mask(kind)
        conclusion = np.ones(ctx.m, dtype=bool)
        for kind in conclusion_kinds:
            conclusion &= S.mask(kind)
        return _implication(ctx, premise, conclusion)

    @run.recheck
    def recheck(t, chain, w):
        f = _subsets(w)["f"]
        return (all(_SCALAR[k](f, t) for k in premise_kinds)
                and not all(_SCALAR[k](f, t) for k in conclusion_kinds))

    return run


_pointwise_implication("P4", "every idempotent fuzzy left ideal is a fuzzy ideal", ("ag",),
                       ("left", "idempotent"), ("right",))
_pointwise_implication("L5", "with a left identity every fuzzy right ideal is a fuzzy ideal",
                       ("ag", "left-identity"), ("right",), ("left",))
_pointwise_implication("P5i", "every idempotent fuzzy left ideal is a fuzzy bi-ideal", ("ag",),
                       ("left", "idempotent"), ("bi",))
_pointwise_implication("P5ii", "every idempotent fuzzy left ideal is a fuzzy interior ideal", ("ag",),
                       ("left", "idempotent"), ("interior",))
_pointwise_implication("L12", "with a left identity every fuzzy left and interior ideal is a fuzzy bi-ideal",
                       ("ag", "left-identity"), ("left", "interior"), ("bi",))
_pointwise_implication("T6", "every fuzzy ideal is a fuzzy bi-ideal and a fuzzy interior ideal", ("ag",),
                       ("two-sided",), ("bi", "interior"))


def _pointwise_equivalence(sid, description, hypotheses, domain_kinds, left_kind, right_kind):
    @statement(sid, description, hypotheses)
    def run(ctx: Context) -> Outcome:
        S = ctx.space
        domain = np.ones(ctx.m, dtype=bool)
        for kind in domain_kinds:
            domain &= S.mask(kind)
        bad = np.flatnonzero(domain & (S.mask(left_kind) != S.mask(right_kind)))
        witness = {"subsets": {"f": ctx.lit(bad[0])}} if len(bad) else None
        return Outcome(int(domain.sum()), True, witness)

    @run.recheck
    def recheck(t, chain, w):
        f = _subsets(w)["f"]
        return all(_SCALAR[k](f, t) for k in domain_kinds) and _SCALAR[left_kind](f, t) != _SCALAR[right_kind](f, t)

    return run


_pointwise_equivalence("R1", "with a left identity, an idempotent fuzzy subset is a fuzzy left ideal iff "
                       "it is a fuzzy right ideal", ("ag", "left-identity"), ("idempotent",), "left", "right")
_pointwise_equivalence("L11", "with a left identity, f is a fuzzy right ideal iff f is a fuzzy interior ideal",
                       ("ag", "left-identity"), (), "right", "interior")


def _product_characterisation(sid, description, form, scalar_form, pointwise):
    @statement(sid, description)
    def run(ctx: Context) -> Outcome:
        S = ctx.space
        f = np.arange(ctx.m)
        domain = S.subgroupoid_mask
        bad = np.flatnonzero(domain & (S.mask(pointwise) != S.leq(form(ctx.P, f, ctx.top), f)))
        witness = {"subsets": {"f": ctx.lit(bad[0])}} if len(bad) else None
        return Outcome(int(domain.sum()), True, witness)

    @run.recheck
    def recheck(t, chain, w):
        f = _subsets(w)["f"]
        return is_fuzzy_subgroupoid(f, t) and _SCALAR[pointwise](f, t) != subset_of(scalar_form(t, chain, f), f)

    return run


_product_characterisation(
    "L7", "a fuzzy subgroupoid f is a fuzzy bi-ideal iff (f o S) o f is within f",
    lambda P, f, top: P[P[f, top], f],
    lambda t, chain, f: product(product(f, top(t, chain), t), f, t), "bi")
_product_characterisation(
    "L10", "a fuzzy subgroupoid f is a fuzzy interior ideal iff (S o f) o S is within f",
    lambda P, f, top: P[P[top, f], top],
    lambda t, chain, f: product(product(top(t, chain), f, t), top(t, chain), t), "interior")


# -- statements about specific products ------------------------------------------------------

@statement("L2", "intersections of fuzzy subgroupoids, left, right and two-sided ideals stay in the class")
def l2(ctx: Context) -> Outcome:
    S = ctx.space
    cases = 0
    for kind in ("subgroupoid", "left", "right", "two-sided"):
        members = S.members(kind)
        meet = S.meet(members[:, None], members[None, :])
        bad = np.argwhere(~S.mask(kind)[meet])
        cases += len(members) ** 2
        if len(bad):
            i, j = bad[0]
            return Outcome(cases, True, {"kind": kind, "subsets": {"f": ctx.lit(members[i]),
                                                                    "g": ctx.lit(members[j])}})
    return Outcome(cases)


@l2.recheck
def _(t, chain, w):
    s = _subsets(w)
    test = _SCALAR[w["kind"]]
    return test(s["f"], t) and test(s["g"], t) and not test(intersection(s["f"], s["g"]), t)


@statement("L9", "the intersection of two fuzzy bi-ideals is a fuzzy bi-ideal")
def l9(ctx: Context) -> Outcome:
    S = ctx.space
    members = S.members("bi")
    meet = S.meet(members[:, None], members[None, :])
    bad = np.argwhere(~S.bi_ideal_mask[meet])
    witness = None
    if len(bad):
        i, j = bad[0]
        witness = {"subsets": {"f": ctx.lit(members[i]), "g": ctx.lit(members[j])}}
    return Outcome(len(members) ** 2, True, witness)


@l9.recheck
def _(t, chain, w):
    s = _subsets(w)
    return (is_fuzzy_bi_ideal(s["f"], t) and is_fuzzy_bi_ideal(s["g"], t)
            and check_fuzzy_bi_ideal(intersection(s["f"], s["g"]), t) is not None)


@statement("L3", "S o S = S with a left identity", ("ag", "left-identity"))
def l3(ctx: Context) -> Outcome:
    ss = ctx.P[ctx.top, ctx.top]
    witness = None if ss == ctx.top else {"subsets": {}, "S o S": ctx.lit(ss)}
    return Outcome(1, True, witness)


@l3.recheck
def _(t, chain, w):
    S = top(t, chain)
    return product(S, S, t) != S


@statement("L4", "S o f = f for every fuzzy left ideal f, with a left identity", ("ag", "left-identity"))
def l4(ctx: Context) -> Outcome:
    S = ctx.space
    f = np.arange(ctx.m)
    return _implication(ctx, S.left_ideal_mask, ctx.P[ctx.top, f] == f)


@l4.recheck
def _(t, chain, w):
    f = _subsets(w)["f"]
    return is_fuzzy_left_ideal(f, t) and product(top(t, chain), f, t) != f


@statement("P3", "for fuzzy left ideals f, k and any g, h: f o g = h o k implies g o f = k o h",
           ("ag", "left-identity"))
def p3(ctx: Context) -> Outcome:
    P = ctx.P
    m = ctx.m
    L = ctx.space.members("left")
    big = np.iinfo(np.int64).max
    # for each left ideal f and product value v: min/max of g o f over g with f o g = v
    gmin = np.full((len(L), m), big)
    gmax = np.full((len(L), m), -1)
    hmin = np.full((len(L), m), big)
    hmax = np.full((len(L), m), -1)
    rows = np.repeat(np.arange(len(L)), m)
    np.minimum.at(gmin, (rows, P[L, :].ravel()), P[:, L].T.ravel())
    np.maximum.at(gmax, (rows, P[L, :].ravel()), P[:, L].T.ravel())
    # for each left ideal k and v: min/max of k o h over h with h o k = v
    np.minimum.at(hmin, (rows, P[:, L].T.ravel()), P[L, :].ravel())
    np.maximum.at(hmax, (rows, P[:, L].T.ravel()), P[L, :].ravel())
    both = (gmax[:, None, :] >= 0) & (hmax[None, :, :] >= 0)
    uniform = ((gmin[:, None, :] == gmax[:, None, :]) & (hmin[None, :, :] == hmax[None, :, :])
               & (gmin[:, None, :] == hmin[None, :, :]))
    bad = np.argwhere(both & ~uniform)
    cases = len(L) ** 2 * m ** 2
    if not len(bad):
        return Outcome(cases)
    fi, ki, v = bad[0]
    f, k = L[fi], L[ki]
    gs = np.flatnonzero(P[f, :] == v)
    hs = np.flatnonzero(P[:, k] == v)
    diff = np.argwhere(P[gs, f][:, None] != P[k, hs][None, :])
    g, h = gs[diff[0][0]], hs[diff[0][1]]
    return Outcome(cases, True, {"subsets": {"f": ctx.lit(f), "g": ctx.lit(g), "h": ctx.lit(h), "k": ctx.lit(k)}})


@p3.recheck
def _(t, chain, w):
    s = _subsets(w)
    f, g, h, k = s["f"], s["g"], s["h"], s["k"]
    return (is_fuzzy_left_ideal(f, t) and is_fuzzy_left_ideal(k, t)
            and product(f, g, t) == product(h, k, t) and product(g, f, t) != product(k, h, t))


@statement("T2", "for idempotent h, Q = {f : f o h = f} is a commutative monoid with identity h",
           note="the accompanying remark that h is a right identity of S itself has no checkable "
                "form over S and is not tested")
def t2(ctx: Context) -> Outcome:
    P = ctx.P
    m = ctx.m
    idx = np.arange(m)
    cases = 0
    exhaustive = True
    for h in np.flatnonzero(P[idx, idx] == idx):
        q = np.flatnonzero(P[:, h] == idx)
        inq = np.zeros(m, dtype=bool)
        inq[q] = True
        sub = P[np.ix_(q, q)]
        cases += 1
        problem = None
        bad = np.argwhere(~inq[sub])
        if len(bad):
            problem = ("closure", (q[bad[0][0]], q[bad[0][1]]))
        if problem is None:
            bad = np.argwhere(sub != sub.T)
            if len(bad):
                problem = ("commutativity", (q[bad[0][0]], q[bad[0][1]]))
        if problem is None:
            bad = np.flatnonzero((P[h, q] != q) | (P[q, h] != q))
            if len(bad):
                problem = ("identity", (q[bad[0]],))
        if problem is None:
            triples, full = ctx.tuples(3, f"T2:{h}", m=len(q))
            exhaustive &= full
            a, b, c = q[triples[:, 0]], q[triples[:, 1]], q[triples[:, 2]]
            bad = np.flatnonzero(P[P[a, b], c] != P[a, P[b, c]])
            if len(bad):
                problem = ("associativity", (a[bad[0]], b[bad[0]], c[bad[0]]))
        if problem is not None:
            law, members = problem
            return Outcome(cases, exhaustive, {
                "law": law,
                "subsets": {"h": ctx.lit(h), **{n: ctx.lit(i) for n, i in zip(("f", "g", "k"), members)}},
            })
    return Outcome(cases, exhaustive)


@t2.recheck
def _(t, chain, w):
    s = _subsets(w)
    h = s["h"]
    if product(h, h, t) != h:
        return False
    members = [s[n] for n in ("f", "g", "k") if n in s]
    if any(product(x, h, t) != x for x in members):
        return False
    law = w["law"]
    if law == "closure":
        fg = product(members[0], members[1], t)
        return product(fg, h, t) != fg
    if law == "commutativity":
        return product(members[0], members[1], t) != product(members[1], members[0], t)
    if law == "identity":
        f = members[0]
        return product(h, f, t) != f or product(f, h, t) != f
    a, b, c = members
    return product(product(a, b, t), c, t) != product(a, product(b, c, t), t)


@statement("T3", "with a left identity, the fuzzy left ideal generated by a_lambda is lambda on "
           "{ba : b in S} and 0 elsewhere", ("ag", "left-identity"))
def t3(ctx: Context) -> Outcome:
    t = ctx.table
    cases = 0
    for a in range(t.order):
        for lam in range(1, ctx.chain.resolution + 1):
            cases += 1
            point = FuzzyPoint(a, lam)
            formula = generated_left_ideal(point, t, ctx.chain)
            oracle = generated_left_ideal_oracle(point, t, ctx.chain)
            if formula != oracle:
                return Outcome(cases, True, {"subsets": {}, "anchor": a, "height": lam,
                                             "formula": format_fuzzy(formula), "oracle": format_fuzzy(oracle)})
    return Outcome(cases)


@t3.recheck
def _(t, chain, w):
    point = FuzzyPoint(w["anchor"], w["height"])
    formula = generated_left_ideal(point, t, chain)
    # minimality through the definition: the least left ideal above the point
    family = enumerate_fuzzy_ideals(t, chain, "left", "level-chain")
    above = [g for g in family if g[point.anchor] >= point.height]
    least = above[0]
    for g in above[1:]:
        least = intersection(least, g)
    return formula != least


@statement("T4i", "with a left identity, S o f is idempotent for every idempotent f", ("ag", "left-identity"))
def t4i(ctx: Context) -> Outcome:
    S = ctx.space
    sf = ctx.P[ctx.top, np.arange(ctx.m)]
    return _implication(ctx, S.idempotent_mask, S.idempotent_mask[sf])


@t4i.recheck
def _(t, chain, w):
    f = _subsets(w)["f"]
    sf = product(top(t, chain), f, t)
    return is_fuzzy_idempotent(f, t) and not is_fuzzy_idempotent(sf, t)


@statement("T4ii", "with a left identity, every fuzzy left ideal commutes with every idempotent f",
           ("ag", "left-identity"))
def t4ii(ctx: Context) -> Outcome:
    S = ctx.space
    P = ctx.P
    idem = S.members("idempotent")
    left = S.members("left")
    bad = np.argwhere(P[np.ix_(idem, left)] != P[np.ix_(left, idem)].T)
    witness = None
    if len(bad):
        i, j = bad[0]
        witness = {"subsets": {"f": ctx.lit(idem[i]), "g": ctx.lit(left[j])}}
    return Outcome(len(idem) * len(left), True, witness)


@t4ii.recheck
def _(t, chain, w):
    s = _subsets(w)
    f, g = s["f"], s["g"]
    return is_fuzzy_idempotent(f, t) and is_fuzzy_left_ideal(g, t) and product(f, g, t) != product(g, f, t)


@statement("T5", "with a left identity, idempotent fuzzy left ideals form a commutative monoid with identity S",
           ("ag", "left-identity"))
def t5(ctx: Context) -> Outcome:
    try:
        monoid = idempotent_left_ideal_monoid(ctx.table, ctx.chain, ctx.family("left"))
    except LawViolation as exc:
        return Outcome(1, True, {"subsets": {}, "law": str(exc).split(":")[0],
                                 "elements": list(exc.witness)})
    return Outcome(len(monoid.elements))


@t5.recheck
def _(t, chain, w):
    try:
        idempotent_left_ideal_monoid(t, chain, enumerate_fuzzy_ideals(t, chain, "left", "level-chain"))
    except LawViolation:
        return True
    return False


def _union_statement(sid, description, premise_kind, first):
    @statement(sid, description, ("ag", "left-identity"))
    def run(ctx: Context) -> Outcome:
        S = ctx.space
        P = ctx.P
        f = S.members(premise_kind)
        a = S.join(f, first(P, f, ctx.top))
        b = S.join(f, P[f, f])
        ok = S.ideal_mask[a] & S.ideal_mask[b]
        bad = np.flatnonzero(~ok)
        witness = {"subsets": {"f": ctx.lit(f[bad[0]])}} if len(bad) else None
        return Outcome(len(f), True, witness)

    @run.recheck
    def recheck(t, chain, w):
        f = _subsets(w)["f"]
        S = top(t, chain)
        other = product(f, S, t) if premise_kind == "left" else product(S, f, t)
        return (_SCALAR[premise_kind](f, t)
                and not (is_fuzzy_ideal(union(f, other), t) and is_fuzzy_ideal(union(f, product(f, f, t)), t)))

    return run


_union_statement("L6", "with a left identity, f u (f o S) and f u (f o f) are fuzzy ideals for a fuzzy left "
                 "ideal f", "left", lambda P, f, top: P[f, top])
_union_statement("R2", "with a left identity, f u (S o f) and f u (f o f) are fuzzy ideals for a fuzzy right "
                 "ideal f", "right", lambda P, f, top: P[top, f])


@statement("L8", "with a left identity, f o g and g o f are fuzzy bi-ideals for fuzzy right ideals f, g",
           ("ag", "left-identity"))
def l8(ctx: Context) -> Outcome:
    S = ctx.space
    r = S.members("right")
    prods = ctx.P[np.ix_(r, r)]
    bad = np.argwhere(~S.bi_ideal_mask[prods])
    witness = None
    if len(bad):
        i, j = bad[0]
        witness = {"subsets": {"f": ctx.lit(r[i]), "g": ctx.lit(r[j])}}
    return Outcome(len(r) ** 2, True, witness)


@l8.recheck
def _(t, chain, w):
    s = _subsets(w)
    f, g = s["f"], s["g"]
    return (is_fuzzy_right_ideal(f, t) and is_fuzzy_right_ideal(g, t)
            and not (is_fuzzy_bi_ideal(product(f, g, t), t) and is_fuzzy_bi_ideal(product(g, f, t), t)))


@statement("P6", "with a left identity, f o f is a fuzzy ideal whenever f is a fuzzy left, right or "
           "two-sided ideal", ("ag", "left-identity"))
def p6(ctx: Context) -> Outcome:
    S = ctx.space
    f = np.arange(ctx.m)
    return _implication(ctx, S.left_ideal_mask | S.right_ideal_mask, S.ideal_mask[ctx.P[f, f]])


@p6.recheck
def _(t, chain, w):
    f = _subsets(w)["f"]
    return ((is_fuzzy_left_ideal(f, t) or is_fuzzy_right_ideal(f, t))
            and not is_fuzzy_ideal(product(f, f, t), t))


@statement("C3", "with a left identity, f o f is a fuzzy bi-ideal and a fuzzy interior ideal for every "
           "fuzzy left ideal f", ("ag", "left-identity"))
def c3(ctx: Context) -> Outcome:
    S = ctx.space
    f = np.arange(ctx.m)
    ff = ctx.P[f, f]
    return _implication(ctx, S.left_ideal_mask, S.bi_ideal_mask[ff] & S.interior_ideal_mask[ff])


@c3.recheck
def _(t, chain, w):
    f = _subsets(w)["f"]
    ff = product(f, f, t)
    return is_fuzzy_left_ideal(f, t) and not (is_fuzzy_bi_ideal(ff, t) and is_fuzzy_interior_ideal(ff, t))


# -- ordered structures ---------------------------------------------------------------------------

def _fuzzy_prime_facts(t, chain, family_two):
    return {
        "fully_prime": is_fully_fuzzy_prime(t, chain, family_two),
        "all_idempotent": bool(family_two.idempotent.all()),
        "totally_ordered": incomparable_pair(family_two) is None,
    }


@statement("T7", "with a left identity: fully fuzzy prime iff every fuzzy ideal is idempotent and the "
           "fuzzy ideals are totally ordered", ("ag", "left-identity"))
def t7(ctx: Context) -> Outcome:
    facts = _fuzzy_prime_facts(ctx.table, ctx.chain, ctx.family("two-sided"))
    if facts["fully_prime"] == (facts["all_idempotent"] and facts["totally_ordered"]):
        return Outcome(1)
    fam = ctx.family("two-sided")
    detail = dict(facts)
    pair = incomparable_pair(fam)
    if pair:
        detail["incomparable"] = [format_fuzzy(p) for p in pair]
    for f in fam:
        v = prime_violation(fam, f)
        if v:
            detail["non_prime"] = {"f": format_fuzzy(f), "g": format_fuzzy(v[0]), "h": format_fuzzy(v[1])}
            break
    return Outcome(1, True, {"subsets": {}, **detail})


@t7.recheck
def _(t, chain, w):
    fam = enumerate_fuzzy_ideals(t, chain, "two-sided", "level-chain")
    facts = _fuzzy_prime_facts(t, chain, fam)
    return facts["fully_prime"] != (facts["all_idempotent"] and facts["totally_ordered"])


@statement("P7", "with a left identity, fully fuzzy quasi-prime implies every fuzzy left ideal is idempotent",
           ("ag", "left-identity"))
def p7(ctx: Context) -> Outcome:
    fam = ctx.family("left")
    if not _all_prime(fam).all():
        return Outcome(1, vacuous=True)
    bad = np.flatnonzero(~fam.idempotent)
    if len(bad):
        return Outcome(1, True, {"subsets": {"f": fam.literals()[bad[0]]}})
    return Outcome(1)


@p7.recheck
def _(t, chain, w):
    f = _subsets(w)["f"]
    fam = enumerate_fuzzy_ideals(t, chain, "left", "level-chain")
    return (is_fully_fuzzy_quasi_prime(t, chain, fam) and is_fuzzy_left_ideal(f, t)
            and not is_fuzzy_idempotent(f, t))


@statement("T8", "with a left identity, fully fuzzy quasi-prime implies f o g = f n g for all fuzzy left "
           "ideals f, g", ("ag", "left-identity"))
def t8(ctx: Context) -> Outcome:
    fam = ctx.family("left")
    if not _all_prime(fam).all():
        return Outcome(1, vacuous=True)
    meet = np.minimum(fam.grades[:, None, :], fam.grades[None, :, :])
    bad = np.argwhere((fam.product_grades != meet).any(axis=2))
    cases = len(fam) ** 2
    if len(bad):
        lit = fam.literals()
        return Outcome(cases, True, {"subsets": {"f": lit[bad[0][0]], "g": lit[bad[0][1]]}})
    return Outcome(cases)


@t8.recheck
def _(t, chain, w):
    s = _subsets(w)
    f, g = s["f"], s["g"]
    fam = enumerate_fuzzy_ideals(t, chain, "left", "level-chain")
    return (is_fully_fuzzy_quasi_prime(t, chain, fam) and is_fuzzy_left_ideal(f, t)
            and is_fuzzy_left_ideal(g, t) and product(f, g, t) != intersection(f, g))


@statement("C4", "with a left identity, the fuzzy quasi-prime ideals form a semilattice under o",
           ("ag", "left-identity", "fully-quasi-prime"),
           note="evaluated where every fuzzy left ideal is quasi-prime")
def c4(ctx: Context) -> Outcome:
    try:
        lattice = quasi_prime_semilattice(ctx.table, ctx.chain, ctx.family("left"))
    except LawViolation as exc:
        return Outcome(1, True, {"subsets": {}, "law": str(exc).split(":")[0], "elements": list(exc.witness)})
    return Outcome(len(lattice.elements))


@c4.recheck
def _(t, chain, w):
    try:
        quasi_prime_semilattice(t, chain, enumerate_fuzzy_ideals(t, chain, "left", "level-chain"))
    except LawViolation:
        return True
    except PreconditionError:
        return False
    return False


@statement("T9", "with a left identity: left ideals idempotent, fuzzy left ideals idempotent, "
           "f o g = f n g on fuzzy left ideals, and fuzzy left ideals semiprime are equivalent",
           ("ag", "left-identity"))
def t9(ctx: Context) -> Outcome:
    profile = left_ideal_profile(ctx.table, ctx.chain, ctx.family("left"))
    if profile.all_equal():
        return Outcome(1)
    return Outcome(1, True, {"subsets": {}, "profile": profile._asdict()})


@t9.recheck
def _(t, chain, w):
    fam = enumerate_fuzzy_ideals(t, chain, "left", "level-chain")
    return not left_ideal_profile(t, chain, fam).all_equal()


assert tuple(sorted(REGISTRY)) == tuple(sorted(STATEMENT_IDS)), set(STATEMENT_IDS) ^ set(REGISTRY)
