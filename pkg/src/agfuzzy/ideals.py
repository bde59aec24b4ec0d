"""Crisp and fuzzy ideal families, primeness, and the ordered structures built on them.

Crisp families contain only non-empty subsets. Fuzzy families are exact:
every chain-valued subset passing the predicate, the zero subset included.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import kernels
from .algebra import CayleyTable, left_identities
from .errors import CapabilityError, LawViolation, PreconditionError, UsageError
from .fuzzy import (
    EXHAUSTIVE_SUBSETS,
    CrispSubset,
    FuzzySubset,
    GradeChain,
    _chain,
    crisp_product,
    format_fuzzy,
)

CRISP_KINDS = ("left", "right", "two-sided", "interior", "bi")
FUZZY_KINDS = ("left", "right", "two-sided")


# -- crisp ----------------------------------------------------------------------------

@dataclass(frozen=True)
class CrispIdealFamily:
    kind: str
    members: tuple

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def _crisp_ok(t: CayleyTable, kind: str, A: CrispSubset) -> bool:
    S = CrispSubset((True,) * t.order)
    if kind == "left":
        return crisp_product(t, S, A).issubset(A)
    if kind == "right":
        return crisp_product(t, A, S).issubset(A)
    if kind == "two-sided":
        return crisp_product(t, S, A).issubset(A) and crisp_product(t, A, S).issubset(A)
    if kind == "interior":
        return crisp_product(t, crisp_product(t, S, A), S).issubset(A)
    if kind == "bi":
        return (crisp_product(t, A, A).issubset(A)
                and crisp_product(t, crisp_product(t, A, S), A).issubset(A))
    raise UsageError(f"unknown ideal kind {kind!r}; choose from {CRISP_KINDS}")


def is_crisp_ideal(t: CayleyTable, A: CrispSubset, kind: str) -> bool:
    return bool(A) and _crisp_ok(t, kind, A)


def enumerate_crisp_ideals(t: CayleyTable, kind: str) -> CrispIdealFamily:
    """Non-empty subsets satisfying ``kind``, in lexicographic order of membership vectors."""
    if kind not in CRISP_KINDS:
        raise UsageError(f"unknown ideal kind {kind!r}; choose from {CRISP_KINDS}")
    members = []
    for bits in itertools.product((False, True), repeat=t.order):
        A = CrispSubset(bits)
        if A and _crisp_ok(t, kind, A):
            members.append(A)
    return CrispIdealFamily(kind, tuple(members))


def _crisp_prime_over(t, P, family) -> bool:
    for A in family:
        for B in family:
            if crisp_product(t, A, B).issubset(P) and not (A.issubset(P) or B.issubset(P)):
                return False
    return True


def is_crisp_prime(P: CrispSubset, t: CayleyTable) -> bool:
    if not is_crisp_ideal(t, P, "two-sided"):
        raise UsageError(f"{P} is not a two-sided ideal")
    return _crisp_prime_over(t, P, enumerate_crisp_ideals(t, "two-sided"))


def is_crisp_quasi_prime(P: CrispSubset, t: CayleyTable) -> bool:
    if not is_crisp_ideal(t, P, "left"):
        raise UsageError(f"{P} is not a left ideal")
    return _crisp_prime_over(t, P, enumerate_crisp_ideals(t, "left"))


def is_crisp_semiprime(P: CrispSubset, t: CayleyTable) -> bool:
    """AA within P forces A within P, for every left ideal A."""
    if not is_crisp_ideal(t, P, "left"):
        raise UsageError(f"{P} is not a left ideal")
    return all(A.issubset(P) or not crisp_product(t, A, A).issubset(P)
               for A in enumerate_crisp_ideals(t, "left"))


def is_fully_prime(t: CayleyTable) -> bool:
    return all(is_crisp_prime(P, t) for P in enumerate_crisp_ideals(t, "two-sided"))


def is_fully_quasi_prime(t: CayleyTable) -> bool:
    return all(is_crisp_quasi_prime(P, t) for P in enumerate_crisp_ideals(t, "left"))


# -- fuzzy families ---------------------------------------------------------------------

def _decode(indices: np.ndarray, order: int, radix: int) -> np.ndarray:
    out = np.empty(indices.shape + (order,), dtype=np.uint8)
    rest = indices.astype(np.int64)
    for x in range(order - 1, -1, -1):
        rest, out[..., x] = np.divmod(rest, radix)
    return out


@dataclass
class FuzzyIdealFamily:
    """All fuzzy ``kind`` ideals of ``table`` over ``chain``, ascending by index."""

    kind: str
    chain: GradeChain
    table: CayleyTable
    grades: np.ndarray  # (size, n) grade matrix of the members
    method: str = "direct"
    _pos: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.grades.setflags(write=False)
        self._pos = {int(i): p for p, i in enumerate(self.indices)}

    @cached_property
    def indices(self) -> np.ndarray:
        radix = self.chain.resolution + 1
        w = radix ** np.arange(self.table.order - 1, -1, -1, dtype=np.int64)
        return self.grades.astype(np.int64) @ w

    @property
    def members(self) -> list[FuzzySubset]:
        return [FuzzySubset(tuple(int(v) for v in row), self.chain.resolution) for row in self.grades]

    def __len__(self):
        return len(self.grades)

    def __iter__(self):
        return iter(self.members)

    def position(self, f: FuzzySubset) -> int | None:
        return self._pos.get(f.index)

    def __contains__(self, f: FuzzySubset) -> bool:
        return self.position(f) is not None

    @cached_property
    def products(self) -> np.ndarray:
        """products[i, j] = global index of member_i o member_j."""
        return kernels.product_table(self.table.array, self.grades, self.chain.resolution + 1)

    @cached_property
    def product_grades(self) -> np.ndarray:
        return _decode(self.products, self.table.order, self.chain.resolution + 1)

    @cached_property
    def product_positions(self) -> np.ndarray:
        """Position of each member product within the family, -1 when outside."""
        idx = self.indices
        pos = np.searchsorted(idx, self.products)
        found = idx[np.minimum(pos, len(idx) - 1)] == self.products
        return np.where(found, pos, -1)

    @cached_property
    def subset_matrix(self) -> np.ndarray:
        """subset_matrix[i, j] = member_i within member_j."""
        G = self.grades
        return (G[:, None, :] <= G[None, :, :]).all(axis=2)

    @cached_property
    def idempotent(self) -> np.ndarray:
        idx = np.arange(len(self))
        return self.products[idx, idx] == self.indices

    def literals(self) -> list[str]:
        return [format_fuzzy(f) for f in self.members]


def _level_chain_grades(t: CayleyTable, chain: GradeChain, kind: str) -> np.ndarray:
    # descending chains U_1 >= ... >= U_k of crisp ideals (or empty); f(x) = #{t : x in U_t}
    n = t.order
    crisp = [A.mask for A in enumerate_crisp_ideals(t, kind)] + [0]
    found = set()

    def extend(prefix, depth):
        if depth == chain.resolution:
            found.add(tuple(sum(1 for U in prefix if U >> x & 1) for x in range(n)))
            return
        bound = prefix[-1] if prefix else (1 << n) - 1
        for U in crisp:
            if U & ~bound == 0:
                extend(prefix + [U], depth + 1)

    extend([], 0)
    rows = sorted(found)
    return np.array(rows, dtype=np.uint8).reshape(len(rows), n)


def _direct_grades(t: CayleyTable, chain: GradeChain, kind: str) -> np.ndarray:
    from .fuzzy import FuzzySpace

    space = FuzzySpace(t, chain)
    mask = space.mask({"two-sided": "two-sided", "left": "left", "right": "right"}[kind])
    return np.array(space.grades[mask])


def enumerate_fuzzy_ideals(t: CayleyTable, chain, kind: str = "left", method: str = "auto",
                           budget: int = EXHAUSTIVE_SUBSETS) -> FuzzyIdealFamily:
    """Every chain-valued fuzzy ``kind`` ideal.

    ``method`` is ``"direct"`` (filter all subsets; capped by ``budget``),
    ``"level-chain"`` (assemble from crisp ideals) or ``"auto"``.
    """
    chain = _chain(chain)
    if kind not in FUZZY_KINDS:
        raise UsageError(f"fuzzy families exist for {FUZZY_KINDS}, not {kind!r}")
    size = (chain.resolution + 1) ** t.order
    if method == "auto":
        method = "direct" if size <= budget else "level-chain"
    if method == "direct":
        if size > budget:
            raise CapabilityError(
                f"{size} fuzzy subsets exceed the exhaustive budget {budget}; use level-chain mode"
            )
        grades = _direct_grades(t, chain, kind)
    elif method == "level-chain":
        grades = _level_chain_grades(t, chain, kind)
    else:
        raise UsageError(f"unknown enumeration method {method!r}")
    return FuzzyIdealFamily(kind, chain, t, grades, method)


def enumerate_fuzzy_left_ideals(t: CayleyTable, chain, method: str = "auto") -> FuzzyIdealFamily:
    return enumerate_fuzzy_ideals(t, chain, "left", method)


# -- primeness ------------------------------------------------------------------------------

def _violations(family: FuzzyIdealFamily, f_grades: np.ndarray) -> np.ndarray:
    """Boolean (g, h) matrix: g o h within f but neither g nor h within f."""
    prod_in = (family.product_grades <= f_grades).all(axis=2)
    mem_in = (family.grades <= f_grades).all(axis=1)
    return prod_in & ~mem_in[:, None] & ~mem_in[None, :]


def prime_violation(family: FuzzyIdealFamily, f: FuzzySubset):
    """First (g, h) in ``family`` breaking primeness of ``f``, or None."""
    bad = np.argwhere(_violations(family, np.array(f.grades, dtype=np.uint8)))
    if len(bad) == 0:
        return None
    members = family.members
    return members[bad[0][0]], members[bad[0][1]]


def semiprime_violation(family: FuzzyIdealFamily, f: FuzzySubset):
    fg = np.array(f.grades, dtype=np.uint8)
    idx = np.arange(len(family))
    sq_in = (family.product_grades[idx, idx] <= fg).all(axis=1)
    mem_in = (family.grades <= fg).all(axis=1)
    bad = np.flatnonzero(sq_in & ~mem_in)
    return None if len(bad) == 0 else family.members[bad[0]]


def _require(f: FuzzySubset, family: FuzzyIdealFamily, what: str):
    if f.order != family.table.order or f.resolution != family.chain.resolution:
        raise UsageError("fuzzy subset does not match the table/chain")
    if f not in family:
        raise UsageError(f"{format_fuzzy(f)} is not a fuzzy {what}")


def is_fuzzy_prime(f: FuzzySubset, t: CayleyTable, chain=None, family=None) -> bool:
    family = family or enumerate_fuzzy_ideals(t, chain or f.resolution, "two-sided")
    _require(f, family, "ideal")
    return prime_violation(family, f) is None


def is_fuzzy_quasi_prime(f: FuzzySubset, t: CayleyTable, chain=None, family=None) -> bool:
    family = family or enumerate_fuzzy_ideals(t, chain or f.resolution, "left")
    _require(f, family, "left ideal")
    return prime_violation(family, f) is None


def is_fuzzy_semiprime(f: FuzzySubset, t: CayleyTable, chain=None, family=None) -> bool:
    family = family or enumerate_fuzzy_ideals(t, chain or f.resolution, "left")
    _require(f, family, "left ideal")
    return semiprime_violation(family, f) is None


def _all_prime(family: FuzzyIdealFamily) -> np.ndarray:
    """prime[i] for every member i, over the family itself."""
    prod_in = (family.product_grades[None, :, :, :] <= family.grades[:, None, None, :]).all(axis=3)
    mem_in = family.subset_matrix.T  # mem_in[f, g] = g within f
    bad = prod_in & ~mem_in[:, :, None] & ~mem_in[:, None, :]
    return ~bad.any(axis=(1, 2))


def _all_semiprime(family: FuzzyIdealFamily) -> np.ndarray:
    idx = np.arange(len(family))
    sq = family.product_grades[idx, idx]
    sq_in = (sq[None, :, :] <= family.grades[:, None, :]).all(axis=2)  # [f, g]
    mem_in = family.subset_matrix.T
    return ~(sq_in & ~mem_in).any(axis=1)


def is_fully_fuzzy_prime(t: CayleyTable, chain, family=None) -> bool:
    family = family or enumerate_fuzzy_ideals(t, chain, "two-sided")
    return bool(_all_prime(family).all())


def is_fully_fuzzy_quasi_prime(t: CayleyTable, chain, family=None) -> bool:
    family = family or enumerate_fuzzy_ideals(t, chain, "left")
    return bool(_all_prime(family).all())


def incomparable_pair(family: FuzzyIdealFamily):
    S = family.subset_matrix
    bad = np.argwhere(~S & ~S.T)
    if len(bad) == 0:
        return None
    members = family.members
    return members[bad[0][0]], members[bad[0][1]]


def totally_ordered(family: FuzzyIdealFamily) -> bool:
    return incomparable_pair(family) is None


# -- monoid-like constructions ------------------------------------------------------------------

@dataclass(frozen=True)
class MonoidTable:
    """A finite commutative operation on fuzzy subsets, validated on construction."""

    elements: tuple
    op: np.ndarray
    identity: int | None

    def to_dict(self):
        return {
            "elements": [format_fuzzy(f) for f in self.elements],
            "op": self.op.tolist(),
            "identity": self.identity,
        }


def build_monoid(elements, op: np.ndarray, identity: int | None, idempotent: bool = False) -> MonoidTable:
    """Validate closure, commutativity, associativity, identity (and idempotency).

    ``op[i, j]`` is the position of the product or -1 if it leaves the set.
    Raises :class:`LawViolation` with the offending element literals.
    """
    elements = tuple(elements)
    lit = [format_fuzzy(f) for f in elements]
    m = len(elements)
    outside = np.argwhere(op < 0)
    if len(outside):
        i, j = outside[0]
        raise LawViolation("not closed", (lit[i], lit[j]))
    swapped = np.argwhere(op != op.T)
    if len(swapped):
        i, j = swapped[0]
        raise LawViolation("not commutative", (lit[i], lit[j]))
    if m:
        lhs = op[op[:, :, None], np.arange(m)[None, None, :]]  # (ab)c
        rhs = op[np.arange(m)[:, None, None], op[None, :, :]]  # a(bc)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = bad[0]
            raise LawViolation("not associative", (lit[i], lit[j], lit[k]))
    if identity is not None:
        bad = np.flatnonzero(op[identity] != np.arange(m))
        if len(bad):
            raise LawViolation("identity law fails", (lit[identity], lit[bad[0]]))
    if idempotent:
        bad = np.flatnonzero(op[np.arange(m), np.arange(m)] != np.arange(m))
        if len(bad):
            raise LawViolation("not idempotent", (lit[bad[0]],))
    op = op.copy()
    op.setflags(write=False)
    return MonoidTable(elements, op, identity)


def _require_left_identity(t: CayleyTable, what: str):
    if not left_identities(t):
        raise PreconditionError(f"{what} requires an AG-groupoid with a left identity")


def _sub_op(family: FuzzyIdealFamily, keep: np.ndarray) -> np.ndarray:
    pos = family.product_positions[np.ix_(keep, keep)]
    remap = np.full(len(family), -1, dtype=np.int64)
    remap[keep] = np.arange(len(keep))
    return np.where(pos >= 0, remap[pos], -1)


def idempotent_left_ideal_monoid(t: CayleyTable, chain, family=None) -> MonoidTable:
    """Idempotent fuzzy left ideals under the product, with S as identity."""
    _require_left_identity(t, "idempotent_left_ideal_monoid")
    family = family or enumerate_fuzzy_ideals(t, chain, "left")
    keep = np.flatnonzero(family.idempotent)
    members = family.members
    elements = [members[i] for i in keep]
    is_top = family.grades[keep].min(axis=1) == family.chain.resolution
    if not is_top.any():
        raise LawViolation("S is not an idempotent fuzzy left ideal", (format_fuzzy(members[-1]),))
    return build_monoid(elements, _sub_op(family, keep), int(np.flatnonzero(is_top)[0]))


def quasi_prime_semilattice(t: CayleyTable, chain, family=None) -> MonoidTable:
    """Fuzzy quasi-prime left ideals under the product, as a semilattice.

    Requires a left identity and a fully fuzzy quasi-prime groupoid; also
    confirms that the product of any two fuzzy left ideals is their meet.
    """
    _require_left_identity(t, "quasi_prime_semilattice")
    family = family or enumerate_fuzzy_ideals(t, chain, "left")
    prime = _all_prime(family)
    if not prime.all():
        bad = family.members[int(np.flatnonzero(~prime)[0])]
        raise PreconditionError(
            f"quasi_prime_semilattice requires a fully fuzzy quasi-prime groupoid; "
            f"{format_fuzzy(bad)} is not quasi-prime"
        )
    meet = np.minimum(family.grades[:, None, :], family.grades[None, :, :])
    bad = np.argwhere((family.product_grades != meet).any(axis=2))
    if len(bad):
        i, j = bad[0]
        lit = family.literals()
        raise LawViolation("product differs from intersection", (lit[i], lit[j]))
    keep = np.flatnonzero(prime)
    members = family.members
    return build_monoid([members[i] for i in keep], _sub_op(family, keep), None, idempotent=True)


class LeftIdealProfile(NamedTuple):
    crisp_left_ideals_idempotent: bool
    fuzzy_left_ideals_idempotent: bool
    product_is_intersection: bool
    fuzzy_left_ideals_semiprime: bool

    def all_equal(self) -> bool:
        return len(set(self)) == 1


def left_ideal_profile(t: CayleyTable, chain, family=None) -> LeftIdealProfile:
    """The four conditions characterising left-ideal idempotency, computed independently."""
    _require_left_identity(t, "left_ideal_profile")
    family = family or enumerate_fuzzy_ideals(t, chain, "left")
    crisp = all(crisp_product(t, A, A) == A for A in enumerate_crisp_ideals(t, "left"))
    meet = np.minimum(family.grades[:, None, :], family.grades[None, :, :])
    return LeftIdealProfile(
        crisp,
        bool(family.idempotent.all()),
        bool((family.product_grades == meet).all()),
        bool(_all_semiprime(family).all()),
    )


def family_report(family: FuzzyIdealFamily) -> dict:
    return {
        "kind": family.kind,
        "k": family.chain.resolution,
        "method": family.method,
        "members": family.literals(),
        "products": family.product_positions.tolist(),
        "idempotent": family.idempotent.tolist(),
    }
