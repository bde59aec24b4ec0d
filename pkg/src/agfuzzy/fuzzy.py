"""Fuzzy subsets of a finite groupoid with grades on a finite chain.

Grades are integer levels ``0..k`` of a :class:`GradeChain`, read as
``0, 1/k, ..., 1``. All comparisons are exact.

Two layers live here: value-level operations on :class:`FuzzySubset`
(product, lattice operations, ideal predicates with witnesses), and
:class:`FuzzySpace`, which indexes every chain-valued subset of a carrier
and answers the same questions for all of them at once.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .algebra import CayleyTable, Witness, left_identities
from .errors import CapabilityError, PreconditionError, UsageError

DEFAULT_RESOLUTION = 2
EXHAUSTIVE_SUBSETS = 20000
PRODUCT_TABLE_LIMIT = 3000


@dataclass(frozen=True)
class GradeChain:
    """The chain 0 < 1 < ... < k of membership levels."""

    resolution: int = DEFAULT_RESOLUTION

    def __post_init__(self):
        if self.resolution < 1:
            raise UsageError(f"grade chain resolution must be >= 1, got {self.resolution}")

    @property
    def top(self) -> int:
        return self.resolution

    @property
    def levels(self) -> range:
        return range(self.resolution + 1)

    def fraction(self, level: int) -> float:
        return level / self.resolution

    def validate(self, level: int) -> int:
        if not 0 <= level <= self.resolution:
            raise UsageError(f"grade {level} is outside 0..{self.resolution}")
        return level


@dataclass(frozen=True)
class CrispSubset:
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(bool(v) for v in self.members))

    @classmethod
    def of(cls, order: int, elements: Iterable[int]) -> "CrispSubset":
        chosen = set(elements)
        if any(not 0 <= a < order for a in chosen):
            raise UsageError(f"elements {sorted(chosen)} out of range for order {order}")
        return cls(tuple(a in chosen for a in range(order)))

    @classmethod
    def from_mask(cls, order: int, mask: int) -> "CrispSubset":
        return cls(tuple(bool(mask >> a & 1) for a in range(order)))

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def mask(self) -> int:
        return sum(1 << a for a, v in enumerate(self.members) if v)

    def elements(self) -> list[int]:
        return [a for a, v in enumerate(self.members) if v]

    def __bool__(self):
        return any(self.members)

    def __len__(self):
        return sum(self.members)

    def __contains__(self, a):
        return 0 <= a < self.order and self.members[a]

    def issubset(self, other: "CrispSubset") -> bool:
        return all(b or not a for a, b in zip(self.members, other.members))

    def __and__(self, other):
        return CrispSubset(tuple(a and b for a, b in zip(self.members, other.members)))

    def __or__(self, other):
        return CrispSubset(tuple(a or b for a, b in zip(self.members, other.members)))

    def __repr__(self):
        return "{" + ", ".join(map(str, self.elements())) + "}"


def crisp_product(t: CayleyTable, A: CrispSubset, B: CrispSubset) -> CrispSubset:
    """AB = {ab : a in A, b in B}."""
    return CrispSubset.of(t.order, {t.rows[a][b] for a in A.elements() for b in B.elements()})


@dataclass(frozen=True)
class FuzzySubset:
    grades: tuple
    resolution: int

    def __post_init__(self):
        grades = tuple(int(v) for v in self.grades)
        object.__setattr__(self, "grades", grades)
        if not grades:
            raise UsageError("a fuzzy subset needs a non-empty carrier")
        for v in grades:
            if not 0 <= v <= self.resolution:
                raise UsageError(f"grade {v} is outside 0..{self.resolution}")

    @property
    def order(self) -> int:
        return len(self.grades)

    @property
    def chain(self) -> GradeChain:
        return GradeChain(self.resolution)

    def __getitem__(self, x: int) -> int:
        return self.grades[x]

    def __iter__(self):
        return iter(self.grades)

    @property
    def index(self) -> int:
        """Position in big-endian mixed-radix order (see :class:`FuzzySpace`)."""
        idx = 0
        for v in self.grades:
            idx = idx * (self.resolution + 1) + v
        return idx

    @classmethod
    def from_index(cls, index: int, order: int, resolution: int) -> "FuzzySubset":
        grades = []
        for _ in range(order):
            index, v = divmod(index, resolution + 1)
            grades.append(v)
        return cls(tuple(reversed(grades)), resolution)

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersection(self, other)

    def __le__(self, other):
        return subset_of(self, other)

    def literal(self) -> str:
        return format_fuzzy(self)

    def __repr__(self):
        return f"FuzzySubset({self.literal()!r})"


@dataclass(frozen=True)
class FuzzyPoint:
    """The fuzzy point a_lambda: grade ``height`` at ``anchor``, 0 elsewhere."""

    anchor: int
    height: int

    def __post_init__(self):
        if self.height <= 0:
            raise UsageError("a fuzzy point needs a positive height")

    def as_subset(self, order: int, chain: GradeChain) -> FuzzySubset:
        if not 0 <= self.anchor < order:
            raise UsageError(f"anchor {self.anchor} out of range for order {order}")
        chain.validate(self.height)
        grades = [0] * order
        grades[self.anchor] = self.height
        return FuzzySubset(tuple(grades), chain.resolution)


# -- literals ------------------------------------------------------------------

_LITERAL = re.compile(r"^\s*k\s*=\s*(\d+)\s*;\s*((?:\d+\s*)+)$")


def parse_fuzzy(text: str) -> FuzzySubset:
    """Parse ``k=<resolution>; <level_0> ... <level_{n-1}>``."""
    m = _LITERAL.match(text)
    if not m:
        raise UsageError(f"malformed fuzzy subset literal {text!r}; expected 'k=<k>; <levels...>'")
    k = int(m.group(1))
    GradeChain(k)
    return FuzzySubset(tuple(int(v) for v in m.group(2).split()), k)


def format_fuzzy(f: FuzzySubset) -> str:
    return f"k={f.resolution}; " + " ".join(str(v) for v in f.grades)


# -- construction -----------------------------------------------------------------

def _chain(chain) -> GradeChain:
    return chain if isinstance(chain, GradeChain) else GradeChain(int(chain))


def top(t: CayleyTable, chain) -> FuzzySubset:
    """The whole carrier as a fuzzy subset, S(x) = 1."""
    chain = _chain(chain)
    return FuzzySubset((chain.top,) * t.order, chain.resolution)


def zero(t: CayleyTable, chain) -> FuzzySubset:
    chain = _chain(chain)
    return FuzzySubset((0,) * t.order, chain.resolution)


def characteristic(A: CrispSubset, chain) -> FuzzySubset:
    chain = _chain(chain)
    return FuzzySubset(tuple(chain.top if a else 0 for a in A.members), chain.resolution)


def fuzzy_points_of(f: FuzzySubset) -> list[FuzzyPoint]:
    return [FuzzyPoint(a, v) for a, v in enumerate(f.grades) if v > 0]


def union_of_points(points: Iterable[FuzzyPoint], order: int, chain) -> FuzzySubset:
    chain = _chain(chain)
    grades = [0] * order
    for p in points:
        if not 0 <= p.anchor < order:
            raise UsageError(f"anchor {p.anchor} out of range for order {order}")
        grades[p.anchor] = max(grades[p.anchor], chain.validate(p.height))
    return FuzzySubset(tuple(grades), chain.resolution)


def level_set(f: FuzzySubset, threshold: int) -> CrispSubset:
    """{x : f(x) >= threshold} for a positive threshold."""
    if threshold < 1:
        raise UsageError("level sets need a threshold of at least 1; level 0 is the whole carrier")
    f.chain.validate(threshold)
    return CrispSubset(tuple(v >= threshold for v in f.grades))


# -- operations ----------------------------------------------------------------------

def _same_shape(f: FuzzySubset, g: FuzzySubset):
    if f.order != g.order:
        raise UsageError(f"carrier mismatch: {f.order} vs {g.order}")
    if f.resolution != g.resolution:
        raise UsageError(f"grade chain mismatch: k={f.resolution} vs k={g.resolution}")


def _on_table(f: FuzzySubset, t: CayleyTable):
    if f.order != t.order:
        raise UsageError(f"fuzzy subset over {f.order} elements used with a table of order {t.order}")


def product(f: FuzzySubset, g: FuzzySubset, t: CayleyTable) -> FuzzySubset:
    """(f o g)(x) = max over x = yz of min(f(y), g(z)); 0 without factorization."""
    _same_shape(f, g)
    _on_table(f, t)
    out = kernels.sup_min(t.array, np.array(f.grades), np.array(g.grades))
    return FuzzySubset(tuple(int(v) for v in out), f.resolution)


def union(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    _same_shape(f, g)
    return FuzzySubset(tuple(max(a, b) for a, b in zip(f.grades, g.grades)), f.resolution)


def intersection(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    _same_shape(f, g)
    return FuzzySubset(tuple(min(a, b) for a, b in zip(f.grades, g.grades)), f.resolution)


def subset_of(f: FuzzySubset, g: FuzzySubset) -> bool:
    _same_shape(f, g)
    return all(a <= b for a, b in zip(f.grades, g.grades))


# -- predicates ----------------------------------------------------------------------
# Each check returns None or the lexicographically first violation, with
# lhs = the grade that is too small and rhs = the bound it had to reach.

def check_fuzzy_subgroupoid(f: FuzzySubset, t: CayleyTable) -> Witness | None:
    """f(ab) >= f(a) ^ f(b)."""
    _on_table(f, t)
    n = t.order
    for a in range(n):
        for b in range(n):
            need = min(f[a], f[b])
            if f[t.rows[a][b]] < need:
                return Witness("fuzzy-subgroupoid", (a, b), f[t.rows[a][b]], need)
    return None


def check_fuzzy_left_ideal(f: FuzzySubset, t: CayleyTable) -> Witness | None:
    """f(ab) >= f(b)."""
    _on_table(f, t)
    n = t.order
    for a in range(n):
        for b in range(n):
            if f[t.rows[a][b]] < f[b]:
                return Witness("fuzzy-left-ideal", (a, b), f[t.rows[a][b]], f[b])
    return None


def check_fuzzy_right_ideal(f: FuzzySubset, t: CayleyTable) -> Witness | None:
    """f(ab) >= f(a)."""
    _on_table(f, t)
    n = t.order
    for a in range(n):
        for b in range(n):
            if f[t.rows[a][b]] < f[a]:
                return Witness("fuzzy-right-ideal", (a, b), f[t.rows[a][b]], f[a])
    return None


def check_fuzzy_ideal(f: FuzzySubset, t: CayleyTable) -> Witness | None:
    return check_fuzzy_left_ideal(f, t) or check_fuzzy_right_ideal(f, t)


def check_fuzzy_bi_ideal(f: FuzzySubset, t: CayleyTable) -> Witness | None:
    """Fuzzy subgroupoid with f((xy)z) >= f(x) ^ f(z)."""
    w = check_fuzzy_subgroupoid(f, t)
    if w is not None:
        return w
    m = t.rows
    n = t.order
    for x, y, z in itertools.product(range(n), repeat=3):
        need = min(f[x], f[z])
        got = f[m[m[x][y]][z]]
        if got < need:
            return Witness("fuzzy-bi-ideal", (x, y, z), got, need)
    return None


def check_fuzzy_interior_ideal(f: FuzzySubset, t: CayleyTable) -> Witness | None:
    """f((xa)y) >= f(a)."""
    _on_table(f, t)
    m = t.rows
    n = t.order
    for x, a, y in itertools.product(range(n), repeat=3):
        got = f[m[m[x][a]][y]]
        if got < f[a]:
            return Witness("fuzzy-interior-ideal", (x, a, y), got, f[a])
    return None


def is_fuzzy_subgroupoid(f, t) -> bool:
    return check_fuzzy_subgroupoid(f, t) is None


def is_fuzzy_left_ideal(f, t) -> bool:
    return check_fuzzy_left_ideal(f, t) is None


def is_fuzzy_right_ideal(f, t) -> bool:
    return check_fuzzy_right_ideal(f, t) is None


def is_fuzzy_ideal(f, t) -> bool:
    return check_fuzzy_ideal(f, t) is None


def is_fuzzy_bi_ideal(f, t) -> bool:
    return check_fuzzy_bi_ideal(f, t) is None


def is_fuzzy_interior_ideal(f, t) -> bool:
    return check_fuzzy_interior_ideal(f, t) is None


def is_fuzzy_idempotent(f: FuzzySubset, t: CayleyTable) -> bool:
    return product(f, f, t) == f


# -- generated left ideals ---------------------------------------------------------------

def generated_left_ideal(point: FuzzyPoint, t: CayleyTable, chain) -> FuzzySubset:
    """Smallest fuzzy left ideal containing ``point``, via the image of b -> ba.

    Only valid with a left identity; raises :class:`PreconditionError` otherwise.
    """
    chain = _chain(chain)
    if not left_identities(t):
        raise PreconditionError("generated_left_ideal requires an AG-groupoid with a left identity")
    point.as_subset(t.order, chain)
    a = point.anchor
    image = {t.rows[b][a] for b in range(t.order)}
    return FuzzySubset(tuple(point.height if x in image else 0 for x in range(t.order)), chain.resolution)


def left_ideal_closure(grades: Sequence[int], t: CayleyTable) -> tuple[list[int], int]:
    """Raise g(xy) to g(y) until nothing changes; returns (grades, rounds)."""
    g = list(grades)
    n = t.order
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        for x in range(n):
            for y in range(n):
                xy = t.rows[x][y]
                if g[y] > g[xy]:
                    g[xy] = g[y]
                    changed = True
    return g, rounds


def generated_left_ideal_oracle(point: FuzzyPoint, t: CayleyTable, chain) -> FuzzySubset:
    """Least fixpoint of g(xy) <- max(g(xy), g(y)) starting from the point."""
    chain = _chain(chain)
    start = point.as_subset(t.order, chain)
    grades, _ = left_ideal_closure(start.grades, t)
    return FuzzySubset(tuple(grades), chain.resolution)


# -- the space of all chain-valued subsets -------------------------------------------------

class FuzzySpace:
    """Every fuzzy subset of ``t`` over ``chain``, indexed in mixed radix.

    Index ``i`` has grade vector ``grades[i]``; indices ascend in
    lexicographic order of grade vectors. Predicate masks and the full
    product table are computed on demand.
    """

    def __init__(self, t: CayleyTable, chain, limit: int = EXHAUSTIVE_SUBSETS):
        self.table = t
        self.chain = _chain(chain)
        self.order = t.order
        self.radix = self.chain.resolution + 1
        self.size = self.radix ** self.order
        if self.size > limit:
            raise CapabilityError(
                f"{self.size} fuzzy subsets exceed the exhaustive budget of {limit}"
            )
        g = np.array(list(itertools.product(range(self.radix), repeat=self.order)), dtype=np.uint8)
        g = g.reshape(self.size, self.order)
        g.setflags(write=False)
        self.grades = g
        self.weights = self.radix ** np.arange(self.order - 1, -1, -1, dtype=np.int64)

    def subset(self, i: int) -> FuzzySubset:
        return FuzzySubset(tuple(int(v) for v in self.grades[i]), self.chain.resolution)

    def index(self, f: FuzzySubset) -> int:
        if f.order != self.order or f.resolution != self.chain.resolution:
            raise UsageError("fuzzy subset does not belong to this space")
        return f.index

    def encode(self, grades: np.ndarray) -> np.ndarray:
        return grades.astype(np.int64) @ self.weights

    @property
    def top(self) -> int:
        return self.size - 1

    @property
    def zero(self) -> int:
        return 0

    @cached_property
    def products(self) -> np.ndarray:
        """products[i, j] = index of (i o j)."""
        if self.size > PRODUCT_TABLE_LIMIT:
            raise CapabilityError(f"product table over {self.size} subsets exceeds {PRODUCT_TABLE_LIMIT}")
        p = kernels.product_table(self.table.array, self.grades, self.radix)
        p.setflags(write=False)
        return p

    def leq(self, i, j) -> np.ndarray:
        """Elementwise subset test between index arrays (broadcasting)."""
        i = np.asarray(i)
        j = np.asarray(j)
        return (self.grades[i] <= self.grades[j]).all(axis=-1)

    def meet(self, i, j) -> np.ndarray:
        return self.encode(np.minimum(self.grades[np.asarray(i)], self.grades[np.asarray(j)]))

    def join(self, i, j) -> np.ndarray:
        return self.encode(np.maximum(self.grades[np.asarray(i)], self.grades[np.asarray(j)]))

    # pointwise predicates for every subset at once

    @cached_property
    def _pairs(self):
        n = self.order
        T = self.table.array
        left = np.repeat(np.arange(n), n)
        right = np.tile(np.arange(n), n)
        return T.ravel(), left, right

    @cached_property
    def left_ideal_mask(self) -> np.ndarray:
        prod, _, right = self._pairs
        G = self.grades
        return (G[:, prod] >= G[:, right]).all(axis=1)

    @cached_property
    def right_ideal_mask(self) -> np.ndarray:
        prod, left, _ = self._pairs
        G = self.grades
        return (G[:, prod] >= G[:, left]).all(axis=1)

    @cached_property
    def ideal_mask(self) -> np.ndarray:
        return self.left_ideal_mask & self.right_ideal_mask

    @cached_property
    def subgroupoid_mask(self) -> np.ndarray:
        prod, left, right = self._pairs
        G = self.grades
        return (G[:, prod] >= np.minimum(G[:, left], G[:, right])).all(axis=1)

    @cached_property
    def _triples(self):
        n = self.order
        T = self.table.array
        x, y, z = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
        return T[T[x, y], z].ravel(), x.ravel(), y.ravel(), z.ravel()

    @cached_property
    def bi_ideal_mask(self) -> np.ndarray:
        prod, x, _, z = self._triples
        G = self.grades
        return self.subgroupoid_mask & (G[:, prod] >= np.minimum(G[:, x], G[:, z])).all(axis=1)

    @cached_property
    def interior_ideal_mask(self) -> np.ndarray:
        # triple (x, a, y) -> (xa)y, bound f(a)
        prod, _, a, _ = self._triples
        G = self.grades
        return (G[:, prod] >= G[:, a]).all(axis=1)

    @cached_property
    def idempotent_mask(self) -> np.ndarray:
        idx = np.arange(self.size)
        return self.products[idx, idx] == idx

    def mask(self, kind: str) -> np.ndarray:
        masks = {
            "left": "left_ideal_mask",
            "right": "right_ideal_mask",
            "two-sided": "ideal_mask",
            "subgroupoid": "subgroupoid_mask",
            "bi": "bi_ideal_mask",
            "interior": "interior_ideal_mask",
            "idempotent": "idempotent_mask",
        }
        try:
            return getattr(self, masks[kind])
        except KeyError:
            raise UsageError(f"unknown predicate {kind!r}; choose from {sorted(masks)}") from None

    def members(self, kind: str) -> np.ndarray:
        return np.flatnonzero(self.mask(kind))
