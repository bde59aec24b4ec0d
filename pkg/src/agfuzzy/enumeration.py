"""Enumeration of AG-groupoids of small order.

``enumerate_ag`` runs the backtracking search in :mod:`agfuzzy.kernels`;
``enumerate_naive`` filters the whole space of tables and exists to check it.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .algebra import CayleyTable, check_left_invertive, left_identities, permutations_array, relabel
from .errors import CapabilityError

ENUM_BOUND = 5
NAIVE_BOUND = 3


@dataclass(frozen=True)
class EnumSpec:
    order: int
    require_left_identity: bool = False
    up_to_isomorphism: bool = False
    limit: int | None = None


@dataclass
class EnumResult:
    tables: list = field(default_factory=list)
    count_labeled: int | None = None
    count_iso_classes: int | None = None
    exhausted: bool = True

    def summary(self) -> str:
        iso = "-" if self.count_iso_classes is None else self.count_iso_classes
        labeled = "-" if self.count_labeled is None else self.count_labeled
        return f"count_labeled={labeled} count_iso={iso} exhausted={str(self.exhausted).lower()}"


def _search_part(args):
    n, first = args
    return kernels.ag_search(n, first)


def _labeled(n: int, jobs: int) -> np.ndarray:
    if jobs <= 1 or n < 3:
        return kernels.ag_search(n)
    # partition on the value of cell (0, 0); concatenation keeps lexicographic order
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_search_part, [(n, v) for v in range(n)]))
    return np.concatenate(parts, axis=0)


def _has_left_identity(flat: np.ndarray, n: int) -> np.ndarray:
    rows = flat.reshape(len(flat), n, n)
    return (rows == np.arange(n)[None, None, :]).all(axis=2).any(axis=1)


def _finish(flat: np.ndarray, n: int, spec: EnumSpec, canon_fn) -> EnumResult:
    if spec.require_left_identity:
        flat = flat[_has_left_identity(flat, n)]
    result = EnumResult(count_labeled=len(flat))
    if spec.up_to_isomorphism:
        canon = canon_fn(flat)
        flat = np.unique(canon, axis=0) if len(canon) else canon
        result.count_iso_classes = len(flat)
    if spec.limit is not None and spec.limit < len(flat):
        flat = flat[:spec.limit]
        result.exhausted = False
    result.tables = [CayleyTable.from_flat([int(v) for v in row], n) for row in flat]
    return result


def enumerate_ag(spec: EnumSpec, bound: int = ENUM_BOUND, jobs: int = 1) -> EnumResult:
    """All AG-groupoids matching ``spec``, in lexicographic order."""
    n = spec.order
    if n < 1:
        raise CapabilityError("order must be at least 1")
    if n > bound:
        raise CapabilityError(f"enumeration is limited to order <= {bound}, got {n}")
    if spec.limit is not None and not spec.require_left_identity and not spec.up_to_isomorphism:
        flat = kernels.ag_search(n, -1, spec.limit + 1)
        if len(flat) > spec.limit:
            return EnumResult(
                tables=[CayleyTable.from_flat([int(v) for v in row], n) for row in flat[:spec.limit]],
                count_labeled=None,
                exhausted=False,
            )
        return _finish(flat, n, spec, None)
    perms = permutations_array(n)
    return _finish(_labeled(n, jobs), n, spec, lambda flat: kernels.canonical_forms(flat, perms))


def _naive_canonical(flat: np.ndarray, n: int) -> np.ndarray:
    perms = list(itertools.permutations(range(n)))
    out = []
    for row in flat:
        t = CayleyTable.from_flat([int(v) for v in row], n)
        out.append(min(relabel(t, p).flat() for p in perms))
    return np.array(out, dtype=np.int8).reshape(len(out), n * n)


def enumerate_naive(spec: EnumSpec) -> EnumResult:
    """Generate every table of the given order and keep the AG-groupoids."""
    n = spec.order
    if n < 1 or n > NAIVE_BOUND:
        raise CapabilityError(f"naive enumeration is limited to order <= {NAIVE_BOUND}, got {n}")
    keep = []
    for flat in itertools.product(range(n), repeat=n * n):
        if check_left_invertive(CayleyTable.from_flat(flat, n)) is None:
            keep.append(flat)
    flat = np.array(keep, dtype=np.int8).reshape(len(keep), n * n)
    return _finish(flat, n, spec, lambda f: _naive_canonical(f, n))


def ag_groupoids(order: int, left_identity: bool = False, up_to_iso: bool = False) -> list[CayleyTable]:
    return enumerate_ag(EnumSpec(order, left_identity, up_to_iso)).tables


def has_left_identity(t: CayleyTable) -> bool:
    return bool(left_identities(t))
