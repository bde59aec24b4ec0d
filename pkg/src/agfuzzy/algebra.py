"""Finite groupoids given by Cayley tables, and the identities they may satisfy.

Elements are the integers ``0 .. n-1``; ``table[a][b]`` is the product ``ab``.
Every ``check_*`` function returns ``None`` when the identity holds and a
:class:`Witness` for the lexicographically first failing tuple otherwise.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

from . import kernels
from .errors import CapabilityError, TableFormatError, UsageError

CANONICAL_BOUND = 6


class CayleyTable:
    """Immutable total binary operation on ``{0, ..., n-1}``."""

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise UsageError("a Cayley table needs at least one element")
        for a, row in enumerate(rows):
            if len(row) != n:
                raise UsageError(f"row {a} has {len(row)} entries, expected {n}")
            for b, v in enumerate(row):
                if not 0 <= v < n:
                    raise UsageError(f"entry ({a}, {b}) = {v} is outside 0..{n - 1}")
        self.rows = rows

    @classmethod
    def from_function(cls, n: int, op: Callable[[int, int], int]) -> "CayleyTable":
        return cls([[op(a, b) for b in range(n)] for a in range(n)])

    @classmethod
    def from_flat(cls, flat: Sequence[int], n: int) -> "CayleyTable":
        return cls([flat[a * n:(a + 1) * n] for a in range(n)])

    @property
    def order(self) -> int:
        return len(self.rows)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.rows, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def __eq__(self, other):
        return isinstance(other, CayleyTable) and self.rows == other.rows

    def __lt__(self, other):
        return (self.order, self.flat()) < (other.order, other.flat())

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"CayleyTable({[list(r) for r in self.rows]})"


@dataclass(frozen=True)
class Witness:
    """Elements at which a named identity fails, with both evaluated sides."""

    kind: str
    elements: tuple
    lhs: int
    rhs: int

    def to_dict(self):
        return {"kind": self.kind, "elements": list(self.elements), "lhs": self.lhs, "rhs": self.rhs}


def apply(t: CayleyTable, a: int, b: int) -> int:
    n = t.order
    if not (0 <= a < n and 0 <= b < n):
        raise UsageError(f"elements ({a}, {b}) out of range for order {n}")
    return t.rows[a][b]


# Each entry maps a table array to (lhs, rhs) arrays indexed by the operand
# tuple; ``evaluate_identity`` is the element-wise re-evaluation.

def _left_invertive(T):
    lhs = T[T[:, :, None], np.arange(len(T))[None, None, :]]  # (ab)c
    return lhs, lhs.transpose(2, 1, 0)  # (cb)a


def _medial(T):
    lhs = T[T[:, :, None, None], T[None, None, :, :]]  # (ab)(cd)
    return lhs, lhs.transpose(0, 2, 1, 3)  # (ac)(bd)


def _paramedial(T):
    lhs = T[T[:, :, None, None], T[None, None, :, :]]
    return lhs, lhs.transpose(3, 2, 1, 0)  # (dc)(ba)


def _aux(T):
    lhs = T[np.arange(len(T))[:, None, None], T[None, :, :]]  # a(bc)
    return lhs, lhs.transpose(1, 0, 2)  # b(ac)


def _associative(T):
    n = len(T)
    lhs = T[T[:, :, None], np.arange(n)[None, None, :]]  # (ab)c
    rhs = T[np.arange(n)[:, None, None], T[None, :, :]]  # a(bc)
    return lhs, rhs


def _commutative(T):
    return T, T.T


IDENTITIES = {
    "left-invertive": _left_invertive,
    "medial": _medial,
    "paramedial": _paramedial,
    "aux": _aux,
    "associative": _associative,
    "commutative": _commutative,
}


def evaluate_identity(t: CayleyTable, kind: str, elements: Sequence[int]) -> tuple[int, int]:
    """Evaluate both sides of a named identity at one tuple, element by element."""
    m = t.rows
    if kind == "left-invertive":
        a, b, c = elements
        return m[m[a][b]][c], m[m[c][b]][a]
    if kind == "medial":
        a, b, c, d = elements
        return m[m[a][b]][m[c][d]], m[m[a][c]][m[b][d]]
    if kind == "paramedial":
        a, b, c, d = elements
        return m[m[a][b]][m[c][d]], m[m[d][c]][m[b][a]]
    if kind == "aux":
        a, b, c = elements
        return m[a][m[b][c]], m[b][m[a][c]]
    if kind == "associative":
        a, b, c = elements
        return m[m[a][b]][c], m[a][m[b][c]]
    if kind == "commutative":
        a, b = elements
        return m[a][b], m[b][a]
    raise UsageError(f"unknown identity {kind!r}")


def check_identity(t: CayleyTable, kind: str) -> Witness | None:
    try:
        sides = IDENTITIES[kind]
    except KeyError:
        raise UsageError(f"unknown identity {kind!r}; choose from {sorted(IDENTITIES)}") from None
    lhs, rhs = sides(t.array)
    bad = np.argwhere(lhs != rhs)
    if len(bad) == 0:
        return None
    elements = tuple(int(v) for v in bad[0])
    return Witness(kind, elements, int(lhs[tuple(bad[0])]), int(rhs[tuple(bad[0])]))


def check_left_invertive(t: CayleyTable) -> Witness | None:
    """(ab)c = (cb)a for all a, b, c."""
    return check_identity(t, "left-invertive")


def check_medial(t: CayleyTable) -> Witness | None:
    """(ab)(cd) = (ac)(bd) for all a, b, c, d."""
    return check_identity(t, "medial")


def check_paramedial(t: CayleyTable) -> Witness | None:
    """(ab)(cd) = (dc)(ba) for all a, b, c, d."""
    return check_identity(t, "paramedial")


def check_aux_identity(t: CayleyTable) -> Witness | None:
    """a(bc) = b(ac) for all a, b, c."""
    return check_identity(t, "aux")


def is_ag(t: CayleyTable) -> bool:
    return check_left_invertive(t) is None


def is_associative(t: CayleyTable) -> bool:
    return check_identity(t, "associative") is None


def is_commutative(t: CayleyTable) -> bool:
    return check_identity(t, "commutative") is None


def left_identities(t: CayleyTable) -> list[int]:
    T = t.array
    ident = np.arange(t.order)
    return [e for e in range(t.order) if np.array_equal(T[e], ident)]


def right_identities(t: CayleyTable) -> list[int]:
    T = t.array
    ident = np.arange(t.order)
    return [e for e in range(t.order) if np.array_equal(T[:, e], ident)]


def idempotent_elements(t: CayleyTable):
    from .fuzzy import CrispSubset

    return CrispSubset(tuple(t.rows[a][a] == a for a in range(t.order)))


@dataclass(frozen=True)
class StructureFlags:
    is_ag: bool
    left_identities: tuple
    right_identities: tuple
    is_commutative: bool
    is_associative: bool
    idempotent_elements: object


def structure_flags(t: CayleyTable) -> StructureFlags:
    return StructureFlags(
        is_ag=is_ag(t),
        left_identities=tuple(left_identities(t)),
        right_identities=tuple(right_identities(t)),
        is_commutative=is_commutative(t),
        is_associative=is_associative(t),
        idempotent_elements=idempotent_elements(t),
    )


def relabel(t: CayleyTable, perm: Sequence[int]) -> CayleyTable:
    """Image of ``t`` under the bijection ``a -> perm[a]``."""
    n = t.order
    inv = [0] * n
    for a, p in enumerate(perm):
        inv[p] = a
    return CayleyTable([[perm[t.rows[inv[i]][inv[j]]] for j in range(n)] for i in range(n)])


def permutations_array(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


def canonical_form(t: CayleyTable, bound: int = CANONICAL_BOUND) -> CayleyTable:
    """Lexicographically least table isomorphic to ``t``."""
    n = t.order
    if n > bound:
        raise CapabilityError(f"canonical form is limited to order <= {bound}, got {n}")
    flat = np.array([t.flat()], dtype=np.int8)
    best = kernels.canonical_forms(flat, permutations_array(n))[0]
    return CayleyTable.from_flat([int(v) for v in best], n)


def is_isomorphic(s: CayleyTable, t: CayleyTable) -> bool:
    return s.order == t.order and canonical_form(s) == canonical_form(t)


# -- text format -------------------------------------------------------------

def parse_table(text: str) -> CayleyTable:
    """Parse one table: order on the first line, then ``n`` rows."""
    tables = parse_tables(text)
    if len(tables) != 1:
        raise TableFormatError(f"expected exactly one table, found {len(tables)}", 1)
    return tables[0]


def _blocks(text: str):
    block = []
    for no, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith("#"):
            continue
        if raw.strip():
            block.append((no, raw))
        elif block:
            yield block
            block = []
    if block:
        yield block


def parse_tables(text: str) -> list[CayleyTable]:
    """Parse tables separated by blank lines; ``#`` lines are comments."""
    tables = []
    for block in _blocks(text):
        no, header = block[0]
        fields = header.split()
        if len(fields) != 1 or not fields[0].isdigit() or int(fields[0]) < 1:
            col = header.index(fields[0]) + 1
            raise TableFormatError(f"expected a positive table order, got {header.strip()!r}", no, col)
        n = int(fields[0])
        if len(block) - 1 != n:
            bad = block[-1][0] if len(block) - 1 > n else no
            raise TableFormatError(f"expected {n} rows after the order line, found {len(block) - 1}", bad)
        rows = []
        for no, line in block[1:]:
            tokens = list(re.finditer(r"\S+", line))
            if len(tokens) != n:
                col = tokens[n].start() + 1 if len(tokens) > n else len(line) + 1
                raise TableFormatError(f"expected {n} entries, found {len(tokens)}", no, col)
            row = []
            for tok in tokens:
                text_ = tok.group()
                if not text_.isdigit():
                    raise TableFormatError(f"entry {text_!r} is not a non-negative integer", no, tok.start() + 1)
                v = int(text_)
                if v >= n:
                    raise TableFormatError(f"entry {v} is outside 0..{n - 1}", no, tok.start() + 1)
                row.append(v)
            rows.append(row)
        tables.append(CayleyTable(rows))
    return tables


def format_table(t: CayleyTable) -> str:
    lines = [str(t.order)]
    lines.extend(" ".join(str(v) for v in row) for row in t.rows)
    return "\n".join(lines) + "\n"


# -- named fixtures ----------------------------------------------------------

def subtraction_table(n: int = 3) -> CayleyTable:
    """``a . b = (b - a) mod n``: an AG-groupoid with left identity 0."""
    return CayleyTable.from_function(n, lambda a, b: (b - a) % n)


def left_zero_table(n: int = 2) -> CayleyTable:
    return CayleyTable.from_function(n, lambda a, b: a)


def right_zero_table(n: int = 2) -> CayleyTable:
    return CayleyTable.from_function(n, lambda a, b: b)


def addition_table(n: int) -> CayleyTable:
    return CayleyTable.from_function(n, lambda a, b: (a + b) % n)
