"""Exact pivots of sparse boundary matrices over GF(2), GF(p) and Q.

GF(2) columns are Python ints used as bitsets and reduced in place, the
pivot of a column being its lowest set bit. Other fields go through
sympy's sparse `DomainMatrix` over `GF(p)` or `QQ`: the transposed
matrix is brought to reduced row echelon form and its pivot columns are
the pivots.

Both reductions accept a set of `cleared` columns that are skipped. A
column whose face is a pivot of the boundary one dimension up lies in
the span of the remaining columns, so skipping it leaves the rank alone.
"""

import typing as t
from dataclasses import dataclass

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain
from sympy.polys.matrices import DomainMatrix

from indcomplex.complex import Budget, unlimited
from indcomplex.typing import T_Field

_NOTHING: t.FrozenSet[int] = frozenset()


@dataclass(frozen=True)
class Field:
    tag: str
    characteristic: int
    domain: Domain

    def __repr__(self) -> str:
        return f"<Field {self.tag}>"


def prime_field(p: int) -> Field:
    if not isprime(p):
        raise ValueError(f"field characteristic must be prime, got {p!r}")
    return Field(f"GF({p})", p, GF(p))


RATIONALS = Field("Q", 0, QQ)


def resolve_field(field: t.Union[T_Field, Field, str]) -> Field:
    """Accept a prime, `"Q"`, a numeric string or a `Field`."""
    if isinstance(field, Field):
        return field
    if field == "Q":
        return RATIONALS
    if isinstance(field, str):
        if not field.strip().isdigit():
            raise ValueError(f"unknown field {field!r}")
        field = int(field)
    return prime_field(field)


def gf2_pivots(
    columns: t.Sequence[int],
    cleared: t.AbstractSet[int] = _NOTHING,
    budget: Budget = unlimited,
) -> t.Set[int]:
    """Row indices of the pivots left after reducing `columns` over GF(2)."""
    # lowest bit -> reduced column owning it
    pivots: t.Dict[int, int] = {}
    for i, col in enumerate(columns):
        if i in cleared:
            continue
        while col:
            low = col & -col
            pivot = pivots.get(low)
            if pivot is None:
                pivots[low] = col
                break
            col ^= pivot
        if not i & 1023:
            budget.check_time()
    return {low.bit_length() - 1 for low in pivots}


def gf2_rank(columns: t.Iterable[int], budget: Budget = unlimited) -> int:
    return len(gf2_pivots(list(columns), budget=budget))


def sparse_pivots(
    columns: t.Sequence[t.Mapping[int, int]],
    row_count: int,
    field: Field,
    cleared: t.AbstractSet[int] = _NOTHING,
    budget: Budget = unlimited,
) -> t.Set[int]:
    """Row indices of the pivots of `columns` over `field`.

    `columns` holds one `{row: value}` mapping per column, rows below
    `row_count`.
    """
    domain = field.domain
    rows: t.Dict[int, t.Dict[int, t.Any]] = {}
    for i, col in enumerate(columns):
        if i in cleared:
            continue
        entries = {}
        for r, v in col.items():
            value = domain.convert(v)
            if not domain.is_zero(value):
                entries[r] = value
        if entries:
            rows[i] = entries
        if not i & 1023:
            budget.check_time()
    if not rows:
        return set()
    matrix = DomainMatrix(rows, (len(columns), row_count), domain)
    _, pivots = matrix.rref()
    budget.check_time()
    return set(pivots)


def sparse_rank(
    columns: t.Sequence[t.Mapping[int, int]], field: Field, budget: Budget = unlimited
) -> int:
    row_count = 1 + max((r for col in columns for r in col), default=-1)
    return len(sparse_pivots(columns, row_count, field, budget=budget))
