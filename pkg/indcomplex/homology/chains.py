"""Reduced homology from the augmented chain complex.

The empty face is the single generator in dimension -1, so ranks come out
reduced. Faces are ascending vertex tuples and removing the i-th vertex
carries the sign (-1)^i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import (
    AbstractSet,
    Any,
    Dict,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Set,
    Tuple,
)

from indcomplex.complex import (
    Budget,
    FaceCensus,
    SimplicialComplex,
    face_census,
    unlimited,
)
from indcomplex.homology.elimination import (
    Field,
    gf2_pivots,
    resolve_field,
    sparse_pivots,
)
from indcomplex.log import logger
from indcomplex.typing import Face, T_Connectivity, T_Field, T_Ranks


@dataclass(frozen=True)
class BettiVector:
    ranks: Tuple[Tuple[int, int], ...]
    """Nonzero `(dimension, rank)` pairs in ascending dimension."""
    field: str = "GF(2)"

    def __post_init__(self) -> None:
        for d, r in self.ranks:
            if d < -1 or r <= 0:
                raise ValueError(f"invalid rank entry {(d, r)!r}")
        if self[-1] > 1 or (self[-1] == 1 and len(self.ranks) > 1):
            raise ValueError("dimension -1 is only populated by the void complex")

    @classmethod
    def from_dict(cls, ranks: T_Ranks, field: str = "GF(2)") -> BettiVector:
        return cls(tuple(sorted((d, r) for d, r in ranks.items() if r)), field)

    def __getitem__(self, d: int) -> int:
        return dict(self.ranks).get(d, 0)

    @property
    def top_dimension(self) -> int:
        return self.ranks[-1][0] if self.ranks else -1

    def as_dict(self) -> T_Ranks:
        return dict(self.ranks)

    def same_ranks(self, other: BettiVector) -> bool:
        return self.ranks == other.ranks

    def to_json(self) -> Dict[str, Any]:
        conn = conn_H(self)
        return {
            "field": self.field,
            # dimension -1 is always emitted, zero unless void
            "ranks": {
                "-1": self[-1],
                **{str(d): r for d, r in self.ranks if d >= 0},
            },
            "conn_H": "inf" if conn == math.inf else conn,
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> BettiVector:
        return cls.from_dict(
            {int(d): int(r) for d, r in data["ranks"].items()}, data["field"]
        )

    def __str__(self) -> str:
        body = ", ".join(f"{d}: {r}" for d, r in self.ranks)
        return f"{{{body}}}"


VOID_BETTI = BettiVector(((-1, 1),))


@dataclass(frozen=True)
class BoundaryMatrix:
    dimension: int
    rows: Sequence[Face]
    """Faces of dimension `dimension - 1`."""
    cols: Sequence[Face]
    entries: List[Dict[int, int]]
    """One `{row: ±1}` dict per column."""

    def gf2_columns(self) -> List[int]:
        columns = []
        for col in self.entries:
            bits = 0
            for r in col:
                bits |= 1 << r
            columns.append(bits)
        return columns


def boundary_matrix(
    k: SimplicialComplex, d: int, budget: Budget = unlimited
) -> BoundaryMatrix:
    """`∂_d` from dimension `d` faces to dimension `d - 1` faces, d >= 0."""
    if d < 0:
        raise ValueError(f"boundary dimension must be >= 0, got {d!r}")
    rows = k.faces(d - 1, budget)
    cols = k.faces(d, budget)
    index = {face: i for i, face in enumerate(rows)}
    entries = []
    for face in cols:
        entries.append(
            {index[face[:i] + face[i + 1 :]]: -1 if i & 1 else 1 for i in range(d + 1)}
        )
    return BoundaryMatrix(d, rows, cols, entries)


def boundary_pivots(
    matrix: BoundaryMatrix,
    field: Field,
    cleared: AbstractSet[int] = frozenset(),
    budget: Budget = unlimited,
) -> Set[int]:
    """Indices of the `d - 1` faces that carry a pivot of `∂_d`."""
    if field.characteristic == 2:
        return gf2_pivots(matrix.gf2_columns(), cleared, budget)
    return sparse_pivots(matrix.entries, len(matrix.rows), field, cleared, budget)


def matrix_rank(
    matrix: BoundaryMatrix, field: Field, budget: Budget = unlimited
) -> int:
    return len(boundary_pivots(matrix, field, budget=budget))


@dataclass(frozen=True)
class ChainComplex:
    """Face census and boundaries `∂_0 .. ∂_top` of a non-void complex."""

    census: FaceCensus
    boundaries: Tuple[BoundaryMatrix, ...]

    def boundary_ranks(self, field: Field, budget: Budget = unlimited) -> List[int]:
        """Ranks of `∂_0 .. ∂_{top+1}`, the last one always zero."""
        top = self.census.top_dimension
        ranks = [0] * (top + 2)
        # top down; pivots of ∂_{d+1} clear their columns in ∂_d
        cleared: Set[int] = set()
        for d in range(top, -1, -1):
            cleared = boundary_pivots(self.boundaries[d], field, cleared, budget)
            ranks[d] = len(cleared)
            logger.debug(f"rank ∂_{d} = {ranks[d]} over {field.tag}")
        return ranks

    def betti(self, field: Field, budget: Budget = unlimited) -> BettiVector:
        census = self.census
        boundary_ranks = self.boundary_ranks(field, budget)
        ranks = {}
        for d in range(-1, census.top_dimension + 1):
            r_d = boundary_ranks[d] if d >= 0 else 0
            ranks[d] = census[d] - r_d - boundary_ranks[d + 1]
        return BettiVector.from_dict(ranks, field.tag)


def chain_complex(k: SimplicialComplex, budget: Budget = unlimited) -> ChainComplex:
    if k.void:
        raise ValueError("the void complex has no chain complex")
    census = face_census(k, budget)
    boundaries = tuple(
        boundary_matrix(k, d, budget) for d in range(census.top_dimension + 1)
    )
    return ChainComplex(census, boundaries)


def betti(
    k: SimplicialComplex, field: T_Field = 2, budget: Budget = unlimited
) -> BettiVector:
    """Reduced Betti vector of `k` over a prime field or Q."""
    resolved = resolve_field(field)
    if k.void:
        return BettiVector(VOID_BETTI.ranks, resolved.tag)
    return chain_complex(k, budget).betti(resolved, budget)


def conn_H(b: BettiVector) -> T_Connectivity:
    """Homological connectivity: -2 for the void complex, inf if acyclic."""
    if b[-1]:
        return -2
    if not b.ranks:
        return math.inf
    return b.ranks[0][0] - 1


def format_conn(conn: T_Connectivity) -> str:
    return "inf" if conn == math.inf else str(conn)


def euler_consistent(census: FaceCensus, b: BettiVector) -> bool:
    # the void complex counts as {∅}: no faces, reduced Euler characteristic -1
    faces = sum((-1) ** d * c for d, c in census.as_dict().items())
    if census.total == 0:
        faces = -1
    return faces == sum((-1) ** d * r for d, r in b.ranks)


def join_convolution(b1: BettiVector, b2: BettiVector) -> BettiVector:
    """The Betti vector of a join: `b_n = Σ_{p+q=n-1} b1_p * b2_q`, p, q >= -1."""
    ranks: Dict[int, int] = {}
    for p, x in b1.ranks:
        for q, y in b2.ranks:
            ranks[p + q + 1] = ranks.get(p + q + 1, 0) + x * y
    return BettiVector.from_dict(ranks, b1.field)


class MultiFieldResult(NamedTuple):
    vectors: List[BettiVector]
    agree: bool
    integral: Optional[IntegralHomology] = None


def betti_multi_field(
    k: SimplicialComplex,
    fields: Iterable[T_Field] = (2, 1000003),
    budget: Budget = unlimited,
    integral_fallback: bool = False,
) -> MultiFieldResult:
    resolved = [resolve_field(f) for f in fields]
    primes = {f.characteristic for f in resolved if f.characteristic}
    if len(primes) < 2:
        raise ValueError("at least two distinct prime fields are required")
    if k.void:
        vectors = [BettiVector(VOID_BETTI.ranks, f.tag) for f in resolved]
    else:
        # faces and boundaries are built once for every field
        chains = chain_complex(k, budget)
        vectors = [chains.betti(f, budget) for f in resolved]
    agree = all(v.same_ranks(vectors[0]) for v in vectors)
    integral = None
    if not agree:
        logger.warning(
            "Betti vectors disagree across fields: "
            + "; ".join(f"{v.field} {v}" for v in vectors)
        )
        if integral_fallback:
            integral = integral_homology(k, budget)
    return MultiFieldResult(vectors, agree, integral)


@dataclass(frozen=True)
class IntegralHomology:
    free: BettiVector
    torsion: Dict[int, Tuple[int, ...]]
    """Invariant factors > 1 of reduced homology per dimension."""

    def to_json(self) -> Dict[str, Any]:
        data = self.free.to_json()
        data["torsion"] = {str(d): list(c) for d, c in sorted(self.torsion.items())}
        return data


def _invariant_factors(matrix: BoundaryMatrix) -> List[int]:
    from sympy import ZZ, zeros
    from sympy.matrices.normalforms import smith_normal_form

    if not matrix.rows or not matrix.cols:
        return []
    dense = zeros(len(matrix.rows), len(matrix.cols))
    for j, col in enumerate(matrix.entries):
        for i, v in col.items():
            dense[i, j] = v
    snf = smith_normal_form(dense, domain=ZZ)
    diagonal = (abs(int(snf[i, i])) for i in range(min(snf.shape)))
    return [x for x in diagonal if x]


def integral_homology(
    k: SimplicialComplex, budget: Budget = unlimited
) -> IntegralHomology:
    """Reduced homology over Z via Smith normal form; slow, opt-in."""
    if k.void:
        return IntegralHomology(BettiVector(VOID_BETTI.ranks, "Z"), {})
    census = face_census(k, budget)
    top = census.top_dimension
    factors = {
        d: _invariant_factors(boundary_matrix(k, d, budget)) for d in range(top + 1)
    }
    factors[top + 1] = []
    ranks = {}
    torsion = {}
    for d in range(-1, top + 1):
        r_d = len(factors[d]) if d >= 0 else 0
        ranks[d] = census[d] - r_d - len(factors[d + 1])
        if tors := tuple(x for x in factors[d + 1] if x > 1):
            torsion[d] = tors
    return IntegralHomology(BettiVector.from_dict(ranks, "Z"), torsion)
