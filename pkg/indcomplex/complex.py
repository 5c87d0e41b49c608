"""Independence complexes stored by their facets.

A facet is kept as a vertex bitmask; faces are regenerated per dimension
on demand and cached on the complex.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from indcomplex.config import Config, resolve_config
from indcomplex.graph import Graph
from indcomplex.log import logger
from indcomplex.typing import Face
from indcomplex.utils import bits_to_tuple, lowest_bit, mask_of, popcount, submasks_of_size


class Budget:
    """Face-count guard plus an optional wall-clock deadline."""

    def __init__(
        self, max_faces: Optional[int] = None, seconds: Optional[float] = None
    ) -> None:
        self.max_faces = max_faces
        self.seconds = seconds
        self.deadline = None if seconds is None else time.perf_counter() + seconds

    @classmethod
    def from_config(cls, config: Optional[Config] = None) -> Budget:
        config = resolve_config(config)
        return cls(config["max_faces"], config["time_budget"])

    def check_faces(self, count: int) -> None:
        if self.max_faces is not None and count > self.max_faces:
            logger.warning(f"face-count guard hit: {count} > {self.max_faces}")
            raise FaceLimitExceeded(self.max_faces, count)

    def check_time(self) -> None:
        if self.deadline is not None and time.perf_counter() > self.deadline:
            assert self.seconds is not None
            logger.warning(f"time budget of {self.seconds}s exhausted")
            raise TimeLimitExceeded(self.seconds)


unlimited = Budget()


@dataclass(frozen=True)
class FaceCensus:
    counts: Tuple[int, ...]
    """Face counts indexed from dimension -1."""

    def __getitem__(self, d: int) -> int:
        if d < -1 or d + 1 >= len(self.counts):
            return 0
        return self.counts[d + 1]

    @property
    def top_dimension(self) -> int:
        return len(self.counts) - 2

    @property
    def total(self) -> int:
        return sum(self.counts)

    def as_dict(self) -> Dict[int, int]:
        return {d - 1: c for d, c in enumerate(self.counts)}


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    facets: Tuple[int, ...]
    """Facets as vertex bitmasks, sorted by their ascending vertex tuples."""
    _faces: Dict[int, List[Face]] = field(
        default_factory=dict, compare=False, repr=False
    )

    def __post_init__(self) -> None:
        if not self.facets and self.vertex_count:
            raise ValueError("a void complex has no vertices")
        full = (1 << self.vertex_count) - 1
        by_size: Dict[int, List[int]] = {}
        for facet in self.facets:
            if facet & ~full:
                raise ValueError(f"facet {bits_to_tuple(facet)} out of vertex range")
            if not facet:
                raise ValueError("the empty face cannot be a facet")
            by_size.setdefault(popcount(facet), []).append(facet)
        sizes = sorted(by_size)
        for i, size in enumerate(sizes):
            larger = [f for s in sizes[i + 1 :] for f in by_size[s]]
            for facet in by_size[size]:
                if any(facet & f == facet for f in larger):
                    raise ValueError(
                        f"facets are not an antichain: {bits_to_tuple(facet)}"
                    )

    @classmethod
    def from_facets(
        cls, vertex_count: int, facets: Iterable[Iterable[int]]
    ) -> SimplicialComplex:
        masks = {mask_of(f) for f in facets}
        masks.discard(0)
        # a complex whose only simplex is the empty face is the void complex
        if not masks:
            return void_complex()
        return cls(vertex_count, tuple(sorted(masks, key=bits_to_tuple)))

    @property
    def void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        """Top dimension; -2 for the void complex."""
        return max((popcount(f) for f in self.facets), default=-1) - 1

    def facet_sets(self) -> Tuple[Face, ...]:
        return tuple(bits_to_tuple(f) for f in self.facets)

    def faces(self, d: int, budget: Budget = unlimited) -> List[Face]:
        if d < -1:
            raise ValueError(f"dimension must be >= -1, got {d!r}")
        if d not in self._faces:
            self._faces[d] = _enumerate_faces(self.facets, d, budget)
        return self._faces[d]

    def __repr__(self) -> str:
        if self.void:
            return "<SimplicialComplex VOID>"
        return (
            f"<SimplicialComplex n={self.vertex_count} facets={len(self.facets)} "
            f"dim={self.dimension}>"
        )


def void_complex() -> SimplicialComplex:
    return SimplicialComplex(0, ())


def _enumerate_faces(facets: Tuple[int, ...], d: int, budget: Budget) -> List[Face]:
    if not facets:
        return []
    if d == -1:
        return [()]
    size = d + 1
    seen = set()
    for i, facet in enumerate(facets):
        if popcount(facet) >= size:
            seen.update(submasks_of_size(facet, size))
            if not i & 255:
                budget.check_faces(len(seen))
                budget.check_time()
    budget.check_faces(len(seen))
    return sorted(bits_to_tuple(m) for m in seen)


def faces_of_dimension(
    k: SimplicialComplex, d: int, budget: Budget = unlimited
) -> List[Face]:
    """All faces of dimension `d` in lexicographic order."""
    return k.faces(d, budget)


def face_census(k: SimplicialComplex, budget: Budget = unlimited) -> FaceCensus:
    if k.void:
        return FaceCensus((0,))
    counts = []
    total = 0
    for d in range(-1, k.dimension + 1):
        count = len(k.faces(d, budget))
        total += count
        budget.check_faces(total)
        counts.append(count)
    return FaceCensus(tuple(counts))


def simplices(k: SimplicialComplex) -> FrozenSet[Face]:
    """Non-empty faces of every dimension."""
    return frozenset(f for d in range(k.dimension + 1) for f in k.faces(d))


def reduced_euler_characteristic(k: SimplicialComplex) -> int:
    # the void complex is realized as {∅} here, matching its Betti vector
    if k.void:
        return -1
    return sum((-1) ** d * c for d, c in face_census(k).as_dict().items())


# enumeration on graphs


def count_independent_sets(
    g: Graph,
    within: Optional[int] = None,
    limit: Optional[int] = None,
    budget: Budget = unlimited,
) -> int:
    """Number of independent sets of `G[within]`, the empty set included.

    With `limit`, counts saturate at `limit + 1` and a saturated branch
    stops the search.
    """
    cap = None if limit is None else limit + 1
    memo: Dict[int, int] = {}
    rows = g.rows
    visited = 0

    def count(mask: int) -> int:
        nonlocal visited
        if not mask:
            return 1
        if mask in memo:
            return memo[mask]
        if not visited & 1023:
            budget.check_time()
        visited += 1
        v = lowest_bit(mask)
        rest = mask & ~(1 << v)
        if rows[v] & rest:
            total = count(rest)
            if cap is None or total < cap:
                total += count(rest & ~rows[v])
        else:
            total = 2 * count(rest)
        if cap is not None and total > cap:
            total = cap
        memo[mask] = total
        return total

    return count(g.full_mask if within is None else within)


def maximal_independent_sets(g: Graph, within: Optional[int] = None) -> List[int]:
    """Maximal independent sets of `G[within]` as bitmasks in original labels.

    Bron–Kerbosch with pivoting, run on the complement. Sorted by vertex tuple.
    """
    universe = g.full_mask if within is None else within & g.full_mask
    if not universe:
        return [0]
    nonadj = [universe & ~row & ~(1 << v) for v, row in enumerate(g.rows)]
    found: List[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                found.append(r)
            return
        # pivot maximizing |P ∩ N(u)| in the complement
        pivot = max(
            bits_to_tuple(p | x), key=lambda u: popcount(p & nonadj[u])
        )
        candidates = p & ~nonadj[pivot]
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            expand(r | low, p & nonadj[v], x & nonadj[v])
            p &= ~low
            x |= low
            candidates ^= low

    expand(0, universe, 0)
    return sorted(found, key=bits_to_tuple)


def _independence_complex_on(
    g: Graph, within: int, budget: Budget
) -> SimplicialComplex:
    if not within:
        return void_complex()
    budget.check_faces(count_independent_sets(g, within, budget.max_faces, budget))
    facets = maximal_independent_sets(g, within)
    return SimplicialComplex(g.vertex_count, tuple(facets))


def independence_complex(g: Graph, budget: Budget = unlimited) -> SimplicialComplex:
    """`I(G)`; the 0-vertex graph yields the void complex."""
    return _independence_complex_on(g, g.full_mask, budget)


def neighborhood_decomposition(
    g: Graph, v: int, budget: Budget = unlimited
) -> Tuple[SimplicialComplex, SimplicialComplex, SimplicialComplex]:
    """`(I(G∖v), I(G∖N(v)), I(G∖N[v]))` in the labels of `I(G)`."""
    g._check_vertex(v)
    full = g.full_mask
    return pushout_decomposition(
        g, full & ~(1 << v), full & ~g.rows[v], budget
    )


def pushout_decomposition(
    g: Graph, u_h: int, u_k: int, budget: Budget = unlimited
) -> Tuple[SimplicialComplex, SimplicialComplex, SimplicialComplex]:
    """Split `I(G)` along two vertex masks covering `V(G)`.

    Every vertex of `u_h ∖ u_k` must be adjacent to every vertex of
    `u_k ∖ u_h`; then `I(G)` is the union of `I(G[u_h])` and `I(G[u_k])`
    along `I(G[u_h ∩ u_k])`.
    """
    if (u_h | u_k) != g.full_mask:
        raise ValueError("vertex masks must cover exactly V(G)")
    only_k = u_k & ~u_h
    for a in bits_to_tuple(u_h & ~u_k):
        if g.rows[a] & only_k != only_k:
            raise ValueError(f"vertex {a} misses an edge to the other side")
    return (
        _independence_complex_on(g, u_h, budget),
        _independence_complex_on(g, u_k, budget),
        _independence_complex_on(g, u_h & u_k, budget),
    )


def _total_faces(k: SimplicialComplex, budget: Budget) -> int:
    return face_census(k, budget).total


def join_complex(
    k1: SimplicialComplex, k2: SimplicialComplex, budget: Budget = unlimited
) -> SimplicialComplex:
    if k1.void:
        return k2
    if k2.void:
        return k1
    # faces of a join, the empty one included, multiply
    budget.check_faces(_total_faces(k1, budget) * _total_faces(k2, budget))
    offset = k1.vertex_count
    facets = [f1 | f2 << offset for f1 in k1.facets for f2 in k2.facets]
    return SimplicialComplex(
        k1.vertex_count + k2.vertex_count, tuple(sorted(facets, key=bits_to_tuple))
    )


def disjoint_union_complex(
    k1: SimplicialComplex, k2: SimplicialComplex
) -> SimplicialComplex:
    if k1.void:
        return k2
    if k2.void:
        return k1
    offset = k1.vertex_count
    facets = list(k1.facets) + [f << offset for f in k2.facets]
    return SimplicialComplex(
        k1.vertex_count + k2.vertex_count, tuple(sorted(facets, key=bits_to_tuple))
    )


# dump format


def dump_complex(k: SimplicialComplex) -> str:
    if k.void:
        return "VOID\n"
    return "".join(" ".join(map(str, f)) + "\n" for f in k.facet_sets())


def load_complex(text: str, vertex_count: Optional[int] = None) -> SimplicialComplex:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if lines == ["VOID"]:
        return void_complex()
    facets = [tuple(int(x) for x in line.split()) for line in lines]
    if vertex_count is None:
        vertex_count = max((max(f) for f in facets if f), default=-1) + 1
    return SimplicialComplex.from_facets(vertex_count, facets)


class ResourceLimitError(RuntimeError):
    ...


class FaceLimitExceeded(ResourceLimitError):
    def __init__(self, limit: int, count: int) -> None:
        super().__init__(
            f"face-count guard exceeded: at least {count} faces, limit {limit}"
        )
        self.limit = limit
        self.count = count


class TimeLimitExceeded(ResourceLimitError):
    def __init__(self, seconds: float) -> None:
        super().__init__(f"time budget of {seconds}s exceeded")
        self.seconds = seconds
