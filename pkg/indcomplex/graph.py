"""Finite simple graphs with bit-packed adjacency.

Vertices are always `0..vertex_count-1`; row `v` of the adjacency is a
Python int whose bit `u` is set iff `u ~ v`. Graphs are immutable, so they
can be shared freely between workers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from indcomplex.typing import VertexSet
from indcomplex.utils import bits_to_tuple, iter_bits, lowest_bit, mask_of, popcount

if TYPE_CHECKING:
    import networkx as nx


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    rows: Tuple[int, ...]
    label: Optional[str] = field(default=None, compare=False)
    """Human-readable construction string, ignored by equality."""

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError(f"negative vertex count {self.vertex_count!r}")
        if len(self.rows) != self.vertex_count:
            raise ValueError(
                f"expected {self.vertex_count} adjacency rows, got {len(self.rows)}"
            )
        full = self.full_mask
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"vertex {v} adjacent to an id out of range")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at {u}-{v}")

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[Tuple[int, int]],
        label: Optional[str] = None,
    ) -> Graph:
        rows = [0] * vertex_count
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {u}-{v} out of range for {vertex_count} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(vertex_count, tuple(rows), label)

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.rows) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges `(u, v)` with `u < v`, sorted."""
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                yield (u, u + 1 + v)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.rows[v])

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise ValueError(
                f"vertex {v!r} not in graph with {self.vertex_count} vertices"
            )

    def to_networkx(self) -> nx.Graph:
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        name = self.label or "graph"
        return f"<Graph {name!r} n={self.vertex_count} m={self.edge_count}>"


# generators


def path(m: int) -> Graph:
    if m < 1:
        raise ValueError(f"path requires m >= 1, got {m!r} (use empty_graph)")
    return Graph.from_edges(m, ((i, i + 1) for i in range(m - 1)), f"path:{m}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle requires n >= 3, got {n!r}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph.from_edges(n, edges, f"cycle:{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete requires n >= 1, got {n!r}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)), f"complete:{n}")


def star(n: int) -> Graph:
    """One center (vertex 0) adjacent to `n - 1` leaves."""
    if n < 1:
        raise ValueError(f"star requires n >= 1, got {n!r}")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)), f"star:{n}")


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"empty_graph requires n >= 0, got {n!r}")
    return Graph(n, (0,) * n, f"empty:{n}")


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    offset = g1.vertex_count
    rows = g1.rows + tuple(row << offset for row in g2.rows)
    return Graph(len(rows), rows, f"union({g1.label},{g2.label})")


def complete_join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two summands."""
    offset = g1.vertex_count
    left = g1.full_mask
    right = g2.full_mask << offset
    rows = tuple(row | right for row in g1.rows) + tuple(
        (row << offset) | left for row in g2.rows
    )
    return Graph(len(rows), rows, f"join({g1.label},{g2.label})")


def lex_product(g: Graph, h: Graph) -> Graph:
    """Lexicographic product, vertex `(u, v)` encoded as `u * |V(H)| + v`."""
    nh = h.vertex_count
    block = h.full_mask
    rows: List[int] = []
    for u in range(g.vertex_count):
        outer = 0
        for w in iter_bits(g.rows[u]):
            outer |= block << (w * nh)
        for v in range(nh):
            rows.append(outer | (h.rows[v] << (u * nh)))
    return Graph(len(rows), tuple(rows), f"lex({g.label},{h.label})")


def random_forest(num_vertices: int, edge_density_hint: float, seed: int) -> Graph:
    """Seeded random forest.

    Every vertex after the first attaches to a uniformly chosen earlier vertex
    with probability `edge_density_hint`; ids are then shuffled.
    """
    if num_vertices < 0:
        raise ValueError(f"negative vertex count {num_vertices!r}")
    rng = random.Random(seed)
    edges = []
    for v in range(1, num_vertices):
        if rng.random() < edge_density_hint:
            edges.append((rng.randrange(v), v))
    perm = list(range(num_vertices))
    rng.shuffle(perm)
    return Graph.from_edges(
        num_vertices,
        ((perm[u], perm[v]) for u, v in edges),
        f"random_forest({num_vertices},{edge_density_hint},{seed})",
    )


def random_graph(num_vertices: int, edge_probability: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(num_vertices)
        for v in range(u + 1, num_vertices)
        if rng.random() < edge_probability
    ]
    return Graph.from_edges(
        num_vertices,
        edges,
        f"random_graph({num_vertices},{edge_probability},{seed})",
    )


# neighborhoods and subgraphs


def open_neighborhood(g: Graph, v: int) -> VertexSet:
    g._check_vertex(v)
    return frozenset(iter_bits(g.rows[v]))


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    g._check_vertex(v)
    return frozenset(iter_bits(g.rows[v] | 1 << v))


def induced_subgraph(g: Graph, keep: int) -> Tuple[Graph, Dict[int, int]]:
    """Full subgraph on the vertex mask `keep`, densely relabeled."""
    old_ids = bits_to_tuple(keep & g.full_mask)
    mapping = {old: new for new, old in enumerate(old_ids)}
    rows = []
    for old in old_ids:
        rows.append(mask_of(mapping[u] for u in iter_bits(g.rows[old] & keep)))
    return Graph(len(rows), tuple(rows)), mapping


def delete_vertices(g: Graph, removed: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """`G ∖ U` with dense relabeling, and the old→new map of the survivors."""
    mask = 0
    for v in removed:
        g._check_vertex(v)
        mask |= 1 << v
    return induced_subgraph(g, g.full_mask & ~mask)


def component_masks(g: Graph, within: Optional[int] = None) -> List[int]:
    """Connected components of `G[within]` as masks, ordered by smallest member."""
    remaining = g.full_mask if within is None else within
    components = []
    while remaining:
        seen = frontier = remaining & -remaining
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.rows[v]
            frontier = reach & remaining & ~seen
            seen |= frontier
        components.append(seen)
        remaining &= ~seen
    return components


def connected_components(g: Graph) -> List[VertexSet]:
    return [frozenset(iter_bits(c)) for c in component_masks(g)]


# recognisers


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.vertex_count - len(component_masks(g))


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def is_star(g: Graph) -> bool:
    """True iff some vertex is adjacent to every other vertex."""
    full = g.full_mask
    return any(row | 1 << v == full for v, row in enumerate(g.rows))


def is_path(g: Graph) -> bool:
    return (
        g.vertex_count >= 1
        and is_connected(g)
        and is_forest(g)
        and all(popcount(row) <= 2 for row in g.rows)
    )


def is_cycle(g: Graph) -> bool:
    return (
        g.vertex_count >= 3
        and is_connected(g)
        and all(popcount(row) == 2 for row in g.rows)
    )


def is_complete(g: Graph) -> bool:
    full = g.full_mask
    return g.vertex_count >= 1 and all(
        row | 1 << v == full for v, row in enumerate(g.rows)
    )


def find_leaf_pair(g: Graph) -> Optional[Tuple[int, int]]:
    """Smallest-id vertex `w` of degree one and its unique neighbor."""
    for w, row in enumerate(g.rows):
        if row and row & (row - 1) == 0:
            return (w, lowest_bit(row))
    return None


class NotAForestError(ValueError):
    def __init__(self, g: Graph) -> None:
        super().__init__(f"not a forest: {g.label or graph_expression(g)}")
        self.graph = g


def require_forest(g: Graph) -> None:
    if not is_forest(g):
        raise NotAForestError(g)


# canonical forms


def _tree_code(g: Graph, comp: int) -> str:
    # strip leaves until one or two centers remain
    degree = {v: popcount(g.rows[v] & comp) for v in iter_bits(comp)}
    layer = [v for v, d in degree.items() if d <= 1]
    left = len(degree)
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for u in iter_bits(g.rows[v] & comp):
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    centers = layer

    def encode(v: int, parent: int) -> str:
        children = sorted(
            encode(u, v) for u in iter_bits(g.rows[v] & comp) if u != parent
        )
        return "(" + "".join(children) + ")"

    return min(encode(c, -1) for c in centers)


def forest_canonical_form(g: Graph) -> str:
    """Exact isomorphism invariant of a forest (centre-rooted AHU encoding)."""
    require_forest(g)
    return "".join(sorted(_tree_code(g, c) for c in component_masks(g)))


# text formats


def format_graph(g: Graph) -> str:
    """Serialize as `n m` followed by one `u v` line per edge."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str, label: Optional[str] = None) -> Graph:
    """Parse the graph file format; blank lines and `#` comments are ignored."""
    records: List[Sequence[str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.partition("#")[0].strip()
        if line:
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
            records.append(parts)
    if not records:
        raise ValueError("graph file has no header line")
    n, m = map(int, records[0])
    edges = [(int(u), int(v)) for u, v in records[1:]]
    if len(edges) != m:
        raise ValueError(f"header announces {m} edges, found {len(edges)}")
    g = Graph.from_edges(n, edges, label)
    if g.edge_count != m:
        raise ValueError("duplicate edges in graph file")
    return g


def read_graph_file(path: str) -> Graph:
    with open(path, encoding="utf-8") as f:
        return parse_graph_text(f.read(), label=f"file:{path}")


def graph_expression(g: Graph) -> str:
    """A re-parseable `edges:` expression for any graph."""
    return "edges:" + ":".join([str(g.vertex_count)] + [f"{u}-{v}" for u, v in g.edges()])
