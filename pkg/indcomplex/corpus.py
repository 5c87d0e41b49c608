"""Exhaustive and random forest corpora."""

from collections import Counter
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterator, List, Tuple

import networkx as nx

from indcomplex.graph import Graph, random_forest

_Edges = Tuple[Tuple[int, int], ...]


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Integer partitions of `n` with parts in non-increasing order."""
    if n == 0:
        return ((),)
    result = []
    for first in range(n, 0, -1):
        for rest in partitions(n - first):
            if not rest or first >= rest[0]:
                result.append((first,) + rest)
    return tuple(result)


@lru_cache(maxsize=None)
def _tree_edges(order: int) -> Tuple[_Edges, ...]:
    if order < 1:
        raise ValueError(f"tree order must be positive, got {order!r}")
    # networkx does not generate the single-vertex tree
    if order == 1:
        return ((),)
    return tuple(
        tuple(sorted((min(u, v), max(u, v)) for u, v in tree.edges()))
        for tree in nx.nonisomorphic_trees(order)
    )


def nonisomorphic_trees(order: int) -> List[Graph]:
    return [
        Graph.from_edges(order, edges, f"tree:{order}#{i}")
        for i, edges in enumerate(_tree_edges(order))
    ]


def nonisomorphic_forests(n: int) -> Iterator[Graph]:
    """Every forest on exactly `n` vertices, once per isomorphism class."""
    for index, parts in enumerate(_forest_shapes(n)):
        rows: List[int] = []
        for order, tree in parts:
            offset = len(rows)
            local = [0] * order
            for u, v in _tree_edges(order)[tree]:
                local[u] |= 1 << v
                local[v] |= 1 << u
            rows.extend(row << offset for row in local)
        yield Graph(n, tuple(rows), f"forest:{n}#{index}")


def _forest_shapes(n: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    # a forest is a multiset of trees: choose tree indices with replacement
    # per distinct part size of a partition of n
    for partition in partitions(n):
        counts = sorted(Counter(partition).items(), reverse=True)
        choices = [
            [
                tuple((size, tree) for tree in combo)
                for combo in combinations_with_replacement(
                    range(len(_tree_edges(size))), count
                )
            ]
            for size, count in counts
        ]
        for picked in product(*choices):
            yield tuple(part for group in picked for part in group)


def forests_up_to(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from nonisomorphic_forests(n)


def random_forests(
    count: int, num_vertices: int, edge_density_hint: float, seed: int
) -> Iterator[Graph]:
    """`count` seeded random forests, seeds `seed, seed + 1, ...`."""
    for i in range(count):
        yield random_forest(num_vertices, edge_density_hint, seed + i)
