"""Brute-force oracles shared by the test modules."""

import random
from itertools import combinations
from pathlib import Path
from typing import Dict, List, Tuple

from indcomplex.calculus.spheres import (
    SphereSpace,
    disjoint_union,
    empty,
    wedge_of_spheres,
)
from indcomplex.graph import Graph, random_graph

DATA = Path(__file__).parent
GRAPHDATA = DATA / "graphdata"
CAMPAIGNDATA = DATA / "campaigndata"
GOLDEN = DATA / "golden"


def seeded_graph(seed: int, max_n: int, min_n: int = 1) -> Graph:
    """A random graph whose size and density are drawn from `seed`."""
    rng = random.Random(seed)
    n = rng.randint(min_n, max_n)
    return random_graph(n, rng.uniform(0.1, 0.7), rng.randrange(1 << 30))


def seeded_space(rng: random.Random) -> SphereSpace:
    """A few components, each a small wedge of spheres, sometimes empty."""
    if rng.random() < 0.1:
        return empty()
    x = wedge_of_spheres({d: rng.randint(0, 2) for d in range(4)})
    for _ in range(rng.randint(0, 2)):
        x = disjoint_union(x, wedge_of_spheres({rng.randint(1, 3): rng.randint(0, 2)}))
    return x


def independent_sets_by_subsets(g: Graph) -> List[Tuple[int, ...]]:
    """Every independent set, the empty one included, by checking all subsets."""
    edges = set(g.edges())
    found = []
    for size in range(g.vertex_count + 1):
        for combo in combinations(range(g.vertex_count), size):
            if not any((u, v) in edges for u, v in combinations(combo, 2)):
                found.append(combo)
    return found


def maximal_by_subsets(g: Graph) -> List[Tuple[int, ...]]:
    sets = [frozenset(s) for s in independent_sets_by_subsets(g)]
    maximal = [s for s in sets if not any(s < t for t in sets)]
    return sorted(tuple(sorted(s)) for s in maximal)


def is_forest_by_union_find(g: Graph) -> bool:
    parent: Dict[int, int] = {v: v for v in range(g.vertex_count)}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def face_counts_by_subsets(g: Graph) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for s in independent_sets_by_subsets(g):
        counts[len(s) - 1] = counts.get(len(s) - 1, 0) + 1
    return counts
