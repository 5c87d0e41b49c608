"""Homotopy type of `I(G ∘ H)` for forests G, by splitting at a leaf."""

from typing import Dict, Optional

from indcomplex.calculus.lines import complete_homotopy, cycle_homotopy
from indcomplex.calculus.spheres import (
    SphereSpace,
    disjoint_union,
    empty,
    join,
    join_all,
    point,
    sphere,
    suspend,
    suspend_n,
    wedge,
    wedge_power,
)
from indcomplex.graph import (
    Graph,
    closed_neighborhood,
    component_masks,
    delete_vertices,
    find_leaf_pair,
    forest_canonical_form,
    induced_subgraph,
    is_complete,
    is_cycle,
    is_forest,
    is_star,
    path,
    require_forest,
)
from indcomplex.log import logger


class ForestLexRecursion:
    """Evaluate `I(G ∘ H)` for forests G given `T_H ≃ I(H)`.

    Results are memoized on the canonical form of each subforest, so one
    instance can be reused across a whole corpus with the same `T_H`.
    """

    def __init__(self, t_h: SphereSpace) -> None:
        if t_h.is_empty:
            raise ValueError("I(H) must be non-empty (H needs a vertex)")
        self.t_h = t_h
        self._memo: Dict[str, SphereSpace] = {}

    def __call__(self, g: Graph) -> SphereSpace:
        require_forest(g)
        return self._solve(g)

    def _solve(self, g: Graph) -> SphereSpace:
        key = forest_canonical_form(g)
        if (found := self._memo.get(key)) is not None:
            return found
        result = self._split(g)
        self._memo.setdefault(key, result)
        logger.debug(f"forest {key or '∅'} -> {result}")
        return result

    def _split(self, g: Graph) -> SphereSpace:
        n = g.vertex_count
        if n == 0:
            return empty()
        if n == 1:
            return self.t_h
        components = component_masks(g)
        if len(components) > 1:
            return join_all(self._solve(induced_subgraph(g, c)[0]) for c in components)
        if is_star(g):
            return disjoint_union(self.t_h, join_all([self.t_h] * (n - 1)))
        pair = find_leaf_pair(g)
        assert pair is not None, "a tree on two or more vertices has a leaf"
        w, v = pair
        r1 = self._solve(delete_vertices(g, closed_neighborhood(g, v))[0])
        r2 = self._solve(delete_vertices(g, (v, w))[0])
        return wedge(suspend(r1), wedge(join(r1, self.t_h), join(r2, self.t_h)))


def forest_lex_homotopy(g: Graph, t_h: SphereSpace) -> SphereSpace:
    return ForestLexRecursion(t_h)(g)


def forest_independence_homotopy(g: Graph) -> SphereSpace:
    """`I(G)` for a forest G (`G ∘ K_1 = G`): a point or a single sphere."""
    return forest_lex_homotopy(g, point())


def known_homotopy_type(h: Graph) -> Optional[SphereSpace]:
    """`I(H)` for forests, cycles and complete graphs; None otherwise."""
    if h.vertex_count == 0:
        return empty()
    if is_forest(h):
        return forest_independence_homotopy(h)
    if is_cycle(h):
        return cycle_homotopy(h.vertex_count)
    if is_complete(h):
        return complete_homotopy(h.vertex_count)
    return None


def line_recursion_combination(r: int, n: int, k: int) -> SphereSpace:
    """`ΣR_r ∨ n·Σ^{k+1}R_r ∨ n·Σ^{k+1}R_{r+1}` with `R_j = I(L_j ∘ H)`.

    Must equal `I(L_{r+3} ∘ H)` when `I(H) ≃ ∨_n S^k`.
    """
    recursion = ForestLexRecursion(sphere(k, n))
    r_0 = recursion(path(r))
    r_1 = recursion(path(r + 1))
    return wedge(
        suspend(r_0),
        wedge(
            wedge_power(suspend_n(r_0, k + 1), n),
            wedge_power(suspend_n(r_1, k + 1), n),
        ),
    )
