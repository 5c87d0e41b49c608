"""Exact domination and independent domination numbers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, Iterable, List, NamedTuple, Tuple

from indcomplex.complex import maximal_independent_sets
from indcomplex.graph import Graph, NotAForestError, component_masks, is_forest
from indcomplex.log import logger
from indcomplex.typing import VertexSet
from indcomplex.utils import bits_to_tuple, iter_bits, mask_of, popcount


class DominatingSet(NamedTuple):
    size: int
    witness: VertexSet


@dataclass(frozen=True)
class DominationResult:
    gamma: int
    i_number: int
    witness_gamma: VertexSet
    witness_i: VertexSet

    def to_json(self) -> Dict[str, Any]:
        return {
            "gamma": self.gamma,
            "i": self.i_number,
            "witness_gamma": sorted(self.witness_gamma),
            "witness_i": sorted(self.witness_i),
        }


def _closed_masks(g: Graph) -> List[int]:
    return [row | 1 << v for v, row in enumerate(g.rows)]


def is_dominating(g: Graph, members: Iterable[int]) -> bool:
    closed = _closed_masks(g)
    covered = 0
    for v in members:
        covered |= closed[v]
    return covered == g.full_mask


def is_independent(g: Graph, members: Iterable[int]) -> bool:
    mask = mask_of(members)
    return all(not g.rows[v] & mask for v in iter_bits(mask))


def _require_vertices(g: Graph) -> None:
    if g.vertex_count == 0:
        raise ValueError("domination is undefined on the empty graph")


def domination_number(g: Graph) -> DominatingSet:
    """Smallest dominating set, lexicographically first among the smallest."""
    _require_vertices(g)
    closed = _closed_masks(g)
    full = g.full_mask
    for size in range(1, g.vertex_count + 1):
        for combo in combinations(range(g.vertex_count), size):
            covered = 0
            for v in combo:
                covered |= closed[v]
            if covered == full:
                return DominatingSet(size, frozenset(combo))
    raise RuntimeError("V(G) always dominates")  # pragma: no cover


def independent_domination_number(g: Graph) -> DominatingSet:
    """Smallest maximal independent set, lexicographically first on ties."""
    _require_vertices(g)
    best = min(maximal_independent_sets(g), key=lambda m: (popcount(m), bits_to_tuple(m)))
    return DominatingSet(popcount(best), frozenset(iter_bits(best)))


def domination_result(g: Graph) -> DominationResult:
    gamma = domination_number(g)
    i_set = independent_domination_number(g)
    return DominationResult(gamma.size, i_set.size, gamma.witness, i_set.witness)


_INF = float("inf")


def independent_domination_tree_dp(g: Graph) -> int:
    """`i(G)` on a forest by a three-state dynamic program per rooted tree.

    States of a vertex v with respect to its subtree:
      in_set    v chosen,
      covered   v not chosen, dominated by a chosen child,
      waiting   v not chosen, no chosen child (its parent must be chosen).
    """
    _require_vertices(g)
    if not is_forest(g):
        raise NotAForestError(g)
    total = 0
    for comp in component_masks(g):
        root = (comp & -comp).bit_length() - 1
        parent = {root: -1}
        order = [root]
        for v in order:
            for u in iter_bits(g.rows[v]):
                if u not in parent:
                    parent[u] = v
                    order.append(u)
        state: Dict[int, Tuple[float, float, float]] = {}
        for v in reversed(order):
            children = [u for u in iter_bits(g.rows[v]) if parent.get(u) == v]
            in_set = 1 + sum(min(state[c][1], state[c][2]) for c in children)
            waiting = sum(state[c][1] for c in children)
            if children:
                base = sum(min(state[c][0], state[c][1]) for c in children)
                penalty = min(
                    state[c][0] - min(state[c][0], state[c][1]) for c in children
                )
                covered = base + penalty
            else:
                covered = _INF
            state[v] = (in_set, covered, waiting)
        total += int(min(state[root][0], state[root][1]))
    return total


def predict_conn_lex_complete(g: Graph, unsafe: bool = False) -> int:
    """Connectivity of `I(G ∘ K_n)` for any n >= 2: `i(G) - 2`."""
    _require_vertices(g)
    if not is_forest(g):
        if not unsafe:
            raise NotAForestError(g)
        logger.warning(
            "connectivity predictor evaluated on a non-forest, outside proven scope"
        )
        return independent_domination_number(g).size - 2
    return independent_domination_tree_dp(g) - 2


def meshulam_bound(g: Graph) -> int:
    """Lower bound `γ(G) - 2` on the connectivity of `I(G)` for forests."""
    return domination_number(g).size - 2
