import time

import pytest

from indcomplex.complex import (
    Budget,
    FaceLimitExceeded,
    ResourceLimitError,
    SimplicialComplex,
    TimeLimitExceeded,
    count_independent_sets,
    disjoint_union_complex,
    dump_complex,
    face_census,
    faces_of_dimension,
    independence_complex,
    join_complex,
    load_complex,
    maximal_independent_sets,
    neighborhood_decomposition,
    pushout_decomposition,
    reduced_euler_characteristic,
    simplices,
    void_complex,
)
from indcomplex.graph import (
    complete,
    complete_join,
    cycle,
    disjoint_union,
    empty_graph,
    lex_product,
    path,
    random_forest,
    random_graph,
    star,
)
from indcomplex.utils import bits_to_tuple

from .utils import (
    face_counts_by_subsets,
    independent_sets_by_subsets,
    maximal_by_subsets,
    seeded_graph,
)


class TestSimplicialComplex:
    def test_void(self):
        k = independence_complex(empty_graph(0))
        assert k.void and k == void_complex()
        assert k.dimension == -2
        assert face_census(k).total == 0
        assert reduced_euler_characteristic(k) == -1

    def test_only_empty_face_normalizes_to_void(self):
        assert SimplicialComplex.from_facets(3, [()]) == void_complex()

    def test_antichain_enforced(self):
        with pytest.raises(ValueError, match="antichain"):
            SimplicialComplex(3, (0b1, 0b11))
        with pytest.raises(ValueError, match="out of vertex range"):
            SimplicialComplex(1, (0b10,))

    def test_from_facets_sorts(self):
        k = SimplicialComplex.from_facets(4, [(2, 3), (0, 1), (0, 1)])
        assert k.facet_sets() == ((0, 1), (2, 3))

    def test_faces_are_lexicographic(self):
        k = independence_complex(cycle(5))
        assert k.faces(0) == [(0,), (1,), (2,), (3,), (4,)]
        assert k.faces(1) == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
        assert k.faces(-1) == [()]
        assert faces_of_dimension(k, 2) == []
        with pytest.raises(ValueError):
            k.faces(-2)

    def test_dump_and_load(self):
        k = independence_complex(path(4))
        assert dump_complex(k) == "0 2\n0 3\n1 3\n"
        assert load_complex(dump_complex(k)) == k
        assert dump_complex(void_complex()) == "VOID\n"
        assert load_complex("VOID\n") == void_complex()


class TestIndependenceComplex:
    @pytest.mark.parametrize(
        "g",
        [path(5), cycle(6), star(5), complete(4), lex_product(path(3), cycle(4))]
        + [random_graph(8, 0.35, seed) for seed in range(6)],
        ids=lambda g: g.label,
    )
    def test_facets_against_subsets(self, g):
        k = independence_complex(g)
        assert k.facet_sets() == tuple(maximal_by_subsets(g))
        assert face_census(k).as_dict() == face_counts_by_subsets(g)
        assert simplices(k) == {s for s in independent_sets_by_subsets(g) if s}

    def test_complete_graph_is_points(self):
        k = independence_complex(complete(4))
        assert k.facet_sets() == ((0,), (1,), (2,), (3,))
        assert k.dimension == 0

    def test_edgeless_graph_is_simplex(self):
        k = independence_complex(empty_graph(3))
        assert k.facet_sets() == ((0, 1, 2),)
        assert reduced_euler_characteristic(k) == 0

    def test_count_independent_sets(self):
        # Fibonacci numbers for paths
        assert [count_independent_sets(path(m)) for m in range(1, 7)] == [
            2, 3, 5, 8, 13, 21,
        ]
        assert count_independent_sets(cycle(5)) == 11
        assert count_independent_sets(empty_graph(20), limit=100) == 101

    def test_maximal_sets_within(self):
        sets = maximal_independent_sets(path(5), within=0b11100)
        assert [bits_to_tuple(s) for s in sets] == [(2, 4), (3,)]
        assert maximal_independent_sets(path(3), within=0) == [0]

    def test_lex_layers(self):
        # each layer of G ∘ H is a copy of H
        k = independence_complex(lex_product(empty_graph(1), cycle(5)))
        assert k == independence_complex(cycle(5))


class TestGuards:
    def test_face_limit(self):
        with pytest.raises(FaceLimitExceeded) as excinfo:
            independence_complex(empty_graph(20), Budget(max_faces=1000))
        assert excinfo.value.limit == 1000
        assert excinfo.value.count > 1000

    def test_face_limit_on_census(self):
        k = independence_complex(empty_graph(12))
        with pytest.raises(FaceLimitExceeded):
            face_census(k, Budget(max_faces=100))

    def test_time_limit(self):
        budget = Budget(seconds=1e-9)
        budget.deadline = 0.0
        with pytest.raises(TimeLimitExceeded):
            budget.check_time()

    def test_count_stops_once_saturated(self):
        assert count_independent_sets(random_forest(150, 0.7, 1), limit=1000) == 1001

    def test_count_checks_the_deadline(self):
        budget = Budget(seconds=1.0)
        budget.deadline = 0.0
        with pytest.raises(TimeLimitExceeded):
            count_independent_sets(random_graph(60, 0.1, 7), budget=budget)

    def test_large_forest_is_refused_promptly(self):
        start = time.perf_counter()
        with pytest.raises(ResourceLimitError):
            independence_complex(random_forest(150, 0.7, 1), Budget(5_000_000, 1.0))
        assert time.perf_counter() - start < 10

    def test_from_config(self):
        budget = Budget.from_config({"max_faces": 7, "time_budget": None})
        assert budget.max_faces == 7 and budget.deadline is None


class TestDecompositions:
    def test_neighborhood_decomposition(self):
        g = path(4)
        i_minus_v, i_minus_open, i_minus_closed = neighborhood_decomposition(g, 1)
        assert i_minus_v.facet_sets() == ((0, 2), (0, 3))
        assert i_minus_open.facet_sets() == ((1, 3),)
        assert i_minus_closed.facet_sets() == ((3,),)
        # I(G) is the union of the two pieces along the third
        union = set(simplices(i_minus_v)) | set(simplices(i_minus_open))
        assert union == set(simplices(independence_complex(g)))
        assert set(simplices(i_minus_v)) & set(simplices(i_minus_open)) == set(
            simplices(i_minus_closed)
        )

    def test_pushout_on_lex_product(self):
        g = lex_product(path(3), cycle(4))
        # drop the first layer on one side and the second on the other
        u_h = g.full_mask & ~0b1111
        u_k = g.full_mask & ~0b11110000
        k_h, k_k, k_hk = pushout_decomposition(g, u_h, u_k)
        union = set(simplices(k_h)) | set(simplices(k_k))
        assert union == set(simplices(independence_complex(g)))
        assert set(simplices(k_h)) & set(simplices(k_k)) == set(simplices(k_hk))

    def test_pushout_preconditions(self):
        g = path(3)
        with pytest.raises(ValueError, match="cover"):
            pushout_decomposition(g, 0b001, 0b010)
        with pytest.raises(ValueError, match="misses an edge"):
            pushout_decomposition(g, 0b011, 0b100)


class TestJoins:
    def test_join_is_independence_complex_of_union(self):
        a, b = path(3), cycle(4)
        joined = join_complex(independence_complex(a), independence_complex(b))
        assert joined == independence_complex(disjoint_union(a, b))

    def test_disjoint_union_is_independence_complex_of_join(self):
        a, b = path(3), cycle(4)
        union = disjoint_union_complex(independence_complex(a), independence_complex(b))
        assert union == independence_complex(complete_join(a, b))

    def test_void_is_neutral(self):
        k = independence_complex(path(3))
        assert join_complex(void_complex(), k) == k
        assert disjoint_union_complex(k, void_complex()) == k

    def test_join_guard(self):
        k = independence_complex(empty_graph(8))
        with pytest.raises(FaceLimitExceeded):
            join_complex(k, k, Budget(max_faces=1000))


def first_fast(seeds, fast=20):
    return [s if s < fast else pytest.param(s, marks=pytest.mark.slow) for s in seeds]


class TestSeededIdentities:
    @pytest.mark.parametrize("seed", first_fast(range(200)))
    def test_neighborhood_decomposition(self, seed):
        g = seeded_graph(seed, 12)
        faces = set(simplices(independence_complex(g)))
        for v in range(g.vertex_count):
            i_minus_v, i_minus_open, i_minus_closed = neighborhood_decomposition(g, v)
            a, b = set(simplices(i_minus_v)), set(simplices(i_minus_open))
            assert a | b == faces, v
            assert a & b == set(simplices(i_minus_closed)), v

    @pytest.mark.parametrize("seed", first_fast(range(100)))
    def test_join_and_union(self, seed):
        a, b = seeded_graph(2 * seed, 8), seeded_graph(2 * seed + 1, 8)
        k_a, k_b = independence_complex(a), independence_complex(b)
        assert join_complex(k_a, k_b) == independence_complex(disjoint_union(a, b))
        assert disjoint_union_complex(k_a, k_b) == independence_complex(
            complete_join(a, b)
        )
