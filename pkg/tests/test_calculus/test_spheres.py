import math
import random

import pytest

from indcomplex.calculus.spheres import (
    EmptyWedgeError,
    SphereSpace,
    as_sphere_wedge,
    connectivity,
    disjoint_union,
    empty,
    format_space,
    is_canonical,
    join,
    join_all,
    point,
    reduced_betti_of,
    space_from_json,
    space_to_json,
    sphere,
    suspend,
    suspend_n,
    wedge,
    wedge_of_spheres,
    wedge_power,
)
from indcomplex.homology.chains import join_convolution

from ..utils import seeded_space

S0 = sphere(0)
S1 = sphere(1)
S2 = sphere(2)
THREE_POINTS = sphere(0, 2)

SAMPLES = [
    point(),
    S0,
    S1,
    THREE_POINTS,
    wedge_of_spheres({1: 2, 3: 1}),
    disjoint_union(S1, S2),
    disjoint_union(point(), sphere(2, 3)),
]


class TestConstruction:
    def test_invalid(self):
        with pytest.raises(ValueError):
            SphereSpace(())
        with pytest.raises(ValueError):
            SphereSpace(((((0, 1),), 1),))
        with pytest.raises(ValueError):
            wedge_of_spheres({-1: 1})

    def test_s0_is_two_points(self):
        assert S0.component_count == 2
        assert S0 == disjoint_union(point(), point())
        assert wedge_of_spheres({}) == point()

    def test_queries(self):
        assert empty().is_empty and not point().is_empty
        assert point().is_point and point().is_connected
        assert list(THREE_POINTS.components()) == [(), (), ()]
        assert all(is_canonical(x) for x in SAMPLES)


class TestOperations:
    def test_wedge(self):
        assert wedge(S1, S2) == wedge_of_spheres({1: 1, 2: 1})
        assert wedge(point(), S2) == S2
        # a wedge with S^0 adds one point component
        assert wedge(S0, S1) == disjoint_union(point(), S1)
        assert wedge(S0, S0) == THREE_POINTS
        with pytest.raises(EmptyWedgeError):
            wedge(empty(), S1)

    def test_wedge_power(self):
        assert wedge_power(S1, 3) == sphere(1, 3)
        assert wedge_power(S0, 2) == THREE_POINTS
        with pytest.raises(ValueError):
            wedge_power(S1, 0)

    def test_suspend(self):
        assert suspend(empty()) == S0
        assert suspend(point()) == point()
        assert suspend(S0) == S1
        assert suspend(THREE_POINTS) == sphere(1, 2)
        assert suspend(disjoint_union(S1, S2)) == wedge_of_spheres({1: 1, 2: 1, 3: 1})
        assert suspend_n(S0, 3) == sphere(3)

    def test_join(self):
        assert join(S1, S2) == sphere(4)
        assert join(S0, S0) == S1
        assert join(THREE_POINTS, S0) == sphere(1, 2)
        assert join(point(), THREE_POINTS) == point()
        assert join(empty(), S1) == S1
        assert join_all([S0, S0, S0]) == S2
        assert join_all([]) == empty()

    @pytest.mark.parametrize("x", SAMPLES)
    @pytest.mark.parametrize("y", SAMPLES)
    def test_join_commutes_and_matches_homology(self, x, y):
        assert join(x, y) == join(y, x)
        assert reduced_betti_of(join(x, y)).same_ranks(
            join_convolution(reduced_betti_of(x), reduced_betti_of(y))
        )

    @pytest.mark.parametrize("x", SAMPLES)
    def test_suspension_is_join_with_s0(self, x):
        assert suspend(x) == join(x, S0)


class TestInvariants:
    def test_betti(self):
        x = disjoint_union(sphere(1, 2), sphere(3, 4))
        assert reduced_betti_of(x).as_dict() == {0: 1, 1: 2, 3: 4}
        assert reduced_betti_of(THREE_POINTS).as_dict() == {0: 2}
        assert reduced_betti_of(empty()).as_dict() == {-1: 1}

    def test_connectivity(self):
        assert connectivity(S2) == 1
        assert connectivity(point()) == math.inf
        assert connectivity(empty()) == -2
        assert connectivity(disjoint_union(S1, S2)) == -1

    def test_as_sphere_wedge(self):
        assert as_sphere_wedge(THREE_POINTS) == (2, 0)
        assert as_sphere_wedge(S0) == (1, 0)
        assert as_sphere_wedge(sphere(3, 4)) == (4, 3)
        assert as_sphere_wedge(point()) is None
        assert as_sphere_wedge(empty()) is None
        assert as_sphere_wedge(wedge_of_spheres({1: 1, 2: 1})) is None
        assert as_sphere_wedge(disjoint_union(S1, S1)) is None


class TestFormatting:
    @pytest.mark.parametrize(
        "x, text",
        [
            (empty(), "∅"),
            (point(), "pt"),
            (S0, "(pt) ⊔ (pt)"),
            (sphere(0, 3), "4×(pt)"),
            (sphere(1, 2), "S^1 v S^1"),
            (sphere(3, 4), "4·S^3"),
            (wedge_of_spheres({2: 2, 3: 3}), "S^2 v S^2 v 3·S^3"),
            (disjoint_union(sphere(1, 2), sphere(3, 4)), "(S^1 v S^1) ⊔ (4·S^3)"),
        ],
    )
    def test_format(self, x, text):
        assert format_space(x) == text
        assert str(x) == text

    def test_json(self):
        x = disjoint_union(point(), sphere(1, 2))
        assert space_to_json(x) == {"components": [[], [1, 1]]}
        assert space_to_json(x, compact=True) == {"components": [{}, {"1": 2}]}
        assert space_to_json(empty()) == "EMPTY"
        assert space_from_json(space_to_json(x)) == x
        assert space_from_json(space_to_json(x, compact=True)) == x
        assert space_from_json("EMPTY") == empty()

    def test_json_rejects(self):
        with pytest.raises(ValueError):
            space_from_json({"components": [[0]]})
        with pytest.raises(ValueError):
            space_from_json("S^1")


class TestSeededSpaces:
    def test_join_is_associative(self):
        rng = random.Random(2024)
        for _ in range(200):
            x, y, z = (seeded_space(rng) for _ in range(3))
            assert join(join(x, y), z) == join(x, join(y, z)), (x, y, z)

    def test_join_betti_is_convolution(self):
        rng = random.Random(17)
        for _ in range(500):
            x, y = seeded_space(rng), seeded_space(rng)
            expected = join_convolution(reduced_betti_of(x), reduced_betti_of(y))
            assert reduced_betti_of(join(x, y)).same_ranks(expected), (x, y)
            assert is_canonical(join(x, y))
