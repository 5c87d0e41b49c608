"""Homotopy types that are disjoint unions of wedges of spheres.

A `Component` is a wedge of spheres of dimension >= 1 stored as sorted
`(dimension, count)` pairs; `()` is a contractible point component. An S^0
summand never appears inside a component: it is an extra point component.
Multiplicities are arbitrary-precision ints at both levels.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from indcomplex.homology.chains import BettiVector, conn_H
from indcomplex.typing import T_Connectivity

Component = Tuple[Tuple[int, int], ...]
POINT: Component = ()

_Parts = Tuple[Tuple[Component, int], ...]


@dataclass(frozen=True)
class SphereSpace:
    parts: Optional[_Parts]
    """Sorted `(component, multiplicity)` pairs; None for the empty space."""

    def __post_init__(self) -> None:
        if self.parts is None:
            return
        if not self.parts:
            raise ValueError("a non-empty space needs at least one component")
        for comp, mult in self.parts:
            if mult <= 0:
                raise ValueError(f"non-positive component multiplicity {mult!r}")
            for d, count in comp:
                if d < 1 or count <= 0:
                    raise ValueError(f"non-canonical component entry {(d, count)!r}")

    @property
    def is_empty(self) -> bool:
        return self.parts is None

    @property
    def component_count(self) -> int:
        return sum(mult for _, mult in self.parts or ())

    @property
    def is_connected(self) -> bool:
        return self.component_count == 1

    @property
    def is_point(self) -> bool:
        return self.parts == ((POINT, 1),)

    def components(self) -> Iterator[Component]:
        """Components with repetition; avoid on huge multiplicities."""
        for comp, mult in self.parts or ():
            for _ in range(mult):
                yield comp

    def __str__(self) -> str:
        return format_space(self)


def _canonical(parts: Iterable[Tuple[Component, int]]) -> SphereSpace:
    merged: Counter[Component] = Counter()
    for comp, mult in parts:
        if mult:
            merged[comp] += mult
    return SphereSpace(tuple(sorted(merged.items())))


def _component(dims: Mapping[int, int]) -> Component:
    return tuple(sorted((d, c) for d, c in dims.items() if c))


# constructors


def empty() -> SphereSpace:
    return SphereSpace(None)


def point() -> SphereSpace:
    return SphereSpace(((POINT, 1),))


def wedge_of_spheres(dims: Mapping[int, int]) -> SphereSpace:
    """`∨ count·S^d`; the wedge of nothing is a point."""
    if any(d < 0 or c < 0 for d, c in dims.items()):
        raise ValueError(f"invalid sphere wedge {dict(dims)!r}")
    comp = _component({d: c for d, c in dims.items() if d > 0})
    return _canonical([(comp, 1), (POINT, dims.get(0, 0))])


def sphere(d: int, count: int = 1) -> SphereSpace:
    return wedge_of_spheres({d: count})


def disjoint_union(x: SphereSpace, y: SphereSpace) -> SphereSpace:
    if x.parts is None:
        return y
    if y.parts is None:
        return x
    return _canonical(x.parts + y.parts)


# operations


def _basepoint(parts: _Parts) -> Component:
    # the largest non-point component, else a point
    candidates = [comp for comp, _ in parts if comp]
    if not candidates:
        return POINT
    return max(candidates, key=lambda comp: (sum(c for _, c in comp), comp))


def _without_one(parts: _Parts, comp: Component) -> List[Tuple[Component, int]]:
    return [(c, m - 1 if c == comp else m) for c, m in parts]


def _fuse(*comps: Component) -> Component:
    dims: Counter[int] = Counter()
    for comp in comps:
        for d, c in comp:
            dims[d] += c
    return _component(dims)


def wedge(x: SphereSpace, y: SphereSpace) -> SphereSpace:
    """One component of each side fuse at the base point."""
    if x.parts is None or y.parts is None:
        raise EmptyWedgeError("wedge with the empty space is undefined")
    cx = _basepoint(x.parts)
    cy = _basepoint(y.parts)
    return _canonical(
        _without_one(x.parts, cx) + _without_one(y.parts, cy) + [(_fuse(cx, cy), 1)]
    )


def wedge_power(x: SphereSpace, n: int) -> SphereSpace:
    """The wedge of `n` copies of `x`, n >= 1."""
    if n < 1:
        raise ValueError(f"wedge power needs n >= 1, got {n!r}")
    if x.parts is None:
        raise EmptyWedgeError("wedge with the empty space is undefined")
    if x.is_connected:
        ((comp, _),) = x.parts
        return SphereSpace(((tuple((d, c * n) for d, c in comp), 1),))
    result = x
    for _ in range(n - 1):
        result = wedge(result, x)
    return result


def suspend(x: SphereSpace) -> SphereSpace:
    """Unreduced suspension; `Σ∅ = S^0` and c components contribute c - 1 circles."""
    if x.parts is None:
        return _canonical([(POINT, 2)])
    dims: Counter[int] = Counter()
    for comp, mult in x.parts:
        for d, c in comp:
            dims[d + 1] += c * mult
    dims[1] += x.component_count - 1
    return SphereSpace(((_component(dims), 1),))


def suspend_n(x: SphereSpace, r: int) -> SphereSpace:
    for _ in range(r):
        x = suspend(x)
    return x


def _join_connected(a: Component, b: Component) -> Component:
    if not a or not b:
        return POINT
    dims: Counter[int] = Counter()
    for da, ca in a:
        for db, cb in b:
            dims[da + db + 1] += ca * cb
    return _component(dims)


def _wedge_connected(pieces: Iterable[Tuple[SphereSpace, int]]) -> SphereSpace:
    dims: Counter[int] = Counter()
    for space, mult in pieces:
        ((comp, _),) = space.parts or ()
        for d, c in comp:
            dims[d] += c * mult
    return SphereSpace(((_component(dims), 1),))


def join(x: SphereSpace, y: SphereSpace) -> SphereSpace:
    """Join, evaluated by splitting off components.

    `(A ⊔ B) * C ≃ (A * C) ∨ (B * C) ∨ ΣC`, so a space with c components
    contributes one join per component and c - 1 copies of the suspension of
    the other side. Every piece is connected, so the wedge just adds up.
    """
    if x.parts is None:
        return y
    if y.parts is None:
        return x
    if x.component_count >= 2:
        pieces = [(join(SphereSpace(((comp, 1),)), y), mult) for comp, mult in x.parts]
        pieces.append((suspend(y), x.component_count - 1))
        return _wedge_connected(pieces)
    if y.component_count >= 2:
        return join(y, x)
    ((a, _),) = x.parts
    ((b, _),) = y.parts
    return SphereSpace(((_join_connected(a, b), 1),))


def join_all(spaces: Iterable[SphereSpace]) -> SphereSpace:
    result = empty()
    for s in spaces:
        result = join(result, s)
    return result


# invariants


def reduced_betti_of(x: SphereSpace) -> BettiVector:
    if x.parts is None:
        return BettiVector(((-1, 1),), "Z")
    ranks: Counter[int] = Counter()
    ranks[0] = x.component_count - 1
    for comp, mult in x.parts:
        for d, c in comp:
            ranks[d] += c * mult
    return BettiVector.from_dict(dict(ranks), "Z")


def connectivity(x: SphereSpace) -> T_Connectivity:
    return conn_H(reduced_betti_of(x))


def is_canonical(x: SphereSpace) -> bool:
    if x.parts is None:
        return True
    comps = [comp for comp, _ in x.parts]
    return (
        comps == sorted(set(comps))
        and all(d >= 1 for comp in comps for d, _ in comp)
        and all(comp == tuple(sorted(comp)) for comp in comps)
    )


def as_sphere_wedge(x: SphereSpace) -> Optional[Tuple[int, int]]:
    """`(n, k)` if `x` is `∨_n S^k` with n >= 1, else None."""
    if x.parts is None or x.is_point:
        return None
    if all(comp == POINT for comp, _ in x.parts):
        return (x.component_count - 1, 0)
    if x.is_connected:
        ((comp, _),) = x.parts
        if len(comp) == 1:
            ((k, n),) = comp
            return (n, k)
    return None


# rendering


def _format_component(comp: Component) -> str:
    if not comp:
        return "pt"
    terms = []
    for d, c in comp:
        if c <= 2:
            terms.extend([f"S^{d}"] * c)
        else:
            terms.append(f"{c}·S^{d}")
    return " v ".join(terms)


def format_space(x: SphereSpace) -> str:
    """Render as e.g. `S^2 v S^2 v 3·S^3` or `(S^1 v S^1) ⊔ (4·S^3)`."""
    if x.parts is None:
        return "∅"
    if x.is_connected:
        return _format_component(x.parts[0][0])
    terms = []
    for comp, mult in x.parts:
        text = f"({_format_component(comp)})"
        terms.extend([text] * mult if mult <= 2 else [f"{mult}×{text}"])
    return " ⊔ ".join(terms)


def space_to_json(x: SphereSpace, compact: bool = False) -> Union[str, Dict[str, Any]]:
    if x.parts is None:
        return "EMPTY"
    if compact:
        return {
            "components": [
                {str(d): c for d, c in comp} for comp in x.components()
            ]
        }
    return {
        "components": [
            [d for d, c in comp for _ in range(c)] for comp in x.components()
        ]
    }


def space_from_json(data: Union[str, Dict[str, Any]]) -> SphereSpace:
    if data == "EMPTY":
        return empty()
    if not isinstance(data, dict) or "components" not in data:
        raise ValueError(f"not a serialized space: {data!r}")
    parts = []
    for comp in data["components"]:
        if isinstance(comp, dict):
            dims = Counter({int(d): int(c) for d, c in comp.items()})
        else:
            dims = Counter(int(d) for d in comp)
        if dims.get(0):
            raise ValueError("S^0 summands are stored as point components")
        parts.append((_component(dims), 1))
    return _canonical(parts)


class EmptyWedgeError(ValueError):
    ...
