"""Shared type aliases."""

from typing import Dict, FrozenSet, Tuple, Union
from typing_extensions import Literal, TypeAlias

VertexSet: TypeAlias = FrozenSet[int]
"""Vertex ids of one specific graph."""

Face: TypeAlias = Tuple[int, ...]
"""A face as its ascending vertex ids; `()` is the empty face."""

T_Field = Union[int, Literal["Q"]]
"""A prime characteristic, or `"Q"` for the rationals."""

T_Connectivity = Union[int, float]
"""An integer connectivity, or `math.inf` when all reduced homology vanishes."""

T_Ranks = Dict[int, int]

T_Route = Literal["brute", "recursion", "closed_form", "domination"]
