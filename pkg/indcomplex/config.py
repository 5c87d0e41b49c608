from __future__ import annotations

from typing import Optional, Tuple
from typing_extensions import TypedDict

from indcomplex.utils import frozendict


class Config(TypedDict, total=False):
    """Config for computations and campaigns. Default to {ref}`.default_config`."""

    ### Computation Config ###

    max_faces: int
    """Upper bound on the total number of faces of a complex.

    Exceeding it raises `FaceLimitExceeded` before any matrix is built.

    Default: `5_000_000`

    CLI Flags: `--max-faces`
    """

    time_budget: Optional[float]
    """Seconds allowed per instance. None disables the budget.

    Default: `600.0`

    CLI Flags: `--time-budget`
    """

    fields: Tuple[int, ...]
    """Prime fields the Betti vectors are computed over.

    Default: `(2, 1000003)`

    CLI Flags: `--field`
    """

    integral_fallback: bool
    """Run Smith normal form over Z when the prime fields disagree.

    Default: `False`

    CLI Flags: `--integral`
    """

    unsafe_predictors: bool
    """Allow the domination predictor on graphs that are not forests.

    Default: `False`

    CLI Flags: `--unsafe`
    """

    ### Campaign Config ###

    jobs: int
    """Worker-pool width. Default: `1`. CLI Flags: `-j`, `--jobs`"""

    seed: int
    """Base seed for random corpora. Default: `0`. CLI Flags: `--seed`"""

    record_timings: bool
    """Include per-route timings in reports.

    Default: `True`

    CLI Flags: `--no-timings`
    """

    output_dir: str
    """Report output directory.

    Default: `'reports'`.

    CLI Flags: `-o`, `--out`
    """

    write_encoding: str
    """File encoding to write. Default to 'utf-8'."""


default_config: Config = frozendict(
    Config(
        max_faces=5_000_000,
        time_budget=600.0,
        fields=(2, 1000003),
        integral_fallback=False,
        unsafe_predictors=False,
        jobs=1,
        seed=0,
        record_timings=True,
        output_dir="reports",
        write_encoding="utf-8",
    )
)

# check total key for default_config
assert default_config.keys() == Config.__annotations__.keys()


def resolve_config(config: Optional[Config] = None) -> Config:
    """Overlay `config` on a fresh copy of the defaults."""
    resolved = Config(**default_config)  # type: ignore[misc]
    if config:
        resolved.update(config)
    if resolved["max_faces"] <= 0:
        raise ValueError(f"max_faces must be positive, got {resolved['max_faces']!r}")
    return resolved
