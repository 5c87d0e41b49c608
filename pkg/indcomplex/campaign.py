"""Verification campaigns over parameter grids.

A campaign file is plain `key = value` text. Keys before the first
`[section]` are global settings; every section is one grid::

    name = acceptance
    fields = 2, 1000003
    jobs = 4

    [line]
    m = 1..6
    h = cycle:3..7, complete:2..4

    [forest]
    vertices = 1..9
    h = complete:2..3

    [random-forest]
    count = 20
    vertices = 12
    density = 0.7
    h = complete:2

    [pairs]
    g = star:4, path:4
    h = lex(path:1,cycle:5)
    wedge = 1,1
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple, Union

from indcomplex.config import Config, resolve_config
from indcomplex.corpus import forests_up_to, random_forests
from indcomplex.exprparser import ExprParserError, parse_graph_expr
from indcomplex.graph import graph_expression
from indcomplex.log import current_instance, logger
from indcomplex.utils import parse_int_range
from indcomplex.verify import VerificationReport, Verifier

_section_re = re.compile(r"^\[([a-z-]+)\]$")
_range_expr_re = re.compile(r"^([a-z]+):(\d+)\.\.(\d+)$")

GRID_KINDS: Dict[str, Tuple[str, ...]] = {
    "line": ("m", "h", "wedge"),
    "forest": ("vertices", "h", "wedge"),
    "random-forest": ("count", "vertices", "density", "seed", "h", "wedge"),
    "pairs": ("g", "h", "wedge"),
}
GLOBAL_KEYS = ("name", "fields", "max_faces", "time_budget", "jobs", "seed")


class Instance(NamedTuple):
    index: int
    g_expr: str
    h_expr: str
    wedge: Optional[Tuple[int, int]]


@dataclass
class Grid:
    kind: str
    lineno: int
    params: Dict[str, str] = field(default_factory=dict)

    def require(self, key: str) -> str:
        if key not in self.params:
            raise CampaignSpecError(f"[{self.kind}] grid needs {key!r}", self.lineno)
        return self.params[key]

    def ints(self, key: str) -> List[int]:
        try:
            values = parse_int_range(self.require(key))
        except ValueError as e:
            raise CampaignSpecError(f"{key}: {e}", self.lineno) from None
        if not values:
            raise CampaignSpecError(f"{key}: empty range", self.lineno)
        return values

    def exprs(self, key: str) -> List[str]:
        values = split_expr_list(self.require(key))
        if not values:
            raise CampaignSpecError(f"{key}: empty expression list", self.lineno)
        for expr in values:
            try:
                parse_graph_expr(expr)
            except ExprParserError as e:
                raise CampaignSpecError(f"{key}: {e.msg} in {expr!r}", self.lineno) from None
        return values

    def wedge(self) -> Optional[Tuple[int, int]]:
        if "wedge" not in self.params:
            return None
        n, _, k = self.params["wedge"].partition(",")
        try:
            return (int(n), int(k))
        except ValueError:
            raise CampaignSpecError("wedge must read 'n,k'", self.lineno) from None

    def pairs(self, seed: int, forced: bool = False) -> Iterator[Tuple[str, str]]:
        """`(G, H)` expressions; a grid `seed` applies unless `forced`."""
        hs = self.exprs("h")
        if self.kind == "line":
            gs = [f"path:{m}" for m in self.ints("m")]
        elif self.kind == "forest":
            vertices = self.ints("vertices")
            gs = [
                graph_expression(f)
                for f in forests_up_to(max(vertices), min(vertices))
                if f.vertex_count in vertices
            ]
        elif self.kind == "random-forest":
            density = float(self.params.get("density", "0.7"))
            grid_seed = seed if forced else int(self.params.get("seed", seed))
            count = self.ints("count")[0]
            gs = [
                graph_expression(f)
                for n in self.ints("vertices")
                for f in random_forests(count, n, density, grid_seed)
            ]
        else:
            gs = self.exprs("g")
        for g in gs:
            for h in hs:
                yield (g, h)


@dataclass
class CampaignSpec:
    name: str = "campaign"
    settings: Config = field(default_factory=lambda: Config())
    grids: List[Grid] = field(default_factory=list)

    def instances(self, seed: Optional[int] = None) -> List[Instance]:
        """Expand every grid; an explicit `seed` beats grid and file seeds."""
        if not self.grids:
            raise CampaignSpecError("campaign has no grids", 0)
        forced = seed is not None
        if seed is None:
            seed = self.settings.get("seed", 0)
        result: List[Instance] = []
        for grid in self.grids:
            before = len(result)
            wedge = grid.wedge()
            for g, h in grid.pairs(seed, forced):
                result.append(Instance(len(result), g, h, wedge))
            if len(result) == before:
                raise CampaignSpecError(f"[{grid.kind}] grid is empty", grid.lineno)
        return result


def split_expr_list(text: str) -> List[str]:
    """Split on top-level commas and expand `family:a..b` ranges."""
    items, depth, current = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            items.append("".join(current).strip())
            current = []
            continue
        depth += {"(": 1, ")": -1}.get(ch, 0)
        current.append(ch)
    items.append("".join(current).strip())
    result = []
    for item in filter(None, items):
        if match := _range_expr_re.match(item):
            family, lo, hi = match.group(1), int(match.group(2)), int(match.group(3))
            result.extend(f"{family}:{i}" for i in range(lo, hi + 1))
        else:
            result.append(item)
    return result


def parse_campaign_spec(text: str) -> CampaignSpec:
    spec = CampaignSpec()
    settings: Dict[str, object] = {}
    grid: Optional[Grid] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.partition("#")[0].strip()
        if not line:
            continue
        if match := _section_re.match(line):
            kind = match.group(1)
            if kind not in GRID_KINDS:
                raise CampaignSpecError(f"unknown grid kind {kind!r}", lineno)
            grid = Grid(kind, lineno)
            spec.grids.append(grid)
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise CampaignSpecError(f"expected 'key = value', got {raw!r}", lineno)
        if grid is not None:
            if key not in GRID_KINDS[grid.kind]:
                raise CampaignSpecError(f"unknown key {key!r} for [{grid.kind}]", lineno)
            grid.params[key] = value
            continue
        if key not in GLOBAL_KEYS:
            raise CampaignSpecError(f"unknown setting {key!r}", lineno)
        try:
            settings[key] = _parse_setting(key, value)
        except ValueError as e:
            raise CampaignSpecError(f"{key}: {e}", lineno) from None
    spec.name = str(settings.pop("name", spec.name))
    spec.settings = Config(**settings)  # type: ignore[misc]
    try:
        resolve_config(spec.settings)
    except ValueError as e:
        raise CampaignSpecError(str(e), 0) from None
    return spec


def _parse_setting(key: str, value: str) -> object:
    if key == "name":
        return value
    if key == "fields":
        fields = tuple(parse_int_range(value))
        if len(fields) < 2:
            raise ValueError("at least two prime fields are required")
        return fields
    if key == "time_budget":
        return None if value.lower() == "none" else float(value)
    number = int(value.replace("_", ""))
    if number <= 0 and key != "seed":
        raise ValueError("must be positive")
    return number


def load_campaign_spec(path: Union[str, Path]) -> CampaignSpec:
    return parse_campaign_spec(Path(path).read_text(encoding="utf-8"))


@dataclass
class CampaignResult:
    spec: CampaignSpec
    reports: List[VerificationReport]

    @property
    def failed(self) -> List[VerificationReport]:
        return [r for r in self.reports if not r.ok]

    @property
    def guarded(self) -> List[VerificationReport]:
        return [r for r in self.reports if r.guard_hits]

    @property
    def exit_code(self) -> int:
        if self.failed:
            return 4
        if self.guarded:
            return 3
        return 0


def _run_instance(args: Tuple[Instance, Config]) -> VerificationReport:
    instance, config = args
    token = current_instance.set(f"#{instance.index}")
    try:
        verifier = Verifier(config)
        return verifier.verify(
            parse_graph_expr(instance.g_expr),
            parse_graph_expr(instance.h_expr),
            instance.wedge,
            instance.g_expr,
            instance.h_expr,
        )
    finally:
        current_instance.reset(token)


def run_campaign(spec: CampaignSpec, config: Optional[Config] = None) -> CampaignResult:
    """Run every instance; output order follows the instance index only."""
    resolved = resolve_config(spec.settings)
    if config:
        resolved.update(config)
    instances = spec.instances(config.get("seed") if config else None)
    jobs = resolved["jobs"]
    logger.info(f"campaign {spec.name!r}: {len(instances)} instances, {jobs} jobs")
    tasks = [(instance, resolved) for instance in instances]
    if jobs <= 1:
        verifier = Verifier(resolved)
        reports = [
            verifier.verify(
                parse_graph_expr(i.g_expr), parse_graph_expr(i.h_expr), i.wedge, i.g_expr, i.h_expr
            )
            for i in instances
        ]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_instance, tasks))
    indexed = sorted(zip((i.index for i in instances), reports))
    return CampaignResult(spec, [report for _, report in indexed])


class CampaignSpecError(ValueError):
    def __init__(self, msg: str, lineno: int) -> None:
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)
        self.lineno = lineno
