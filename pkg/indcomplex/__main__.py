import json
import sys
from contextlib import contextmanager
from typing import Any, Callable, Dict, Iterator, List, NoReturn, Optional, Tuple, TypeVar

import click

from indcomplex import __version__
from indcomplex.builders.jsonl import JsonLinesBuilder
from indcomplex.builders.summary import SummaryBuilder
from indcomplex.calculus.lines import closed_form_L, line_connectivity
from indcomplex.calculus.spheres import format_space, reduced_betti_of
from indcomplex.campaign import CampaignSpecError, load_campaign_spec, run_campaign
from indcomplex.complex import (
    Budget,
    FaceLimitExceeded,
    TimeLimitExceeded,
    dump_complex,
    face_census,
    independence_complex,
)
from indcomplex.config import Config, resolve_config
from indcomplex.domination import domination_result, predict_conn_lex_complete
from indcomplex.exprparser import ExprParserError, parse_graph_expr
from indcomplex.graph import (
    NotAForestError,
    format_graph,
    graph_expression,
    is_forest,
    random_forest,
)
from indcomplex.homology.chains import betti, betti_multi_field, format_conn
from indcomplex.log import logger
from indcomplex.verify import (
    ROUTES,
    RouteResult,
    UnknownHomotopyTypeError,
    VerificationReport,
    Verifier,
)

logger.setLevel("WARNING")

F = TypeVar("F", bound=Callable[..., Any])


def _echo_json(data: Any) -> None:
    click.echo(json.dumps(data, ensure_ascii=False, sort_keys=True, indent=2))


def _fail(kind: str, message: str, code: int, as_json: bool, **extra: Any) -> NoReturn:
    if as_json:
        _echo_json({"error": kind, "message": message, **extra})
    else:
        click.echo(f"error: {message}", err=True)
    sys.exit(code)


@contextmanager
def _reporting_errors(as_json: bool) -> Iterator[None]:
    """Map library exceptions onto exit codes 2 (input) and 3 (guard)."""
    try:
        yield
    except ExprParserError as e:
        _fail("parse", str(e), 2, as_json, position=e.position, text=e.text)
    except CampaignSpecError as e:
        _fail("campaign-spec", str(e), 2, as_json, line=e.lineno)
    except NotAForestError as e:
        _fail("not-a-forest", str(e), 2, as_json)
    except UnknownHomotopyTypeError as e:
        _fail("unknown-homotopy-type", str(e), 2, as_json)
    except FaceLimitExceeded as e:
        _fail("face-limit", str(e), 3, as_json, limit=e.limit, count=e.count)
    except TimeLimitExceeded as e:
        _fail("time-limit", str(e), 3, as_json, seconds=e.seconds)
    except (ValueError, OSError) as e:
        _fail("usage", str(e), 2, as_json)


def _parse_fields(values: Tuple[str, ...]) -> Optional[Tuple[int, ...]]:
    if not values:
        return None
    fields: List[int] = []
    for value in values:
        for item in value.split(","):
            try:
                fields.append(int(item))
            except ValueError:
                raise click.BadParameter(f"not a prime: {item!r}", param_hint="--field")
    return tuple(fields)


def _parse_wedge(value: Optional[str]) -> Optional[Tuple[int, int]]:
    if value is None:
        return None
    n, sep, k = value.partition(",")
    if not sep or not n.strip().isdigit() or not k.strip().isdigit():
        raise click.BadParameter(f"expected 'n,k', got {value!r}", param_hint="--wedge")
    return (int(n), int(k))


def _build_config(**flags: Any) -> Config:
    """Only flags the user actually passed override the defaults."""
    config = Config()
    for key, value in flags.items():
        if value is not None:
            config[key] = value  # type: ignore[literal-required]
    return config


field_option = click.option(
    "--field", "fields", multiple=True, help="prime field(s), repeatable or comma separated"
)


def computation_options(func: F) -> F:
    for option in reversed(
        [
            click.option("--max-faces", type=click.IntRange(min=1), help="face-count guard"),
            click.option(
                "--time-budget", type=click.FloatRange(min=0, min_open=True), help="seconds"
            ),
            click.option("--json", "as_json", is_flag=True, help="structured output"),
        ]
    ):
        func = option(func)
    return func


@click.group()
@click.version_option(__version__, prog_name="indcomplex")
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG")
def main(verbose: int) -> None:
    """Independence complexes of lexicographic products."""
    if verbose >= 2:
        logger.setLevel("DEBUG")
    elif verbose == 1:
        logger.setLevel("INFO")


@main.command()
@click.argument("expr", required=False)
@click.option("--random-forest", "random_n", type=click.IntRange(min=0), help="vertices")
@click.option("--density", default=0.7, show_default=True, type=click.FloatRange(0, 1))
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--json", "as_json", is_flag=True)
def gen(
    expr: Optional[str],
    random_n: Optional[int],
    density: float,
    seed: int,
    as_json: bool,
) -> None:
    """Emit a graph in the `n m` + edge-lines file format."""
    if (expr is None) == (random_n is None):
        raise click.UsageError("give either EXPR or --random-forest N")
    with _reporting_errors(as_json):
        if random_n is not None:
            g = random_forest(random_n, density, seed)
        else:
            assert expr is not None
            g = parse_graph_expr(expr)
    if as_json:
        _echo_json(
            {
                "vertices": g.vertex_count,
                "edges": [list(e) for e in g.edges()],
                "expr": graph_expression(g),
            }
        )
    else:
        click.echo(format_graph(g), nl=False)


@main.command("complex")
@click.argument("expr")
@click.option("--census", is_flag=True, help="print face counts per dimension")
@computation_options
def complex_(
    expr: str,
    census: bool,
    max_faces: Optional[int],
    time_budget: Optional[float],
    as_json: bool,
) -> None:
    """Print the facets of I(EXPR)."""
    config = _build_config(max_faces=max_faces, time_budget=time_budget)
    with _reporting_errors(as_json):
        budget = Budget.from_config(resolve_config(config))
        k = independence_complex(parse_graph_expr(expr), budget)
        counts = face_census(k, budget).as_dict()
    if as_json:
        _echo_json(
            {
                "vertex_count": k.vertex_count,
                "facets": [list(f) for f in k.facet_sets()],
                "census": {str(d): c for d, c in counts.items()},
            }
        )
    elif census:
        for d, c in counts.items():
            click.echo(f"{d} {c}")
    else:
        click.echo(dump_complex(k), nl=False)


@main.command()
@click.argument("expr")
@field_option
@computation_options
@click.option("--integral", is_flag=True, help="Smith normal form when fields disagree")
def homology(
    expr: str,
    fields: Tuple[str, ...],
    max_faces: Optional[int],
    time_budget: Optional[float],
    as_json: bool,
    integral: bool,
) -> None:
    """Reduced Betti vectors of I(EXPR) as JSON."""
    config = resolve_config(
        _build_config(
            max_faces=max_faces,
            time_budget=time_budget,
            fields=_parse_fields(fields),
            integral_fallback=integral or None,
        )
    )
    with _reporting_errors(as_json):
        budget = Budget.from_config(config)
        k = independence_complex(parse_graph_expr(expr), budget)
        data: Dict[str, Any] = {"instance": expr}
        if len(config["fields"]) == 1:
            data["betti"] = [betti(k, config["fields"][0], budget).to_json()]
        else:
            result = betti_multi_field(
                k, config["fields"], budget, config["integral_fallback"]
            )
            data["betti"] = [v.to_json() for v in result.vectors]
            data["fields_agree"] = result.agree
            if result.integral is not None:
                data["integral"] = result.integral.to_json()
    _echo_json(data)


def _echo_routes(report: VerificationReport) -> None:
    click.echo(f"G = {report.g_expr}, H = {report.h_expr}")
    for name in ROUTES:
        route = report.routes.get(name)
        if route is None:
            continue
        if route.space is not None:
            click.echo(f"{name}: {format_space(route.space)}")
        else:
            click.echo(f"{name}: i(G) = {route.i_number}")
        if route.betti is not None:
            click.echo(f"  betti: {route.betti}")
        if route.conn is not None:
            click.echo(f"  conn_H: {format_conn(route.conn)}")
    for notice in report.notices + report.guard_hits:
        click.echo(f"note: {notice}")


@main.command()
@click.option("--forest", "forest_expr", help="forest G (recursion route)")
@click.option("--H", "h_expr", help="graph H with known I(H)")
@click.option("--wedge", help="I(H) as a wedge of n k-spheres: 'n,k'")
@click.option("--m", type=click.IntRange(min=1), help="path length for the line formula")
@click.option("--n", type=click.IntRange(min=1))
@click.option("--k", type=click.IntRange(min=0))
@click.option("--trace", is_flag=True, help="log recursion branches")
@click.option("--unsafe", is_flag=True, help="domination predictor beyond forests")
@click.option("--json", "as_json", is_flag=True)
def predict(
    forest_expr: Optional[str],
    h_expr: Optional[str],
    wedge: Optional[str],
    m: Optional[int],
    n: Optional[int],
    k: Optional[int],
    trace: bool,
    unsafe: bool,
    as_json: bool,
) -> None:
    """Predict I(G ∘ H) without building the complex."""
    if trace:
        logger.setLevel("DEBUG")
    line_mode = (m, n, k) != (None, None, None)
    if line_mode and (None in (m, n, k) or forest_expr or h_expr or wedge):
        raise click.UsageError("--m/--n/--k go together and exclude --forest/--H/--wedge")
    if not line_mode and forest_expr is None:
        raise click.UsageError("give --forest G or --m/--n/--k")
    if line_mode:
        assert m is not None and n is not None and k is not None
        space, terms = closed_form_L(m, n, k)
        b = reduced_betti_of(space)
        route = RouteResult("closed_form", betti=b, space=space, terms=terms)
        route.conn = line_connectivity(m, k)
        report = VerificationReport(f"path:{m}", f"wedge:{n},{k}")
        report.routes["closed_form"] = route
    else:
        assert forest_expr is not None
        verifier = Verifier(_build_config(unsafe_predictors=unsafe or None))
        with _reporting_errors(as_json):
            g = parse_graph_expr(forest_expr)
            h = parse_graph_expr(h_expr) if h_expr is not None else None
            report = verifier.predict(g, h, _parse_wedge(wedge), forest_expr, h_expr)
        if report.guard_hits:
            _fail("guard", "; ".join(report.guard_hits), 3, as_json)
    if as_json:
        _echo_json(report.to_json(timings=False))
    else:
        _echo_routes(report)
    if not report.ok:
        sys.exit(4)


@main.command()
@click.argument("g_expr")
@click.argument("h_expr")
@click.option("--wedge", help="override I(H) with a wedge of n k-spheres: 'n,k'")
@field_option
@computation_options
@click.option("--integral", is_flag=True, help="Smith normal form when fields disagree")
@click.option("--unsafe", is_flag=True, help="domination predictor beyond forests")
@click.option("--no-timings", is_flag=True, help="omit timings for byte-stable output")
def verify(
    g_expr: str,
    h_expr: str,
    wedge: Optional[str],
    fields: Tuple[str, ...],
    max_faces: Optional[int],
    time_budget: Optional[float],
    as_json: bool,
    integral: bool,
    unsafe: bool,
    no_timings: bool,
) -> None:
    """Cross-check every applicable route on G ∘ H; exit 4 on disagreement."""
    config = _build_config(
        max_faces=max_faces,
        time_budget=time_budget,
        fields=_parse_fields(fields),
        integral_fallback=integral or None,
        unsafe_predictors=unsafe or None,
    )
    with _reporting_errors(as_json):
        verifier = Verifier(config)
        report = verifier.verify(
            parse_graph_expr(g_expr),
            parse_graph_expr(h_expr),
            _parse_wedge(wedge),
            g_expr,
            h_expr,
        )
    _echo_json(report.to_json(timings=not no_timings))
    if not report.ok:
        sys.exit(4)
    if report.guard_hits:
        sys.exit(3)


@main.command()
@click.argument("expr")
@click.option("--unsafe", is_flag=True, help="predict beyond forests")
@click.option("--json", "as_json", is_flag=True, help="structured errors")
def domination(expr: str, unsafe: bool, as_json: bool) -> None:
    """γ(G), i(G) with witnesses, and the connectivity of I(G ∘ K_n)."""
    with _reporting_errors(as_json):
        g = parse_graph_expr(expr)
        data = domination_result(g).to_json()
        if is_forest(g) or unsafe:
            data["conn_lex_complete"] = predict_conn_lex_complete(g, unsafe=unsafe)
            data["proven"] = is_forest(g)
    _echo_json(data)


@main.command()
@click.argument("spec_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--out", "output_dir", type=click.Path(file_okay=False))
@click.option("-j", "--jobs", type=click.IntRange(min=1))
@click.option("--seed", type=int)
@click.option("--max-faces", type=click.IntRange(min=1))
@click.option("--time-budget", type=click.FloatRange(min=0, min_open=True))
@click.option("--no-timings", is_flag=True)
@click.option("--json", "as_json", is_flag=True, help="structured errors")
def campaign(
    spec_file: str,
    output_dir: Optional[str],
    jobs: Optional[int],
    seed: Optional[int],
    max_faces: Optional[int],
    time_budget: Optional[float],
    no_timings: bool,
    as_json: bool,
) -> None:
    """Run a campaign file and write reports.jsonl and summary.txt."""
    config = _build_config(
        output_dir=output_dir,
        jobs=jobs,
        seed=seed,
        max_faces=max_faces,
        time_budget=time_budget,
        record_timings=False if no_timings else None,
    )
    with _reporting_errors(as_json):
        spec = load_campaign_spec(spec_file)
        result = run_campaign(spec, config)
        overlay = resolve_config(spec.settings)
        overlay.update(config)
        for builder_cls in (JsonLinesBuilder, SummaryBuilder):
            path = builder_cls(result, overlay).write()
            logger.info(f"wrote {str(path)!r}")
    failed = len(result.failed)
    click.echo(
        f"{spec.name}: {len(result.reports) - failed}/{len(result.reports)} passed, "
        f"{len(result.guarded)} guard hits"
    )
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
