"""Cross-check every applicable route on one `(G, H)` instance."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Tuple

from indcomplex.calculus.forest import ForestLexRecursion, known_homotopy_type
from indcomplex.calculus.lines import ClosedFormTerm, closed_form_L
from indcomplex.calculus.spheres import (
    SphereSpace,
    as_sphere_wedge,
    format_space,
    reduced_betti_of,
    space_to_json,
    sphere,
)
from indcomplex.complex import Budget, ResourceLimitError, face_census, independence_complex
from indcomplex.config import Config, resolve_config
from indcomplex.domination import (
    independent_domination_number,
    predict_conn_lex_complete,
)
from indcomplex.exprparser import parse_graph_expr
from indcomplex.graph import (
    Graph,
    is_complete,
    is_forest,
    is_path,
    lex_product,
    require_forest,
)
from indcomplex.homology.chains import (
    BettiVector,
    IntegralHomology,
    betti_multi_field,
    conn_H,
    euler_consistent,
)
from indcomplex.log import current_instance, logger
from indcomplex.typing import T_Connectivity

ROUTES = ("brute", "recursion", "closed_form", "domination")


@dataclass
class RouteResult:
    name: str
    betti: Optional[BettiVector] = None
    space: Optional[SphereSpace] = None
    conn: Optional[T_Connectivity] = None
    vectors: List[BettiVector] = field(default_factory=list)
    """Per-field vectors of the brute-force route."""
    terms: List[ClosedFormTerm] = field(default_factory=list)
    i_number: Optional[int] = None
    i_brute: Optional[int] = None
    """`i(G)` by enumeration, next to the tree program's `i_number`."""
    integral: Optional[IntegralHomology] = None

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {}
        if self.vectors:
            data["betti"] = [v.to_json() for v in self.vectors]
        elif self.betti is not None:
            data["betti"] = self.betti.to_json()
        if self.space is not None:
            data["space"] = space_to_json(self.space)
            data["pretty"] = format_space(self.space)
        if self.terms:
            data["terms"] = [list(t) for t in self.terms]
        if self.i_number is not None:
            data["i"] = self.i_number
        if self.i_brute is not None:
            data["i_brute"] = self.i_brute
        if self.integral is not None:
            data["integral"] = self.integral.to_json()
        if self.conn is not None:
            data["conn_H"] = "inf" if self.conn == math.inf else self.conn
        return data


@dataclass
class VerificationReport:
    g_expr: str
    h_expr: str
    routes: Dict[str, RouteResult] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)
    """Milliseconds per route."""
    guard_hits: List[str] = field(default_factory=list)
    notices: List[str] = field(default_factory=list)
    fields_agree: Optional[bool] = None
    euler_ok: Optional[bool] = None

    @property
    def key(self) -> Tuple[str, str]:
        return (self.g_expr, self.h_expr)

    @property
    def agreement(self) -> Dict[str, bool]:
        """Pairwise verdicts, recomputed from the stored route results."""
        verdicts = {}
        names = [name for name in ROUTES if name in self.routes]
        for a, b in combinations(names, 2):
            verdicts[f"{a}~{b}"] = _agree(self.routes[a], self.routes[b])
        return verdicts

    @property
    def i_agrees(self) -> Optional[bool]:
        route = self.routes.get("domination")
        if route is None or route.i_brute is None:
            return None
        return route.i_number == route.i_brute

    @property
    def ok(self) -> bool:
        return (
            all(self.agreement.values())
            and self.fields_agree is not False
            and self.euler_ok is not False
            and self.i_agrees is not False
        )

    def disagreements(self) -> List[str]:
        bad = [pair for pair, verdict in self.agreement.items() if not verdict]
        if self.fields_agree is False:
            bad.append("fields")
        if self.euler_ok is False:
            bad.append("euler")
        if self.i_agrees is False:
            bad.append("i(G)")
        return bad

    def to_json(self, timings: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "instance": {"G": self.g_expr, "H": self.h_expr},
            "routes": {name: r.to_json() for name, r in self.routes.items()},
            "agreement": self.agreement,
            "fields_agree": self.fields_agree,
            "euler": self.euler_ok,
            "guard_hits": self.guard_hits,
            "notices": self.notices,
            "ok": self.ok,
        }
        if timings:
            data["timings_ms"] = self.timings
        return data


def _agree(a: RouteResult, b: RouteResult) -> bool:
    if a.space is not None and b.space is not None:
        return a.space == b.space
    if a.betti is not None and b.betti is not None:
        return a.betti.same_ranks(b.betti)
    return a.conn == b.conn


class Verifier:
    """Runs the routes that apply to an instance under one config."""

    def __init__(self, config: Optional[Config] = None) -> None:
        self.config = resolve_config(config)
        self._recursions: Dict[SphereSpace, ForestLexRecursion] = {}

    def verify_expr(
        self, g_expr: str, h_expr: str, wedge: Optional[Tuple[int, int]] = None
    ) -> VerificationReport:
        return self.verify(parse_graph_expr(g_expr), parse_graph_expr(h_expr), wedge)

    def verify(
        self,
        g: Graph,
        h: Graph,
        wedge: Optional[Tuple[int, int]] = None,
        g_expr: Optional[str] = None,
        h_expr: Optional[str] = None,
    ) -> VerificationReport:
        report = VerificationReport(g_expr or g.label or "", h_expr or h.label or "")
        token = current_instance.set(f"{report.g_expr} ∘ {report.h_expr}")
        try:
            self._run(report, g, h, wedge)
        finally:
            current_instance.reset(token)
        if report.ok:
            logger.info("all routes agree")
        else:
            logger.warning(f"disagreement: {', '.join(report.disagreements())}")
        return report

    def _timed(
        self, report: VerificationReport, name: str, func: Callable[[], Optional[RouteResult]]
    ) -> None:
        start = time.perf_counter()
        try:
            result = func()
        except ResourceLimitError as e:
            report.guard_hits.append(f"{name}: {e}")
            return
        finally:
            report.timings[name] = round((time.perf_counter() - start) * 1000, 3)
        if result is not None:
            report.routes[name] = result

    def predict(
        self,
        g: Graph,
        h: Optional[Graph] = None,
        wedge: Optional[Tuple[int, int]] = None,
        g_expr: Optional[str] = None,
        h_expr: Optional[str] = None,
    ) -> VerificationReport:
        """Prediction routes only; G must be a forest and `I(H)` known."""
        require_forest(g)
        if h is None and wedge is None:
            raise UnknownHomotopyTypeError("pass --H or --wedge n,k")
        report = VerificationReport(
            g_expr or g.label or "", h_expr or (h.label if h else None) or "-"
        )
        t_h = self._homotopy_of_h(h, wedge)
        if t_h is None:
            raise UnknownHomotopyTypeError(
                f"homotopy type of I({report.h_expr}) is unknown: pass --wedge n,k"
            )
        token = current_instance.set(f"{report.g_expr} ∘ {report.h_expr}")
        try:
            self._predictions(report, g, h, t_h)
        finally:
            current_instance.reset(token)
        return report

    @staticmethod
    def _homotopy_of_h(
        h: Optional[Graph], wedge: Optional[Tuple[int, int]]
    ) -> Optional[SphereSpace]:
        if wedge is not None:
            n, k = wedge
            if n < 1 or k < 0:
                raise ValueError(f"--wedge needs n >= 1 and k >= 0, got {n},{k}")
            return sphere(k, n)
        assert h is not None
        return known_homotopy_type(h)

    def _run(
        self,
        report: VerificationReport,
        g: Graph,
        h: Graph,
        wedge: Optional[Tuple[int, int]],
    ) -> None:
        budget = Budget.from_config(self.config)
        self._timed(report, "brute", lambda: self._brute(report, g, h, budget))
        if not is_forest(g):
            report.notices.append("G is not a forest: prediction routes skipped")
            return
        t_h = self._homotopy_of_h(h, wedge)
        if t_h is None:
            report.notices.append("homotopy type of I(H) unknown: pass --wedge n,k")
        self._predictions(report, g, h, t_h)

    def _predictions(
        self,
        report: VerificationReport,
        g: Graph,
        h: Optional[Graph],
        t_h: Optional[SphereSpace],
    ) -> None:
        if t_h is not None and t_h.is_empty:
            report.notices.append("H has no vertices: prediction routes skipped")
            return
        if t_h is not None:
            found = t_h
            self._timed(report, "recursion", lambda: self._recursion(g, found))
            if is_path(g) and (nk := as_sphere_wedge(t_h)) is not None:
                m = g.vertex_count
                self._timed(report, "closed_form", lambda: self._closed_form(m, *nk))
        if h is not None and is_complete(h) and h.vertex_count >= 2 and g.vertex_count:
            self._timed(report, "domination", lambda: self._domination(g))

    def _brute(
        self, report: VerificationReport, g: Graph, h: Graph, budget: Budget
    ) -> RouteResult:
        k = independence_complex(lex_product(g, h), budget)
        result = betti_multi_field(
            k, self.config["fields"], budget, self.config["integral_fallback"]
        )
        report.fields_agree = result.agree
        report.euler_ok = euler_consistent(face_census(k, budget), result.vectors[0])
        b = result.vectors[0]
        return RouteResult(
            "brute",
            betti=b,
            conn=conn_H(b),
            vectors=result.vectors,
            integral=result.integral,
        )

    def _recursion(self, g: Graph, t_h: SphereSpace) -> RouteResult:
        if t_h not in self._recursions:
            self._recursions[t_h] = ForestLexRecursion(t_h)
        space = self._recursions[t_h](g)
        b = reduced_betti_of(space)
        return RouteResult("recursion", betti=b, space=space, conn=conn_H(b))

    def _closed_form(self, m: int, n: int, k: int) -> RouteResult:
        space, terms = closed_form_L(m, n, k)
        b = reduced_betti_of(space)
        return RouteResult("closed_form", betti=b, space=space, conn=conn_H(b), terms=terms)

    def _domination(self, g: Graph) -> RouteResult:
        conn = predict_conn_lex_complete(g, unsafe=self.config["unsafe_predictors"])
        i_brute = independent_domination_number(g).size
        if i_brute != conn + 2:
            logger.warning(f"tree program gives i(G) = {conn + 2}, enumeration {i_brute}")
        return RouteResult("domination", conn=conn, i_number=conn + 2, i_brute=i_brute)


class UnknownHomotopyTypeError(ValueError):
    ...
