from typing import List

from indcomplex.builders import Builder
from indcomplex.verify import ROUTES, VerificationReport


def _status(report: VerificationReport) -> str:
    if not report.ok:
        return "FAIL"
    if report.guard_hits:
        return "GUARD"
    return "ok"


class SummaryBuilder(Builder):
    """Plain-text table of every instance, then totals and disagreements.

    Timings are never written here, so the summary is byte-stable.
    """

    name = "summary"

    def get_suffix(self) -> str:
        return ".txt"

    def text(self) -> str:
        reports = self.result.reports
        rows = [("#", "G", "H", "routes", "status")]
        for i, report in enumerate(reports):
            routes = ",".join(name for name in ROUTES if name in report.routes)
            rows.append((str(i), report.g_expr, report.h_expr, routes or "-", _status(report)))
        widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
        lines: List[str] = [f"campaign: {self.result.spec.name}", ""]
        for row in rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        failed = self.result.failed
        lines.append("")
        lines.append(
            f"total {len(reports)}  passed {len(reports) - len(failed)}"
            f"  failed {len(failed)}  guard {len(self.result.guarded)}"
        )
        lines.append("disagreements:")
        if not failed:
            lines.append("  (none)")
        for report in failed:
            lines.append(
                f"  {report.g_expr} ∘ {report.h_expr}: {', '.join(report.disagreements())}"
            )
        return "\n".join(lines) + "\n"
