import json
from typing import Any, Dict

from indcomplex.builders import Builder
from indcomplex.verify import VerificationReport


def dump_report(report: VerificationReport, index: int, timings: bool = True) -> str:
    data: Dict[str, Any] = {"index": index}
    data.update(report.to_json(timings=timings))
    return json.dumps(data, ensure_ascii=False, sort_keys=True)


class JsonLinesBuilder(Builder):
    """One JSON object per instance, in instance order."""

    name = "reports"

    def get_suffix(self) -> str:
        return ".jsonl"

    def text(self) -> str:
        timings = self.config["record_timings"]
        lines = [
            dump_report(report, i, timings)
            for i, report in enumerate(self.result.reports)
        ]
        return "".join(line + "\n" for line in lines)
