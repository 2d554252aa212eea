import csv
import json
from io import StringIO
from typing import Any, Dict, Iterator, Tuple

from application.reports import CorpusSummary, Report
from application.services import ReportRendererInterface


def flatten(value: Any, prefix: str = "") -> Iterator[Tuple[str, Any]]:
    """Dotted keys for nested dicts; lists stay whole as compact JSON."""
    if isinstance(value, dict):
        for k, v in value.items():
            yield from flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(value, list):
        yield prefix, json.dumps(value, separators=(",", ":"))
    else:
        yield prefix, value


class CsvReportAdapter(ReportRendererInterface):
    """A key,value table; corpus summaries get one row per extension instead."""

    def render(self, report: Report) -> bytes:
        buffer = StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if isinstance(report, CorpusSummary):
            writer.writerow(['file', 'group', 'subgroup', 'passed', 'failures', 'skipped'])
            for entry in report.entries:
                writer.writerow([
                    entry.file,
                    entry.group,
                    " ".join(map(str, entry.subgroup)),
                    "" if entry.passed is None else entry.passed,
                    "; ".join(entry.failures),
                    entry.skipped or "",
                ])
            return buffer.getvalue().encode('utf-8')

        writer.writerow(['key', 'value'])
        data: Dict[str, Any] = report.model_dump(mode="json")
        for key, value in flatten(data):
            writer.writerow([key, "" if value is None else value])
        return buffer.getvalue().encode('utf-8')
