import json

from application.reports import Report
from application.services import ReportRendererInterface


class JsonReportAdapter(ReportRendererInterface):
    """Deterministic JSON: model field order, two-space indent, trailing newline."""

    def render(self, report: Report) -> bytes:
        text = json.dumps(report.model_dump(mode="json"), indent=2)
        return (text + "\n").encode('utf-8')
