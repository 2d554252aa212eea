from typing import Any, List

from application.reports import Report
from application.services import ReportRendererInterface


def _lines(value: Any, indent: int, key: str = "") -> List[str]:
    pad = "  " * indent
    prefix = f"{pad}{key}: " if key else pad
    if isinstance(value, dict):
        if not value:
            return [f"{prefix}{{}}"]
        lines = [f"{pad}{key}:"] if key else []
        for k, v in value.items():
            lines.extend(_lines(v, indent + 1 if key else indent, str(k)))
        return lines
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        lines = [f"{pad}{key}:"]
        for i, v in enumerate(value):
            lines.extend(_lines(v, indent + 1, f"[{i}]"))
        return lines
    if isinstance(value, list):
        return [f"{prefix}{' '.join(map(str, value)) if value else '-'}"]
    if value is None:
        return [f"{prefix}-"]
    return [f"{prefix}{value}"]


class TextReportAdapter(ReportRendererInterface):
    """Indented key: value listing of a report for terminals."""

    def render(self, report: Report) -> bytes:
        title = type(report).__name__
        lines = [title, "=" * len(title)]
        lines.extend(_lines(report.model_dump(mode="json"), 0))
        return ("\n".join(lines) + "\n").encode('utf-8')
