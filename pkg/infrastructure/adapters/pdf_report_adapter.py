from io import BytesIO

from application.reports import Report
from application.services import ReportRendererInterface
from infrastructure.adapters.csv_report_adapter import flatten

CELL_WIDTH = 90


def _cell(value) -> str:
    text = "-" if value is None else str(value)
    return text if len(text) <= CELL_WIDTH else text[:CELL_WIDTH - 3] + "..."


class PdfReportAdapter(ReportRendererInterface):
    """
    One-page key/value table of a report, built with ReportLab.
    Documents are written with ``invariant=1`` so identical reports give identical bytes.
    """
    def __init__(self):
        try:
            from reportlab.lib import colors
            from reportlab.lib.styles import getSampleStyleSheet
            from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle
        except ImportError:
            self.pdf_enabled = False
            return
        self.pdf_enabled = True
        self._platypus = {
            "document": SimpleDocTemplate,
            "paragraph": Paragraph,
            "spacer": Spacer,
            "table": Table,
            "style": TableStyle,
        }
        self._styles = getSampleStyleSheet()
        self._grid = [
            ("FONTNAME", (0, 0), (-1, 0), "Helvetica-Bold"),
            ("LINEBELOW", (0, 0), (-1, 0), 0.5, colors.black),
            ("VALIGN", (0, 0), (-1, -1), "TOP"),
        ]

    def render(self, report: Report) -> bytes:
        if not self.pdf_enabled:
            raise RuntimeError("PDF reports need the reportlab package")
        p = self._platypus
        title = type(report).__name__
        rows = [["Field", "Value"]]
        rows += [[key, _cell(value)] for key, value in flatten(report.model_dump(mode="json"))]
        table = p["table"](rows, repeatRows=1)
        table.setStyle(p["style"](self._grid))

        buffer = BytesIO()
        document = p["document"](buffer, invariant=1, title=title)
        document.build([p["paragraph"](title, self._styles["Title"]), p["spacer"](1, 12), table])
        return buffer.getvalue()
