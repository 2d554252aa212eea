from infrastructure.adapters.csv_report_adapter import CsvReportAdapter
from infrastructure.adapters.json_report_adapter import JsonReportAdapter
from infrastructure.adapters.pdf_report_adapter import PdfReportAdapter
from infrastructure.adapters.text_report_adapter import TextReportAdapter

RENDERERS = {
    "json": JsonReportAdapter,
    "text": TextReportAdapter,
    "csv": CsvReportAdapter,
    "pdf": PdfReportAdapter,
}


def renderer_for(fmt: str):
    return RENDERERS[fmt]()
