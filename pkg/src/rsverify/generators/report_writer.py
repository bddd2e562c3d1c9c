"""Report serialization and writing."""

import io
import json
import logging
from pathlib import Path
from typing import Optional

from rich.console import Console
from rich.table import Table

from ..core.errors import UsageError
from ..models.reports import ReportDocument, Status

logger = logging.getLogger(__name__)

FORMATS = ("text", "structured")

STATUS_STYLES = {
    Status.EQUAL: "green",
    Status.PAPER_DISCREPANCY: "yellow",
    Status.MISMATCH: "red",
    Status.ERROR: "bold red",
}


def _render_structured(doc: ReportDocument) -> bytes:
    payload = doc.model_dump(mode="json")
    return (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode()


def _render_text(doc: ReportDocument) -> bytes:
    console = Console(record=True, width=120, file=io.StringIO(), color_system=None)

    table = Table(title=f"rsverify {doc.version}")
    table.add_column("Path", style="cyan")
    table.add_column("(r,m,n)")
    table.add_column("D", justify="right")
    table.add_column("Mode")
    table.add_column("Status")
    table.add_column("Checks")
    table.add_column("ms", justify="right")
    for case in doc.cases:
        failed = [c.name for c in case.intermediate_checks if not c.passed]
        checks = f"{len(case.intermediate_checks) - len(failed)}/{len(case.intermediate_checks)}"
        if failed:
            checks += " (failed: " + ", ".join(failed) + ")"
        table.add_row(
            case.path.value,
            f"({case.r},{case.m},{case.n})",
            str(case.order),
            case.mode.value,
            f"[{STATUS_STYLES[case.status]}]{case.status.value}[/]",
            checks,
            str(case.millis),
        )
    console.print(table)

    for case in doc.cases:
        if case.error:
            console.print(f"{case.label()}: {case.error}")
        for mismatch in case.mismatches:
            console.print(f"{case.label()}: X^{mismatch.degree} differs by {mismatch.diff}")

    summary = doc.summary
    console.print(
        f"equal {summary.equal}  mismatch {summary.mismatch}  "
        f"paper_discrepancy {summary.paper_discrepancy}  error {summary.error}"
    )
    if doc.corpus_digest:
        console.print(f"corpus {doc.corpus_digest}")
    if doc.payload_digest:
        console.print(f"payload {doc.payload_digest}")
    return console.export_text().encode()


def emit_report(doc: ReportDocument, format: str = "text") -> bytes:
    """Serialize a report; the structured form is sorted JSON and stable across runs."""
    if format == "structured":
        return _render_structured(doc)
    if format == "text":
        return _render_text(doc)
    raise UsageError(f"Unknown report format {format!r}; expected one of {FORMATS}")


def parse_report(data: bytes) -> ReportDocument:
    """Inverse of the structured emitter."""
    return ReportDocument.model_validate_json(data)


class ReportWriter:
    """Writes reports to a file or returns them for the console."""

    def __init__(self, config):
        """Initialize the report writer."""
        self.config = config

    def write(self, doc: ReportDocument, format: Optional[str] = None, out: Optional[str] = None) -> bytes:
        """Serialize ``doc``; write it to ``out`` when a path is configured."""
        format = format or self.config.get("report", "format", default="text")
        out = out or self.config.get("report", "out")
        data = emit_report(doc, format)
        if out:
            path = Path(out)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(data)
            logger.info(f"Report written to {path}")
        return data
