"""Report generation."""

from .report_writer import ReportWriter, emit_report, parse_report

__all__ = ["ReportWriter", "emit_report", "parse_report"]
