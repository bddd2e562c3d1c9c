"""Summary notifications for verification runs."""

import logging
from typing import List, Optional

from rich.console import Console
from rich.panel import Panel

from ..models.reports import ReportSummary

logger = logging.getLogger(__name__)


class Notifier:
    """Show the outcome of a run as a panel."""

    def __init__(self, config, console: Optional[Console] = None):
        """Initialize the notifier."""
        self.config = config
        self.console = console or Console(stderr=True)

    def notify_completion(self, summary: ReportSummary, duration: float, regressions: Optional[List[str]] = None):
        """Display the status counts, colored by outcome."""
        failed = summary.failed or bool(regressions)
        lines = []
        if failed:
            lines.append("[bold red]✗ Verification failed[/bold red]")
        else:
            lines.append("[bold green]✓ Verification complete[/bold green]")

        lines.append("")
        lines.append(f"  • Equal: [green]{summary.equal}[/green]")
        lines.append(f"  • Mismatch: [red]{summary.mismatch}[/red]")
        lines.append(f"  • Paper discrepancy: [yellow]{summary.paper_discrepancy}[/yellow]")
        lines.append(f"  • Error: [red]{summary.error}[/red]")
        lines.append(f"  • Time taken: [yellow]{duration:.1f}s[/yellow]")

        if summary.paper_discrepancy:
            lines.append(f"\n[yellow]⚠ {summary.paper_discrepancy} displayed identities disagree with the computation[/yellow]")
        if regressions:
            lines.append(f"\n[red]{len(regressions)} regressions against the baseline[/red]")

        panel = Panel(
            '\n'.join(lines),
            border_style="red" if failed else "green",
            title="[bold]rsverify[/bold]",
            title_align="left"
        )
        self.console.print(panel)

    def notify_error(self, error_message: str):
        """Send an error notification."""
        panel = Panel(
            f"[bold red]Error:[/bold red] {error_message}",
            border_style="red",
            title="[bold]rsverify[/bold]"
        )
        self.console.print(panel)
