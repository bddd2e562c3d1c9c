"""Command-line interface for the verification engine."""

import sys
import time
import shutil
import logging
from pathlib import Path
from typing import List, Optional
import argparse

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import Progress, SpinnerColumn, TextColumn, BarColumn, TimeElapsedColumn

from . import __version__
from .core.config import Config
from .core.corpus import load_baseline, load_corpus
from .core.errors import EngineError, UsageError
from .core.workflow import SUITES, VerificationWorkflow
from .generators.report_writer import FORMATS, ReportWriter
from .models.cases import CaseSpec, Mode, PathName
from .utils.notifier import Notifier

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

console = Console(stderr=True)
logger = logging.getLogger(__name__)


class VerificationCLI:
    """Command-line interface for verification runs."""

    def __init__(self):
        """Initialize the CLI."""
        self.config = None
        self.console = console

    def run(self, args: Optional[list] = None) -> int:
        """Run the CLI application and return the exit code."""
        parser = self._create_parser()
        parsed_args = parser.parse_args(args)

        self.config = Config(getattr(parsed_args, 'config', None))
        self._setup_logging(parsed_args.verbose)

        if parsed_args.command == 'verify':
            return self._run_verification(parsed_args)
        if parsed_args.command == 'init':
            return self._init_config(parsed_args.force)
        parser.print_help()
        return EXIT_USAGE

    def _create_parser(self) -> argparse.ArgumentParser:
        """Create argument parser."""
        parser = argparse.ArgumentParser(
            prog='rsverify',
            description='Verify Rankin-Selberg zeta integrals against L-functions, coefficient by coefficient',
            formatter_class=argparse.RawDescriptionHelpFormatter
        )

        parser.add_argument(
            '-v', '--verbose',
            action='store_true',
            help='Enable verbose logging'
        )
        parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')

        subparsers = parser.add_subparsers(dest='command', help='Commands')

        verify_parser = subparsers.add_parser('verify', help='Run a verification suite')
        verify_parser.add_argument('suite', choices=SUITES, help='Suite to run')
        verify_parser.add_argument('--r', type=int, help='Rank r of the covering group')
        verify_parser.add_argument('--m', type=int, help='m of the Speh-type representation')
        verify_parser.add_argument('--n', type=int, default=1, help='Degree of the cover (default: 1)')
        verify_parser.add_argument('--order', type=int, help='Truncation order D (default: from config)')
        verify_parser.add_argument('--mode', choices=[m.value for m in Mode], help='Parameter mode (default: from config)')
        verify_parser.add_argument('--seed', type=int, help='Seed for specialized parameters')
        verify_parser.add_argument(
            '--path',
            choices=[PathName.AUTO.value, PathName.JPSS.value, PathName.RANK1.value, PathName.CHAIN.value],
            default=PathName.AUTO.value,
            help='Evaluation route (default: auto)'
        )
        verify_parser.add_argument('--corpus', help="Corpus file, or 'default' for the packaged corpus")
        verify_parser.add_argument('--format', choices=FORMATS, help='Report format (default: from config)')
        verify_parser.add_argument('--out', help='Write the report to this file instead of stdout')
        verify_parser.add_argument('--perturb', action='store_true', help='Corrupt one oracle value (comparator check)')
        verify_parser.add_argument('-c', '--config', help='Path to config file (default: config.yaml)')
        verify_parser.add_argument('--baseline', help='Structured report to compare statuses against')
        verify_parser.add_argument('--no-timing', action='store_true', help='Record zero timings for byte-identical reports')

        init_parser = subparsers.add_parser('init', help='Initialize configuration file')
        init_parser.add_argument('--force', action='store_true', help='Overwrite an existing config.yaml')

        return parser

    def _setup_logging(self, verbose: bool):
        """Set up logging configuration."""
        level_name = str(self.config.get('logging', 'level', default='INFO')).upper()
        level = logging.DEBUG if verbose else getattr(logging, level_name, logging.INFO)

        logging.basicConfig(
            level=level,
            format="%(message)s",
            handlers=[RichHandler(console=self.console, rich_tracebacks=True)],
            force=True
        )

    def _init_config(self, force: bool) -> int:
        """Initialize configuration file."""
        config_path = Path('config.yaml')
        example_path = Path('config.example.yaml')

        if config_path.exists() and not force:
            self.console.print("[yellow]config.yaml already exists; use --force to overwrite[/yellow]")
            return EXIT_OK

        if example_path.exists():
            shutil.copy(example_path, config_path)
            self.console.print("[green]✓[/green] Created config.yaml from template")
        else:
            Config().save(str(config_path))
            self.console.print("[green]✓[/green] Created default config.yaml")
        return EXIT_OK

    def _apply_overrides(self, args):
        """Command-line flags take precedence over the config file."""
        if args.order is not None:
            self.config.set('engine', 'order', value=args.order)
        if args.mode:
            self.config.set('engine', 'mode', value=args.mode)
        if args.seed is not None:
            self.config.set('engine', 'seed', value=args.seed)
        if args.format:
            self.config.set('report', 'format', value=args.format)
        if args.out:
            self.config.set('report', 'out', value=args.out)
        if args.no_timing:
            self.config.set('report', 'include_timing', value=False)

    def _collect_cases(self, args):
        """Zeta-integral cases from the corpus or the single-case flags, all validated up front."""
        if args.suite not in ('theorem1', 'all'):
            return [], None
        if args.corpus:
            return load_corpus(args.corpus)
        if args.r is None and args.m is None:
            if args.suite == 'all':
                return load_corpus('default')
            raise UsageError("verify theorem1 needs --r and --m, or --corpus")
        if args.r is None or args.m is None:
            raise UsageError("Both --r and --m are required for a single case")
        case = CaseSpec(
            r=args.r,
            m=args.m,
            n=args.n,
            order=self.config.get('engine', 'order', default=6),
            mode=self.config.get('engine', 'mode', default='symbolic'),
            seed=self.config.get('engine', 'seed', default=0),
            path=args.path,
        )
        return [case], None

    def _run_verification(self, args) -> int:
        """Run a suite, write the report and map the outcome to an exit code."""
        self._apply_overrides(args)
        notifier = Notifier(self.config, self.console)
        try:
            cases, corpus_digest = self._collect_cases(args)
            baseline = load_baseline(args.baseline)
        except (UsageError, ValidationError) as e:
            self.console.print(f"[red]✗ Usage error:[/red] {e}")
            return EXIT_USAGE

        workflow = VerificationWorkflow(self.config)
        writer = ReportWriter(self.config)
        start_time = time.time()
        try:
            with Progress(
                SpinnerColumn(),
                TextColumn("[progress.description]{task.description}"),
                BarColumn(),
                TimeElapsedColumn(),
                console=self.console,
                transient=True
            ) as progress:
                task = progress.add_task(f"[cyan]Running {args.suite}...", total=len(cases) or None)

                def advance(report):
                    progress.update(task, advance=1, description=f"[cyan]{report.label()}: {report.status.value}")

                doc = workflow.run(args.suite, cases, corpus_digest, perturb=args.perturb, on_case=advance)
        except UsageError as e:
            self.console.print(f"[red]✗ Usage error:[/red] {e}")
            return EXIT_USAGE
        except EngineError as e:
            notifier.notify_error(str(e))
            return EXIT_FAILED
        except KeyboardInterrupt:
            self.console.print("\n[yellow]Interrupted by user[/yellow]")
            return EXIT_FAILED

        data = writer.write(doc)
        if not self.config.get('report', 'out'):
            sys.stdout.write(data.decode())
            sys.stdout.flush()

        regressions: List[str] = []
        if baseline is not None:
            regressions = workflow.compare_baseline(doc, baseline)

        notifier.notify_completion(doc.summary, time.time() - start_time, regressions)
        if doc.summary.failed or regressions:
            return EXIT_FAILED
        return EXIT_OK


def main():
    """Entry point for the CLI."""
    cli = VerificationCLI()
    sys.exit(cli.run())


if __name__ == '__main__':
    main()
