import argparse
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv
from rich.console import Console

from .api.builder import build_instance
from .api.models import Report, SearchSettings
from .api.schema import parse_instance
from .config import load_config
from .errors import CrossedBimoduleError, InstanceError, PreconditionError
from .fixtures import fixture_path, list_fixtures
from .utils.file_utils import write_report
from .utils.logger import VerificationLogger
from .verification import COMMANDS, VerificationContext, VerificationOrchestrator
from .verification.orchestrator import (
    EXIT_FAIL,
    EXIT_INPUT,
    EXIT_PASS,
    EXIT_PRECONDITION,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossed-bimod",
        description=(
            "Build crossed group categories from finite presentations "
            "and verify their structure."
        ),
    )
    parser.add_argument("command", choices=[*COMMANDS, "fixtures"])
    parser.add_argument(
        "--input", help="instance file or the name of a bundled fixture"
    )
    parser.add_argument("--output", help="write the report here instead of stdout")
    parser.add_argument("--zeta", help="primitive |G|-th root of unity for char-double")
    parser.add_argument(
        "--search-budget",
        type=int,
        help="enumerate exhaustively up to this many candidates",
    )
    parser.add_argument(
        "--seed", type=int, help="seed for sampling and generated objects"
    )
    parser.add_argument(
        "--timings",
        action="store_true",
        help="include per-check timings in the report",
    )
    parser.add_argument("--log-level", help="override the configured log level")
    return parser


def resolve_input(value: str) -> Path:
    path = Path(value)
    if path.is_file():
        return path
    return fixture_path(value)


def report_json(report: Report) -> dict:
    exclude = {"timings"} if report.timings is None else None
    return report.model_dump(mode="json", exclude=exclude)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    load_dotenv()
    args = build_parser().parse_args(argv)
    config = load_config()
    logger = VerificationLogger(config, args.log_level)
    console = Console(stderr=True)

    if args.command == "fixtures":
        sys.stdout.write("".join(f"{name}\n" for name in list_fixtures()))
        return EXIT_PASS
    if not args.input:
        console.print("[red]--input is required[/]")
        return EXIT_INPUT
    if args.search_budget is not None and args.search_budget <= 0:
        console.print("[red]--search-budget must be positive[/]")
        return EXIT_INPUT

    try:
        logger.log_command_start(args.command, args.input)
        instance = build_instance(parse_instance(resolve_input(args.input)))
        search = config["search"]
        budget = args.search_budget
        if budget is None:
            budget = search["exhaustive_limit"]
        settings = SearchSettings(
            exhaustive_limit=budget,
            sample_size=search["sample_size"],
            seed=args.seed if args.seed is not None else search["seed"],
        )
        zeta = instance.field.parse(args.zeta) if args.zeta is not None else None
        context = VerificationContext(
            instance, settings, config["generation"], zeta=zeta
        )
        orchestrator = VerificationOrchestrator(
            context,
            verification_logger=logger,
            console=console,
            timings=args.timings or config["reports"]["include_timings"],
        )
        report = orchestrator.run(args.command)
    except InstanceError as e:
        logger.log_error(str(e))
        console.print(f"[red]Input error:[/] {e}")
        return EXIT_INPUT
    except PreconditionError as e:
        logger.log_error(str(e))
        console.print(f"[yellow]Precondition unmet:[/] {e}")
        return EXIT_PRECONDITION
    except CrossedBimoduleError as e:
        logger.log_error(str(e))
        console.print(f"[red]Error:[/] {e}")
        return EXIT_FAIL

    text = write_report(
        report_json(report), args.output, indent=config["reports"]["indent"]
    )
    if args.output is None:
        sys.stdout.write(text)
    orchestrator.display(report)
    logger.log_summary(report.command, report.status, report.exit_code)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
