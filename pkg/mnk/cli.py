"""Command-line interface."""

import argparse
import asyncio
import json
import logging
import sys
from typing import Optional, Sequence

from pydantic import BaseModel, ValidationError

from mnk.config import Settings, get_settings
from mnk.models import REPORT_MODELS, Command, ExitCode, JobResultModel, JobSpec, OutputFormat
from mnk.render import render_markdown
from mnk.runner import USER_ERRORS, JobRunner, load_jobs, run_batch

logger = logging.getLogger(__name__)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=None,
        help="report format (default from MNK_OUTPUT_FORMAT)",
    )
    p.add_argument("--log-level", default=None, help="logging level on stderr")


def _add_matrix(p: argparse.ArgumentParser, twist: bool = True) -> None:
    p.add_argument(
        "--matrix",
        required=True,
        help="inline JSON rows, I<n>, @file.json or a scenario id",
    )
    p.add_argument("--root-select", type=int, default=None, help="index of the root > 1")
    if twist:
        p.add_argument(
            "--twist",
            default="untwisted",
            help="untwisted | rational:<p/q> | lee | transcendental",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mnk",
        description="Morse-Novikov cohomology of torus mapping tori, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="twisted cohomology dimensions")
    _add_matrix(compute)
    compute.add_argument("--audit", action="store_true", help="embed the gamma blocks")
    compute.add_argument("--oracle", action="store_true", help="embed the cellular cross-check")
    compute.add_argument("--alpha-digits", type=int, default=None, help="decimals of alpha")
    _add_common(compute)

    novikov = sub.add_parser("novikov", help="Novikov Betti numbers and torsion")
    _add_matrix(novikov, twist=False)
    _add_common(novikov)

    oracle = sub.add_parser("oracle", help="cellular cochains against the closed form")
    _add_matrix(oracle)
    _add_common(oracle)

    lcs = sub.add_parser("verify-lcs", help="Tricerri identity battery")
    _add_common(lcs)

    batch = sub.add_parser("batch", help="run a JSON list of jobs concurrently")
    batch.add_argument("file", help="JSON file with a list of job objects")
    batch.add_argument("--concurrency", type=int, default=None, help="concurrent jobs")
    _add_common(batch)

    schema = sub.add_parser("schema", help="print the JSON schemas of the report models")
    schema.add_argument("--model", choices=sorted(REPORT_MODELS), default=None)
    schema.add_argument("--log-level", default=None, help=argparse.SUPPRESS)
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    """Build a JobSpec from parsed arguments."""
    return JobSpec(
        command=Command(args.command),
        matrix=getattr(args, "matrix", None),
        twist=getattr(args, "twist", "untwisted"),
        output_format=args.format,
        audit=getattr(args, "audit", False),
        oracle=getattr(args, "oracle", False),
        alpha_digits=getattr(args, "alpha_digits", None),
        root_select=getattr(args, "root_select", None),
    )


def emit(report: BaseModel, fmt: OutputFormat) -> None:
    if fmt is OutputFormat.MARKDOWN:
        sys.stdout.write(render_markdown(report))
    else:
        sys.stdout.write(report.model_dump_json(indent=2) + "\n")


def _configure_logging(settings: Settings, level: Optional[str]) -> None:
    logging.basicConfig(
        level=getattr(logging, (level or settings.log_level).upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def _fail(message: str, code: ExitCode) -> int:
    print(f"mnk: error: {message}", file=sys.stderr)
    return int(code)


def _schemas(name: Optional[str]) -> int:
    if name is not None:
        doc = REPORT_MODELS[name].model_json_schema()
    else:
        doc = {key: model.model_json_schema() for key, model in REPORT_MODELS.items()}
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return int(ExitCode.OK)


def _single(job: JobSpec, fmt: OutputFormat, runner: JobRunner) -> int:
    result: JobResultModel = runner.execute(job)
    if result.report is None:
        return _fail(result.error or "job failed", ExitCode(result.exit_code))
    emit(result.report, fmt)
    return result.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = get_settings()
    _configure_logging(settings, args.log_level)

    if args.command == "schema":
        return _schemas(args.model)

    runner = JobRunner(settings)
    if args.command == "batch":
        try:
            jobs = load_jobs(args.file)
        except USER_ERRORS as e:
            return _fail(f"cannot load batch {args.file}: {e}", ExitCode.USER_ERROR)
        report = asyncio.run(run_batch(jobs, args.concurrency, runner))
        emit(report, OutputFormat(args.format or settings.output_format))
        return report.exit_code

    try:
        job = job_from_args(args)
    except ValidationError as e:
        detail = "; ".join(err["msg"] for err in e.errors())
        return _fail(detail, ExitCode.USER_ERROR)
    fmt = job.output_format or OutputFormat(settings.output_format)
    return _single(job, fmt, runner)
