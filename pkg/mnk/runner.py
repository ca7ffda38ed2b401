"""Job runner: resolves inputs, calls the library and maps failures to exit codes."""

import asyncio
import json
import logging
import re
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ValidationError

from cohomology.cell_oracle import build_mapping_torus_complex, cross_check
from cohomology.errors import InvalidMonodromy, InvariantViolation
from cohomology.lcs_forms import verify_generators, verify_tricerri
from cohomology.mapping_torus import MappingTorus, TwistSpec, build
from cohomology.mv_engine import twisted_cohomology, vanishing_check
from cohomology.novikov import novikov_invariants, pajitnov_consistency

from mnk.config import Settings, get_settings
from mnk.models import (
    BatchReportModel,
    Command,
    ExitCode,
    JobResultModel,
    JobSpec,
)
from mnk.reports import cohomology_report, lcs_report, novikov_report, oracle_report
from mnk.scenarios import get_scenario_by_id

logger = logging.getLogger(__name__)

_IDENTITY = re.compile(r"^I(\d+)$")

USER_ERRORS = (ValueError, TypeError, ValidationError, OSError)


def resolve_matrix(value: Union[str, list[list[int]]]) -> list[list[int]]:
    """Turn ``I<n>``, ``@path``, a scenario id or inline JSON into integer rows."""
    if isinstance(value, list):
        return value
    text = value.strip()
    m = _IDENTITY.match(text)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise InvalidMonodromy("Identity shorthand needs n >= 1")
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    scenario = get_scenario_by_id(text)
    if scenario is not None:
        return scenario["matrix"]
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8")
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidMonodromy(f"Matrix is not valid JSON: {e}") from e
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InvalidMonodromy("Matrix must be a JSON list of rows")
    if any(not isinstance(e, int) or isinstance(e, bool) for r in rows for e in r):
        raise InvalidMonodromy("Matrix entries must be integers")
    return rows


class JobRunner:
    """Runs one JobSpec against the library."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def _mapping_torus(self, job: JobSpec) -> MappingTorus:
        assert job.matrix is not None
        return build(
            resolve_matrix(job.matrix),
            root_select=job.root_select,
            max_degree=self.settings.kronecker_max_degree,
        )

    def run(self, job: JobSpec) -> BaseModel:
        """Produce the report for ``job``; library errors propagate."""
        logger.info(f"Running {job.command.value} job")
        if job.command is Command.VERIFY_LCS:
            return lcs_report(verify_tricerri(), verify_generators())

        mt = self._mapping_torus(job)
        tw = TwistSpec.parse(job.twist)
        if job.command is Command.NOVIKOV:
            return novikov_report(mt, novikov_invariants(mt), pajitnov_consistency(mt))
        if job.command is Command.ORACLE:
            report = twisted_cohomology(mt, tw)
            cochains = build_mapping_torus_complex(mt, tw)
            return oracle_report(mt, cross_check(mt, tw), list(cochains.dims), report)

        digits = job.alpha_digits or self.settings.alpha_digits
        report = twisted_cohomology(mt, tw, audit=job.audit, alpha_digits=digits)
        oracle = cross_check(mt, tw) if job.oracle else None
        return cohomology_report(mt, report, vanishing_check(report), oracle)

    def execute(self, job: JobSpec, index: int = 0) -> JobResultModel:
        """Run ``job`` and classify the outcome as an exit code."""
        try:
            report = self.run(job)
        except InvariantViolation as e:
            logger.error(f"Job {index} violated an invariant: {e}", exc_info=True)
            return JobResultModel(
                index=index,
                command=job.command,
                exit_code=int(ExitCode.INVARIANT_VIOLATION),
                error=str(e),
            )
        except USER_ERRORS as e:
            logger.error(f"Job {index} rejected: {e}", exc_info=True)
            return JobResultModel(
                index=index, command=job.command, exit_code=int(ExitCode.USER_ERROR), error=str(e)
            )
        code = ExitCode.OK if report_passed(report) else ExitCode.INVARIANT_VIOLATION
        logger.info(f"Job {index} finished with exit code {int(code)}")
        return JobResultModel(index=index, command=job.command, exit_code=int(code), report=report)


def report_passed(report: BaseModel) -> bool:
    """Whether every check embedded in ``report`` succeeded."""
    checks = [
        getattr(report, name)
        for name in ("vanishing", "oracle", "consistency")
        if getattr(report, name, None) is not None
    ]
    return getattr(report, "success", True) and all(c.success for c in checks)


async def run_batch(
    jobs: list[JobSpec],
    concurrency: Optional[int] = None,
    runner: Optional[JobRunner] = None,
) -> BatchReportModel:
    """Run independent jobs on worker threads; results keep the input order."""
    runner = runner or JobRunner()
    semaphore = asyncio.Semaphore(concurrency or runner.settings.batch_concurrency)

    async def _one(index: int, job: JobSpec) -> JobResultModel:
        async with semaphore:
            return await asyncio.to_thread(runner.execute, job, index)

    results = await asyncio.gather(*(_one(i, job) for i, job in enumerate(jobs)))
    exit_code = max((r.exit_code for r in results), default=int(ExitCode.OK))
    return BatchReportModel(exit_code=exit_code, jobs=list(results))


def load_jobs(path: Union[str, Path]) -> list[JobSpec]:
    """Read a JSON list of JobSpec objects."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, list):
        raise ValueError("Batch file must contain a JSON list of jobs")
    return [JobSpec.model_validate(item) for item in data]
