"""Pydantic models for job requests and report documents.

Exact scalars cross this boundary as strings ("3/2", "t^3 + t^2 + t - 1",
"alpha^2 - 1"), never as binary floats.
"""

from enum import Enum
from typing import Annotated, Any, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from cohomology.mapping_torus import TwistSpec


# ========================================
# Enums
# ========================================

class Command(str, Enum):
    """Report-producing commands."""
    COMPUTE = "compute"
    NOVIKOV = "novikov"
    ORACLE = "oracle"
    VERIFY_LCS = "verify-lcs"


class OutputFormat(str, Enum):
    """Output format for report documents."""
    JSON = "json"
    MARKDOWN = "markdown"


class ExitCode(int, Enum):
    """Process exit codes."""
    OK = 0
    USER_ERROR = 2
    INVARIANT_VIOLATION = 3


# ========================================
# Job Models
# ========================================

MatrixInput = Union[str, list[list[int]]]


class JobSpec(BaseModel):
    """A single computation request."""
    command: Command = Field(default=Command.COMPUTE, description="Command to run")
    matrix: Optional[MatrixInput] = Field(
        default=None,
        description="Monodromy: nested integer lists, inline JSON, I<n>, @file or a scenario id",
    )
    twist: str = Field(
        default="untwisted",
        description="untwisted | rational:<p/q> | lee | transcendental",
    )
    output_format: Optional[OutputFormat] = Field(default=None, description="Overrides settings")
    audit: bool = Field(default=False, description="Embed the gamma block matrices")
    oracle: bool = Field(default=False, description="Embed the cellular cross-check")
    alpha_digits: Optional[int] = Field(default=None, ge=1, le=200, description="Overrides settings")
    root_select: Optional[int] = Field(default=None, ge=0, description="Index of the root > 1")

    @field_validator("twist")
    @classmethod
    def _valid_twist(cls, value: str) -> str:
        TwistSpec.parse(value)
        return value

    @field_validator("matrix")
    @classmethod
    def _square_matrix(cls, value: Optional[MatrixInput]) -> Optional[MatrixInput]:
        if isinstance(value, list):
            if not value or any(len(row) != len(value) for row in value):
                raise ValueError("matrix must be a nonempty square integer matrix")
        return value

    @model_validator(mode="after")
    def _matrix_required(self) -> "JobSpec":
        if self.command is not Command.VERIFY_LCS and self.matrix is None:
            raise ValueError(f"command {self.command.value} needs a matrix")
        return self


# ========================================
# Shared Report Pieces
# ========================================

class CheckModel(BaseModel):
    """Outcome of one verification."""
    name: str = Field(..., description="Check name")
    success: bool = Field(..., description="Whether the check passed")
    detail: Optional[str] = Field(default=None, description="Diagnostic or residual on failure")
    output: Any = Field(default=None, description="Check output")


class TwistModel(BaseModel):
    """Twist lambda = e^s and the period group of theta = s*dt."""
    mode: str = Field(..., description="untwisted | rational | lee | transcendental")
    weight: Optional[str] = Field(default=None, description="Rational weight lambda")
    period_rank: int = Field(..., description="Rank of the period group")
    period_generators: list[str] = Field(default_factory=list, description="Free generators")


class GammaBlockModel(BaseModel):
    """Mayer-Vietoris block [[I, -I], [I, -lambda M_k]] in one degree."""
    degree: int = Field(..., description="Degree k")
    size: int = Field(..., description="Rows of the square block matrix")
    rank: int = Field(..., description="Rank of the block matrix")
    matrix: list[list[str]] = Field(..., description="Entries")
    twist_block: list[list[str]] = Field(..., description="I - lambda M_k")
    twist_block_rank: int = Field(..., description="Rank of I - lambda M_k")
    twist_block_nullity: int = Field(..., description="Nullity of I - lambda M_k")


# ========================================
# Report Models
# ========================================

class CohomologyReportModel(BaseModel):
    """Twisted cohomology dimensions of a mapping torus."""
    kind: Literal["cohomology"] = "cohomology"
    dims: list[int] = Field(..., description="dim H^i for i = 0..n+1")
    nullities: list[int] = Field(..., description="nu_k = nullity(I - lambda M_k)")
    euler: int = Field(..., description="Alternating sum of dims")
    twist: TwistModel
    field: str = Field(..., description="Coefficient field")
    alpha_approx: Optional[str] = Field(default=None, description="Decimal Lee eigenvalue")
    warnings: list[str] = Field(default_factory=list)
    n: int = Field(..., description="Fiber torus dimension")
    monodromy: list[list[int]] = Field(..., description="Monodromy A")
    charpoly: str = Field(..., description="det(xI - A)")
    modulus: Optional[str] = Field(default=None, description="Irreducible factor carrying alpha")
    orientable: bool = Field(..., description="det A = 1")
    method: str = Field(..., description="Computation path")
    vanishing: CheckModel
    gamma: Optional[list[GammaBlockModel]] = Field(default=None, description="Audit blocks")
    oracle: Optional[CheckModel] = Field(default=None, description="Cellular cross-check")


class NovikovReportModel(BaseModel):
    """Novikov Betti numbers and Laurent torsion of a mapping torus."""
    kind: Literal["novikov"] = "novikov"
    betti: list[int] = Field(..., description="Novikov Betti numbers, degrees 0..n+1")
    torsion: list[list[str]] = Field(..., description="Non-unit elementary divisors per degree")
    wang_determinants: list[str] = Field(..., description="det(t M_k - I), k = 0..n")
    period_generator: str
    coefficients: str
    interpretation: str
    n: int
    monodromy: list[list[int]]
    consistency: CheckModel
    warnings: list[str] = Field(default_factory=list)


class OracleReportModel(BaseModel):
    """Cellular cochain computation against the closed form."""
    kind: Literal["oracle"] = "oracle"
    success: bool
    cellular: list[int]
    mayer_vietoris: list[int]
    cochain_dims: list[int]
    twist: TwistModel
    field: str
    n: int
    monodromy: list[list[int]]
    detail: Optional[str] = None
    warnings: list[str] = Field(default_factory=list)


class LcsReportModel(BaseModel):
    """Tricerri identity battery."""
    kind: Literal["lcs"] = "lcs"
    success: bool
    normalization: str = Field(..., description="Constant taking the printed forms to normalized")
    identities: list[CheckModel]
    generators: list[CheckModel]


ReportModel = Annotated[
    Union[CohomologyReportModel, NovikovReportModel, OracleReportModel, LcsReportModel],
    Field(discriminator="kind"),
]


class JobResultModel(BaseModel):
    """One job of a batch."""
    index: int
    command: Command
    exit_code: int
    report: Optional[ReportModel] = None
    error: Optional[str] = None


class BatchReportModel(BaseModel):
    """Results of a batch file, in input order."""
    kind: Literal["batch"] = "batch"
    exit_code: int
    jobs: list[JobResultModel]


REPORT_MODELS: dict[str, type[BaseModel]] = {
    "job": JobSpec,
    "cohomology": CohomologyReportModel,
    "novikov": NovikovReportModel,
    "oracle": OracleReportModel,
    "lcs": LcsReportModel,
    "batch": BatchReportModel,
}
