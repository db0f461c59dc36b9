"""Pydantic schemas for emitted reports."""

from pydantic import BaseModel, Field

from permcheb.models import CheckStatus, Tier


class CountTableReport(BaseModel):
    """Oracle counts f(0..N) for one constraint set."""

    constraint: str
    counts: list[int]


class Mismatch(BaseModel):
    """First coefficient where a formula and the oracle disagree."""

    n: int = Field(..., ge=0)
    expected: str
    actual: str


class CheckReport(BaseModel):
    """Schema for one verification check."""

    check_id: str = Field(..., min_length=1)
    theorem: str
    params: dict[str, int] = Field(default_factory=dict)
    tier: Tier = Tier.PROVED
    status: CheckStatus
    first_mismatch: Mismatch | None = None
    detail: str | None = None
    runtime_ms: float | None = None


class VerificationSummary(BaseModel):
    """Schema for a full verification run."""

    scope: str
    order: int
    checks: list[CheckReport]
    passed: int
    failed: int
    errors: int
    experimental_failed: int


class FormulaInfo(BaseModel):
    """Catalog entry for a formula family."""

    formula_id: str
    family: str
    parameters: list[str]
    ranges: str
    statement: str
    tier: str = Tier.PROVED.value


class FormulaResult(BaseModel):
    """A formula evaluated at concrete parameters."""

    formula_id: str
    params: dict[str, int]
    rational: str
    coefficients: list[str] | None = None


class CoefficientRow(BaseModel):
    """One (n, r, count) entry of a z-refined table."""

    n: int = Field(..., ge=0)
    r: int = Field(..., ge=0)
    count: int


class BijectionReport(BaseModel):
    """A 132-avoider, its Dyck path and the path height."""

    permutation: str
    path: str
    max_height: int = Field(..., ge=0)


class TransferReport(BaseModel):
    """Walk data of a transfer system."""

    labels: list[str]
    matrix: list[list[int]]
    determinant: str
    closed_walk_gf: str
    level_counts: list[int] | None = None
    closed_walks: list[int]
