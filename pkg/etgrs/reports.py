from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from etgrs.codes.linear import Verdict
from etgrs.common.ordered_enum import OrderedEnum


class Mode(OrderedEnum):
    THEOREMS = "theorems"
    BRUTE = "brute"
    BOTH = "both"


class EvalPath(OrderedEnum):
    FORMULA = "formula"
    RANK_ORACLE = "rank_oracle"
    BOTH = "both"


class Regime(OrderedEnum):
    C1_LOW_K = "c1_low_k"
    C_CASE1 = "c_case1"
    C_CASE2 = "c_case2"
    OUT_OF_RANGE = "out_of_range"


class ClaimStatus(OrderedEnum):
    PASS = "pass"  # noqa: S105
    DEVIATION = "deviation"
    FAIL = "fail"


class ReportModel(BaseModel):
    model_config = ConfigDict(frozen=True, use_enum_values=False)


class Finding(ReportModel):
    """A place where computation and a printed statement part ways."""

    kind: str
    message: str
    detail: dict[str, Any] = Field(default_factory=dict)


class ConditionReport(ReportModel):
    theorem: str
    index: int
    statement: str
    holds: bool
    witness: list[int] | None = None  # 1-based indices into the evaluation points
    via: EvalPath = EvalPath.BOTH


class TheoremCheck(ReportModel):
    theorem: str
    holds: bool
    conditions: list[ConditionReport]
    findings: list[Finding] = Field(default_factory=list)


class ParamsEcho(ReportModel):
    field: str
    n: int
    k: int
    alpha: list[int]
    v: list[int]
    eta: int
    delta: int


class CodeParamsModel(ReportModel):
    length: int
    dimension: int
    min_distance: int | None = None
    dual_min_distance: int | None = None
    distance_method: str | None = None

    @property
    def bracket(self) -> str:
        d = "?" if self.min_distance is None else str(self.min_distance)
        return f"[{self.length},{self.dimension},{d}]"


class ExtensionReport(ReportModel):
    t: list[int]
    via: str
    contract_ok: bool
    findings: list[Finding] = Field(default_factory=list)


class NonGrsReport(ReportModel):
    regime: Regime
    schur_dim: int | None = None
    grs_expected: int | None = None
    grs_reference: int | None = None
    witness: list[int] | None = None
    witness_position: int | None = None  # 1-based coordinate
    n_matrix_ok: bool | None = None
    membership_ok: bool | None = None
    certified: bool
    findings: list[Finding] = Field(default_factory=list)


class ClassificationReport(ReportModel):
    params: ParamsEcho
    mode: Mode
    code: CodeParamsModel
    verdict: Verdict
    theorem_verdict: Verdict | None = None
    brute_verdict: Verdict | None = None
    agreement: bool | None = None
    checks: list[TheoremCheck] = Field(default_factory=list)
    extension: ExtensionReport | None = None
    schur: NonGrsReport | None = None
    findings: list[Finding] = Field(default_factory=list)
    timings: dict[str, float] | None = None

    @property
    def headline(self) -> str:
        return f"{self.verdict.label} {self.code.bracket}"


class SearchRow(ReportModel):
    eta: int
    delta: int
    verdict: Verdict
    code: CodeParamsModel
    dual_amds: bool
    brute_verdict: Verdict | None = None
    agreement: bool | None = None


class ReproductionClaim(ReportModel):
    label: str
    statement: str
    status: ClaimStatus
    observed: str
    note: str | None = None


class ReproductionReport(ReportModel):
    example: int
    title: str
    claims: list[ReproductionClaim]
    findings: list[Finding] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(claim.status != ClaimStatus.FAIL for claim in self.claims)


def report_schema() -> dict[str, Any]:
    """JSON schema for the ``classify --format json`` output."""
    return ClassificationReport.model_json_schema()
