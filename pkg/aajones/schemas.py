# schemas.py
from __future__ import annotations

from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from aajones.aa import AAReport, DasLinCoeffs
from aajones.checkerboard import AAPathStats, GraphStats

MinimalityLabel = Literal["Minimal", "WithinOneCrossing", "ReducibleByTwo", "Inconclusive"]
SignLabel = Literal["Consistent", "Obstructed"]
NontrivialityLabel = Literal["NontrivialJones", "Violation"]
ClassLabel = Literal["Alternating", "AAStronglyReduced", "AANotStronglyReduced", "NotAA"]


class StatsModel(BaseModel):
    """Simplified-graph counts and marked-pair path counts for one checkerboard graph."""

    v: int = Field(..., description="Vertices of the simplification")
    e: int = Field(..., description="Edges of the simplification")
    mu: int = Field(..., description="Simple edges that merged two or more parallels")
    tau: int = Field(..., description="Triangles of the simplification")
    beta1: int = Field(..., description="Circuit rank e - v + 1")
    P: int = Field(..., description="Length-two paths between the marked vertices")
    P0: int
    P1: int
    P2: int
    Q: int = Field(..., description="Length-three paths avoiding both-adjacent interior vertices")
    S: int = Field(..., description="K4 subgraphs through both marked vertices")

    model_config = ConfigDict(extra="forbid")

    @classmethod
    def from_stats(cls, gs: GraphStats, ps: AAPathStats) -> "StatsModel":
        return cls(
            v=gs.v, e=gs.e, mu=gs.mu, tau=gs.tau, beta1=gs.beta1,
            P=ps.P, P0=ps.P0, P1=ps.P1, P2=ps.P2, Q=ps.Q, S=ps.S,
        )


class AAReportModel(BaseModel):
    dealternator: int = Field(..., description="Index of the dealternator crossing")
    alpha0: int
    alpha1: int
    alpha_cm4: int
    alpha_cm3: int
    anchor_exponent: int = Field(..., description="A-exponent of alpha0, c + 2v - 8")
    window: List[int] = Field(..., description="Bracket exponents outside [low, high] vanish")
    stats: StatsModel
    stats_bar: StatsModel
    minimality: MinimalityLabel
    sign_verdict: SignLabel
    nontriviality: NontrivialityLabel
    turaev_genus: int
    span_minimal: bool = Field(..., description="Jones span equals c - 3")
    lemma_dual: List[bool] = Field(..., description="(membership clause, inequality clause)")

    model_config = ConfigDict(extra="forbid")

    @classmethod
    def from_report(cls, report: AAReport) -> "AAReportModel":
        return cls(
            dealternator=report.crossing,
            alpha0=report.alpha0,
            alpha1=report.alpha1,
            alpha_cm4=report.alpha_cm4,
            alpha_cm3=report.alpha_cm3,
            anchor_exponent=report.anchor_exponent,
            window=list(report.window),
            stats=StatsModel.from_stats(report.graph_stats, report.stats),
            stats_bar=StatsModel.from_stats(report.graph_stats_bar, report.stats_bar),
            minimality=report.minimality.value,
            sign_verdict=report.sign_verdict.value,
            nontriviality=report.nontriviality.value,
            turaev_genus=report.turaev_genus,
            span_minimal=report.span_minimal,
            lemma_dual=list(report.lemma_dual),
        )


class DasLinModel(BaseModel):
    """First three and last three bracket coefficients of a reduced alternating diagram."""

    gamma0: int
    gamma1: int
    gamma2: int
    gamma_cm2: int
    gamma_cm1: int
    gamma_c: int
    anchor: int = Field(..., description="A-exponent of gamma0; gamma_i sits at anchor - 4i")

    model_config = ConfigDict(extra="forbid")

    @classmethod
    def from_coeffs(cls, coeffs: DasLinCoeffs) -> "DasLinModel":
        return cls(
            gamma0=coeffs.gamma0,
            gamma1=coeffs.gamma1,
            gamma2=coeffs.gamma2,
            gamma_cm2=coeffs.gamma_cm2,
            gamma_cm1=coeffs.gamma_cm1,
            gamma_c=coeffs.gamma_c,
            anchor=coeffs.anchor,
        )


class ErrorModel(BaseModel):
    type: str = Field(..., description="Exception class name")
    message: str
    exit_code: int

    model_config = ConfigDict(extra="forbid")


class DealternatorModel(BaseModel):
    crossing: int
    strongly_reduced: bool
    reason: Optional[str] = None

    model_config = ConfigDict(extra="forbid")


class DiagramReport(BaseModel):
    """Everything computed for one diagram; fields stay None when not applicable."""

    name: Optional[str] = None
    pd: Optional[str] = Field(None, description="Canonical PD serialization")
    crossings: Optional[int] = None
    components: Optional[int] = None
    writhe: Optional[int] = None
    bracket: Optional[str] = None
    jones: Optional[str] = None
    turaev_genus: Optional[int] = None
    classification: Optional[ClassLabel] = None
    dealternators: List[DealternatorModel] = Field(default_factory=list)
    dasbach_lin: Optional[DasLinModel] = None
    sign_verdict: Optional[SignLabel] = None
    aa: Optional[AAReportModel] = None
    tags: List[str] = Field(default_factory=list)
    expected_jones: Optional[str] = None
    check: Optional[Literal["pass", "fail"]] = None
    error: Optional[ErrorModel] = None

    model_config = ConfigDict(extra="forbid")


class RunReport(BaseModel):
    version: str = Field(..., description="aajones version that produced the report")
    results: List[DiagramReport]

    model_config = ConfigDict(extra="forbid")


class TaitGraphModel(BaseModel):
    role: Literal["G", "Gbar"]
    shaded: bool
    dump: str = Field(..., description="Adjacency text of the multigraph")
    v: int
    e: int
    mu: int
    tau: int
    beta1: int
    loops_removed: int

    model_config = ConfigDict(extra="forbid")


class TaitReport(BaseModel):
    version: str
    pd: str
    dealternator: Optional[int] = None
    graphs: List[TaitGraphModel]

    model_config = ConfigDict(extra="forbid")


class TuraevReport(BaseModel):
    version: str
    pd: str
    s_a: int = Field(..., description="Loops of the all-A state")
    s_b: int = Field(..., description="Loops of the all-B state")
    turaev_genus: int
    a_adequate: bool
    b_adequate: bool

    model_config = ConfigDict(extra="forbid")


class FamilyReport(BaseModel):
    version: str
    family: int
    params: Dict[str, Union[int, List[int]]]
    vertices: int
    edges: int = Field(..., description="Edges of the multigraph, dealternator included")
    stats: StatsModel
    identity_holds: bool

    model_config = ConfigDict(extra="forbid")


class BatchRecord(BaseModel):
    name: str = Field(..., min_length=1)
    pd: str
    expected_jones: Optional[str] = None
    tags: List[str] = Field(default_factory=list)

    model_config = ConfigDict(extra="forbid")


__all__ = [
    "StatsModel",
    "AAReportModel",
    "DasLinModel",
    "ErrorModel",
    "DealternatorModel",
    "DiagramReport",
    "RunReport",
    "TaitGraphModel",
    "TaitReport",
    "TuraevReport",
    "FamilyReport",
    "BatchRecord",
]
