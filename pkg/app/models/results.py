"""
Result Models

Pydantic models for estimates and reports produced by the toolkit.
"""

from datetime import datetime
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, computed_field, model_validator


class Statistic(BaseModel):
    """Monte-Carlo (or exact) value of a signed statistic"""
    value: float = Field(..., description="Estimated value")
    stderr: float = Field(..., ge=0.0, description="Standard error of the estimate")
    samples: int = Field(..., ge=0, description="Samples used (0 for exact values)")

    def within(self, target: float = 0.0, multiplier: float = 4.0) -> bool:
        """True when the value lies within ``multiplier`` standard errors of target."""
        return abs(self.value - target) <= multiplier * self.stderr


class DensityEstimate(Statistic):
    """Estimate of a density, a probability in [0, 1]"""
    value: float = Field(..., ge=0.0, le=1.0, description="Estimated density")


class Witness(BaseModel):
    """Induced subgraph certifying that a digraph is not a poset"""
    kind: Literal["C1", "C2", "C3", "P2"] = Field(..., description="Forbidden digraph")
    vertices: List[int] = Field(..., description="Labels realising it, 1-based")


class ClassifyResult(BaseModel):
    """Outcome of the poset test on a digraph"""
    verdict: Literal["poset", "not-poset"] = Field(..., description="Classification")
    witness: Optional[Witness] = Field(None, description="Certificate when not a poset")

    @model_validator(mode="after")
    def check_witness(self) -> "ClassifyResult":
        if (self.verdict == "not-poset") != (self.witness is not None):
            raise ValueError("A witness is present exactly when the verdict is not-poset")
        return self

    def describe(self) -> str:
        if self.witness is None:
            return "POSET"
        labels = ",".join(str(v) for v in self.witness.vertices)
        return f"NOT-POSET witness={self.witness.kind} vertices={labels}"


class AxiomReport(BaseModel):
    """Tally of kernel axiom violations over sampled triples"""
    triples_checked: int = Field(..., ge=0, description="Triples sampled")
    w1_violations: int = Field(0, ge=0, description="Positive weight on unordered pairs")
    w2_violations: int = Field(0, ge=0, description="Failures of forced transitivity")
    order_violations: int = Field(0, ge=0, description="Failures of the order axioms")
    witnesses: Dict[str, List[List[Any]]] = Field(
        default_factory=dict, description="Up to 10 witness triples per violation kind"
    )

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return self.w1_violations == 0 and self.w2_violations == 0 and self.order_violations == 0


class PosetLimitReport(BaseModel):
    """Statistics of the D1/D2/D3 criterion for a candidate limit"""
    d1: Statistic = Field(..., description="Density of the path 12, 23")
    d2: Statistic = Field(..., description="Density of the chain 12, 23, 13")
    d1_minus_d2: Statistic = Field(..., description="Paired estimate of t(D1) - t(D2)")
    d3: Statistic = Field(..., description="Density of the cycle 12, 23, 31")
    exact: bool = Field(False, description="Whether the statistics were computed exactly")
    multiplier: float = Field(4.0, description="Tolerance in standard errors")

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        if self.exact:
            return abs(self.d1_minus_d2.value) <= 1e-12 and abs(self.d3.value) <= 1e-12
        return self.d1_minus_d2.within(0.0, self.multiplier) and self.d3.within(
            0.0, self.multiplier
        )


class IndependenceReport(BaseModel):
    """Comparison of P(R contains Q1 and Q2) with the product of the marginals"""
    joint: float = Field(..., description="Estimated P(R contains Q1 and Q2)")
    left: float = Field(..., description="Estimated P(R contains Q1)")
    right: float = Field(..., description="Estimated P(R contains Q2)")
    difference: float = Field(..., description="joint - left * right")
    stderr: float = Field(..., ge=0.0, description="Delta-method standard error")
    replicates: int = Field(..., ge=1, description="Random posets drawn")
    multiplier: float = Field(4.0, description="Tolerance in standard errors")

    @computed_field  # type: ignore[misc]
    @property
    def product(self) -> float:
        return self.left * self.right

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return abs(self.difference) <= self.multiplier * self.stderr


class CutDistanceBounds(BaseModel):
    """Certified lower and heuristic upper bound on the cut distance"""
    lower: float = Field(..., ge=0.0, description="Counting-lemma lower bound")
    upper: float = Field(..., ge=0.0, description="Cut norm under the best coupling found")
    coupling: List[List[float]] = Field(..., description="Witnessing coupling matrix")
    method: Literal["exact", "spectral"] = Field(
        "exact", description="How the cut norm of the coupled difference was bounded"
    )
    restarts: int = Field(0, ge=0, description="Restarts used by the search")

    @model_validator(mode="after")
    def check_order(self) -> "CutDistanceBounds":
        if self.upper < self.lower - 1e-9:
            raise ValueError(f"upper {self.upper} below lower {self.lower}")
        return self


class RunManifest(BaseModel):
    """Provenance record written next to CLI output files"""
    command: List[str] = Field(..., description="argv of the run")
    seed: Optional[int] = Field(None, description="Seed used")
    version: str = Field(..., description="Toolkit version")
    started_at: datetime = Field(..., description="Start timestamp (UTC)")
    finished_at: datetime = Field(..., description="Finish timestamp (UTC)")
    outputs: Dict[str, str] = Field(
        default_factory=dict, description="File name to SHA-256 digest"
    )


class OrbitDeviation(BaseModel):
    """Largest frequency gap between two labellings of one unlabelled poset"""
    relations: List[List[int]] = Field(..., description="Relations of a representative")
    labellings: int = Field(..., ge=1, description="Labelled posets in the orbit")
    max_gap: float = Field(..., ge=0.0, description="Largest frequency difference")
    stderr: float = Field(..., ge=0.0, description="Standard error of that difference")


class ExchangeabilityReport(BaseModel):
    """Orbit check of an empirical label distribution"""
    n: int = Field(..., ge=1, description="Poset size")
    replicates: int = Field(..., ge=1, description="Random posets drawn")
    orbits: List[OrbitDeviation] = Field(default_factory=list)
    multiplier: float = Field(4.0, description="Tolerance in standard errors")

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return all(o.max_gap <= self.multiplier * o.stderr for o in self.orbits)


class ConvergeRow(BaseModel):
    """One replicate of the convergence experiment"""
    n: int = Field(..., ge=1, description="Size of the sampled poset")
    rep: int = Field(..., ge=0, description="Replicate index")
    t_inj_estimate: float = Field(..., description="t_inj(chain2, P(n, W))")
    delta_upper: float = Field(..., description="Upper bound on the cut distance to W")
    delta_lower: float = Field(..., description="Counting-lemma lower bound")
    max_density_gap: float = Field(..., description="Largest |t_inj(Q, P) - t(Q, W)| over Q")
    method: Literal["exact", "spectral"] = Field(
        "exact", description="How the coupled cut norm behind delta_upper was bounded"
    )
