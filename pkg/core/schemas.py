"""
Pydantic models for run configuration and reports.
Reports are what the command line prints as JSON, CSV or text; their
field order is fixed so output is byte-identical across runs.
"""

from typing import Literal

from pydantic import BaseModel, Field, model_validator

TheoryName = Literal["khovanov", "szabo", "szabo-mirror", "reduced", "reduced-mirror"]
OutputFormat = Literal["json", "csv", "text"]


class RunConfig(BaseModel):
    """One pipeline run: an input diagram, a theory and a decoration."""

    pd: str | None = Field(None, description="PD code text")
    braid: str | None = Field(None, description="Braid word 'k: w1 w2 ...'")
    corpus: str | None = Field(None, description="Corpus entry name")
    unknot: bool = Field(False, description="Accept an empty PD code as the unknot")
    basepoint: int | None = Field(None, ge=1, description="Edge label for the reduced theory")
    theory: TheoryName = Field("szabo", description="Differential to use")
    decoration: str = Field("auto", description="auto, braid, random or a bit string")
    seed: int = Field(0, ge=0, description="Seed for random decorations")
    output: OutputFormat = Field("text", description="Report format")
    pages: bool = Field(False, description="Compute spectral sequence pages")
    jones: bool = Field(False, description="Report the graded Euler characteristic")
    transverse: bool = Field(False, description="Report the transverse element")
    khovanov_table: bool = Field(False, description="Report the bigraded Khovanov table")
    allow_large: bool = Field(False, description="Lift the crossing cap")
    workers: int | None = Field(None, ge=1, description="Worker processes for assembly")

    @model_validator(mode="after")
    def exactly_one_input(self) -> "RunConfig":
        given = [name for name in ("pd", "braid", "corpus") if getattr(self, name) is not None]
        if len(given) != 1:
            raise ValueError(
                "Exactly one input source (pd, braid or corpus) is required, "
                f"got {len(given)}"
            )
        return self


class PageReport(BaseModel):
    r: int
    stabilized: bool
    ranks: dict[str, int]


class TransverseReport(BaseModel):
    resolution: str
    generator: str
    h: int
    q: int
    delta: int
    closed: bool
    survives: bool


class ComputeReport(BaseModel):
    """Result of one compute run."""

    diagram: str
    theory: str
    crossings: int
    n_plus: int
    n_minus: int
    decoration: str
    generators: int
    ranks: dict[str, dict[str, int]]
    total_rank: int
    pages: list[PageReport] | None = None
    khovanov: dict[str, int] | None = None
    jones: str | None = None
    euler_characteristic: str | None = None
    transverse: TransverseReport | None = None


class CheckReport(BaseModel):
    name: str
    passed: bool
    samples: int
    failures: list[str] = Field(default_factory=list)


class VerifyReport(BaseModel):
    passed: bool
    checks: list[CheckReport]


class InvarianceReport(BaseModel):
    """Comparison of rank and page tables across diagrams of one link."""

    inputs: list[str]
    theory: str
    equal: bool
    ranks: list[dict[str, int]]
    page_tables_equal: bool
    mismatches: list[str] = Field(default_factory=list)
