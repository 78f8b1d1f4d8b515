"""
Output schemas shared by the command line front end.

JSON output is `model_dump_json(indent=2)` of these models; the table output is a
fixed-width rendering of the same rows.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, computed_field

from algebra.parity_ring import GradedInt
from algebra.partitions import Bipartition, format_bipartition, format_partition
from algebra.trep import HomEntry


class GradedValue(BaseModel):
    one: int
    eps: int

    @classmethod
    def of(cls, value: GradedInt) -> "GradedValue":
        return cls(one=value.a, eps=value.b)


class ReportEntry(BaseModel):
    src: str
    dst: str
    layer: Optional[int] = None
    total: int
    graded: Optional[GradedValue] = None
    parity_ambiguous: bool = False

    @classmethod
    def of(cls, src: Bipartition, dst: Bipartition, entry: HomEntry, layer: Optional[int] = None) -> "ReportEntry":
        return cls(
            src=format_bipartition(src),
            dst=format_bipartition(dst),
            layer=layer,
            total=entry.total,
            graded=GradedValue.of(entry.graded) if entry.graded is not None else None,
            parity_ambiguous=entry.parity_ambiguous,
        )


class Report(BaseModel):
    query: str
    entries: List[ReportEntry] = []


class LRRow(BaseModel):
    lam: str
    nu: str
    mu: str
    b: int
    f: GradedValue
    total: int


class LRReport(BaseModel):
    query: str
    rows: List[LRRow] = []


class DiagramListing(BaseModel):
    p: int
    q: int
    r: int
    count: int
    expected: int
    diagrams: List[str] = []


class BlockComponent(BaseModel):
    blocks: List[int]
    labels: List[str]


class BlocksReport(BaseModel):
    bound: int
    fibers: int
    components: List[BlockComponent] = []


class KoszulReportModel(BaseModel):
    bound: int
    passed: bool
    checked: int
    counterexamples: List[Dict[str, str]] = []


class CheckLine(BaseModel):
    suite: str
    name: str
    passed: bool
    detail: str = ""


class VerifyReport(BaseModel):
    suite: str
    checks: List[CheckLine] = []

    @computed_field
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class VerifyRun(BaseModel):
    reports: List[VerifyReport] = []

    @computed_field
    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


def render_table(headers: List[str], rows: List[List[object]]) -> str:
    """Fixed-width text table; columns are as wide as their widest cell."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def graded_text(value: Optional[GradedValue]) -> str:
    if value is None:
        return "?"
    return str(GradedInt(value.one, value.eps))


def lr_row_model(lam, nu, mu, b: int, f: GradedInt) -> LRRow:
    return LRRow(
        lam=format_partition(lam), nu=format_partition(nu), mu=format_partition(mu),
        b=b, f=GradedValue.of(f), total=f.eval_plus(),
    )


class PolyTerm(BaseModel):
    exponents: List[int]
    coeff: int


class PolyDump(BaseModel):
    kind: str
    lam: str
    num_vars: int
    terms: List[PolyTerm] = []


class CalibrationClass(BaseModel):
    parities: List[int]
    defect: int
    exponent: int
    witnesses: int


class CalibrationReport(BaseModel):
    max_total: int
    rank: int
    passed: bool
    classes: List[CalibrationClass] = []
    anomalies: List[str] = []
