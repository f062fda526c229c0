"""Verification report assembly and serialization.

A report is an ordered list of named checks, each carrying the measured
residual and the tolerance it was held to.  Status is derived, never stored:
a row passes iff residual <= tolerance, and the report passes iff every row
does.  CSV uses the fixed header ``check,params,residual,tolerance,status``
with floats printed to 17 significant digits; JSON mirrors the same fields.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


def format_float(x: float) -> str:
    """17 significant digits, enough to reconstruct the exact double."""
    return format(float(x), ".17g")


@dataclass(frozen=True)
class CheckRow:
    check: str
    params: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class VerificationReport:
    rows: list = field(default_factory=list)

    def add(self, check: str, params: str, residual: float, tolerance: float) -> CheckRow:
        # commas would break the fixed CSV schema, keep params comma-free
        row = CheckRow(
            check=str(check),
            params=str(params).replace(",", ";"),
            residual=float(residual),
            tolerance=float(tolerance),
        )
        self.rows.append(row)
        return row

    @property
    def all_passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def to_csv(self) -> str:
        lines = ["check,params,residual,tolerance,status"]
        for row in self.rows:
            lines.append(
                f"{row.check},{row.params},{format_float(row.residual)},"
                f"{format_float(row.tolerance)},{row.status}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "all_passed": self.all_passed,
            "checks": [
                {
                    "check": row.check,
                    "params": row.params,
                    "residual": row.residual,
                    "tolerance": row.tolerance,
                    "status": row.status,
                }
                for row in self.rows
            ],
        }
        return json.dumps(payload, indent=2)


def export_report(report: VerificationReport, format: str = "csv") -> str:
    """Render a report as text in the requested format ("csv" or "json")."""
    if format == "csv":
        return report.to_csv()
    if format == "json":
        return report.to_json()
    raise ValueError(f'format must be "csv" or "json", got {format!r}')
