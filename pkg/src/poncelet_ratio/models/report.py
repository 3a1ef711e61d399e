"""Run reports and their builders."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from mpmath import mp

from ..utils.exceptions import PrecisionError
from ..utils.precision import format_decimal

if TYPE_CHECKING:
    from mpmath import mpf

    from ..services.cf_engine import BoundsVerdict
    from ..services.pipeline import IntegralResult, ThetaResult
    from .convergents import ConvergentTable
    from .dynamics import DynamicsVerdict

SUMMARY_DIGITS = 10
MAX_REPORTED_VERTICES = 50
AGREEMENT_SLACK = 2


def decimal(value: mpf | None, digits: int = SUMMARY_DIGITS) -> str | None:
    if value is None:
        return None
    return format_decimal(value, digits)


@dataclass
class RunReport:
    """Result of one command, serialized with decimal strings only."""

    command: str
    inputs: dict[str, Any]
    stages: dict[str, Any] = field(default_factory=dict)
    convergents: list[dict[str, Any]] = field(default_factory=list)
    theta: str | None = None
    oracle_theta: str | None = None
    agreement_digits: int | None = None
    elapsed_seconds: str = "0.000"
    results: dict[str, Any] = field(default_factory=dict)
    verdict: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        """Convert report to dictionary format in canonical field order."""
        report: dict[str, Any] = {
            "command": self.command,
            "inputs": self.inputs,
            "stages": self.stages,
            "convergents": self.convergents,
            "theta": self.theta,
            "oracle_theta": self.oracle_theta,
            "agreement_digits": self.agreement_digits,
            "elapsed_seconds": self.elapsed_seconds,
        }
        if self.results:
            report["results"] = self.results
        if self.verdict is not None:
            report["verdict"] = self.verdict
        return report

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def exit_status(self) -> int:
        """Precision-failure status when an oracle check failed, else 0."""
        bounds = self.results.get("bounds")
        if (
            self.results.get("failures")
            or self.results.get("oracle_agrees") is False
            or (bounds and not bounds["passed"])
        ):
            return PrecisionError.exit_code
        return 0

    def to_text(self) -> str:
        """Human-readable rendering: inputs, stages, table, then results."""
        lines = [f"{self.command}: " + ", ".join(f"{k}={v}" for k, v in self.inputs.items())]
        for key, value in self.stages.items():
            if isinstance(value, list):
                value = f"{len(value)} entries"
            lines.append(f"  {key}: {value}")
        if self.convergents:
            lines.append(f"  {'j':>4} {'q':>16} {'a':>8} {'p':>16}")
            for row in self.convergents:
                a = "?" if row["a"] is None else row["a"]
                lines.append(f"  {row['j']:>4} {row['q']:>16} {a:>8} {row['p']:>16}")
        if self.theta is not None:
            lines.append(f"theta        = {self.theta}")
        if self.oracle_theta is not None:
            lines.append(f"oracle theta = {self.oracle_theta}")
        if self.agreement_digits is not None:
            lines.append(f"agreement    = {self.agreement_digits} digits")
        for key, value in self.results.items():
            lines.append(f"{key}: {value}")
        if self.verdict is not None:
            lines.extend(
                f"{key}: {value}"
                for key, value in self.verdict.items()
                if value is not None and key != "vertices"
            )
            lines.extend(
                f"  vertex ({v['re']}, {v['im']})" for v in self.verdict.get("vertices", [])
            )
        lines.append(f"elapsed: {self.elapsed_seconds} s")
        return "\n".join(lines)


class ReportBuilder:
    """Builder class for creating standardized run reports."""

    @staticmethod
    def theta(
        result: ThetaResult,
        inputs: dict[str, Any],
        digits: int,
        elapsed: float,
        oracle_theta: mpf | None = None,
        agreement: int | None = None,
    ) -> RunReport:
        """Create a report for a circle-pair ratio."""
        stages: dict[str, Any] = {
            "working_digits": result.working_digits,
            "baby_steps": result.baby_steps,
            "giant_sets": [
                {"anchor_q": s.anchor_q, "partial_quotient": s.partial_quotient, "next_q": s.next_q}
                for s in result.giant_sets
            ],
            "records": len(result.records),
        }
        if result.delta is not None:
            stages["delta"] = decimal(result.delta, 6)
        results: dict[str, Any] = {}
        if result.rational is not None:
            theta = str(result.rational)
            results["closure_index"] = result.closure_index
        else:
            theta = format_decimal(result.theta, digits)
        if agreement is not None:
            results["oracle_agrees"] = agreement >= digits - AGREEMENT_SLACK
        return RunReport(
            command="theta",
            inputs=inputs,
            stages=stages,
            convergents=result.table.to_list(),
            theta=theta,
            oracle_theta=decimal(oracle_theta, digits),
            agreement_digits=agreement,
            elapsed_seconds=f"{elapsed:.3f}",
            results=results,
        )

    @staticmethod
    def integral(
        result: IntegralResult,
        inputs: dict[str, Any],
        digits: int,
        elapsed: float,
        oracle_value: mpf | None = None,
        agreement: int | None = None,
    ) -> RunReport:
        """Create a report for F(psi, k) obtained through a circle pair."""
        report = ReportBuilder.theta(result.ratio, inputs, digits, elapsed)
        report.results.update(
            {
                "pencil_invariant": decimal(result.ratio.pair.I, digits),
                "beta": format_decimal(result.beta, digits),
                "complete_F": format_decimal(result.complete, digits),
                "F": format_decimal(result.value, digits),
            }
        )
        if oracle_value is not None:
            report.results["oracle_F"] = format_decimal(oracle_value, digits)
            report.agreement_digits = agreement
            if agreement is not None:
                report.results["oracle_agrees"] = agreement >= digits - AGREEMENT_SLACK
        return report

    @staticmethod
    def ellipse(
        table: ConvergentTable,
        inputs: dict[str, Any],
        elapsed: float,
        *,
        steps: int,
        ellipse: dict[str, str],
        oracle_theta: mpf | None = None,
        bounds: BoundsVerdict | None = None,
        digits: int = SUMMARY_DIGITS,
    ) -> RunReport:
        """Create a report for an ellipse record scan."""
        results: dict[str, Any] = {"ellipse": ellipse}
        if len(table):
            last = table.last()
            results["estimate"] = f"{last.p}/{last.q}"
        if bounds is not None:
            results["bounds"] = {
                "passed": bounds.passed,
                "first_violation": bounds.first_violation,
                "max_residual": decimal(bounds.max_residual, 6),
            }
        return RunReport(
            command="ellipse",
            inputs=inputs,
            stages={"vertex_steps": steps, "records": len(table)},
            convergents=table.to_list(),
            oracle_theta=decimal(oracle_theta, digits),
            elapsed_seconds=f"{elapsed:.3f}",
            results=results,
        )

    @staticmethod
    def dynamics(
        verdict: DynamicsVerdict,
        inputs: dict[str, Any],
        elapsed: float,
        *,
        fast: bool,
    ) -> RunReport:
        """Create a report for a numerical-range trajectory verdict."""
        body: dict[str, Any] = {
            "kind": verdict.kind.value,
            "period": verdict.period,
            "product": decimal(verdict.product),
            "one_sided": verdict.one_sided,
            "conjugate_product": decimal(verdict.conjugate_product),
            "evidence": mp.nstr(verdict.evidence, 6),
            "log_h_spread": decimal(verdict.log_h_spread, 6),
            "rotation": decimal(verdict.rotation),
            "trend": {1: "rising", -1: "falling"}.get(verdict.trend),
        }
        cycle = verdict.cycle
        if cycle is not None:
            body["return_distance"] = mp.nstr(cycle.return_distance, 3)
            if cycle.period <= MAX_REPORTED_VERTICES:
                body["vertices"] = [
                    {"re": decimal(v.re, 6), "im": decimal(v.im, 6)}
                    for v in cycle.vertices
                ]
        return RunReport(
            command="nr",
            inputs=inputs,
            stages={"steps": verdict.steps, "fast_path": fast},
            convergents=verdict.table.to_list() if verdict.table is not None else [],
            theta=decimal(verdict.rotation),
            elapsed_seconds=f"{elapsed:.3f}",
            verdict=body,
        )

    @staticmethod
    def verify(
        cases: list[dict[str, Any]],
        inputs: dict[str, Any],
        digits: int,
        elapsed: float,
    ) -> RunReport:
        """Create a report for an oracle comparison sweep."""
        failures = [
            case for case in cases if case["agreement_digits"] < digits - AGREEMENT_SLACK
        ]
        agreement = min((case["agreement_digits"] for case in cases), default=None)
        return RunReport(
            command="verify",
            inputs=inputs,
            stages={"cases": len(cases)},
            agreement_digits=agreement,
            elapsed_seconds=f"{elapsed:.3f}",
            results={"cases": cases, "failures": len(failures)},
        )
