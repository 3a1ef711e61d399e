"""Circle-pair ratios and incomplete integrals."""

from __future__ import annotations

import logging
from typing import Any

from mpmath import mp, mpf

from ..models.report import ReportBuilder, RunReport
from ..services import oracle, pipeline
from ..utils.exceptions import DomainError
from ..utils.precision import agreement_digits
from .base import RatioHandler

logger = logging.getLogger(__name__)


class CircleHandler(RatioHandler):
    """theta for a nested circle pair, or F(psi, k) through one."""

    command = "theta"

    def _options(self) -> dict[str, Any]:
        return {
            "handoff": self.settings.baby_handoff,
            "max_iter": self.settings.max_iter,
            "max_partial_quotient": self.settings.max_partial_quotient,
            "guard": self.settings.threshold_guard,
        }

    def run(self, params: dict[str, Any]) -> RunReport:
        digits = params.get("digits") or self.settings.digits
        if params.get("psi") is not None and params.get("k2") is not None:
            return self._integral(params, digits)
        if params.get("c") is None or params.get("r") is None:
            msg = "Supply --c and --r, or --psi and --k2"
            raise DomainError(msg)

        result = pipeline.compute_theta(params["c"], params["r"], digits, **self._options())
        inputs = self._inputs(params, "c", "r", "digits")
        with mp.workdps(result.working_digits):
            reference = agreement = None
            if params.get("verify"):
                value = result.theta
                if value is None:
                    value = mpf(result.rational.numerator) / result.rational.denominator
                reference = oracle.circle_theta(result.pair, digits + 5)
                agreement = min(digits, agreement_digits(value, reference))
                logger.info("Oracle agrees to %d digits", agreement)
            return ReportBuilder.theta(result, inputs, digits, 0.0, reference, agreement)

    def _integral(self, params: dict[str, Any], digits: int) -> RunReport:
        result = pipeline.compute_integral(
            params["psi"], params["k2"], digits, **self._options()
        )
        inputs = self._inputs(params, "psi", "k2", "digits")
        with mp.workdps(result.ratio.working_digits):
            reference = agreement = None
            if params.get("verify"):
                reference = oracle.incomplete_F(result.spec.psi, result.spec.k2, digits + 5)
                agreement = min(digits, agreement_digits(result.value, reference))
                logger.info("F(psi, k) agrees with the library value to %d digits", agreement)
            return ReportBuilder.integral(result, inputs, digits, 0.0, reference, agreement)
