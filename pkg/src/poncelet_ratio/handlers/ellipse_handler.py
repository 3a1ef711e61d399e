"""Record scans for an ellipse inside the unit circle."""

from __future__ import annotations

import logging
from typing import Any

from mpmath import mp

from ..models.geometry import EllipseConfig, WeightSpec
from ..models.report import ReportBuilder, RunReport
from ..services import cf_engine, ellipse_core, oracle
from ..utils.exceptions import ClosureDetected, DomainError
from ..utils.precision import format_decimal
from .base import RatioHandler

logger = logging.getLogger(__name__)

WEIGHT_NAMES = ("alpha0", "alpha1", "alpha2", "cos_psi1")


class EllipseHandler(RatioHandler):
    """Convergent table of an ellipse's ratio from direct vertex iteration."""

    command = "ellipse"

    def _config(self, params: dict[str, Any]) -> EllipseConfig:
        if all(params.get(name) is not None for name in WEIGHT_NAMES):
            spec = WeightSpec.create(*(params[name] for name in WEIGHT_NAMES))
            return ellipse_core.ellipse_from_weights(spec)
        if any(params.get(name) is None for name in ("a", "b", "c")):
            msg = "Supply --a, --b and --c, or all four weight options"
            raise DomainError(msg)
        return EllipseConfig.from_axes(params["a"], params["b"], params["c"])

    def run(self, params: dict[str, Any]) -> RunReport:
        digits = params.get("digits") or self.settings.ellipse_digits
        budget = params.get("budget") or self.settings.ellipse_budget
        max_records = params.get("records")
        inputs = self._inputs(params, "a", "b", "c", *WEIGHT_NAMES, "digits", "budget")

        with mp.workdps(digits):
            cfg = self._config(params)
            weights = ellipse_core.weights_from_ellipse(cfg)
            closure = None
            try:
                records = ellipse_core.ellipse_record_scan(
                    cfg, budget=budget, max_records=max_records
                )
                q_seq = [record.q for record in records]
                steps = q_seq[-1] if max_records is not None and q_seq else budget
            except ClosureDetected as signal:
                closure = signal.index
                q_seq = [record.q for record in signal.records]
                steps = closure
            table = cf_engine.recover_numerators(q_seq)

            reference = bounds = None
            if params.get("verify"):
                reference = oracle.ellipse_theta(weights)
                bounds = cf_engine.convergent_bounds(table, reference)
                if not bounds.passed:
                    logger.warning("Table row %s breaks the bracketing", bounds.first_violation)
            report = ReportBuilder.ellipse(
                table,
                inputs,
                0.0,
                steps=steps,
                ellipse={
                    "a": format_decimal(cfg.a, 12),
                    "b": format_decimal(cfg.b, 12),
                    "c": format_decimal(cfg.c, 12),
                    "cos_psi1": format_decimal(weights.cos_psi1, 12),
                },
                oracle_theta=reference,
                bounds=bounds,
                digits=min(digits, 30),
            )
            if closure is not None:
                fraction = cf_engine.closure_fraction(closure, q_seq)
                report.theta = str(fraction)
                report.results["closure_index"] = closure
            return report
