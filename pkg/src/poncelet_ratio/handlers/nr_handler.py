"""Trajectories around the numerical range of a 3x3 upper-triangular matrix."""

from __future__ import annotations

import csv
import logging
from pathlib import Path
from typing import Any

from mpmath import mp, mpc

from ..models.dynamics import DynamicsVerdict, NRConfig, StartCase
from ..models.report import ReportBuilder, RunReport
from ..services import nr_dynamics
from ..utils.exceptions import DomainError
from .base import RatioHandler

logger = logging.getLogger(__name__)

TRACE_COLUMNS = ("k", "cos_psi", "sin_psi", "lambda_sq", "log_h")


def parse_vertex(text: str) -> mpc:
    """Parse "re,im" into a unit-circle vertex.

    Raises:
        DomainError: If the text is malformed or the point is off the circle
    """
    try:
        re_part, im_part = (part.strip() for part in text.split(","))
        z = mpc(mp.mpf(re_part), mp.mpf(im_part))
    except ValueError as e:
        msg = f"Vertex must be given as 're,im', got {text!r}"
        raise DomainError(msg) from e
    if abs(abs(z) - 1) > mp.mpf(10) ** -6:
        msg = f"Vertex {text} is not on the unit circle"
        raise DomainError(msg)
    return z / abs(z)


class NRHandler(RatioHandler):
    """Classify the trajectory and tabulate records for regular ones."""

    command = "nr"

    def run(self, params: dict[str, Any]) -> RunReport:
        digits = params.get("digits") or self.settings.nr_digits
        budget = params.get("budget") or self.settings.nr_budget
        inputs = self._inputs(
            params, "a", "b1", "b2", "c1", "c2", "c3", "start", "z0", "digits", "budget"
        )
        with mp.workdps(digits):
            cfg = NRConfig.create(
                params["a"],
                params["b1"],
                params["b2"],
                params.get("c1") or 0,
                params.get("c2") or 0,
                params.get("c3") or 0,
            )
            z0 = parse_vertex(params["z0"]) if params.get("z0") else None
            start = StartCase(str(params.get("start") or "3"))
            fast = params.get("fast")
            if fast is None:
                fast = budget > nr_dynamics.FAST_PATH_THRESHOLD

            trace_path = params.get("trace")
            if trace_path:
                with Path(trace_path).open("w", newline="") as handle:
                    writer = csv.writer(handle)
                    writer.writerow(TRACE_COLUMNS)
                    verdict = self._classify(
                        cfg, budget, start, z0, fast, params, writer
                    )
                logger.info("Trace written to %s", trace_path)
            else:
                verdict = self._classify(cfg, budget, start, z0, fast, params, None)
            return ReportBuilder.dynamics(verdict, inputs, 0.0, fast=fast)

    def _classify(
        self,
        cfg: NRConfig,
        budget: int,
        start: StartCase,
        z0: mpc | None,
        fast: bool,
        params: dict[str, Any],
        writer: Any | None,
    ) -> DynamicsVerdict:
        trace = None
        if writer is not None:

            def trace(k: int, *values: Any) -> None:
                writer.writerow([k, *(mp.nstr(mp.mpf(v), 17) for v in values)])

        return nr_dynamics.classify_dynamics(
            cfg,
            budget,
            start=start,
            z0=z0,
            fast=fast,
            cycle_tol=self.settings.cycle_tol,
            reanchor=self.settings.nr_reanchor,
            trace=trace,
            check_conjugate=bool(params.get("verify")),
        )
