"""Oracle comparison sweeps over independent circle pairs."""

from __future__ import annotations

import concurrent.futures
import logging
import random
from typing import Any

from mpmath import mp, mpf

from ..models.report import ReportBuilder, RunReport
from ..services import oracle, pipeline
from ..utils.exceptions import DomainError
from ..utils.precision import agreement_digits, format_decimal
from .base import RatioHandler
from .ellipse_handler import EllipseHandler

logger = logging.getLogger(__name__)


def random_pairs(count: int, seed: int) -> list[tuple[str, str]]:
    """Nested pairs (c, r) with c in [0.05, 0.6] and a clearance of 0.05."""
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        c = rng.uniform(0.05, 0.6)
        r = rng.uniform(0.05, 0.95 - c)
        pairs.append((f"{c:.6f}", f"{r:.6f}"))
    return pairs


def parse_pair(text: str) -> tuple[str, str]:
    try:
        c, r = (part.strip() for part in text.split(","))
    except ValueError as e:
        msg = f"Pair must be given as 'c,r', got {text!r}"
        raise DomainError(msg) from e
    return c, r


def verify_pair(case: tuple[str, str, int, dict[str, Any]]) -> dict[str, Any]:
    """Pipeline theta against the quadrature oracle for one pair.

    Runs in a worker process, so it takes and returns plain data.
    """
    c, r, digits, options = case
    result = pipeline.compute_theta(c, r, digits, **options)
    with mp.workdps(result.working_digits):
        if result.theta is None:
            value = mpf(result.rational.numerator) / result.rational.denominator
        else:
            value = result.theta
        reference = oracle.circle_theta(result.pair, digits + 5)
        agreement = min(digits, agreement_digits(value, reference))
        return {
            "c": c,
            "r": r,
            "theta": format_decimal(value, digits),
            "oracle_theta": format_decimal(reference, digits),
            "agreement_digits": agreement,
        }


class VerifyHandler(RatioHandler):
    """Compare pipeline ratios with the oracle for many inputs at once."""

    command = "verify"

    def run(self, params: dict[str, Any]) -> RunReport:
        digits = params.get("digits") or self.settings.digits
        if params.get("a") is not None or params.get("alpha0") is not None:
            report = EllipseHandler(self.settings).run({**params, "verify": True})
            report.command = self.command
            return report

        pairs = [parse_pair(text) for text in params.get("pair") or ()]
        if params.get("random"):
            pairs.extend(random_pairs(params["random"], params.get("seed") or 0))
        if not pairs:
            msg = "Supply --pair c,r, --random N, or an ellipse"
            raise DomainError(msg)

        options = {
            "handoff": self.settings.baby_handoff,
            "max_iter": self.settings.max_iter,
            "max_partial_quotient": self.settings.max_partial_quotient,
            "guard": self.settings.threshold_guard,
        }
        cases = [(c, r, digits, options) for c, r in pairs]
        jobs = params.get("jobs") or 1
        if jobs > 1:
            with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
                outcomes = list(pool.map(verify_pair, cases))
        else:
            outcomes = [verify_pair(case) for case in cases]
        for outcome in outcomes:
            logger.info(
                "c=%s r=%s agrees to %d digits",
                outcome["c"],
                outcome["r"],
                outcome["agreement_digits"],
            )
        inputs = self._inputs(params, "digits", "random", "seed", "jobs")
        return ReportBuilder.verify(outcomes, inputs, digits, 0.0)
