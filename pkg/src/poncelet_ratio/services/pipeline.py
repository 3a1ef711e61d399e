"""Ratio computation for circle pairs: baby steps, giant steps, refinement."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING

from mpmath import mp, mpf

from ..models.geometry import CirclePair, GiantStepState, IntegralSpec, RecordTriple
from ..utils.exceptions import ClosureDetected
from ..utils.precision import closure_threshold, working_digits
from ..utils.retry import retry_with_precision
from . import cf_engine, circle_core, curve_ops, oracle

if TYPE_CHECKING:
    from ..models.convergents import ConvergentTable

logger = logging.getLogger(__name__)


@dataclass
class GiantSet:
    """One completed giant-step set."""

    anchor_q: int
    partial_quotient: int
    next_q: int


@dataclass
class ThetaResult:
    """Everything a circle computation produces.

    ``theta`` is None only when the polygon closes; ``rational`` then holds
    the exact ratio.
    """

    pair: CirclePair
    table: ConvergentTable
    records: list[RecordTriple]
    theta: mpf | None = None
    rational: Fraction | None = None
    closure_index: int | None = None
    baby_steps: int = 0
    giant_sets: list[GiantSet] = field(default_factory=list)
    delta: mpf | None = None
    working_digits: int = 0


@dataclass
class IntegralResult:
    """F(psi, k) obtained as beta * K from the complementary circle pair."""

    spec: IntegralSpec
    ratio: ThetaResult
    beta: mpf
    complete: mpf
    value: mpf


def _closed(pair: CirclePair, signal: ClosureDetected, wd: int) -> ThetaResult:
    q_seq = [record.q for record in signal.records]
    rational = cf_engine.closure_fraction(signal.index, q_seq)
    table = cf_engine.recover_numerators([q for q in q_seq if q < signal.index] + [signal.index])
    logger.info("Ratio is rational: %s", rational)
    return ThetaResult(
        pair=pair,
        table=table,
        records=list(signal.records),
        rational=rational,
        closure_index=signal.index,
        baby_steps=signal.index,
        working_digits=wd,
    )


def run_giant_sets(
    pair: CirclePair,
    chain: list[RecordTriple],
    *,
    until_delta: mpf | None = None,
    until_count: int | None = None,
    max_partial_quotient: int = 1_000_000,
) -> list[GiantSet]:
    """Extend ``chain`` (seed record first) with giant-step sets in place.

    Stops once the second-to-last record is at most ``until_delta`` or the
    chain holds ``until_count`` records after the seed.

    Raises:
        ClosureDetected: If a new record vanishes to working precision
    """
    sets: list[GiantSet] = []
    zero = closure_threshold()
    while True:
        if until_delta is not None and chain[-2].gamma <= until_delta:
            return sets
        if until_count is not None and len(chain) - 1 >= until_count:
            return sets
        state = GiantStepState.start(pair, chain[-2], chain[-1])
        record, steps = curve_ops.giant_step_set(
            state, max_partial_quotient=max_partial_quotient
        )
        sets.append(GiantSet(anchor_q=chain[-1].q, partial_quotient=steps, next_q=record.q))
        if record.gamma < zero:
            raise ClosureDetected(record.q, chain[1:])
        chain.append(record)


def extend_records(
    pair: CirclePair,
    records: list[RecordTriple],
    count: int,
    *,
    max_partial_quotient: int = 1_000_000,
) -> list[RecordTriple]:
    """Continue a record list (without seed) to ``count`` records by giant steps."""
    chain = [circle_core.seed_record(pair), *records]
    run_giant_sets(pair, chain, until_count=count, max_partial_quotient=max_partial_quotient)
    return chain[1:]


def solve_pair(
    pair: CirclePair,
    digits: int,
    *,
    handoff: float = 0.1,
    max_iter: int = 10_000_000,
    max_partial_quotient: int = 1_000_000,
    guard: int = 4,
) -> ThetaResult:
    """Run the full pipeline at the current working precision."""
    wd = mp.dps
    try:
        records = circle_core.baby_step_scan(pair, handoff, max_iter)
    except ClosureDetected as signal:
        return _closed(pair, signal, wd)
    baby_steps = records[-1].q
    logger.info("Baby steps handed off at q=%d", baby_steps)

    chain = [circle_core.seed_record(pair), *records]
    threshold = curve_ops.refinement_threshold(digits, guard)
    try:
        sets = run_giant_sets(
            pair, chain, until_delta=threshold, max_partial_quotient=max_partial_quotient
        )
    except ClosureDetected as signal:
        return _closed(pair, signal, wd)

    table = cf_engine.recover_numerators([record.q for record in chain[1:]])
    rows = table.with_seeds()
    older, newer = rows[-2], rows[-1]
    theta = curve_ops.refine_theta(
        (chain[-2], chain[-1]),
        ((older.p, older.q), (newer.p, newer.q)),
        digits=digits,
        guard=guard,
    )
    return ThetaResult(
        pair=pair,
        table=table,
        records=chain[1:],
        theta=theta,
        baby_steps=baby_steps,
        giant_sets=sets,
        delta=chain[-2].gamma,
        working_digits=wd,
    )


@retry_with_precision()
def compute_theta(
    c: str,
    r: str,
    digits: int = 24,
    *,
    scale: float = 1,
    **options: float,
) -> ThetaResult:
    """Ratio for the nested pair (c, r) given as decimal strings.

    Inputs are parsed at the working precision times ``scale``, so a retry
    after a precision failure rebuilds them with more digits.
    """
    with mp.workdps(int(scale * working_digits(digits))):
        pair = CirclePair.from_center_radius(c, r)
        return solve_pair(pair, digits, **options)


@retry_with_precision()
def compute_integral(
    psi: str,
    k2: str,
    digits: int = 24,
    *,
    scale: float = 1,
    **options: float,
) -> IntegralResult:
    """F(psi, k) through the circle pair built for pi/2 - psi.

    That pair's first vertex sits at pi - 2 psi, so 1 - 2 theta is the ratio
    F(psi, k) / F(pi/2, k).
    """
    with mp.workdps(int(scale * working_digits(digits))):
        spec = IntegralSpec.create(psi, k2, digits)
        pair = circle_core.params_from_integral(
            IntegralSpec(psi=mp.pi / 2 - spec.psi, k2=spec.k2, digits=digits)
        )
        ratio = solve_pair(pair, digits, **options)
        theta = ratio.theta
        if theta is None:
            theta = mpf(ratio.rational.numerator) / ratio.rational.denominator
        beta = 1 - 2 * theta
        complete = oracle.complete_F(spec.k2)
        return IntegralResult(
            spec=spec, ratio=ratio, beta=beta, complete=complete, value=beta * complete
        )
