"""Continued-fraction bookkeeping for record denominators."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from mpmath import mp, mpf

from ..models.convergents import SEED_ROWS, ConvergentRow, ConvergentTable
from ..utils.exceptions import ClosureDetected, ConvergentError
from ..utils.precision import tolerance

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundsVerdict:
    """Result of checking a candidate ratio against a convergent table.

    Attributes:
        passed: True when every consecutive pair of rows brackets theta and
            satisfies the determinant identity
        first_violation: Index j of the first failing row, if any
        max_residual: Largest identity residual seen
    """

    passed: bool
    first_violation: int | None
    max_residual: mpf


def recover_numerators(
    q_seq: Sequence[int],
    *,
    allow_provisional: bool = False,
    rotation: mpf | None = None,
) -> ConvergentTable:
    """Rebuild partial quotients and numerators from record denominators.

    Uses a_j = (q_j - q_{j-2}) / q_{j-1} and p_j = a_j p_{j-1} + p_{j-2}
    with the seed rows (q, p) = (0, 1) and (1, 0).

    Args:
        q_seq: Strictly increasing record indices q_1, q_2, ...; q_1 = 1 is the
            row a_1 = 1, p_1 = 1
        allow_provisional: Accept leading rows whose quotient is not an
            integer, marking them provisional
        rotation: Ratio estimate used for the numerators of provisional rows

    Returns:
        The convergent table

    Raises:
        ConvergentError: If the sequence is not increasing, or a quotient is
            not a positive integer outside the provisional head
    """
    (_, q_2, p_2), (_, q_1, p_1) = SEED_ROWS
    rows: list[ConvergentRow] = []
    head = True
    for j, q in enumerate(q_seq, start=1):
        q = int(q)
        if q < q_1 or (q == q_1 and j > 1):
            msg = f"Denominators must increase: q_{j}={q} after {q_1}"
            raise ConvergentError(msg)
        a, rem = divmod(q - q_2, q_1)
        if rem == 0 and a >= 1:
            if j > 1:
                head = False
            p = a * p_1 + p_2
            rows.append(ConvergentRow(j=j, q=q, a=a, p=p))
        elif allow_provisional and head:
            p = int(mp.nint(q * rotation)) if rotation is not None else 0
            logger.warning("Row j=%d (q=%d) is provisional", j, q)
            rows.append(ConvergentRow(j=j, q=q, a=None, p=p, provisional=True))
        else:
            msg = f"(q_{j} - q_{j - 2}) / q_{j - 1} = ({q} - {q_2}) / {q_1} is not a positive integer"
            raise ConvergentError(msg)
        q_2, p_2, q_1, p_1 = q_1, p_1, q, p
    return ConvergentTable(rows)


def convergent_bounds(
    table: ConvergentTable, theta: mpf, *, tol: mpf | None = None
) -> BoundsVerdict:
    """Check interleaving and the identity q_n|q_{n+1}t - p_{n+1}| + q_{n+1}|q_n t - p_n| = 1.

    Rows are checked from the seed row j = 0 onward. The default tolerance
    scales with the square of the largest denominator.
    """
    rows = table.with_seeds()[1:]
    if tol is None:
        tol = tolerance() * max(1, rows[-1].q) ** 2
    worst = mpf(0)
    for prev, nxt in zip(rows, rows[1:]):
        d_prev = prev.q * theta - prev.p
        d_next = nxt.q * theta - nxt.p
        residual = abs(prev.q * abs(d_next) + nxt.q * abs(d_prev) - 1)
        worst = max(worst, residual)
        if d_prev * d_next > tol or residual > tol:
            logger.info("Bounds fail at j=%d (residual %s)", nxt.j, mp.nstr(residual, 5))
            return BoundsVerdict(passed=False, first_violation=nxt.j, max_residual=worst)
    return BoundsVerdict(passed=True, first_violation=None, max_residual=worst)


def detect_rational_closure(outcome: ClosureDetected | None) -> int | None:
    """Closure order N from a scan's closure signal, or None for no closure."""
    if outcome is None:
        return None
    return outcome.index


def closure_fraction(
    index: int, q_seq: Sequence[int], rotation: mpf | None = None
) -> Fraction:
    """Rational ratio p/N of a polygon that closes after ``index`` sides.

    The closure order is the last denominator of the expansion; earlier
    records supply the rest. Falls back to rounding the rotation estimate
    when the records do not form a convergent chain ending at N.
    """
    chain = [q for q in q_seq if q < index] + [index]
    try:
        table = recover_numerators(chain)
    except ConvergentError:
        if rotation is None:
            raise
        logger.warning("Closure records are not convergents; rounding the rotation")
        return Fraction(int(mp.nint(index * rotation)), index)
    return table.last().fraction


def continued_fraction_terms(x: Fraction | mpf, max_terms: int = 64) -> Iterator[int]:
    """Euclidean algorithm on x yielding a_0, a_1, ... until the remainder vanishes."""
    exact = isinstance(x, Fraction)
    eps = tolerance() if not exact else 0
    for _ in range(max_terms):
        n = int(x.__floor__()) if exact else int(mp.floor(x))
        yield n
        rem = x - n
        if rem == 0 or (not exact and rem < eps):
            return
        x = 1 / rem


def expand_fraction(x: Fraction | mpf, max_terms: int = 64) -> ConvergentTable:
    """Convergent table of x in (0, 1) by the integer continued-fraction expansion."""
    terms = continued_fraction_terms(x, max_terms)
    next(terms)
    (_, q_2, p_2), (_, q_1, p_1) = SEED_ROWS
    rows: list[ConvergentRow] = []
    for j, a in enumerate(terms, start=1):
        q, p = a * q_1 + q_2, a * p_1 + p_2
        rows.append(ConvergentRow(j=j, q=q, a=a, p=p))
        q_2, p_2, q_1, p_1 = q_1, p_1, q, p
    return ConvergentTable(rows)
