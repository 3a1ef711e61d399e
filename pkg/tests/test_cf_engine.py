from __future__ import annotations

from fractions import Fraction

import pytest
from conftest import (
    CIRCLE_P,
    CIRCLE_Q,
    CIRCLE_THETA,
    DIAGONAL_P,
    DIAGONAL_Q,
    ELLIPSE_A,
    ELLIPSE_P,
    ELLIPSE_Q,
    ZERO_DIAGONAL_P,
    ZERO_DIAGONAL_Q,
)
from mpmath import mpf

from poncelet_ratio.services import cf_engine
from poncelet_ratio.utils.exceptions import ClosureDetected, ConvergentError


@pytest.mark.parametrize(
    ("q_seq", "p_seq"),
    [
        (CIRCLE_Q, CIRCLE_P),
        (ELLIPSE_Q, ELLIPSE_P),
        (ZERO_DIAGONAL_Q, ZERO_DIAGONAL_P),
        (DIAGONAL_Q, DIAGONAL_P),
    ],
)
def test_recover_numerators(q_seq, p_seq):
    table = cf_engine.recover_numerators(q_seq)
    assert table.denominators == q_seq
    assert table.numerators == p_seq
    assert not any(row.provisional for row in table)


def test_partial_quotients():
    assert cf_engine.recover_numerators(ELLIPSE_Q).partial_quotients == ELLIPSE_A


def test_last_convergent_of_the_circle_table():
    last = cf_engine.recover_numerators(CIRCLE_Q).last()
    assert last.fraction == Fraction(1131843406011, 2702367633671)


def test_non_convergent_sequence_is_rejected():
    with pytest.raises(ConvergentError):
        cf_engine.recover_numerators([3, 5, 8])
    with pytest.raises(ConvergentError):
        cf_engine.recover_numerators([5, 3])


def test_unit_denominator_is_a_valid_first_row():
    table = cf_engine.recover_numerators([1])
    assert table.denominators == [1]
    assert table.partial_quotients == [1]
    assert table.numerators == [1]
    assert cf_engine.recover_numerators([1, 2, 3]).numerators == [1, 1, 2]
    with pytest.raises(ConvergentError):
        cf_engine.recover_numerators([1, 1])


def test_convergent_bounds_at_a_rational_endpoint():
    table = cf_engine.recover_numerators(CIRCLE_Q[:4])
    exact = cf_engine.convergent_bounds(table, mpf(5) / 12)
    assert exact.passed
    assert exact.max_residual < mpf(10) ** -60
    longer = cf_engine.recover_numerators(CIRCLE_Q[:6])
    verdict = cf_engine.convergent_bounds(longer, mpf(5) / 12)
    assert not verdict.passed
    assert verdict.first_violation == 6


def test_provisional_head():
    table = cf_engine.recover_numerators(
        [3, 5, 8], allow_provisional=True, rotation=mpf(3) / 8
    )
    assert table[1].provisional
    assert table[1].a is None
    assert table[1].p == 2
    assert table[2].a == 1
    assert table[2].fraction == Fraction(3, 8)
    assert table.to_list()[1] == {"j": 2, "q": 5, "a": None, "p": 2, "provisional": True}


def test_provisional_rows_only_at_the_head():
    with pytest.raises(ConvergentError):
        cf_engine.recover_numerators([2, 5, 7, 13], allow_provisional=True)


def test_convergent_bounds_hold_for_the_circle_ratio():
    table = cf_engine.recover_numerators(CIRCLE_Q[:14])
    verdict = cf_engine.convergent_bounds(table, mpf(CIRCLE_THETA), tol=mpf(10) ** -15)
    assert verdict.passed
    assert verdict.first_violation is None
    assert verdict.max_residual < mpf(10) ** -10


def test_convergent_bounds_catch_a_wrong_ratio():
    table = cf_engine.recover_numerators(CIRCLE_Q[:14])
    verdict = cf_engine.convergent_bounds(table, mpf(CIRCLE_THETA) + mpf("1e-4"))
    assert not verdict.passed
    assert verdict.first_violation is not None


def test_closure_detection():
    assert cf_engine.detect_rational_closure(None) is None
    assert cf_engine.detect_rational_closure(ClosureDetected(7)) == 7


def test_closure_fraction():
    assert cf_engine.closure_fraction(3, []) == Fraction(1, 3)
    assert cf_engine.closure_fraction(8, [2, 3]) == Fraction(3, 8)
    assert cf_engine.closure_fraction(7, [2, 5, 6], rotation=mpf(2) / 7) == Fraction(2, 7)


def test_expand_fraction():
    table = cf_engine.expand_fraction(Fraction(3, 8))
    assert table.denominators == [2, 3, 8]
    assert table.numerators == [1, 1, 3]


def test_expand_real_matches_the_record_table():
    table = cf_engine.expand_fraction(mpf(CIRCLE_THETA), max_terms=15)
    assert table.denominators == CIRCLE_Q[:14]
    assert table.numerators == CIRCLE_P[:14]


def test_continued_fraction_terms():
    assert list(cf_engine.continued_fraction_terms(Fraction(13, 5))) == [2, 1, 1, 2]
