"""Continued-fraction convergent tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

SEED_ROWS = ((-1, 0, 1), (0, 1, 0))


@dataclass(frozen=True)
class ConvergentRow:
    """One row (j, q_j, a_j, p_j).

    ``a`` is None for provisional rows whose partial quotient failed the
    divisibility check.
    """

    j: int
    q: int
    a: int | None
    p: int
    provisional: bool = False

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def to_dict(self) -> dict[str, Any]:
        row: dict[str, Any] = {"j": self.j, "q": self.q, "a": self.a, "p": self.p}
        if self.provisional:
            row["provisional"] = True
        return row


@dataclass
class ConvergentTable:
    """Rows j >= 1 of best-approximation denominators and numerators.

    The virtual rows (j=-1: q=0, p=1) and (j=0: q=1, p=0) are implied.
    """

    rows: list[ConvergentRow] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, index: int) -> ConvergentRow:
        return self.rows[index]

    @property
    def denominators(self) -> list[int]:
        return [row.q for row in self.rows]

    @property
    def numerators(self) -> list[int]:
        return [row.p for row in self.rows]

    @property
    def partial_quotients(self) -> list[int | None]:
        return [row.a for row in self.rows]

    def with_seeds(self) -> list[ConvergentRow]:
        """Rows including the two virtual seed rows."""
        seeds = [ConvergentRow(j=j, q=q, a=None, p=p) for j, q, p in SEED_ROWS]
        return seeds + self.rows

    def last(self) -> ConvergentRow:
        return self.rows[-1]

    def to_list(self) -> list[dict[str, Any]]:
        return [row.to_dict() for row in self.rows]
