"""Recurrence-based table builders for the one-face map counts A(n, g).

Two independent recurrences are implemented: the three-term Harer-Zagier
recurrence seeded only by A(0, 0) = 1, and Chapuy's genus recursion seeded
per-n by the Catalan number at genus zero.  Every division the recurrences
perform is checked for exactness; a remainder converts silent corruption
into a hard error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closed_forms import GenusTable, catalan, genus_range
from .combinatorics import binomial
from .errors import NonIntegerResult


@dataclass(frozen=True)
class RecurrenceTable:
    """Dense table of counts A(n, g) for 0 <= n <= n_max, with a record of
    the base cases that seeded it.  Queries outside 0 <= 2g <= n return 0."""

    n_max: int
    values: tuple[tuple[int, ...], ...]  # values[n][g]
    seed_spec: str

    def value(self, n: int, g: int) -> int:
        if n < 0 or n > self.n_max or g < 0 or 2 * g > n:
            return 0
        return self.values[n][g]

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0 or n > self.n_max:
            raise ValueError(f"n = {n} outside table range 0..{self.n_max}")
        return self.values[n]

    def genus_table(self, n: int, method: str) -> GenusTable:
        return GenusTable(
            n=n, counts={g: self.value(n, g) for g in genus_range(n)}, method=method
        )


def _exact_div(numerator: int, divisor: int, context: str) -> int:
    q, r = divmod(numerator, divisor)
    if r != 0:
        raise NonIntegerResult(f"{context}: {numerator} not divisible by {divisor}")
    return q


def hz_recurrence_table(n_max: int) -> RecurrenceTable:
    """Build counts with the Harer-Zagier three-term recurrence

        (n+1) A(n,g) = 2(2n-1) A(n-1,g) + (2n-1)(n-1)(2n-3) A(n-2,g-1)

    from the single seed A(0, 0) = 1, treating out-of-range terms as 0."""
    if n_max < 1:
        raise ValueError(f"requires n_max >= 1, got {n_max}")
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(1, n_max + 1):
        row = []
        for g in genus_range(n):
            prev1 = rows[n - 1][g] if g <= (n - 1) // 2 else 0
            prev2 = 0
            if n >= 2 and 1 <= g and g - 1 <= (n - 2) // 2:
                prev2 = rows[n - 2][g - 1]
            numerator = 2 * (2 * n - 1) * prev1 + (2 * n - 1) * (n - 1) * (2 * n - 3) * prev2
            row.append(_exact_div(numerator, n + 1, f"hz recurrence at ({n}, {g})"))
        rows.append(tuple(row))
    return RecurrenceTable(n_max=n_max, values=tuple(rows), seed_spec="A(0,0)=1")


def chapuy_table(n_max: int) -> RecurrenceTable:
    """Build counts with Chapuy's recursion

        2g A(n,g) = sum_{k=1}^{g} C(n+1-2(g-k), 2k+1) A(n, g-k)

    seeded at genus zero by A(n, 0) = catalan(n); the recursion itself is
    silent at g = 0 (both sides vanish)."""
    if n_max < 1:
        raise ValueError(f"requires n_max >= 1, got {n_max}")
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(1, n_max + 1):
        row = [catalan(n)]
        for g in range(1, n // 2 + 1):
            total = 0
            for k in range(1, g + 1):
                total += binomial(n + 1 - 2 * (g - k), 2 * k + 1) * row[g - k]
            row.append(_exact_div(total, 2 * g, f"chapuy recursion at ({n}, {g})"))
        rows.append(tuple(row))
    return RecurrenceTable(
        n_max=n_max, values=tuple(rows), seed_spec="A(n,0)=catalan(n)"
    )


def tables_agree(t1: RecurrenceTable, t2: RecurrenceTable) -> bool:
    """True iff both tables hold identical entries everywhere."""
    if t1.n_max != t2.n_max:
        raise ValueError(f"n_max mismatch: {t1.n_max} != {t2.n_max}")
    return t1.values == t2.values
