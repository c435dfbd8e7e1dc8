"""Exact integer primitives: factorials, binomials, unsigned Stirling numbers
of the first kind, integer partitions, and counts of permutations built from
odd cycles only.

All results are exact Python integers; nothing here ever touches floating
point.  Memoized tables grow lazily and serialize their growth so completed
entries can be read concurrently.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache


def factorial(n: int) -> int:
    """n! for n >= 0."""
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """n-choose-k, with the convention that out-of-range k gives 0."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(n: int, k: int) -> int:
    """(n)_k = n(n-1)...(n-k+1); 0 when k > n."""
    return math.perm(n, k)


class StirlingTable:
    """Triangular table of unsigned Stirling numbers of the first kind.

    Entry (n, k) counts permutations of n elements having exactly k cycles.
    Rows are built with the recurrence
    ``C(n, k) = C(n-1, k-1) + (n-1) * C(n-1, k)`` and grown lazily up to the
    largest n requested.  Growth is serialized; completed rows are immutable.
    """

    def __init__(self, max_n: int = 0):
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()
        if max_n > 0:
            self.grow(max_n)

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def grow(self, max_n: int) -> None:
        with self._lock:
            while len(self._rows) <= max_n:
                n = len(self._rows)
                prev = self._rows[-1]
                row = [0] * (n + 1)
                for k in range(1, n + 1):
                    row[k] = prev[k - 1] + (n - 1) * (prev[k] if k <= n - 1 else 0)
                self._rows.append(row)

    def value(self, n: int, k: int) -> int:
        if n < 0:
            raise ValueError(f"Stirling numbers require n >= 0, got {n}")
        if k < 0 or k > n or (k == 0 and n > 0):
            return 0
        if n > self.max_n:
            self.grow(n)
        return self._rows[n][k]


_STIRLING = StirlingTable()


def stirling_first_unsigned(n: int, k: int) -> int:
    """Number of permutations of n elements with exactly k cycles.

    Out-of-range k (k <= 0 < n or k > n) gives 0; the empty permutation
    counts once, so the (0, 0) entry is 1.
    """
    return _STIRLING.value(n, k)


@dataclass(frozen=True)
class Partition:
    """An integer partition stored as its parts in weakly decreasing order."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Map part size -> number of occurrences."""
        mult: dict[int, int] = {}
        for p in self.parts:
            mult[p] = mult.get(p, 0) + 1
        return mult

    def __repr__(self):
        return f"Partition({list(self.parts)})"


def partitions_of(g: int) -> list[Partition]:
    """All partitions of g, each exactly once; g = 0 gives the empty one."""
    if g < 0:
        raise ValueError(f"cannot partition a negative integer: {g}")
    result: list[Partition] = []

    def rec(remaining: int, max_part: int, acc: list[int]) -> None:
        if remaining == 0:
            result.append(Partition(tuple(acc)))
            return
        for part in range(min(max_part, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(g, g, [])
    return result


def _odd_partitions(total: int, num_parts: int, max_part: int):
    """Yield partitions of `total` into exactly `num_parts` odd parts,
    parts weakly decreasing, as lists."""
    if num_parts == 0:
        if total == 0:
            yield []
        return
    # largest part is odd, at most max_part, and must leave enough room
    # for the remaining num_parts - 1 parts (each >= 1)
    top = min(max_part, total - (num_parts - 1))
    if top % 2 == 0:
        top -= 1
    for part in range(top, 0, -2):
        for rest in _odd_partitions(total - part, num_parts - 1, part):
            yield [part] + rest


def _cycle_type_count(n: int, parts: list[int]) -> int:
    """Permutations of [n] whose cycle lengths are exactly `parts`."""
    denom = 1
    run_len = 0
    prev = None
    for p in parts:
        denom *= p
        if p == prev:
            run_len += 1
        else:
            run_len = 1
            prev = p
        denom *= run_len
    return math.factorial(n) // denom


@lru_cache(maxsize=None)
def odd_cycle_permutations(n: int, g: int) -> int:
    """Number of permutations of [n] consisting of exactly n - 2g odd cycles.

    The empty permutation gives the (0, 0) entry the value 1; any (n, g)
    outside the range 0 <= 2g < n (for n >= 1) gives 0, so recurrences can
    sum over this function freely.
    """
    if n < 0 or g < 0:
        return 0
    if n == 0:
        return 1 if g == 0 else 0
    num_cycles = n - 2 * g
    if num_cycles <= 0:
        return 0
    total = 0
    for parts in _odd_partitions(n, num_cycles, n):
        total += _cycle_type_count(n, parts)
    return total


def odd_cycle_recurrence_sum(n: int, g: int) -> int:
    """The odd-cycle count for n + 1 elements, via classification by the
    length of the cycle containing a marked element.

    Computes ``O(n, g) + sum_k (n)_{2k} * O(n - 2k, g - k)`` for k = 1..g,
    which must equal ``odd_cycle_permutations(n + 1, g)``.
    """
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    total = odd_cycle_permutations(n, g)
    for k in range(1, g + 1):
        total += falling_factorial(n, 2 * k) * odd_cycle_permutations(n - 2 * k, g - k)
    return total


def odd_cycle_recurrence_three_term(n: int, g: int) -> int:
    """The odd-cycle count for n + 1 elements, via the three-term form
    ``O(n, g) + n(n-1) * O(n-1, g-1)``.

    Must equal ``odd_cycle_permutations(n + 1, g)``.
    """
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    return odd_cycle_permutations(n, g) + n * (n - 1) * odd_cycle_permutations(n - 1, g - 1)
