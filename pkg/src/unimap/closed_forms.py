"""Closed-form counts of rooted one-face maps with n edges and genus g, and
the associated genus generating polynomials.

Four independent routes to the same integer are implemented here:

* the Lehman-Walsh partition sum,
* the odd-cycle permutation form,
* a signed convolution of unsigned Stirling numbers of the first kind,
* the Harer-Zagier series-coefficient formula,

plus two explicit forms of the generating polynomial (the Harer-Zagier
binomial sum and the shifted-binomial convolution form).  Intermediate
arithmetic is exact rational throughout; integrality of every final count is
asserted, never assumed, because individual summands are non-integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import combinatorics as comb
from .errors import NonIntegerResult, ParityViolation
from .symbolic import Polynomial, falling_factorial_poly, tanh_ratio_series


@dataclass(frozen=True)
class GenusTable:
    """Counts of rooted one-face maps with a fixed number of edges, indexed
    by genus.  Only the legal genus range 0 <= g <= floor(n/2) is stored;
    queries outside it return zero."""

    n: int
    counts: dict[int, int]
    method: str = "unspecified"

    def get(self, g: int) -> int:
        return self.counts.get(g, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def max_genus(self) -> int:
        return self.n // 2


def genus_range(n: int) -> range:
    """Genera a one-face map with n edges can have."""
    return range(0, n // 2 + 1)


def _as_integer(value: Fraction, context: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResult(f"{context}: got non-integer {value}")
    return value.numerator


def catalan(n: int) -> int:
    """(2n)! / ((n+1)! n!), the genus-zero count."""
    if n < 0:
        raise ValueError(f"requires n >= 0, got {n}")
    return factorial(2 * n) // (factorial(n + 1) * factorial(n))


def _out_of_range(n: int, g: int) -> bool:
    if n < 0:
        raise ValueError(f"requires n >= 0, got {n}")
    return g < 0 or 2 * g > n


def lehman_walsh(n: int, g: int) -> int:
    """Count via the Lehman-Walsh partition sum over partitions of g.

    Each summand is a rational number; only the total is an integer, which
    is asserted before returning.  Out-of-range genus gives 0.
    """
    if _out_of_range(n, g):
        return 0
    total = Fraction(0)
    for part in comb.partitions_of(g):
        num_factors = 2 * g + part.length
        rising = 1
        for j in range(num_factors):
            rising *= n + 1 - j
        denom = 4**g
        for size, count in part.multiplicities().items():
            denom *= factorial(count) * (2 * size + 1) ** count
        total += Fraction(rising, denom)
    total *= Fraction(factorial(2 * n), factorial(n + 1) * factorial(n))
    return _as_integer(total, f"lehman_walsh({n}, {g})")


def a_via_odd_cycles(n: int, g: int) -> int:
    """Count via permutations of n + 1 elements made of odd cycles only:
    (2n)! / ((n+1)! n! 2^{2g}) * O(n+1, g)."""
    if _out_of_range(n, g):
        return 0
    o = comb.odd_cycle_permutations(n + 1, g)
    value = Fraction(factorial(2 * n) * o, factorial(n + 1) * factorial(n) * 4**g)
    return _as_integer(value, f"a_via_odd_cycles({n}, {g})")


def stirling_convolution_sum(n: int, l: int) -> int:
    """The signed double convolution of unsigned Stirling numbers

        sum_k C(n,k) sum_{i+j=l, i,j>=1} S(n-k+1, i) (-1)^{k+1-j} S(k+1, j)

    for an arbitrary total cycle count l.  Vanishes whenever l and n have
    different parity.
    """
    if n < 0:
        raise ValueError(f"requires n >= 0, got {n}")
    total = 0
    for k in range(n + 1):
        choose = comb.binomial(n, k)
        inner = 0
        for i in range(1, l):
            j = l - i
            left = comb.stirling_first_unsigned(n - k + 1, i)
            if left == 0:
                continue
            right = comb.stirling_first_unsigned(k + 1, j)
            if right == 0:
                continue
            sign = -1 if (k + 1 - j) % 2 else 1
            inner += sign * left * right
        total += choose * inner
    return total


def stirling_convolution(n: int, g: int) -> int:
    """The convolution above at total cycle count l = n + 2 - 2g; equals
    2^{n-2g} * O(n+1, g)."""
    if n < 0:
        raise ValueError(f"requires n >= 0, got {n}")
    return stirling_convolution_sum(n, n + 2 - 2 * g)


def a_via_convolution(n: int, g: int) -> int:
    """Count via the Stirling convolution: (2n)!/(2^n n! (n+1)!) times
    stirling_convolution(n, g)."""
    if _out_of_range(n, g):
        return 0
    bar = stirling_convolution(n, g)
    value = Fraction(
        factorial(2 * n) * bar, 2**n * factorial(n) * factorial(n + 1)
    )
    return _as_integer(value, f"a_via_convolution({n}, {g})")


def harer_zagier_coefficient(n: int, g: int) -> int:
    """Count via the Harer-Zagier series formula:
    (2n)! / ((n+1)! (n-2g)!) * [x^{2g}] ((x/2)/tanh(x/2))^{n+1}."""
    if _out_of_range(n, g):
        return 0
    series = tanh_ratio_series(2 * g + 2) ** (n + 1)
    coeff = series.coefficient(2 * g)
    value = Fraction(factorial(2 * n), factorial(n + 1) * factorial(n - 2 * g)) * coeff
    return _as_integer(value, f"harer_zagier_coefficient({n}, {g})")


def _binomial_poly(top_offset: int, k: int) -> Polynomial:
    """The degree-k polynomial binom(x + top_offset, k)."""
    return Fraction(1, factorial(k)) * falling_factorial_poly(top_offset, k)


def hz_polynomial(n: int) -> Polynomial:
    """Genus generating polynomial in Harer-Zagier form:
    (2n)!/(2^n n!) * sum_{k>=1} 2^{k-1} C(n, k-1) binom(x, k)."""
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    acc = Polynomial()
    for k in range(1, n + 2):
        acc = acc + (2 ** (k - 1) * comb.binomial(n, k - 1)) * _binomial_poly(0, k)
    return Fraction(factorial(2 * n), 2**n * factorial(n)) * acc


def convolution_polynomial(n: int) -> Polynomial:
    """Genus generating polynomial in shifted-binomial form:
    (2n)!/(2^n n!) * sum_{k} C(n, k) binom(x + n - k, n + 1).

    Equals hz_polynomial(n) coefficient for coefficient, and makes the
    odd/even symmetry of the polynomial evident.
    """
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    acc = Polynomial()
    for k in range(n + 1):
        acc = acc + comb.binomial(n, k) * _binomial_poly(n - k, n + 1)
    return Fraction(factorial(2 * n), 2**n * factorial(n)) * acc


def genus_table_from_polynomial(p: Polynomial, n: int, method: str = "polynomial") -> GenusTable:
    """Read the genus counts off a generating polynomial: the coefficient of
    x^{n+1-2g} is the genus-g count.

    Raises ParityViolation if any exponent of the wrong parity carries a
    nonzero coefficient, and NonIntegerResult if an extracted count is not a
    nonnegative integer.
    """
    if p.degree != n + 1:
        raise ValueError(f"expected degree {n + 1}, got {p.degree}")
    counts: dict[int, int] = {}
    for e in range(n + 2):
        c = p.coefficient(e)
        if (n + 1 - e) % 2 != 0:
            if c != 0:
                raise ParityViolation(
                    f"coefficient of x^{e} must vanish for n = {n}, got {c}"
                )
            continue
        g = (n + 1 - e) // 2
        value = _as_integer(c, f"coefficient of x^{e}")
        if value < 0:
            raise NonIntegerResult(f"coefficient of x^{e} is negative: {value}")
        if g in genus_range(n):
            counts[g] = value
        elif value != 0:
            raise ValueError(f"nonzero count at impossible genus {g}: {value}")
    return GenusTable(n=n, counts=counts, method=method)


def genus_table(n: int, method: str = "lehman-walsh") -> GenusTable:
    """Full genus table for n edges by any of the per-entry formulas."""
    fn = {
        "lehman-walsh": lehman_walsh,
        "odd-cycles": a_via_odd_cycles,
        "convolution": a_via_convolution,
        "hz-coeff": harer_zagier_coefficient,
    }[method]
    return GenusTable(
        n=n, counts={g: fn(n, g) for g in genus_range(n)}, method=method
    )


def h_polynomial(table: GenusTable) -> Polynomial:
    """The companion polynomial H(x) = sum_g A(n, g) x^{floor((n+1)/2) - g},
    whose roots are all real and nonpositive."""
    top = (table.n + 1) // 2
    coeffs = [Fraction(0)] * (top + 1)
    for g, value in table.counts.items():
        coeffs[top - g] = Fraction(value)
    return Polynomial(coeffs)
