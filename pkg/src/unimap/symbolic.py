"""Exact rational polynomial and truncated power-series algebra, the backward
shift operator E: f(x) -> f(x - 1), central-difference identities for
polynomials of the form p(E)(x + n)_{n+1}, and real-rootedness / log-concavity
certificates via Sturm sequences.

Every coefficient is a `fractions.Fraction`; all arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

from .errors import DegenerateOperator, PremiseViolation

Scalar = Union[int, Fraction]


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are indexed by exponent; trailing zeros are trimmed, and the
    zero polynomial has an empty coefficient tuple (degree -1).  Instances are
    immutable and safe to share.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar = 1) -> "Polynomial":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls([0] * exponent + [coefficient])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        div = other._coeffs
        dd = len(div) - 1
        lead = div[-1]
        if len(rem) - 1 < dd:
            return Polynomial(), Polynomial(rem)
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / lead
            quot[i - dd] = q
            for j in range(dd + 1):
                rem[i - dd + j] -= q * div[j]
        return Polynomial(quot), Polynomial(rem)

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self._coeffs)][1:])

    def shifted(self, c: Scalar) -> "Polynomial":
        """Exact composition f(x + c)."""
        acc: list[Fraction] = []
        for coeff in reversed(self._coeffs):
            # acc <- acc * (x + c) + coeff
            nxt = [Fraction(0)] * (len(acc) + 1)
            for i, a in enumerate(acc):
                nxt[i + 1] += a
                nxt[i] += a * c
            nxt[0] += coeff
            acc = nxt
        return Polynomial(acc)

    def reflected(self) -> "Polynomial":
        """f(-x)."""
        return Polynomial([c if i % 2 == 0 else -c for i, c in enumerate(self._coeffs)])

    def stretched(self, m: int) -> "Polynomial":
        """f(x^m) for m >= 1."""
        if m < 1:
            raise ValueError("stretch factor must be >= 1")
        out = [Fraction(0)] * (m * self.degree + 1) if self._coeffs else []
        for i, c in enumerate(self._coeffs):
            out[m * i] = c
        return Polynomial(out)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self._coeffs[-1]
        return Polynomial([c / lead for c in self._coeffs])

    def __repr__(self):
        if self.is_zero:
            return "Polynomial(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "Polynomial(" + " + ".join(terms) + ")"


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor via the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def falling_factorial_poly(offset: int, length: int) -> Polynomial:
    """(x + offset)(x + offset - 1)...(x + offset - length + 1).

    Length 0 gives the constant 1.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    p = Polynomial([1])
    for i in range(length):
        p = p * Polynomial([offset - i, 1])
    return p


class TruncatedSeries:
    """Power series with exact rational coefficients, truncated at a fixed
    order: coefficients for x^0 .. x^order are stored, everything above is
    discarded by all operations."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, coeffs: Sequence[Scalar], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(cs) < order + 1:
            cs += [Fraction(0)] * (order + 1 - len(cs))
        else:
            cs = cs[: order + 1]
        self._order = order
        self._coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> Fraction:
        if k < 0 or k > self._order:
            raise ValueError(f"coefficient {k} outside truncation order {self._order}")
        return self._coeffs[k]

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._order == other._order and self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self._order, self._coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self._order, other._order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self._coeffs[: order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other._coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out, order)

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be invertible."""
        a0 = self._coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        inv = [Fraction(0)] * (self._order + 1)
        inv[0] = 1 / a0
        for k in range(1, self._order + 1):
            s = Fraction(0)
            for i in range(1, k + 1):
                s += self._coeffs[i] * inv[k - i]
            inv[k] = -s / a0
        return TruncatedSeries(inv, self._order)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("negative powers not supported; use reciprocal()")
        result = TruncatedSeries([1], self._order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __repr__(self):
        return f"TruncatedSeries({list(self._coeffs)}, order={self._order})"


def tanh_ratio_series(order: int) -> TruncatedSeries:
    """Series of (x/2) / tanh(x/2) to the given order.

    Assembled as cosh(x/2) divided by sinh(x/2)/(x/2), both of which are
    entire even series, so the apparent pole at 0 never arises.  All
    odd-order coefficients are exactly zero.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    cosh_half = [Fraction(0)] * (order + 1)
    sinh_ratio = [Fraction(0)] * (order + 1)
    for k in range(0, order // 2 + 1):
        cosh_half[2 * k] = Fraction(1, 4**k * factorial(2 * k))
        sinh_ratio[2 * k] = Fraction(1, 4**k * factorial(2 * k + 1))
    num = TruncatedSeries(cosh_half, order)
    den = TruncatedSeries(sinh_ratio, order)
    return num * den.reciprocal()


class OperatorPolynomial:
    """A polynomial p(t) = a_0 + a_1 t + ... + a_n t^n meant to act through
    the backward shift: p(E) f(x) = sum_k a_k f(x - k)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def binomial_power(cls, n: int) -> "OperatorPolynomial":
        """(1 + t)^n."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        return cls([comb(n, k) for k in range(n + 1)])

    @classmethod
    def one_minus_square_power(cls, n: int) -> "OperatorPolynomial":
        """(1 - t^2)^n."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        cs = [Fraction(0)] * (2 * n + 1)
        for k in range(n + 1):
            cs[2 * k] = Fraction((-1) ** k * comb(n, k))
        return cls(cs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def scaled(self, factor: Scalar) -> "OperatorPolynomial":
        return OperatorPolynomial([c * factor for c in self._coeffs])

    def __eq__(self, other):
        if isinstance(other, OperatorPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"OperatorPolynomial({list(self._coeffs)})"


def apply_shift_operator(p: OperatorPolynomial, f: Polynomial) -> Polynomial:
    """sum_k a_k f(x - k), computed by exact composition."""
    result = Polynomial()
    for k, a in enumerate(p.coeffs):
        if a == 0:
            continue
        result = result + a * f.shifted(-k)
    return result


def shift_operator_polynomial(n: int) -> Polynomial:
    """The genus generating polynomial of rooted one-face maps with n edges,
    in operator form: (2n)!/(2^n n! (n+1)!) * (1 + E)^n (x + n)_{n+1}."""
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    op = OperatorPolynomial.binomial_power(n)
    base = falling_factorial_poly(n, n + 1)
    scale = Fraction(factorial(2 * n), 2**n * factorial(n) * factorial(n + 1))
    return scale * apply_shift_operator(op, base)


def stanley_polynomial(n: int) -> Polynomial:
    """The same generating polynomial via Stanley's operator form:
    1/(2^n n! (2n+1)) * (1 - E^2)^n (x + 2n)_{2n+1}.

    Collapses from apparent degree 2n + 1 to exact degree n + 1.
    """
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    op = OperatorPolynomial.one_minus_square_power(n)
    base = falling_factorial_poly(2 * n, 2 * n + 1)
    scale = Fraction(1, 2**n * factorial(n) * (2 * n + 1))
    return scale * apply_shift_operator(op, base)


def _operator_ratio(p: OperatorPolynomial) -> Fraction:
    """a_1 / a_0, guarding the degenerate ends."""
    n = p.degree
    if n < 0 or p.coefficient(0) == 0 or p.coefficient(n) == 0:
        raise DegenerateOperator(
            "operator must have nonzero constant and leading coefficients"
        )
    return p.coefficient(1) / p.coefficient(0)


def central_difference_premises_hold(p: OperatorPolynomial) -> bool:
    """Check the coefficient conditions under which p(E)(x + n)_{n+1}
    satisfies a three-point central-difference identity:
    a_1/a_0 = a_{n-1}/a_n, and k a_k + (n-k+2) a_{k-2} = (a_1/a_0) a_{k-1}
    for 2 <= k <= n.  Degree 0 operators satisfy them vacuously.
    """
    n = p.degree
    ratio = _operator_ratio(p)
    if n == 0:
        return True
    if ratio != p.coefficient(n - 1) / p.coefficient(n):
        return False
    for k in range(2, n + 1):
        lhs = k * p.coefficient(k) + (n - k + 2) * p.coefficient(k - 2)
        if lhs != ratio * p.coefficient(k - 1):
            return False
    return True


def central_difference_polynomial(p: OperatorPolynomial, n: int) -> Polynomial:
    """F(x) = p(E)(x + n)_{n+1}."""
    return apply_shift_operator(p, falling_factorial_poly(n, n + 1))


def central_difference_identity_holds(p: OperatorPolynomial, n: int) -> bool:
    """Verify (n + 2 + a_1/a_0) F(x) = x (F(x+1) - F(x-1)) as an exact
    polynomial identity, where F = p(E)(x + n)_{n+1}."""
    if p.degree != n or not central_difference_premises_hold(p):
        raise PremiseViolation(
            "operator must have degree n and satisfy the coefficient conditions"
        )
    ratio = _operator_ratio(p)
    f = central_difference_polynomial(p, n)
    lhs = (n + 2 + ratio) * f
    rhs = Polynomial([0, 1]) * (f.shifted(1) - f.shifted(-1))
    return (lhs - rhs).is_zero


def central_difference_coefficient_identity_holds(p: OperatorPolynomial, n: int) -> bool:
    """Verify the coefficient-level consequence of the central-difference
    identity: with b_k = [x^k] p(E)(x + n)_{n+1},

        ((n + 2 + a_1/a_0)/2 - k) b_k = sum_{j>=1} C(k + 2j, 2j + 1) b_{k+2j}

    for every k."""
    if p.degree != n or not central_difference_premises_hold(p):
        raise PremiseViolation(
            "operator must have degree n and satisfy the coefficient conditions"
        )
    ratio = _operator_ratio(p)
    f = central_difference_polynomial(p, n)
    half = Fraction(n + 2 + ratio, 2)
    for k in range(f.degree + 1):
        lhs = (half - k) * f.coefficient(k)
        rhs = Fraction(0)
        j = 1
        while k + 2 * j <= f.degree:
            rhs += comb(k + 2 * j, 2 * j + 1) * f.coefficient(k + 2 * j)
            j += 1
        if lhs != rhs:
            return False
    return True


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_changes(signs: list[int]) -> int:
    filtered = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(filtered, filtered[1:]) if a * b < 0)


def _sturm_chain(p: Polynomial) -> list[Polynomial]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero:
        chain.pop()
    return chain


def sturm_negative_real_rooted(p: Polynomial) -> bool:
    """True iff every root of p is real and nonpositive.

    Factors out the maximal power of x, reduces the remainder to its
    squarefree part, and counts its distinct real roots in (-inf, 0) with a
    Sturm sequence; the polynomial qualifies iff that count equals the
    squarefree degree.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no root locus")
    coeffs = list(p.coeffs)
    low = 0
    while coeffs[low] == 0:
        low += 1
    q = Polynomial(coeffs[low:])
    if q.degree == 0:
        return True
    square_free = divmod(q, polynomial_gcd(q, q.derivative()))[0]
    chain = _sturm_chain(square_free)
    # signs at -infinity follow the leading coefficients and degree parity
    at_neg_inf = [_sign(c.leading_coefficient()) * (-1) ** c.degree for c in chain]
    at_zero = [_sign(c.coefficient(0)) for c in chain]
    roots_below_zero = _sign_changes(at_neg_inf) - _sign_changes(at_zero)
    return roots_below_zero == square_free.degree


def log_concave(seq: Sequence[int]) -> bool:
    """True iff seq[g]^2 >= seq[g-1] * seq[g+1] at every interior index."""
    if not seq:
        raise ValueError("sequence must be nonempty")
    if any(v < 0 for v in seq):
        raise ValueError("sequence entries must be nonnegative")
    return all(
        seq[i] * seq[i] >= seq[i - 1] * seq[i + 1] for i in range(1, len(seq) - 1)
    )
