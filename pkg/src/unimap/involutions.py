"""Exhaustive certification of the sign-reversing involutions behind the
Stirling-convolution count.

The ground set is S = {a, 1, 2, ..., n, b} with two distinguished markers.
A weighted pair splits S into a part A containing a (but not b) carrying a
permutation alpha, and its complement carrying a permutation beta; the pair
is weighted by (-1)^{d} where d is the number of elements of the beta side
minus the number of beta-cycles.

Two weight-reversing toggles are certified here:

* ``toggle_element`` moves a single element between the sides, anchored at
  the markers; its fixed points are exactly the ANCHORED pairs (alpha fixes
  a, and b sits in an odd cycle).
* ``toggle_even_cycle`` moves the even cycle containing the smallest element
  lying on any even cycle wholesale between the sides; within the anchored
  class its fixed points are exactly the ALL_ODD pairs.

Summing weights therefore collapses onto the all-odd pairs, which are
counted by odd-cycle permutations: that chain of equalities is what
``orbit_audit`` checks mechanically, pair by pair.

Markers are encoded internally as 0 (a) and n + 1 (b), which also fixes the
total order used to select the minimal element: a below all numerals, b
above.  Cycle notation in reports uses the labels a and b.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Callable, Iterator

from itertools import combinations, permutations

from .combinatorics import binomial, factorial, odd_cycle_permutations
from .errors import BoundExceeded, NotAnchored

DEFAULT_PAIR_BOUND = 7


class PairClass(enum.Enum):
    GENERIC = "generic"
    ANCHORED = "anchored"       # alpha(a) = a and b lies in an odd cycle
    ALL_ODD = "all-odd"         # anchored, and every cycle on both sides is odd


def _cycles_of(mapping: dict[int, int]) -> tuple[tuple[int, ...], ...]:
    """Cycle decomposition of a permutation given as a dict, each cycle
    starting at its minimal element, cycles sorted by minimal element."""
    out = []
    seen: set[int] = set()
    for start in sorted(mapping):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        x = mapping[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = mapping[x]
        out.append(tuple(cycle))
    return tuple(out)


class WeightedPair:
    """A split (alpha on A, beta on S minus A) of the marked ground set,
    with its signed weight."""

    __slots__ = ("n", "alpha", "beta", "alpha_cycles", "beta_cycles")

    def __init__(self, n: int, alpha: dict[int, int], beta: dict[int, int]):
        self.n = n
        self.alpha = dict(alpha)
        self.beta = dict(beta)
        a, b = 0, n + 1
        keys_a, keys_b = set(self.alpha), set(self.beta)
        if a not in keys_a or b not in keys_b:
            raise ValueError("marker a must be on the alpha side, b on the beta side")
        if keys_a & keys_b or keys_a | keys_b != set(range(n + 2)):
            raise ValueError("alpha and beta must split the ground set")
        if set(self.alpha.values()) != keys_a or set(self.beta.values()) != keys_b:
            raise ValueError("each side must be a permutation of its support")
        self.alpha_cycles = _cycles_of(self.alpha)
        self.beta_cycles = _cycles_of(self.beta)

    @property
    def subset(self) -> frozenset[int]:
        return frozenset(self.alpha)

    @property
    def l(self) -> int:
        return len(self.alpha_cycles) + len(self.beta_cycles)

    @property
    def d(self) -> int:
        return len(self.beta) - len(self.beta_cycles)

    @property
    def weight(self) -> int:
        return -1 if self.d % 2 else 1

    def __eq__(self, other):
        if isinstance(other, WeightedPair):
            return self.n == other.n and self.alpha == other.alpha and self.beta == other.beta
        return NotImplemented

    def _label(self, x: int) -> str:
        if x == 0:
            return "a"
        if x == self.n + 1:
            return "b"
        return str(x)

    def _side_str(self, cycles: tuple[tuple[int, ...], ...]) -> str:
        return "".join(
            "(" + " ".join(self._label(x) for x in c) + ")" for c in cycles
        )

    def __repr__(self):
        return (
            f"WeightedPair[alpha={self._side_str(self.alpha_cycles)} "
            f"beta={self._side_str(self.beta_cycles)} weight={self.weight:+d}]"
        )

    def notation(self) -> str:
        return f"alpha={self._side_str(self.alpha_cycles)} beta={self._side_str(self.beta_cycles)}"


def classify(pair: WeightedPair) -> PairClass:
    """GENERIC unless alpha fixes the marker a and b's cycle is odd; within
    that anchored class, ALL_ODD when every cycle on both sides is odd."""
    b = pair.n + 1
    if pair.alpha[0] != 0:
        return PairClass.GENERIC
    b_cycle = next(c for c in pair.beta_cycles if b in c)
    if len(b_cycle) % 2 == 0:
        return PairClass.GENERIC
    if all(len(c) % 2 for c in pair.alpha_cycles) and all(
        len(c) % 2 for c in pair.beta_cycles
    ):
        return PairClass.ALL_ODD
    return PairClass.ANCHORED


def toggle_element(pair: WeightedPair) -> WeightedPair:
    """Move one element between the sides, anchored at the markers.

    Anchored pairs are fixed.  Otherwise, with B the length of b's cycle:
    if B is odd (so alpha moves a), the element alpha(a) is deleted from
    alpha and inserted between b and beta(b); if B is even, beta(b) is
    deleted from beta and inserted between a and alpha(a).  Either way the
    total cycle count is preserved per side and the weight flips sign.
    """
    if classify(pair) is not PairClass.GENERIC:
        return pair
    a, b = 0, pair.n + 1
    alpha = dict(pair.alpha)
    beta = dict(pair.beta)
    b_cycle = next(c for c in pair.beta_cycles if b in c)
    if len(b_cycle) % 2 == 1:
        # b's side is fine, so alpha(a) != a; hand that element to beta
        moved = alpha[a]
        alpha[a] = alpha[moved]
        del alpha[moved]
        beta[moved] = beta[b]
        beta[b] = moved
    else:
        # even b-cycle: pull beta(b) over to alpha, next to a
        moved = beta[b]
        beta[b] = beta[moved]
        del beta[moved]
        alpha[moved] = alpha[a]
        alpha[a] = moved
    return WeightedPair(pair.n, alpha, beta)


def toggle_even_cycle(pair: WeightedPair) -> WeightedPair:
    """Within the anchored class, move the even cycle containing the overall
    minimal even-cycle element to the other side; all-odd pairs are fixed.

    Raises NotAnchored outside the anchored class, where the map is not
    defined.
    """
    cls = classify(pair)
    if cls is PairClass.GENERIC:
        raise NotAnchored(f"pair is not anchored: {pair.notation()}")
    if cls is PairClass.ALL_ODD:
        return pair
    candidates = [
        (c, True) for c in pair.alpha_cycles if len(c) % 2 == 0
    ] + [
        (c, False) for c in pair.beta_cycles if len(c) % 2 == 0
    ]
    cycle, in_alpha = min(candidates, key=lambda item: min(item[0]))
    alpha = dict(pair.alpha)
    beta = dict(pair.beta)
    source, target = (alpha, beta) if in_alpha else (beta, alpha)
    for x in cycle:
        target[x] = source.pop(x)
    return WeightedPair(pair.n, alpha, beta)


def pair_space_size(n: int) -> int:
    """Number of weighted pairs over the ground set with n numerals:
    sum_k C(n, k) (k+1)! (n-k+1)!."""
    return sum(
        binomial(n, k) * factorial(k + 1) * factorial(n - k + 1) for k in range(n + 1)
    )


def enumerate_pairs(
    n: int, l: int | None = None, bound: int | None = None
) -> Iterator[WeightedPair]:
    """Yield every weighted pair over the ground set with n numerals, or
    only those with total cycle count l when given.  Exhaustive over
    sum_k C(n,k)(k+1)!(n-k+1)! pairs, hence bounded (default 7)."""
    limit = DEFAULT_PAIR_BOUND if bound is None else bound
    if n > limit:
        raise BoundExceeded(
            f"pair enumeration for n = {n} exceeds the bound of {limit} "
            f"({pair_space_size(n)} pairs); raise the bound explicitly to proceed"
        )
    if n < 0:
        raise ValueError(f"requires n >= 0, got {n}")
    a, b = 0, n + 1
    numerals = range(1, n + 1)
    for k in range(n + 1):
        for chosen in combinations(numerals, k):
            side_a = (a,) + chosen
            side_b = tuple(sorted(set(range(n + 2)) - set(side_a)))
            for alpha_images in permutations(side_a):
                alpha = dict(zip(side_a, alpha_images))
                for beta_images in permutations(side_b):
                    beta = dict(zip(side_b, beta_images))
                    pair = WeightedPair(n, alpha, beta)
                    if l is None or pair.l == l:
                        yield pair


def signed_sum(n: int, l: int, bound: int | None = None) -> int:
    """Total weight over all pairs with cycle count l, by enumeration."""
    return sum(p.weight for p in enumerate_pairs(n, l, bound=bound))


def signed_sum_matches_odd_cycle_count(n: int, l: int, bound: int | None = None) -> bool:
    """Check the collapsed value of the signed sum: it must equal
    2^{l-2} * O(n+1, (n+2-l)/2) when that count is nonzero, and 0 whenever
    the count vanishes or the parity of l disagrees with n.

    The odd-cycle factor is evaluated first: whenever it vanishes the
    expected value is 0 outright, so 2^{l-2} is never formed for l < 2.
    """
    total = signed_sum(n, l, bound=bound)
    if (n + 2 - l) % 2 != 0:
        return total == 0
    count = odd_cycle_permutations(n + 1, (n + 2 - l) // 2)
    if count == 0:
        return total == 0
    return total == 2 ** (l - 2) * count


@dataclass
class AuditCheck:
    """Outcome of one audited property: named, pass/fail, and when failed,
    the first witnessing pair."""

    name: str
    passed: bool = True
    counterexample: str | None = None
    detail: str | None = None

    def record_failure(self, pair: WeightedPair | None, detail: str) -> None:
        if self.passed:
            self.passed = False
            self.counterexample = pair.notation() if pair is not None else None
            self.detail = detail


@dataclass
class AuditReport:
    """Structured result of a full orbit audit over every pair for one n."""

    n: int
    total_pairs: int
    checks: list[AuditCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AuditCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total_pairs": self.total_pairs,
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "counterexample": c.counterexample,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


_TOGGLE_PROPERTIES = [
    "element_toggle_involution",
    "element_toggle_fixed_set",
    "element_toggle_preserves_cycle_count",
    "element_toggle_sign_reversing",
    "element_toggle_moves_one_element",
    "cycle_toggle_involution",
    "cycle_toggle_fixed_set",
    "cycle_toggle_preserves_cycle_count",
    "cycle_toggle_sign_reversing",
    "all_odd_weight_is_one",
    "all_odd_count_formula",
    "signed_sum_collapse",
    "pair_space_size",
]


def orbit_audit(
    n: int,
    bound: int | None = None,
    element_toggle: Callable[[WeightedPair], WeightedPair] = toggle_element,
    cycle_toggle: Callable[[WeightedPair], WeightedPair] = toggle_even_cycle,
) -> AuditReport:
    """Audit every certified property of both toggles over every pair, for
    every total cycle count at once.

    The toggle maps are injectable so a deliberately broken map can be shown
    to trip exactly the property it violates.
    """
    checks = {name: AuditCheck(name) for name in _TOGGLE_PROPERTIES}
    signed: dict[int, int] = {}
    all_odd_counts: dict[int, int] = {}
    total_pairs = 0

    for pair in enumerate_pairs(n, bound=bound):
        total_pairs += 1
        l = pair.l
        signed[l] = signed.get(l, 0) + pair.weight
        cls = classify(pair)

        image = element_toggle(pair)
        if element_toggle(image) != pair:
            checks["element_toggle_involution"].record_failure(
                pair, "applying the element toggle twice does not return the pair"
            )
        fixed = image == pair
        if fixed != (cls is not PairClass.GENERIC):
            checks["element_toggle_fixed_set"].record_failure(
                pair,
                f"fixed by the element toggle: {fixed}, but classified {cls.value}",
            )
        if image.l != l:
            checks["element_toggle_preserves_cycle_count"].record_failure(
                pair, f"cycle count changed from {l} to {image.l}"
            )
        if not fixed:
            if image.weight != -pair.weight:
                checks["element_toggle_sign_reversing"].record_failure(
                    pair, "weight not negated on a moved pair"
                )
            if (
                abs(len(image.beta) - len(pair.beta)) != 1
                or len(image.beta_cycles) != len(pair.beta_cycles)
                or len(image.alpha_cycles) != len(pair.alpha_cycles)
            ):
                checks["element_toggle_moves_one_element"].record_failure(
                    pair, "toggle must move exactly one element, keeping per-side cycle counts"
                )

        if cls is not PairClass.GENERIC:
            image2 = cycle_toggle(pair)
            if cycle_toggle(image2) != pair:
                checks["cycle_toggle_involution"].record_failure(
                    pair, "applying the cycle toggle twice does not return the pair"
                )
            fixed2 = image2 == pair
            if fixed2 != (cls is PairClass.ALL_ODD):
                checks["cycle_toggle_fixed_set"].record_failure(
                    pair,
                    f"fixed by the cycle toggle: {fixed2}, but classified {cls.value}",
                )
            if image2.l != l:
                checks["cycle_toggle_preserves_cycle_count"].record_failure(
                    pair, f"cycle count changed from {l} to {image2.l}"
                )
            if not fixed2 and image2.weight != -pair.weight:
                checks["cycle_toggle_sign_reversing"].record_failure(
                    pair, "weight not negated on a moved pair"
                )

        if cls is PairClass.ALL_ODD:
            all_odd_counts[l] = all_odd_counts.get(l, 0) + 1
            if pair.weight != 1:
                checks["all_odd_weight_is_one"].record_failure(
                    pair, f"all-odd pair has weight {pair.weight}"
                )

    for l in sorted(set(signed) | set(all_odd_counts)):
        count = all_odd_counts.get(l, 0)
        if (n + 2 - l) % 2 == 0:
            o = odd_cycle_permutations(n + 1, (n + 2 - l) // 2)
            expected = 2 ** (l - 2) * o if o else 0
        else:
            expected = 0
        if count != expected:
            checks["all_odd_count_formula"].record_failure(
                None, f"l = {l}: {count} all-odd pairs, expected {expected}"
            )
        if signed.get(l, 0) != expected:
            checks["signed_sum_collapse"].record_failure(
                None, f"l = {l}: signed sum {signed.get(l, 0)}, expected {expected}"
            )

    if total_pairs != pair_space_size(n):
        checks["pair_space_size"].record_failure(
            None, f"enumerated {total_pairs} pairs, expected {pair_space_size(n)}"
        )

    return AuditReport(n=n, total_pairs=total_pairs, checks=list(checks.values()))
