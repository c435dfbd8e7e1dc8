"""Ground-truth enumeration of rooted one-face maps.

A map with n edges is encoded by a triple of permutations (alpha, beta,
gamma) on 2n half-edge labels: alpha is the fixed-point-free involution
pairing the two halves of each edge, each beta-cycle is the counterclockwise
arrangement of half-edges around a vertex, and gamma = alpha * beta is the
long cycle (1, 2, ..., 2n) tracing the unique boundary.  Iterating over all
alphas and reading the genus off Euler's formula v - n + 1 = 2 - 2g tallies
the counts by definition, independent of every formula in the package.

Composition convention, fixed library-wide: ``compose(s, t)`` applies t
first, then s.  Points are 0-based internally and 1-based in all reported
cycle notation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .closed_forms import GenusTable
from .errors import BoundExceeded, OddSize, ParityViolation, SizeMismatch

DEFAULT_ORACLE_CAP = 9
ORACLE_CAP_ENV = "UNIMAP_ORACLE_CAP"


def oracle_cap() -> int:
    """Largest edge count the exhaustive tally will accept by default;
    overridable through the UNIMAP_ORACLE_CAP environment variable."""
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None:
        return DEFAULT_ORACLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ORACLE_CAP_ENV} must be an integer, got {raw!r}") from None


class Permutation:
    """A bijection on {0, ..., size-1}, stored as its image array."""

    __slots__ = ("_image",)

    def __init__(self, image: Sequence[int]):
        img = tuple(image)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a bijection on 0..{len(img) - 1}: {img}")
        self._image = img

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(range(size))

    @classmethod
    def from_cycles(cls, size: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles written with 1-based labels."""
        img = list(range(size))
        seen: set[int] = set()
        for cycle in cycles:
            for label in cycle:
                if not 1 <= label <= size:
                    raise ValueError(f"label {label} outside 1..{size}")
                if label in seen:
                    raise ValueError(f"label {label} repeated across cycles")
                seen.add(label)
            for i, label in enumerate(cycle):
                img[label - 1] = cycle[(i + 1) % len(cycle)] - 1
        return cls(img)

    @property
    def size(self) -> int:
        return len(self._image)

    @property
    def image(self) -> tuple[int, ...]:
        return self._image

    def apply(self, x: int) -> int:
        return self._image[x]

    def cycles(self) -> list[tuple[int, ...]]:
        """Canonical cycle decomposition, 1-based: each cycle starts at its
        minimum, cycles sorted by minimum; fixed points included."""
        seen = [False] * len(self._image)
        out: list[tuple[int, ...]] = []
        for start in range(len(self._image)):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x + 1)
                x = self._image[x]
            out.append(tuple(cycle))
        return out

    def cycle_count(self) -> int:
        seen = [False] * len(self._image)
        count = 0
        for start in range(len(self._image)):
            if not seen[start]:
                count += 1
                x = start
                while not seen[x]:
                    seen[x] = True
                    x = self._image[x]
        return count

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self._image))

    def is_fixed_point_free_involution(self) -> bool:
        return all(
            self._image[x] != x and self._image[self._image[x]] == x
            for x in range(len(self._image))
        )

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self._image == other._image
        return NotImplemented

    def __hash__(self):
        return hash(self._image)

    def __repr__(self):
        body = "".join(
            "(" + " ".join(map(str, c)) + ")" for c in self.cycles()
        )
        return f"Permutation[{body}]"


def compose(s: Permutation, t: Permutation) -> Permutation:
    """x -> s(t(x)): apply t first, then s."""
    if s.size != t.size:
        raise SizeMismatch(f"sizes differ: {s.size} != {t.size}")
    timg = t.image
    simg = s.image
    return Permutation([simg[timg[x]] for x in range(s.size)])


def cycle_count(p: Permutation) -> int:
    """Number of cycles, counting fixed points."""
    return p.cycle_count()


def long_cycle(two_n: int) -> Permutation:
    """The boundary permutation (1, 2, ..., two_n)."""
    return Permutation([(x + 1) % two_n for x in range(two_n)])


def _fpf_images(two_n: int) -> Iterator[tuple[int, ...]]:
    img = [-1] * two_n

    def rec(unmatched: list[int]) -> Iterator[tuple[int, ...]]:
        if not unmatched:
            yield tuple(img)
            return
        first = unmatched[0]
        for idx in range(1, len(unmatched)):
            partner = unmatched[idx]
            img[first] = partner
            img[partner] = first
            yield from rec(unmatched[1:idx] + unmatched[idx + 1 :])
        img[first] = -1

    return rec(list(range(two_n)))


def enumerate_fpf_involutions(two_n: int) -> Iterator[Permutation]:
    """Yield every fixed-point-free involution on two_n points exactly once,
    pairing the smallest unmatched point first; there are (two_n - 1)!!."""
    if two_n % 2 != 0:
        raise OddSize(f"fixed-point-free involutions need an even size, got {two_n}")
    if two_n < 2:
        raise ValueError(f"need at least 2 points, got {two_n}")
    for img in _fpf_images(two_n):
        yield Permutation(img)


def _require_fpf(alpha: Permutation, n: int) -> None:
    if alpha.size != 2 * n:
        raise SizeMismatch(f"expected a permutation of {2 * n} points, got {alpha.size}")
    if not alpha.is_fixed_point_free_involution():
        raise ValueError("alpha must be a fixed-point-free involution")


def genus_of(alpha: Permutation, n: int) -> int:
    """Genus of the one-face map whose edge involution is alpha.

    Derives the vertex permutation beta = compose(alpha, gamma) (valid since
    alpha is its own inverse), counts its cycles as the vertex count v, and
    returns g = (n + 1 - v) / 2 from Euler's formula.
    """
    _require_fpf(alpha, n)
    img = alpha.image
    two_n = 2 * n
    beta = [img[(x + 1) % two_n] for x in range(two_n)]
    seen = [False] * two_n
    v = 0
    for start in range(two_n):
        if not seen[start]:
            v += 1
            x = start
            while not seen[x]:
                seen[x] = True
                x = beta[x]
    if (n + 1 - v) % 2 != 0:
        raise ParityViolation(
            f"vertex count {v} and n + 1 = {n + 1} have different parity"
        )
    return (n + 1 - v) // 2


@dataclass(frozen=True)
class MapTriple:
    """The full permutation encoding of a one-face map with n edges."""

    alpha: Permutation
    beta: Permutation
    gamma: Permutation
    n: int


def decode_triple(alpha: Permutation, n: int) -> MapTriple:
    """Recover beta and gamma from the edge involution alpha, re-verifying
    the defining identity gamma = compose(alpha, beta)."""
    _require_fpf(alpha, n)
    gamma = long_cycle(2 * n)
    beta = compose(alpha, gamma)
    if compose(alpha, beta) != gamma:
        raise ParityViolation("composition identity gamma = alpha * beta failed")
    return MapTriple(alpha=alpha, beta=beta, gamma=gamma, n=n)


def brute_force_table(n: int, cap: int | None = None) -> GenusTable:
    """Tally the genus of every fixed-point-free involution on 2n points.

    This is the definition-level oracle: (2n - 1)!! maps are visited one by
    one, so the edge count is capped (default 9, see oracle_cap()); pass an
    explicit ``cap`` to override.
    """
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    limit = oracle_cap() if cap is None else cap
    if n > limit:
        raise BoundExceeded(
            f"brute force over {n} edges exceeds the cap of {limit}; "
            f"raise the cap explicitly to proceed"
        )
    two_n = 2 * n
    counts = [0] * (n // 2 + 1)
    img = [-1] * two_n
    seen = bytearray(two_n)

    def tally() -> None:
        for i in range(two_n):
            seen[i] = 0
        v = 0
        for start in range(two_n):
            if not seen[start]:
                v += 1
                x = start
                while not seen[x]:
                    seen[x] = 1
                    nxt = x + 1
                    if nxt == two_n:
                        nxt = 0
                    x = img[nxt]
        counts[(n + 1 - v) >> 1] += 1

    def rec(unmatched: list[int]) -> None:
        if not unmatched:
            tally()
            return
        first = unmatched[0]
        for idx in range(1, len(unmatched)):
            partner = unmatched[idx]
            img[first] = partner
            img[partner] = first
            rec(unmatched[1:idx] + unmatched[idx + 1 :])
        img[first] = -1

    rec(list(range(two_n)))
    total = sum(counts)
    expected = 1
    for odd in range(1, two_n, 2):
        expected *= odd
    assert total == expected, f"tally covered {total} of {expected} involutions"
    return GenusTable(
        n=n, counts={g: counts[g] for g in range(n // 2 + 1)}, method="oracle"
    )
