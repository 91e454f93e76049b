"""Dyck paths: parsing, statistics, bounce paths, lattice order and counting.

Steps are stored as a tuple of ints, ``1`` for an up-step and ``0`` for a
down-step.  Step indices are 0-based throughout; the point reached after step
``i`` has x-coordinate ``i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import pairwise
from math import comb, prod
from typing import Iterator, Sequence

UP = 1
DOWN = 0


class DyckPathError(ValueError):
    """Base class for rejected step words."""


class UnbalancedWord(DyckPathError):
    pass


class NegativePrefix(DyckPathError):
    pass


class BadCharacter(DyckPathError):
    pass


class SemilengthMismatch(ValueError):
    pass


_CHARS = {"U": UP, "u": UP, "1": UP, "D": DOWN, "d": DOWN, "0": DOWN}


@dataclass(frozen=True)
class DyckPath:
    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        h = 0
        for i, s in enumerate(self.steps):
            if s not in (UP, DOWN):
                raise BadCharacter(f"step {i} is {s!r}, expected 0 or 1")
            h += 1 if s == UP else -1
            if h < 0:
                raise NegativePrefix(f"prefix of length {i + 1} dips below the axis")
        if h != 0:
            raise UnbalancedWord(f"{self.steps.count(UP)} up-steps vs {self.steps.count(DOWN)} down-steps")

    @classmethod
    def parse(cls, text: str) -> "DyckPath":
        return parse_path(text)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Height profile h(0), ..., h(2n)."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + (1 if s == UP else -1))
        return tuple(out)

    def __str__(self) -> str:
        return "".join("U" if s == UP else "D" for s in self.steps)

    def __repr__(self) -> str:
        return f"DyckPath({str(self)!r})"

    def __len__(self) -> int:
        return len(self.steps)

    def __lt__(self, other: "DyckPath") -> bool:
        # lexicographic with U < D, matching enumerate_dyck
        return (len(self.steps), [1 - s for s in self.steps]) < (len(other.steps), [1 - s for s in other.steps])

    def __add__(self, other: "DyckPath") -> "DyckPath":
        return DyckPath(self.steps + other.steps)


def parse_path(text: str) -> DyckPath:
    """Parse a word over {U, D} (any case) or {1, 0}."""
    text = text.strip()
    steps = []
    for i, ch in enumerate(text):
        if ch not in _CHARS:
            raise BadCharacter(f"bad character {ch!r} at position {i}")
        steps.append(_CHARS[ch])
    return DyckPath(tuple(steps))


def path_from_heights(heights: Sequence[int]) -> DyckPath:
    return DyckPath(tuple(UP if b > a else DOWN for a, b in pairwise(heights)))


def peaks(d: DyckPath) -> list[tuple[int, int]]:
    """All UD occurrences as (up index, down index) step pairs."""
    s = d.steps
    return [(i, i + 1) for i in range(len(s) - 1) if s[i] == UP and s[i + 1] == DOWN]


def peak_positions(d: DyckPath) -> list[int]:
    """x-coordinates of the peak points."""
    return [i + 1 for i, _ in peaks(d)]


def pk(d: DyckPath) -> int:
    return len(peaks(d))


def valleys(d: DyckPath) -> list[tuple[int, int]]:
    """All DU occurrences as (down index, up index) step pairs."""
    s = d.steps
    return [(i, i + 1) for i in range(len(s) - 1) if s[i] == DOWN and s[i + 1] == UP]


def valley_positions(d: DyckPath) -> list[int]:
    return [i + 1 for i, _ in valleys(d)]


def low_peaks(d: DyckPath) -> int:
    """Number of peaks whose up-step starts on the x-axis."""
    h = d.heights
    return sum(1 for i, _ in peaks(d) if h[i] == 0)


lpk = low_peaks


def height(d: DyckPath) -> int:
    return max(d.heights)


def primitive_factors(d: DyckPath) -> list[DyckPath]:
    h = d.heights
    cuts = [x for x in range(len(h)) if h[x] == 0]
    return [DyckPath(d.steps[a:b]) for a, b in pairwise(cuts)]


def is_primitive(d: DyckPath) -> bool:
    return len(primitive_factors(d)) == 1


def _bounce_peaks(d: DyckPath) -> list[tuple[int, int]]:
    # (x, h) of each bounce peak
    h = d.heights
    two_n = len(d.steps)
    out = []
    x0 = 0
    while x0 < two_n:
        k = 1
        while not (h[x0 + k] == k and d.steps[x0 + k] == DOWN):
            k += 1
        out.append((x0 + k, k))
        x0 += 2 * k
    return out


def bcomp(d: DyckPath) -> tuple[int, ...]:
    """Peak heights of the bounce path."""
    return tuple(k for _, k in _bounce_peaks(d))


def path_from_composition(c: Sequence[int]) -> DyckPath:
    """The bounce path U^c1 D^c1 U^c2 D^c2 ..."""
    steps: list[int] = []
    for part in c:
        if part < 1:
            raise ValueError(f"composition parts must be positive, got {tuple(c)}")
        steps += [UP] * part + [DOWN] * part
    return DyckPath(tuple(steps))


def bounce(d: DyckPath) -> DyckPath:
    """Bounce path: climb from the axis until d's next step is down, fall back, repeat."""
    return path_from_composition(bcomp(d))


def bpk(d: DyckPath) -> int:
    return len(bcomp(d))


def is_bounce_path(d: DyckPath) -> bool:
    return bounce(d) == d


@dataclass(frozen=True)
class BounceFactorization:
    """Cuts of d at the down-step of each bounce peak.

    ``boundaries`` holds one step index per bounce peak, so its length is
    ``bpk d``.  Cutting there yields ``bpk d + 1`` pieces; the last piece is the
    final run of down-steps of d.
    """

    path: DyckPath
    boundaries: tuple[int, ...]

    @property
    def factors(self) -> list[tuple[int, ...]]:
        return [self.path.steps[a:b] for a, b in pairwise((0, *self.boundaries, len(self.path.steps)))]

    def factor_of_step(self, i: int) -> int:
        """Index of the factor containing step i."""
        return sum(1 for b in self.boundaries if b <= i)


def bounce_factors(d: DyckPath) -> BounceFactorization:
    return BounceFactorization(d, tuple(x for x, _ in _bounce_peaks(d)))


def is_under(b: DyckPath, d: DyckPath) -> bool:
    """True iff b lies weakly below d."""
    if b.semilength != d.semilength:
        raise SemilengthMismatch(f"semilengths {b.semilength} and {d.semilength}")
    return all(x <= y for x, y in zip(b.heights, d.heights))


def reverse(d: DyckPath) -> DyckPath:
    """Mirror image: reverse the steps and swap U with D."""
    return DyckPath(tuple(1 - s for s in reversed(d.steps)))


def reverse_bounce(d: DyckPath) -> DyckPath:
    return reverse(bounce(reverse(d)))


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength n in lexicographic order with U < D."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    steps = [0] * (2 * n)

    def rec(i: int, ups: int, h: int) -> Iterator[DyckPath]:
        if i == 2 * n:
            yield DyckPath(tuple(steps))
            return
        if ups < n:
            steps[i] = UP
            yield from rec(i + 1, ups + 1, h + 1)
        if h > 0:
            steps[i] = DOWN
            yield from rec(i + 1, ups, h - 1)

    yield from rec(0, 0, 0)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n, in lexicographic order of their parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)


def count_by_bcomp(c: Sequence[int]) -> int:
    """Number of Dyck paths whose bounce composition is c."""
    return prod(comb(a + b - 1, b) for a, b in pairwise(c))


def count_pk_eq_bpk_by_bcomp(c: Sequence[int]) -> int:
    """Paths with bounce composition c whose peak count equals the bounce peak count."""
    return prod(c[:-1])


def count_peakmatch_by_bcomp(c: Sequence[int]) -> int:
    """Paths with bounce composition c whose bounce peaks are all peaks of the path."""
    return prod(comb(a + b - 2, b - 1) for a, b in pairwise(c))


def bounce_peaks_are_peaks(d: DyckPath) -> bool:
    pts = set(peak_positions(d))
    return all(x in pts for x, _ in _bounce_peaks(d))
