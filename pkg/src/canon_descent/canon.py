"""Canon permutations built from a Dyck path (or rectangular tableau) and a permutation."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .dyck import UP, DyckPath

Permutation = tuple[int, ...]


class SizeMismatch(ValueError):
    pass


class InvalidTableau(ValueError):
    pass


class InvalidPermutation(ValueError):
    pass


def check_permutation(sigma: Sequence[int]) -> Permutation:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise InvalidPermutation(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return sigma


def parse_permutation(text: str) -> Permutation:
    """Accept "4132", "4,1,3,2" or "4 1 3 2"."""
    text = text.strip()
    if "," in text or " " in text:
        parts = [p for p in text.replace(",", " ").split() if p]
        return check_permutation(int(p) for p in parts)
    return check_permutation(int(ch) for ch in text)


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def complement(sigma: Sequence[int]) -> Permutation:
    n = len(sigma)
    return tuple(n + 1 - x for x in sigma)


def step_ranks(d: DyckPath) -> tuple[int, ...]:
    """For each step, its 0-based rank among steps of the same kind.

    Step i of ``can(d, sigma)`` carries ``sigma[step_ranks(d)[i]]``; this map
    depends only on d (the shuffle order).
    """
    ups = downs = 0
    out = []
    for s in d.steps:
        if s == UP:
            out.append(ups)
            ups += 1
        else:
            out.append(downs)
            downs += 1
    return tuple(out)


def partner(d: DyckPath, i: int) -> int:
    """Index of the step carrying the same label as step i."""
    ranks = step_ranks(d)
    kind = d.steps[i]
    for j, s in enumerate(d.steps):
        if s != kind and ranks[j] == ranks[i]:
            return j
    raise AssertionError("unreachable for a valid Dyck path")


@dataclass(frozen=True)
class CanonWord:
    word: tuple[int, ...]
    path: DyckPath | None = field(default=None, compare=False)
    perm: Permutation | None = field(default=None, compare=False)

    def __str__(self) -> str:
        return format_word(self.word)

    def __len__(self) -> int:
        return len(self.word)


def format_word(word: Sequence[int], sep: str | None = None) -> str:
    """Digits run together when every entry is < 10, else comma separated."""
    if sep is None:
        sep = "" if all(x < 10 for x in word) else ","
    return sep.join(str(x) for x in word)


def can(d: DyckPath, sigma: Sequence[int]) -> CanonWord:
    sigma = check_permutation(sigma)
    if len(sigma) != d.semilength:
        raise SizeMismatch(f"path has semilength {d.semilength}, permutation has size {len(sigma)}")
    return CanonWord(tuple(sigma[r] for r in step_ranks(d)), d, sigma)


def descent_set(w: CanonWord | Sequence[int]) -> frozenset[int]:
    """1-based positions i with w[i] > w[i+1]; plateaus are not descents."""
    word = w.word if isinstance(w, CanonWord) else tuple(w)
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def descent_count(w: CanonWord | Sequence[int]) -> int:
    return len(descent_set(w))


def des(d: DyckPath, sigma: Sequence[int]) -> int:
    return descent_count(can(d, sigma))


def Des(d: DyckPath, sigma: Sequence[int]) -> frozenset[int]:
    return descent_set(can(d, sigma))


def contains_pattern(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """Brute-force classical pattern containment, O(len(word)^len(pattern))."""
    k = len(pattern)
    for idx in combinations(range(len(word)), k):
        sub = [word[i] for i in idx]
        if all(
            (sub[a] < sub[b]) == (pattern[a] < pattern[b]) and (sub[a] == sub[b]) == (pattern[a] == pattern[b])
            for a in range(k)
            for b in range(k)
        ):
            return True
    return False


@dataclass(frozen=True)
class RectTableau:
    """Standard Young tableau of rectangular shape, rows of 1-based positions."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = self.rows
        if not rows or not rows[0]:
            raise InvalidTableau("empty tableau")
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise InvalidTableau("rows have different lengths")
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(rows) * m + 1)):
            raise InvalidTableau(f"entries are not 1..{len(rows) * m}")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise InvalidTableau(f"row {r} is not increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise InvalidTableau("columns are not increasing")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    @classmethod
    def from_path(cls, d: DyckPath) -> "RectTableau":
        """Two-column tableau: row k lists the k-th up-step and the k-th down-step."""
        ups = [i + 1 for i, s in enumerate(d.steps) if s == UP]
        downs = [i + 1 for i, s in enumerate(d.steps) if s != UP]
        return cls(tuple(zip(ups, downs)))

    @classmethod
    def column_reading(cls, n: int, m: int) -> "RectTableau":
        """Fill columns top to bottom: row i is (i, i + n, i + 2n, ...)."""
        return cls(tuple(tuple(i + 1 + j * n for j in range(m)) for i in range(n)))


def can_tableau(T: RectTableau, sigma: Sequence[int]) -> tuple[int, ...]:
    """Place sigma_i at every position listed in row i of T."""
    sigma = check_permutation(sigma)
    if len(sigma) != T.n:
        raise SizeMismatch(f"tableau has {T.n} rows, permutation has size {len(sigma)}")
    word = [0] * (T.n * T.m)
    for value, row in zip(sigma, T.rows):
        for pos in row:
            word[pos - 1] = value
    return tuple(word)


def tableau_ranks(T: RectTableau) -> tuple[int, ...]:
    """For each word position, the 0-based row index whose sigma entry sits there."""
    out = [0] * (T.n * T.m)
    for r, row in enumerate(T.rows):
        for pos in row:
            out[pos - 1] = r
    return tuple(out)
