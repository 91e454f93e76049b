"""Descent polynomials of canon permutations and the classical families around them.

All brute-force sums run over the symmetric group through a cached numpy table
of permutations; one vectorised comparison per path gives the descent count of
every labeling at once.  Coefficients are Python ints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .canon import RectTableau, Permutation, check_permutation, step_ranks, tableau_ranks
from .dyck import DyckPath, enumerate_dyck

DEFAULT_BRUTE_FORCE_BOUND = 9


class BruteForceBoundExceeded(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


def check_bound(n: int, bound: int | None) -> None:
    limit = DEFAULT_BRUTE_FORCE_BOUND if bound is None else bound
    if n > limit:
        raise BruteForceBoundExceeded(f"semilength {n} exceeds brute-force bound {limit}")


@dataclass(frozen=True)
class DescentPolynomial:
    """Polynomial in t with nonnegative integer coefficients, ascending degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_counts(cls, values: Iterable[int]) -> "DescentPolynomial":
        """Histogram of exponents: each value contributes t**value."""
        out: list[int] = []
        for v in values:
            if v >= len(out):
                out.extend([0] * (v + 1 - len(out)))
            out[v] += 1
        return cls(tuple(out))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "DescentPolynomial":
        return cls((0,) * k + (c,))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "DescentPolynomial") -> "DescentPolynomial":
        k = max(len(self.coeffs), len(other.coeffs))
        return DescentPolynomial(tuple(self[i] + other[i] for i in range(k)))

    def __mul__(self, other: "DescentPolynomial") -> "DescentPolynomial":
        if not self or not other:
            return DescentPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return DescentPolynomial(tuple(out))

    def shift(self, k: int) -> "DescentPolynomial":
        """Multiply by t**k."""
        return DescentPolynomial((0,) * k + self.coeffs) if self else self

    def substitute_power(self, k: int) -> "DescentPolynomial":
        """p(t**k)."""
        out = [0] * (k * max(len(self.coeffs) - 1, 0) + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return DescentPolynomial(tuple(out))

    def reversed_about(self, k: int) -> "DescentPolynomial":
        """t**k * p(1/t); requires deg p <= k."""
        if self.degree() > k:
            raise ValueError(f"degree {self.degree()} exceeds {k}")
        return DescentPolynomial(tuple(self[k - i] for i in range(k + 1)))

    def derivative(self) -> "DescentPolynomial":
        return DescentPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def degree(self) -> int:
        if not self:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def min_degree(self) -> int:
        if not self:
            raise ZeroPolynomial("the zero polynomial has no minimum degree")
        return next(i for i, c in enumerate(self.coeffs) if c)

    def leading_coefficient(self) -> int:
        return self.coeffs[self.degree()]

    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coeffs) if c)

    def total(self) -> int:
        return sum(self.coeffs)

    def has_internal_zero(self) -> bool:
        if not self:
            return False
        return any(c == 0 for c in self.coeffs[self.min_degree() :])

    def is_palindromic(self, center_degree: int) -> bool:
        return is_palindromic(self, center_degree)

    def __call__(self, t):
        return sum(c * t**i for i, c in enumerate(self.coeffs))

    def to_text(self) -> str:
        """Ascending-degree rendering such as ``3*t^2 + 3*t^3``."""
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> str:
        return json.dumps({"coeffs": list(self.coeffs)}, separators=(",", ":"))

    def __str__(self) -> str:
        return self.to_text()


def poly(*coeffs: int) -> DescentPolynomial:
    return DescentPolynomial(tuple(coeffs))


def is_palindromic(p: DescentPolynomial, center_degree: int) -> bool:
    """coeff(i) == coeff(k - i) for all i in [0, k], and nothing above degree k."""
    k = center_degree
    if p and p.degree() > k:
        return False
    return all(p[i] == p[k - i] for i in range(k + 1))


# brute-force engine


@lru_cache(maxsize=None)
def permutation_table(n: int) -> np.ndarray:
    """All permutations of 1..n in lexicographic order, one per row."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.array(list(permutations(range(1, n + 1))), dtype=np.int8)


def permutation_at(n: int, row: int) -> Permutation:
    return tuple(int(x) for x in permutation_table(n)[row])


def _descent_matrix(ranks: Sequence[int], n: int) -> np.ndarray:
    table = permutation_table(n)
    words = table[:, list(ranks)]
    return words[:, :-1] > words[:, 1:]


def descent_counts(d: DyckPath, bound: int | None = None) -> np.ndarray:
    """des(d, sigma) for every sigma, rows of permutation_table order."""
    n = d.semilength
    check_bound(n, bound)
    return _descent_matrix(step_ranks(d), n).sum(axis=1)


def descent_masks(d: DyckPath, bound: int | None = None) -> np.ndarray:
    """Descent sets as bitmasks (bit i-1 set when position i is a descent)."""
    n = d.semilength
    check_bound(n, bound)
    m = _descent_matrix(step_ranks(d), n).astype(np.int64)
    weights = 1 << np.arange(m.shape[1], dtype=np.int64)
    return m @ weights


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(int(mask).bit_length()) if mask >> i & 1)


def _poly_from_array(counts: np.ndarray) -> DescentPolynomial:
    return DescentPolynomial(tuple(int(x) for x in np.bincount(counts)))


def canon_descent_poly(d: DyckPath, bound: int | None = None) -> DescentPolynomial:
    """C_d(t): sum of t**des(can(d, sigma)) over all sigma."""
    return _poly_from_array(descent_counts(d, bound))


def tilde_poly(d: DyckPath, bound: int | None = None) -> DescentPolynomial:
    """Restriction of C_d to permutations starting with 1 or n."""
    n = d.semilength
    counts = descent_counts(d, bound)
    first = permutation_table(n)[:, 0]
    return _poly_from_array(counts[(first == 1) | (first == n)])


def tableau_descent_poly(T: RectTableau, bound: int | None = None) -> DescentPolynomial:
    check_bound(T.n, bound)
    m = _descent_matrix(tableau_ranks(T), T.n)
    return _poly_from_array(m.sum(axis=1))


def descent_table(n: int, bound: int | None = None) -> tuple[list[DyckPath], np.ndarray]:
    """Paths of semilength n and a (paths x permutations) matrix of descent counts."""
    check_bound(n, bound)
    paths = list(enumerate_dyck(n))
    return paths, np.stack([descent_counts(d, bound) for d in paths])


def canon_poly_all(n: int, bound: int | None = None) -> DescentPolynomial:
    """Sum of C_d over all Dyck paths of semilength n."""
    _, table = descent_table(n, bound)
    return _poly_from_array(table.ravel())


def fixed_sigma_poly(sigma: Sequence[int], bound: int | None = None) -> DescentPolynomial:
    """Sum over all Dyck paths d of t**des(d, sigma)."""
    from .canon import des

    sigma = check_permutation(sigma)
    check_bound(len(sigma), bound)
    return DescentPolynomial.from_counts(des(d, sigma) for d in enumerate_dyck(len(sigma)))


# classical families


def permutation_descents(sigma: Sequence[int]) -> int:
    return sum(1 for a, b in zip(sigma, sigma[1:]) if a > b)


@lru_cache(maxsize=None)
def eulerian(n: int) -> DescentPolynomial:
    """A_n(t) by the recurrence A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    row = [1]
    for m in range(2, n + 1):
        new = [0] * m
        for k in range(m):
            a = row[k] if k < len(row) else 0
            b = row[k - 1] if k >= 1 else 0
            new[k] = (k + 1) * a + (m - k) * b
        row = new
    return DescentPolynomial(tuple(row))


def narayana(n: int) -> DescentPolynomial:
    """N_n(t) = sum_r C(n,r) C(n,r+1) / n * t**r."""
    if n < 1:
        raise ValueError("n must be positive")
    return DescentPolynomial(tuple(comb(n, r) * comb(n, r + 1) // n for r in range(n)))


def eulerian_tilde(n: int) -> tuple[DescentPolynomial, DescentPolynomial]:
    """The u**0 and u**1 parts of A~_n(t, u) = t**(n-1) f(1/t) + u f(t), f = (t A_{n-1})'."""
    if n < 2:
        raise ValueError("n must be at least 2")
    f = eulerian(n - 1).shift(1).derivative()
    return f.reversed_about(n - 1), f


def eulerian_tilde_bruteforce(n: int) -> tuple[DescentPolynomial, DescentPolynomial]:
    """Same split by definition: sigma_n < sigma_1 goes to u**0, sigma_n > sigma_1 to u**1."""
    lo, hi = [], []
    for sigma in permutations(range(1, n + 1)):
        (lo if sigma[-1] < sigma[0] else hi).append(permutation_descents(sigma))
    return DescentPolynomial.from_counts(lo), DescentPolynomial.from_counts(hi)


def eulerian_tilde_at_square(n: int) -> DescentPolynomial:
    """A~_n(t**2, t)."""
    u0, u1 = eulerian_tilde(n)
    return u0.substitute_power(2) + u1.substitute_power(2).shift(1)
