"""Descent-maximizing labelings of a Dyck path.

Two constructive routes (greedy relabeling along the path, and valley swaps
climbing from the bounce path), the brute-force maximizer set, the set of
compatible paths under d, and the posets whose linear extensions partition the
maximizers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

import numpy as np

from .canon import Permutation, can, decreasing, descent_set, identity, step_ranks
from .dyck import (
    DOWN,
    UP,
    DyckPath,
    bounce,
    bounce_factors,
    bpk,
    enumerate_dyck,
    is_under,
    path_from_heights,
    peak_positions,
    valley_positions,
)
from .polynomials import descent_counts, descent_masks, mask_to_set, permutation_table


class NotAValley(ValueError):
    pass


class LabelOrderViolated(ValueError):
    pass


class NotInBSet(ValueError):
    pass


class CyclicRelation(ValueError):
    pass


class InvalidChoice(ValueError):
    pass


def max_descents(d: DyckPath) -> int:
    """m_d = 2n - 1 - bpk d, the degree of C_d."""
    return 2 * d.semilength - 1 - bpk(d)


@dataclass(frozen=True)
class LabeledPath:
    """A Dyck path with one label per step; 0 marks an unlabeled step."""

    path: DyckPath
    labels: tuple[int, ...]

    @classmethod
    def from_perm(cls, d: DyckPath, sigma: Sequence[int]) -> "LabeledPath":
        return cls(d, can(d, sigma).word)

    def is_complete(self) -> bool:
        return 0 not in self.labels

    def perm(self) -> Permutation:
        """Up-step labels read left to right."""
        return tuple(lab for lab, s in zip(self.labels, self.path.steps) if s == UP)

    def is_canon(self) -> bool:
        if not self.is_complete():
            return False
        ups = self.perm()
        downs = tuple(lab for lab, s in zip(self.labels, self.path.steps) if s == DOWN)
        return ups == downs and sorted(ups) == list(range(1, len(ups) + 1))


# greedy relabeling


def _normalize(labels: list[int]) -> tuple[int, ...]:
    # rank-normalise distinct label values onto 1..n, keeping their order
    ranks = {v: r for r, v in enumerate(sorted(set(labels)), start=1)}
    return tuple(ranks[v] for v in labels)


def _greedy_labeling(d: DyckPath, pick: Callable[[int, int, list[int]], int] | None = None) -> tuple[int, ...]:
    # pick(step index, max admissible k, labels so far) -> k; None means k = 1 always
    n = d.semilength
    if n == 0:
        return ()
    steps = d.steps
    ranks = step_ranks(d)
    down_of = {ranks[j]: j for j, s in enumerate(steps) if s == DOWN}
    labels = [0] * len(steps)
    labels[0] = labels[down_of[0]] = n
    for q in range(1, len(steps)):
        if labels[q]:
            continue
        i = labels[q - 1]
        kmax = 1
        if pick is not None:
            # label i-k is allowed when both copies of i-1, ..., i-k+1 sit left of q
            left = {}
            for pos in range(q):
                if labels[pos]:
                    left[labels[pos]] = left.get(labels[pos], 0) + 1
            while left.get(i - kmax, 0) == 2:
                kmax += 1
        k = 1 if pick is None else pick(q, kmax, labels)
        if not 1 <= k <= kmax:
            raise InvalidChoice(f"k = {k} not admissible at step {q} (max {kmax})")
        new = i - k
        if new in labels:
            labels = [lab - 1 if lab and lab <= new else lab for lab in labels]
        labels[q] = labels[down_of[ranks[q]]] = new
    return _normalize(labels)


def bperm_labeling(d: DyckPath) -> LabeledPath:
    return LabeledPath(d, _greedy_labeling(d))


def bperm(d: DyckPath) -> Permutation:
    """Greedy maximizer: give each new up-step one less than the label before it."""
    return bperm_labeling(d).perm()


def generalized_bperm(d: DyckPath, choices: Sequence[int] | Callable[[int, int], int]) -> Permutation:
    """Greedy labeling that may skip down by k instead of 1.

    ``choices`` is either a sequence of k values, one per labeling step after
    the first, or a callable ``(step index, max admissible k) -> k``.  The
    output is only conjecturally a maximizer.
    """
    if callable(choices):
        pick = lambda q, kmax, _labels: choices(q, kmax)  # noqa: E731
    else:
        it = iter(choices)

        def pick(q: int, kmax: int, _labels: list[int]) -> int:
            try:
                return next(it)
            except StopIteration:
                raise InvalidChoice("choice sequence exhausted") from None

    labels = _greedy_labeling(d, pick)
    return LabeledPath(d, labels).perm()


def generalized_bperm_outputs(d: DyckPath) -> set[Permutation]:
    """Every output of the generalized greedy labeling, walking the full choice tree."""
    outputs: set[Permutation] = set()

    def walk(prefix: list[int]) -> None:
        trail: list[int] = []

        def pick(q: int, kmax: int, _labels: list[int]) -> int:
            pos = len(trail)
            k = prefix[pos] if pos < len(prefix) else 1
            trail.append(kmax)
            return k

        labels = _greedy_labeling(d, pick)
        outputs.add(LabeledPath(d, labels).perm())
        # branch on every later position whose admissible range exceeds the default
        for pos in range(len(prefix), len(trail)):
            for k in range(2, trail[pos] + 1):
                walk(prefix + [1] * (pos - len(prefix)) + [k])

    walk([])
    return outputs


# valley swaps


def valley_swap(c: LabeledPath, valley_index: int) -> LabeledPath:
    """Turn the valley whose down-step is ``valley_index`` into a peak and relabel.

    With down-label j and up-label i (i < j), i becomes j and every k in
    [i+1, j] becomes k-1; the new peak carries j, j-1.
    """
    steps = c.path.steps
    v = valley_index
    if not (0 <= v < len(steps) - 1 and steps[v] == DOWN and steps[v + 1] == UP):
        raise NotAValley(f"steps {v}, {v + 1} are not a valley")
    j, i = c.labels[v], c.labels[v + 1]
    if j <= i:
        raise LabelOrderViolated(f"down-label {j} is not larger than up-label {i}")

    def relabel(x: int) -> int:
        if x == i:
            return j
        if i < x <= j:
            return x - 1
        return x

    new_steps = steps[:v] + (UP, DOWN) + steps[v + 2 :]
    d2 = DyckPath(new_steps)
    sigma = tuple(relabel(x) for x in c.perm())
    return LabeledPath.from_perm(d2, sigma)


def _admissible_valleys(current: DyckPath, target: DyckPath) -> list[int]:
    h, top = current.heights, target.heights
    return [x - 1 for x in valley_positions(current) if h[x] + 2 <= top[x]]


def valley_climb(d: DyckPath, start: DyckPath) -> list[LabeledPath]:
    """Swap the leftmost admissible valley repeatedly, from can(start, delta) up to d.

    Returns every intermediate labeling, first and last included.
    """
    if not is_under(start, d):
        raise ValueError(f"{start} is not under {d}")
    c = LabeledPath.from_perm(start, decreasing(d.semilength))
    trace = [c]
    while c.path != d:
        options = _admissible_valleys(c.path, d)
        if not options:
            raise AssertionError(f"no admissible valley from {c.path} towards {d}")
        c = valley_swap(c, options[0])
        trace.append(c)
    return trace


def vperm(d: DyckPath) -> Permutation:
    """Valley-swap maximizer: climb from the bounce path labeled decreasingly."""
    return valley_climb(d, bounce(d))[-1].perm()


# brute-force maximizers


def max_set(d: DyckPath, bound: int | None = None) -> set[Permutation]:
    """All sigma with des(d, sigma) = m_d."""
    counts = descent_counts(d, bound)
    rows = np.flatnonzero(counts == counts.max())
    table = permutation_table(d.semilength)
    return {tuple(int(x) for x in table[r]) for r in rows}


def maximizer_descent_sets(d: DyckPath, bound: int | None = None) -> set[frozenset[int]]:
    counts = descent_counts(d, bound)
    masks = descent_masks(d, bound)
    return {mask_to_set(int(m)) for m in np.unique(masks[counts == counts.max()])}


# compatible paths B_d


def is_in_b_set(b: DyckPath, d: DyckPath) -> bool:
    """b under d, pk b = bpk d with every peak on d, every valley on d's valley or the axis."""
    if b.semilength != d.semilength or not is_under(b, d):
        return False
    hb, hd = b.heights, d.heights
    peaks_b = peak_positions(b)
    if len(peaks_b) != bpk(d) or any(hb[x] != hd[x] for x in peaks_b):
        return False
    d_valleys = set(valley_positions(d))
    return all(hb[x] == 0 or (x in d_valleys and hb[x] == hd[x]) for x in valley_positions(b))


def _path_through_peaks(points: Sequence[tuple[int, int]], two_n: int) -> DyckPath | None:
    # peaks at the given (x, h), straight down then up in between
    x0, h0 = points[0]
    if x0 != h0:
        return None
    heights = list(range(h0 + 1))
    for (x1, h1), (x2, h2) in zip(points, points[1:]):
        down2 = x2 - x1 + h1 - h2
        if down2 % 2:
            return None
        down = down2 // 2
        up = x2 - x1 - down
        if down < 1 or up < 1 or h1 - down < 0:
            return None
        heights += [h1 - s for s in range(1, down + 1)]
        heights += [h1 - down + s for s in range(1, up + 1)]
    xl, hl = points[-1]
    if two_n - xl != hl:
        return None
    heights += [hl - s for s in range(1, hl + 1)]
    return path_from_heights(heights)


def b_set(d: DyckPath) -> list[DyckPath]:
    """B_d, sorted in enumeration order.

    Candidates put one peak at the end of a step in each bounce factor of d
    except the last; each candidate is then checked against the definition.
    """
    n = d.semilength
    if n == 0:
        return [d]
    bf = bounce_factors(d)
    cuts = (0, *bf.boundaries)
    hd = d.heights
    ranges = [range(a + 1, b + 1) for a, b in zip(cuts, cuts[1:])]
    found = set()
    for xs in product(*ranges):
        b = _path_through_peaks([(x, hd[x]) for x in xs], 2 * n)
        if b is not None and is_in_b_set(b, d):
            found.add(b)
    return sorted(found)


def b_set_bruteforce(d: DyckPath) -> list[DyckPath]:
    """B_d by filtering every Dyck path of the same semilength."""
    return [b for b in enumerate_dyck(d.semilength) if is_in_b_set(b, d)]


def peak_descent_set(b: DyckPath) -> frozenset[int]:
    """Des(b, delta_n)."""
    return descent_set(can(b, decreasing(b.semilength)))


def peak_sets_of_b(d: DyckPath) -> set[frozenset[int]]:
    return {peak_descent_set(b) for b in b_set(d)}


def des_set_of_max(d: DyckPath, bound: int | None = None) -> set[frozenset[int]]:
    return maximizer_descent_sets(d, bound)


# posets


@dataclass(frozen=True)
class MaxPoset:
    """Strict order on a_1..a_n; (i, j) in ``relations`` means a_i > a_j."""

    size: int
    relations: frozenset[tuple[int, int]]

    @property
    def closure(self) -> np.ndarray:
        """closure[i-1, j-1] is True when a_i > a_j in the transitive closure."""
        n = self.size
        m = np.zeros((n, n), dtype=bool)
        for i, j in self.relations:
            m[i - 1, j - 1] = True
        for k in range(n):
            m |= m[:, [k]] & m[[k], :]
        return m

    def is_acyclic(self) -> bool:
        return not self.closure.diagonal().any()

    def cover_relations(self) -> set[tuple[int, int]]:
        m = self.closure
        n = self.size
        return {
            (i + 1, j + 1)
            for i in range(n)
            for j in range(n)
            if m[i, j] and not any(m[i, k] and m[k, j] for k in range(n))
        }

    def is_chain(self) -> bool:
        m = self.closure
        n = self.size
        return all(m[i, j] or m[j, i] for i in range(n) for j in range(i + 1, n))


def max_poset(d: DyckPath, b: DyckPath) -> MaxPoset:
    """P_{d,b}: within each stretch of can(d, id) between consecutive peaks of b, earlier > later."""
    if not is_in_b_set(b, d):
        raise NotInBSet(f"{b} is not in B_d for d = {d}")
    n = d.semilength
    word = can(d, identity(n)).word
    cuts = (0, *peak_positions(b), len(word))
    rel = set()
    for a, z in zip(cuts, cuts[1:]):
        seg = word[a:z]
        for x, y in zip(seg, seg[1:]):
            rel.add((x, y))
    return MaxPoset(n, frozenset(rel))


def linear_extensions(P: MaxPoset) -> list[Permutation]:
    """All sigma with sigma_i > sigma_j whenever a_i > a_j, by backtracking.

    Values are handed out from n downwards, each to an element whose
    upper covers already hold larger values.
    """
    if not P.is_acyclic():
        raise CyclicRelation("relation has a cycle")
    n = P.size
    above = [set() for _ in range(n)]
    for i, j in P.relations:
        above[j - 1].add(i - 1)
    sigma = [0] * n
    out: list[Permutation] = []

    def rec(value: int) -> None:
        if value == 0:
            out.append(tuple(sigma))
            return
        for e in range(n):
            if sigma[e] == 0 and all(sigma[a] for a in above[e]):
                sigma[e] = value
                rec(value - 1)
                sigma[e] = 0

    rec(n)
    return sorted(out)


def count_linear_extensions(P: MaxPoset) -> int:
    """Same count as len(linear_extensions(P)), by dynamic programming over down-sets."""
    if not P.is_acyclic():
        raise CyclicRelation("relation has a cycle")
    n = P.size
    above_mask = [0] * n
    for i, j in P.relations:
        above_mask[j - 1] |= 1 << (i - 1)
    ways = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for used, w in ways.items():
            for e in range(n):
                if not used >> e & 1 and above_mask[e] & ~used == 0:
                    key = used | 1 << e
                    nxt[key] = nxt.get(key, 0) + w
        ways = nxt
    return sum(ways.values())


def max_partition(d: DyckPath) -> list[tuple[DyckPath, list[Permutation]]]:
    """The blocks L(P_{d,b}) for b in B_d."""
    return [(b, linear_extensions(max_poset(d, b))) for b in b_set(d)]


def max_set_by_posets(d: DyckPath) -> set[Permutation]:
    return {s for _, block in max_partition(d) for s in block}


def leading_coefficient_by_posets(d: DyckPath) -> int:
    return sum(count_linear_extensions(max_poset(d, b)) for b in b_set(d))


def decreasing_runs_hold(labeled: LabeledPath) -> bool:
    """Labels strictly decrease inside every piece cut at the bounce-peak down-steps."""
    bf = bounce_factors(labeled.path)
    cuts = (0, *bf.boundaries, len(labeled.labels))
    for a, z in zip(cuts, cuts[1:]):
        seg = labeled.labels[a:z]
        if any(x <= y for x, y in zip(seg, seg[1:])):
            return False
    return True


def maximizer_report(d: DyckPath, bound: int | None = None) -> dict:
    """JSON-ready summary of the maximizers of d."""
    from .polynomials import BruteForceBoundExceeded

    report: dict = {
        "path": str(d),
        "m_d": max_descents(d),
        "bperm": list(bperm(d)),
        "vperm": list(vperm(d)),
        "B_d": [str(b) for b in b_set(d)],
        "partition": [{"b": str(b), "extensions": [list(s) for s in ext]} for b, ext in max_partition(d)],
    }
    try:
        report["M_d"] = [list(s) for s in sorted(max_set(d, bound))]
    except BruteForceBoundExceeded as exc:
        report["M_d_omitted"] = str(exc)
    return report
