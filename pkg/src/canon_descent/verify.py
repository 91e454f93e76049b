"""Exhaustive property suites over all Dyck paths up to a semilength.

Each suite returns ``Check`` records.  Conjectural checks are reported but never
count as failures.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import factorial
from typing import Callable, Iterable

import numpy as np

from .canon import decreasing
from .dyck import (
    DyckPath,
    bounce,
    bounce_factors,
    bounce_peaks_are_peaks,
    bpk,
    enumerate_dyck,
    is_under,
    lpk,
    parse_path,
    pk,
    reverse_bounce,
)
from .maximizers import (
    b_set,
    b_set_bruteforce,
    bperm,
    bperm_labeling,
    decreasing_runs_hold,
    generalized_bperm_outputs,
    linear_extensions,
    max_descents,
    max_partition,
    max_poset,
    max_set,
    maximizer_descent_sets,
    peak_descent_set,
    valley_climb,
    vperm,
)
from .parallel import pmap
from .polynomials import (
    DescentPolynomial,
    canon_descent_poly,
    canon_poly_all,
    descent_counts,
    descent_table,
    eulerian,
    eulerian_tilde_at_square,
    narayana,
    permutation_descents,
    permutation_table,
    tilde_poly,
)
from .sequences import SEQUENCES

log = logging.getLogger(__name__)


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    checked: int
    conjectural: bool = False
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else ("CONJECTURE_VIOLATED" if self.conjectural else "FAIL")
        tail = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.suite}: {self.name} [{self.checked} checked]{tail}"

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "conjectural": self.conjectural,
            "detail": self.detail,
        }


def all_paths(max_n: int) -> list[DyckPath]:
    return [d for n in range(1, max_n + 1) for d in enumerate_dyck(n)]


def _sweep(suite: str, name: str, paths: Iterable, test: Callable, threads=None, conjectural=False) -> Check:
    # test(x) returns None on success or a short failure description
    items = list(paths)
    results = pmap(test, items, threads)
    failures = [(x, r) for x, r in zip(items, results) if r is not None]
    detail = f"first failure at {failures[0][0]}: {failures[0][1]}; {len(failures)} failures" if failures else ""
    return Check(suite, name, not failures, len(items), conjectural, detail)


# per-path tests (module level so they pickle for worker processes)


def _t_palindromic(d: DyckPath):
    c = canon_descent_poly(d)
    k = 2 * d.semilength - 1 - lpk(d)
    return None if c.is_palindromic(k) else f"{c} not palindromic about {k}"


def _t_complement(d: DyckPath):
    # complement reverses lexicographic order, so row r pairs with row N-1-r
    counts = descent_counts(d)
    k = 2 * d.semilength - 1 - lpk(d)
    return None if np.all(counts + counts[::-1] == k) else "des(sigma) + des(sigma^c) != 2n-1-lpk"


def _t_degree(d: DyckPath):
    deg = canon_descent_poly(d).degree()
    return None if deg == max_descents(d) else f"degree {deg} != {max_descents(d)}"


def _t_algorithms(d: DyckPath):
    from .canon import des

    m = max_descents(d)
    b, v = des(d, bperm(d)), des(d, vperm(d))
    if b != m or v != m:
        return f"des(bperm)={b}, des(vperm)={v}, m_d={m}"
    if not decreasing_runs_hold(bperm_labeling(d)):
        return "bperm labels not decreasing inside bounce factors"
    return None


def _t_vperm_trace(d: DyckPath):
    trace = valley_climb(d, bounce(d))
    sets = {frozenset(_des_set(c.labels)) for c in trace}
    if len(sets) != 1:
        return "descent set changed during valley swaps"
    for a, b in zip(trace, trace[1:]):
        if a.path == b.path or not is_under(a.path, b.path):
            return "valley swap did not climb in the lattice"
    return None


def _des_set(word) -> set[int]:
    return {i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]}


def _t_internal_zeros(d: DyckPath):
    c = canon_descent_poly(d)
    return "internal zero" if c.has_internal_zero() else None


def _t_total(d: DyckPath):
    c = canon_descent_poly(d)
    return None if c.total() == factorial(d.semilength) else f"coefficient sum {c.total()}"


def _t_constant_term(d: DyckPath):
    c = canon_descent_poly(d)
    alternating = str(d) == "UD" * d.semilength
    return None if (c[0] != 0) == alternating else f"constant term {c[0]}"


def _t_mindes(d: DyckPath):
    c = canon_descent_poly(d)
    want = bpk(d) - lpk(d)
    return None if c.min_degree() == want else f"min degree {c.min_degree()} != {want}"


def _t_partition(d: DyckPath):
    blocks = max_partition(d)
    seen: set = set()
    for _, ext in blocks:
        if seen & set(ext):
            return "blocks overlap"
        seen |= set(ext)
    if seen != max_set(d):
        return "union of poset blocks != M_d"
    if len(seen) < len(blocks):
        return "leading coefficient below |B_d|"
    base = set(linear_extensions(max_poset(d, bounce(d))))
    if bperm(d) not in base or vperm(d) not in base:
        return "bperm or vperm outside L(P_{d, bounce d})"
    return None


def _t_dessets(d: DyckPath):
    left = maximizer_descent_sets(d)
    bs = b_set(d)
    right = {peak_descent_set(b) for b in bs}
    if left != right:
        return "maximizer descent sets != peak sets of B_d"
    if len(left) != len(bs):
        return "|descent sets| != |B_d|"
    return None


def _t_b_set_oracle(d: DyckPath):
    fast, slow = b_set(d), b_set_bruteforce(d)
    if fast != slow:
        return f"constructive {len(fast)} vs filtered {len(slow)}"
    if bounce(d) not in fast or reverse_bounce(d) not in fast:
        return "bounce or reverse bounce missing"
    return None


def _t_b_set_climb(d: DyckPath):
    # climbing from any b in B_d lands in M_d with the descent set of b
    from .canon import Des

    m = max_set(d)
    for b in b_set(d):
        sigma = valley_climb(d, b)[-1].perm()
        if sigma not in m or Des(d, sigma) != peak_descent_set(b):
            return f"climb from {b} gives {sigma}"
    return None


def _t_decreasing_max(d: DyckPath):
    inside = decreasing(d.semilength) in max_set(d)
    return None if inside == (pk(d) == bpk(d)) else f"delta in M_d is {inside}, pk={pk(d)}, bpk={bpk(d)}"


def _t_unique_max(d: DyckPath):
    unique = max_set(d) == {decreasing(d.semilength)}
    return None if unique == (bounce(d) == d) else f"M_d = {{delta}} is {unique}"


def _t_b_singleton(d: DyckPath):
    single = len(b_set(d)) == 1
    return None if single == bounce_peaks_are_peaks(d) else f"|B_d| = {len(b_set(d))}"


def _t_bounce_basics(d: DyckPath):
    bd = bounce(d)
    if not is_under(bd, d):
        return "bounce not under d"
    if bounce(bd) != bd:
        return "bounce not idempotent"
    if len(bounce_factors(d).boundaries) != bpk(d):
        return "boundary count != bpk"
    return None


def _t_generalized(d: DyckPath):
    m = max_set(d)
    bad = sorted(s for s in generalized_bperm_outputs(d) if s not in m)
    return f"{len(bad)} outputs outside M_d, e.g. {bad[0]}" if bad else None


def _t_tilde(d: DyckPath):
    c, ct = canon_descent_poly(d), tilde_poly(d)
    if c.support() != ct.support():
        return "supports differ"
    if ct.degree() != max_descents(d):
        return "tilde degree != m_d"
    return None


# suites


def suite_symmetry(max_n: int, threads=None) -> list[Check]:
    paths = all_paths(max_n)
    return [
        _sweep("symmetry", "C_d palindromic about 2n-1-lpk d", paths, _t_palindromic, threads),
        _sweep("symmetry", "des(d,sigma) + des(d,sigma^c) = 2n-1-lpk d for every sigma", paths, _t_complement, threads),
    ]


def suite_degree(max_n: int, threads=None) -> list[Check]:
    paths = all_paths(max_n)
    return [
        _sweep("degree", "deg C_d = 2n-1-bpk d", paths, _t_degree, threads),
        _sweep("degree", "bperm and vperm attain m_d; bperm decreasing on bounce factors", paths, _t_algorithms, threads),
        _sweep("degree", "valley swaps climb and keep the descent set", paths, _t_vperm_trace, threads),
    ]


def suite_internal_zeros(max_n: int, threads=None) -> list[Check]:
    paths = all_paths(max_n)
    return [
        _sweep("internal-zeros", "C_d has no internal zeros", paths, _t_internal_zeros, threads),
        _sweep("internal-zeros", "coefficient sum of C_d = n!", paths, _t_total, threads),
        _sweep("internal-zeros", "constant term nonzero only for (UD)^n", paths, _t_constant_term, threads),
    ]


def suite_mindes(max_n: int, threads=None) -> list[Check]:
    return [_sweep("mindes", "min degree of C_d = bpk d - lpk d", all_paths(max_n), _t_mindes, threads)]


def suite_partition(max_n: int, threads=None) -> list[Check]:
    paths = all_paths(max_n)
    checks = [_sweep("partition", "M_d is the disjoint union of L(P_{d,b}) over B_d", paths, _t_partition, threads)]
    d = parse_path("UUDUDUDUDD")
    ext = linear_extensions(max_poset(d, parse_path("UUDDUDUUDD")))
    want = [(4, 1, 3, 5, 2), (4, 2, 3, 5, 1), (5, 1, 3, 4, 2), (5, 2, 3, 4, 1)]
    checks.append(Check("partition", "worked poset example U(UD)^4D", ext == want, 1))
    d = parse_path("UUDUDDUUDD")
    blocks = {str(b): set(e) for b, e in max_partition(d)}
    want_blocks = {
        "UDUUDDUUDD": {(4, 5, 3, 2, 1)},
        "UUDDUDUUDD": {(5, 1, 4, 3, 2), (5, 2, 4, 3, 1), (5, 3, 4, 2, 1)},
        "UUDUDDUUDD": {(5, 4, 3, 2, 1)},
    }
    checks.append(Check("partition", "three-block example U^2DUD^2U^2D^2", blocks == want_blocks, 1))
    return checks


def suite_dessets(max_n: int, threads=None) -> list[Check]:
    paths = all_paths(max_n)
    return [
        _sweep("dessets", "maximizer descent sets = peak sets of B_d", paths, _t_dessets, threads),
        _sweep("dessets", "constructive B_d = filtered B_d, contains both bounce paths", paths, _t_b_set_oracle, threads),
        _sweep("dessets", "valley climb from each b in B_d lands in M_d with Des(b, delta)", paths, _t_b_set_climb, threads),
    ]


def suite_corollaries(max_n: int, threads=None) -> list[Check]:
    paths = all_paths(max_n)
    return [
        _sweep("corollaries", "delta_n in M_d iff pk d = bpk d", paths, _t_decreasing_max, threads),
        _sweep("corollaries", "M_d = {delta_n} iff d = bounce d", paths, _t_unique_max, threads),
        _sweep("corollaries", "|B_d| = 1 iff bounce peaks are peaks of d", paths, _t_b_singleton, threads),
        _sweep("corollaries", "bounce under d, idempotent, bpk boundaries", paths, _t_bounce_basics, threads),
    ]


def suite_identities(max_n: int, threads=None) -> list[Check]:
    checks = []
    ns = range(1, max_n + 1)
    fixed_fail, fixed_count = "", 0
    for n in ns:
        paths, table = descent_table(n)
        perms = permutation_table(n)
        nar = narayana(n)
        for r in range(table.shape[1]):
            sigma = tuple(int(x) for x in perms[r])
            got = DescentPolynomial(tuple(int(x) for x in np.bincount(table[:, r])))
            fixed_count += 1
            if got != nar.shift(permutation_descents(sigma)) and not fixed_fail:
                fixed_fail = f"sigma = {sigma}"
    checks.append(Check("identities", "sum_d t^des(d,sigma) = t^des(sigma) N_n", not fixed_fail, fixed_count, detail=fixed_fail))
    bad = [n for n in ns if canon_poly_all(n) != eulerian(n) * narayana(n)]
    checks.append(Check("identities", "sum_d C_d = A_n N_n", not bad, len(ns), detail=f"n = {bad}" if bad else ""))
    bad = [n for n in ns if canon_descent_poly(parse_path("UD" * n)) != eulerian(n)]
    checks.append(Check("identities", "C_{(UD)^n} = A_n", not bad, len(ns), detail=f"n = {bad}" if bad else ""))
    bad = [n for n in ns if n >= 2 and canon_descent_poly(parse_path("U" * n + "D" * n)) != eulerian_tilde_at_square(n)]
    checks.append(
        Check("identities", "C_{U^nD^n} = A~_n(t^2, t)", not bad, max(0, max_n - 1), detail=f"n = {bad}" if bad else "")
    )
    checks.append(_sweep("identities", "C~_d has the support and degree of C_d", all_paths(max_n), _t_tilde, threads))
    return checks


def suite_sequences(max_n: int, threads=None) -> list[Check]:
    checks = []
    for name, fn in SEQUENCES.items():
        report = fn(max_n, threads=threads)
        for check, ok in report.checks.items():
            checks.append(Check("sequences", f"{name}: {check}", ok, max_n))
        for v in report.violations:
            checks.append(
                Check("sequences", f"{name}: {v['conjecture']}", False, 1, conjectural=True, detail=f"n={v['n']}")
            )
        if report.conjectural or report.extra:
            checks.append(Check("sequences", f"{name}: terms {report.values()}", True, max_n, conjectural=report.conjectural))
    return checks


def suite_conjectures(max_n: int, threads=None) -> list[Check]:
    return [
        _sweep(
            "conjectures",
            "every generalized greedy labeling is a maximizer",
            all_paths(max_n),
            _t_generalized,
            threads,
            conjectural=True,
        )
    ]


SUITES: dict[str, Callable[..., list[Check]]] = {
    "symmetry": suite_symmetry,
    "degree": suite_degree,
    "internal-zeros": suite_internal_zeros,
    "mindes": suite_mindes,
    "partition": suite_partition,
    "dessets": suite_dessets,
    "corollaries": suite_corollaries,
    "identities": suite_identities,
    "sequences": suite_sequences,
    "conjectures": suite_conjectures,
}


def run_suites(names: Iterable[str], max_n: int, threads=None) -> list[Check]:
    names = list(names)
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    checks: list[Check] = []
    for name in names:
        log.info("running suite %s up to n = %d", name, max_n)
        checks += SUITES[name](max_n, threads=threads)
    return checks


def failed(checks: Iterable[Check]) -> list[Check]:
    return [c for c in checks if not c.passed and not c.conjectural]
