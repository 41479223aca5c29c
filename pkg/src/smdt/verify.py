"""Acceptance checks shared by ``smdt verify`` and the test suite.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
criterion.  ``desk`` runs every check at its full size, ``quick`` shrinks
the exhaustive ranges for a smoke run.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product

from .census import bifix_free_count, census, nielsen_bound
from .kmp import g_table, x_plus_one_valuation
from .oracle import exact_value
from .pattern import Pattern, all_patterns, is_bifix_free, periods
from .search import TextOracle, find_bifix_free, find_general, naive_find
from .spectral import (
    IntPolynomial,
    charpoly_det,
    charpoly_periods,
    charpoly_recurrence,
    g_recurrence_check,
    skolem_verdict,
)
from .tuza import b1_bound, b2_bound, census_b1_b2, tuza_verdict

LEVELS = ("desk", "quick")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"[{flag}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _timed(name: str, fn) -> CheckResult:
    t0 = time.perf_counter()
    passed, detail = fn()
    return CheckResult(name, passed, detail, time.perf_counter() - t0)


def check_searcher(max_m: int = 5, max_n: int = 12) -> CheckResult:
    def run():
        failures = []
        cases = 0
        for m in range(2, max_m + 1):
            for p in all_patterns(m):
                c = periods(p).gcd_c
                bf = is_bifix_free(p)
                for n in range(max_n + 1):
                    worst = worst_bf = 0
                    for text in product((0, 1), repeat=n):
                        cases += 1
                        got = find_general(TextOracle(text), p)
                        ref = naive_find(text, p)
                        if (got.found, got.first_occurrence) != (ref.found, ref.first_occurrence):
                            failures.append(f"{p}/{''.join(map(str, text))}")
                        worst = max(worst, got.queries_used)
                        if bf:
                            out = find_bifix_free(TextOracle(text), p)
                            if out.found != ref.found:
                                failures.append(f"bifix-free {p}/{''.join(map(str, text))}")
                            worst_bf = max(worst_bf, out.queries_used)
                    if worst > n - n % c:
                        failures.append(f"budget {p} n={n}: {worst} > {n - n % c}")
                    if bf and worst_bf > n - n % m:
                        failures.append(f"bifix-free budget {p} n={n}: {worst_bf} > {n - n % m}")
        return not failures, f"{cases} searches, {len(failures)} failures {failures[:3]}"

    return _timed("1 searcher correctness and query budget", run)


def complexity_rows(p: Pattern, n_max: int) -> list[int]:
    return [exact_value(p, n) for n in range(n_max + 1)]


def check_oracle_bounds(max_m: int = 4, max_n: int = 12) -> CheckResult:
    def run():
        failures = []
        pats = 0
        for m in range(1, max_m + 1):
            for p in all_patterns(m):
                pats += 1
                c = periods(p).gcd_c
                D = complexity_rows(p, max_n + 1)
                for n in range(max_n + 1):
                    if not (n - m + 1 <= D[n] <= n - n % c):
                        failures.append(f"sandwich {p} n={n} D={D[n]}")
                    if D[n] > D[n + 1]:
                        failures.append(f"monotone {p} n={n}")
                for base in range(0, max_n + 2 - m):
                    if not any(D[base + i] == base + i for i in range(m + 1)):
                        failures.append(f"interleave {p} base={base}")
        return not failures, f"{pats} patterns, n <= {max_n + 1}, {len(failures)} failures {failures[:3]}"

    return _timed("2 oracle sandwich, monotonicity, interleaving", run)


def check_charpoly_three_way(max_m: int = 12, samples: int = 200, sample_m: int = 20, seed: int = 0) -> CheckResult:
    def run():
        bad = []
        count = 0
        for m in range(1, max_m + 1):
            for p in all_patterns(m):
                count += 1
                a, b, c = charpoly_det(p), charpoly_recurrence(p), charpoly_periods(p)
                if not (a == b == c):
                    bad.append(str(p))
        rng = random.Random(seed)
        for _ in range(samples):
            m = rng.randint(max_m + 1, sample_m)
            p = Pattern(tuple(rng.randrange(2) for _ in range(m)))
            count += 1
            if not (charpoly_det(p) == charpoly_recurrence(p) == charpoly_periods(p)):
                bad.append(str(p))
        return not bad, f"{count} patterns, {len(bad)} disagreements {bad[:3]}"

    return _timed("3 characteristic polynomial three-way equality", run)


def check_known_polynomials(k_poly: int = 8, k_skolem: int = 5, horizon: int = 2000) -> CheckResult:
    def run():
        bad = []
        for k in range(1, k_poly + 1):
            p = Pattern((1,) + (0,) * k + (1,))
            want = IntPolynomial((1, -1) + (0,) * k + (1,))
            for route in (charpoly_det, charpoly_recurrence, charpoly_periods):
                if route(p) != want:
                    bad.append(f"{route.__name__}({p})")
        for k in range(1, k_skolem + 1):
            p = Pattern((1,) + (0,) * k + (1,))
            v = skolem_verdict(p, horizon)
            if v.verdict != "evasive-by-algebra":
                bad.append(f"skolem({p})={v.verdict}")
        return not bad, f"k<= {k_poly} polynomials, k <= {k_skolem} verdicts at horizon {horizon}; failures {bad}"

    return _timed("4 known polynomials for 10^k1", run)


def check_recurrence_divisibility(max_m: int = 6, n_max: int = 30, div_m: int = 3, div_n: int = 10) -> CheckResult:
    def run():
        bad = []
        checked = 0
        for m in range(1, max_m + 1):
            for p in all_patterns(m):
                if not g_recurrence_check(p, n_max):
                    bad.append(f"recurrence {p}")
        for m in range(1, div_m + 1):
            for p in all_patterns(m):
                for n in range(1, div_n + 1):
                    slack = n - exact_value(p, n)
                    if slack >= 1:
                        checked += 1
                        if x_plus_one_valuation(g_table(p, n).g(m + 1)) < slack:
                            bad.append(f"divisibility {p} n={n} l={slack}")
        return not bad, f"recurrence m <= {max_m}; {checked} divisibility cases; failures {bad[:3]}"

    return _timed("5 g recurrence and (x+1)^l divisibility", run)


NIELSEN_TARGETS = ((2, 20, 0.268, 0.005), (3, 12, 0.557, 0.01), (4, 10, 0.688, 0.015))


def check_nielsen(targets=NIELSEN_TARGETS, jobs: int | None = None) -> CheckResult:
    def run():
        parts = []
        ok = True
        for sigma, m, limit, tol in targets:
            frac = bifix_free_count(m, sigma, jobs=jobs) / sigma**m
            good = abs(frac - limit) <= tol and frac >= nielsen_bound(sigma) - 0.01
            ok &= good
            parts.append(f"s={sigma} m={m} b={frac:.5f}{'' if good else ' (!)'}")
        return ok, "; ".join(parts)

    return _timed("6 Nielsen bifix-free fractions", run)


def check_b1_b2(max_m: int = 16, trend=(12, 16), jobs: int | None = None) -> CheckResult:
    def run():
        bad = []
        for m in range(1, max_m + 1):
            n1, n2 = census_b1_b2(m)
            if n1 > b1_bound(m) or n2 > b2_bound(m):
                bad.append(f"bound m={m}")
        lo, hi = trend
        union, cover = [], []
        for m in range(lo, hi + 1):
            row = census(m, jobs=jobs)
            union.append(row.unknown_count / row.total)
            cover.append((row.b1_count + row.b2_count) / row.total)
        for seq, label in ((union, "unknown"), (cover, "b1+b2")):
            if any(a <= b for a, b in zip(seq, seq[1:])):
                bad.append(f"{label} fraction not decreasing {[round(x, 4) for x in seq]}")
        trend_txt = ", ".join(f"{x:.3f}" for x in union)
        return not bad, f"bounds m <= {max_m}; unknown fraction m={lo}..{hi}: {trend_txt}; failures {bad}"

    return _timed("7 B1/B2 counting bounds and shrinking unknown fraction", run)


def check_settled(max_m: int = 4, n_cap: int = 14) -> CheckResult:
    def run():
        bad = []
        tested = []
        for m in range(1, max_m + 1):
            for p in all_patterns(m):
                v = tuza_verdict(p)
                if not v.lower_bound_applies or v.threshold > n_cap:
                    continue
                c = periods(p).gcd_c
                for n in range(v.threshold, n_cap + 1):
                    tested.append((str(p), n))
                    if exact_value(p, n) != n - n % c:
                        bad.append(f"{p} n={n}")
        if not tested:
            return True, "vacuous: no settled pattern with threshold <= cap"
        pats = sorted({t[0] for t in tested})
        return not bad, f"settled patterns {pats}, {len(tested)} (p, n) cases; failures {bad[:3]}"

    return _timed("8 settled-pattern spot check", run)


def run_all(level: str = "desk", seed: int = 0, jobs: int | None = None) -> list[CheckResult]:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    if level == "quick":
        return [
            check_searcher(4, 8),
            check_oracle_bounds(3, 8),
            check_charpoly_three_way(8, samples=20, seed=seed),
            check_known_polynomials(4, 2, 1200),
            check_recurrence_divisibility(4, 20, 2, 7),
            check_nielsen(((2, 14, 0.268, 0.01), (3, 8, 0.557, 0.02), (4, 6, 0.688, 0.03)), jobs=jobs),
            check_b1_b2(12, (12, 14), jobs=jobs),
            check_settled(2, 8),
        ]
    return [
        check_searcher(),
        check_oracle_bounds(),
        check_charpoly_three_way(seed=seed),
        check_known_polynomials(),
        check_recurrence_divisibility(),
        check_nielsen(jobs=jobs),
        check_b1_b2(jobs=jobs),
        check_settled(),
    ]
