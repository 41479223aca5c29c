"""Whole-space censuses over all sigma^m patterns.

The pattern space is cut into contiguous lexicographic rank ranges; each
range is classified independently and the counts are summed, so the result
does not depend on the worker count.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields

import numpy as np

from .errors import InstanceTooLarge
from .tuza import CENSUS_CAPS, b1_bound, b2_bound, block_properties, pattern_block, period_masks

CHUNK = 1 << 17
NIELSEN_LIMITS = {2: 0.268, 3: 0.557, 4: 0.688, 5: 0.760, 6: 0.801}
CSV_COLUMNS = ("m", "sigma", "total", "bifix_free", "b_frac", "b1", "b2", "settled", "tuza_evasive", "unknown")
SAFE_INT = 2**53


@dataclass(frozen=True)
class CensusRow:
    m: int
    sigma: int
    total: int
    bifix_free_count: int
    b1_count: int
    b2_count: int
    settled_count: int
    tuza_evasive_count: int
    unknown_count: int

    @property
    def b_frac(self) -> float:
        return self.bifix_free_count / self.total

    def csv_values(self) -> list[str]:
        return [
            str(self.m), str(self.sigma), str(self.total), str(self.bifix_free_count),
            f"{self.b_frac:.6f}", str(self.b1_count), str(self.b2_count),
            str(self.settled_count), str(self.tuza_evasive_count), str(self.unknown_count),
        ]

    def as_dict(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            out[f.name] = str(v) if isinstance(v, int) and abs(v) >= SAFE_INT else v
        out["b_frac"] = self.b_frac
        out["b1_bound"] = b1_bound(self.m, self.sigma)
        out["b2_bound"] = b2_bound(self.m, self.sigma)
        return out


def _check_cap(m: int, sigma: int) -> None:
    cap = CENSUS_CAPS.get(sigma, 0)
    if m < 1 or m > cap:
        raise InstanceTooLarge(f"sigma={sigma}, m={m} outside the enumeration cap 1 <= m <= {cap}")


def _ranges(total: int, chunk: int) -> list[tuple[int, int]]:
    return [(s, min(total, s + chunk)) for s in range(0, total, chunk)]


def _census_range(args) -> tuple[int, ...]:
    m, sigma, start, stop = args
    P = pattern_block(m, sigma, start, stop)
    b1, b2, per = block_properties(P)
    bifix_free = ~per[:, 1:m].any(axis=1)
    c = np.full(P.shape[0], m, dtype=np.int64)
    for j in range(1, m):
        c = np.where(per[:, j], np.gcd(c, j), c)
    unknown = b1 | b2
    settled = ~unknown
    return (
        int(bifix_free.sum()),
        int(b1.sum()),
        int(b2.sum()),
        int(settled.sum()),
        int((settled & (c == 1)).sum()),
        int(unknown.sum()),
    )


def _bifix_free_range(args) -> int:
    m, sigma, start, stop = args
    per = period_masks(pattern_block(m, sigma, start, stop))
    return int((~per[:, 1:m].any(axis=1)).sum())


def _map_sum(func, tasks, jobs: int | None) -> list[int]:
    jobs = jobs or os.cpu_count() or 1
    if jobs <= 1 or len(tasks) <= 1:
        results = [func(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(func, tasks))
    if results and isinstance(results[0], tuple):
        return [sum(col) for col in zip(*results)]
    return [sum(results)]


def census(m: int, sigma: int = 2, *, jobs: int | None = None, chunk: int = CHUNK) -> CensusRow:
    _check_cap(m, sigma)
    total = sigma**m
    tasks = [(m, sigma, a, b) for a, b in _ranges(total, chunk)]
    bf, b1, b2, settled, evasive, unknown = _map_sum(_census_range, tasks, jobs)
    return CensusRow(m, sigma, total, bf, b1, b2, settled, evasive, unknown)


def bifix_free_count(m: int, sigma: int = 2, *, jobs: int | None = None, chunk: int = CHUNK) -> int:
    _check_cap(m, sigma)
    tasks = [(m, sigma, a, b) for a, b in _ranges(sigma**m, chunk)]
    return _map_sum(_bifix_free_range, tasks, jobs)[0]


def bifix_free_fraction(m: int, sigma: int = 2, *, jobs: int | None = None) -> float:
    return bifix_free_count(m, sigma, jobs=jobs) / sigma**m


def nielsen_bound(sigma: int) -> float:
    return 1 - 1 / sigma - 1 / sigma**2


@dataclass(frozen=True)
class NielsenRow:
    sigma: int
    m: int
    bifix_free: int
    b_frac: float
    limit: float | None
    lower_bound: float

    def as_dict(self) -> dict:
        return {
            "sigma": self.sigma,
            "m": self.m,
            "bifix_free": self.bifix_free,
            "b_frac": round(self.b_frac, 6),
            "limit": self.limit,
            "diff_to_limit": None if self.limit is None else round(self.b_frac - self.limit, 6),
            "lower_bound": round(self.lower_bound, 6),
            "above_lower_bound": self.b_frac >= self.lower_bound,
        }


def nielsen_table(sigmas, m_per_sigma, *, jobs: int | None = None) -> list[NielsenRow]:
    """Finite-m bifix-free fractions next to the tabulated limits and the lower bound.

    ``m_per_sigma`` is either one length for every alphabet or a mapping sigma -> m.
    """
    rows = []
    for sigma in sigmas:
        m = m_per_sigma[sigma] if isinstance(m_per_sigma, dict) else m_per_sigma
        count = bifix_free_count(m, sigma, jobs=jobs)
        rows.append(
            NielsenRow(sigma, m, count, count / sigma**m, NIELSEN_LIMITS.get(sigma), nielsen_bound(sigma))
        )
    return rows
