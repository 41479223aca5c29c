"""Exact decision-tree complexity D_p(n) on small instances.

The adversary game is played on partial strings: every cell is either a
known symbol or unknown.  A position is finished (value 0) once the answer
"does the text contain p" is the same for every completion; otherwise its
value is 1 + min over unknown cells of max over answers.

``exact_complexity`` evaluates that game bottom-up over every partial
string at once (numpy, layered by the number of unknown cells).
``exact_complexity_memo`` is the direct memoized recursion; it is slow and
exists as an independent check of the vectorized solver.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import ceil, log2

import numpy as np

from .errors import InstanceTooLarge
from .kmp import build_automaton
from .pattern import Pattern, periods

DEFAULT_MAX_STATES = 3**14


def max_states() -> int:
    raw = os.environ.get("SMDT_MAX_STATES")
    return int(raw) if raw else DEFAULT_MAX_STATES


@dataclass(frozen=True)
class PartialString:
    cells: tuple[int | None, ...]
    sigma: int = 2

    @classmethod
    def parse(cls, text: str, sigma: int = 2) -> "PartialString":
        """``"1?0?"``: digits are known cells, ``?`` marks unknown ones."""
        return cls(tuple(None if ch == "?" else int(ch) for ch in text), sigma)

    @classmethod
    def unknown(cls, n: int, sigma: int = 2) -> "PartialString":
        return cls((None,) * n, sigma)

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def key(self) -> int:
        """Packed cell array: ceil(log2(sigma + 1)) bits per cell, unknown = sigma."""
        width = ceil(log2(self.sigma + 1))
        k = 0
        for pos, cell in enumerate(self.cells):
            code = self.sigma if cell is None else cell
            k |= code << (pos * width)
        return k

    def assign(self, pos: int, a: int) -> "PartialString":
        """Copy with 1-based cell ``pos`` set to ``a``."""
        cells = list(self.cells)
        cells[pos - 1] = a
        return PartialString(tuple(cells), self.sigma)

    def unknown_positions(self) -> list[int]:
        return [i + 1 for i, c in enumerate(self.cells) if c is None]

    def __str__(self) -> str:
        return "".join("?" if c is None else str(c) for c in self.cells)


def can_occur(ps: PartialString, p: Pattern) -> bool:
    cells, sym = ps.cells, p.symbols
    for start in range(ps.n - p.m + 1):
        if all(cells[start + t] is None or cells[start + t] == a for t, a in enumerate(sym)):
            return True
    return False


def must_occur(ps: PartialString, p: Pattern) -> bool:
    aut = build_automaton(p)
    m = p.m
    reach = {1}
    for cell in ps.cells:
        choices = range(p.sigma) if cell is None else (cell,)
        reach = {aut.delta[q - 1][a] for q in reach for a in choices} - {m + 1}
        if not reach:
            return True
    return False


def is_resolved(ps: PartialString, p: Pattern) -> bool:
    return not can_occur(ps, p) or must_occur(ps, p)


@dataclass(frozen=True)
class ComplexityReport:
    pattern: str
    n: int
    exact_value: int
    rivest_lower: int
    period_upper: int
    settled: bool

    def as_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "n": self.n,
            "exact_value": self.exact_value,
            "rivest_lower": self.rivest_lower,
            "period_upper": self.period_upper,
            "settled": self.settled,
        }


def _check_size(p: Pattern, n: int, limit: int | None) -> None:
    limit = max_states() if limit is None else limit
    if (p.sigma + 1) ** n > limit:
        raise InstanceTooLarge(
            f"(sigma + 1)^n = {(p.sigma + 1) ** n} partial strings exceeds the cap {limit}"
        )


@lru_cache(maxsize=2)
def _digits(sigma: int, n: int) -> np.ndarray:
    base = sigma + 1
    idx = np.arange(base**n, dtype=np.int64)
    d = np.empty((base**n, n), dtype=np.int8)
    for t in range(n):
        d[:, t] = idx % base
        idx //= base
    d.setflags(write=False)
    return d


def _resolved_mask(p: Pattern, d: np.ndarray) -> np.ndarray:
    N, n = d.shape
    unk = p.sigma
    m, sym = p.m, p.symbols
    can = np.zeros(N, dtype=bool)
    for start in range(n - m + 1):
        ok = np.ones(N, dtype=bool)
        for t, a in enumerate(sym):
            col = d[:, start + t]
            ok &= (col == a) | (col == unk)
        can |= ok
    aut = build_automaton(p)
    reach = np.zeros((N, m), dtype=bool)
    reach[:, 0] = True
    for t in range(n):
        col = d[:, t]
        allowed = [(col == a) | (col == unk) for a in range(p.sigma)]
        nxt = np.zeros_like(reach)
        for q in range(m):
            for a in range(p.sigma):
                tgt = aut.delta[q][a] - 1
                if tgt < m:
                    nxt[:, tgt] |= reach[:, q] & allowed[a]
        reach = nxt
    must = ~reach.any(axis=1)
    return ~can | must


def complexity_table(p: Pattern, n: int, *, limit: int | None = None) -> np.ndarray:
    """Game value of every partial string of length n, indexed base sigma+1."""
    _check_size(p, n, limit)
    sigma, base = p.sigma, p.sigma + 1
    d = _digits(sigma, n)
    resolved = _resolved_mask(p, d)
    unknown_count = (d == sigma).sum(axis=1)
    val = np.zeros(d.shape[0], dtype=np.int16)
    powers = [base**t for t in range(n)]
    for k in range(1, n + 1):
        layer = np.flatnonzero((unknown_count == k) & ~resolved)
        if layer.size == 0:
            continue
        best = np.full(layer.size, n + 1, dtype=np.int16)
        dl = d[layer]
        for t in range(n):
            mask = dl[:, t] == sigma
            if not mask.any():
                continue
            parent = layer[mask]
            worst = np.zeros(parent.size, dtype=np.int16)
            for a in range(sigma):
                worst = np.maximum(worst, val[parent - (sigma - a) * powers[t]])
            best[mask] = np.minimum(best[mask], worst)
        val[layer] = best + 1
    return val


def exact_value(p: Pattern, n: int, *, limit: int | None = None) -> int:
    if n < p.m:
        return 0
    val = complexity_table(p, n, limit=limit)
    return int(val[-1])  # all-unknown is the largest index


def exact_complexity(p: Pattern, n: int, *, limit: int | None = None) -> ComplexityReport:
    from .tuza import tuza_verdict

    value = exact_value(p, n, limit=limit)
    c = periods(p).gcd_c
    return ComplexityReport(
        pattern=str(p),
        n=n,
        exact_value=value,
        rivest_lower=n - p.m + 1,
        period_upper=n - n % c,
        settled=tuza_verdict(p).lower_bound_applies,
    )


def exact_complexity_memo(p: Pattern, n: int, *, limit: int | None = None) -> int:
    """Plain memoized minimax over PartialString keys."""
    _check_size(p, n, limit)
    memo: dict[int, int] = {}

    def value(ps: PartialString) -> int:
        key = ps.key
        if key in memo:
            return memo[key]
        if is_resolved(ps, p):
            v = 0
        else:
            v = 1 + min(
                max(value(ps.assign(i, a)) for a in range(p.sigma))
                for i in ps.unknown_positions()
            )
        memo[key] = v
        return v

    return value(PartialString.unknown(n, p.sigma))


def evasive_certificate(p: Pattern, n_max: int, n_min: int | None = None) -> list[tuple[int, int, bool]]:
    """Rows (n, D_p(n), D_p(n) == n) for n in [n_min, n_max]; n_min defaults to m."""
    start = p.m if n_min is None else n_min
    rows = []
    for n in range(start, n_max + 1):
        v = exact_value(p, n)
        rows.append((n, v, v == n))
    return rows
