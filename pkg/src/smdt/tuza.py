"""Tuza's combinatorial evasiveness criteria.

Terminology: for a proper bifix b of p, p(b) is the overlap string u b v with
u b = b v = p.  Property 1 asks for an internal length-m window of p(b) at
Hamming distance <= 2 from p; property 2 asks for an internal window of pp at
distance <= 4.  Offsets are 1-based and "internal" excludes exactly the
prefix window (offset 1) and the suffix window (offset len - m + 1).

``census_b1_b2`` counts B1(m) and B2(m) over the whole pattern space with a
vectorized pass; the per-pattern functions stay scalar and are used to check
it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Sequence

import numpy as np

from .errors import InstanceTooLarge, NotABifix, PreconditionViolated
from .pattern import Pattern, as_symbols, bifixes

PROPERTY1_RADIUS = 2
PROPERTY2_RADIUS = 4
CENSUS_CAPS = {2: 22, 3: 14, 4: 11}


def _hamming(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def be_bases(p: Pattern) -> list[tuple[int, ...]]:
    """Proper bifixes b of p (so p is in BE(b)), shortest first."""
    return [p.symbols[:l] for l in sorted(bifixes(p)) if l < p.m]


def _as_base(p: Pattern, b) -> tuple[int, ...]:
    b = as_symbols(b)
    L = len(b)
    if not 0 < L < p.m or p.symbols[:L] != b or p.symbols[p.m - L :] != b:
        raise NotABifix(f"{''.join(map(str, b))!r} is not a proper bifix of {p}")
    return b


def p_of_b(p: Pattern, b) -> tuple[int, ...]:
    b = _as_base(p, b)
    return p.symbols + p.symbols[len(b) :]


def _internal_witness(container: Sequence[int], p: Pattern, radius: int) -> tuple[int, int] | None:
    m = p.m
    last = len(container) - m + 1
    for offset in range(2, last):
        dist = _hamming(container[offset - 1 : offset - 1 + m], p.symbols)
        if dist <= radius:
            return offset, dist
    return None


def has_property1(p: Pattern, b) -> tuple[int, int] | None:
    """First internal window of p(b) within distance 2 of p, as (offset, distance)."""
    return _internal_witness(p_of_b(p, b), p, PROPERTY1_RADIUS)


def has_property2(p: Pattern) -> tuple[int, int] | None:
    """First internal window of pp within distance 4 of p, as (offset, distance)."""
    return _internal_witness(p.symbols + p.symbols, p, PROPERTY2_RADIUS)


def b1_reduce(p: Pattern, b) -> tuple[int, ...]:
    """Replace a long base by a bifix of length <= m/2 whose overlap string contains p(b)."""
    b = _as_base(p, b)
    m = p.m
    if 2 * len(b) <= m:
        raise PreconditionViolated(f"base of length {len(b)} is not longer than m/2 = {m / 2}")
    d = m - len(b)
    k = (m - 1) // d  # k*d < m <= (k+1)*d
    return p.symbols[k * d :]


def theorem2_threshold(m: int, base_len: int) -> int:
    """n >= m(2m - |b|)/gcd(m, |b|); base_len 0 stands for a bifix-free pattern."""
    g = gcd(m, base_len)
    return -(-m * (2 * m - base_len) // g)


@dataclass(frozen=True)
class TuzaVerdict:
    pattern: str
    bifix_bases: list[str]
    property1_failures: list[tuple[str, int, int]]
    property2_failures: list[tuple[int, int]]
    lower_bound_applies: bool
    bound_gcd: int
    predicted: str
    threshold: int

    def as_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "bifix_bases": self.bifix_bases,
            "property1_failures": [
                {"base": b, "offset": o, "diff_count": d} for b, o, d in self.property1_failures
            ],
            "property2_failures": [
                {"offset": o, "diff_count": d} for o, d in self.property2_failures
            ],
            "lower_bound_applies": self.lower_bound_applies,
            "bound_gcd": self.bound_gcd,
            "predicted": self.predicted,
            "theorem2_threshold": self.threshold,
            "theorem8_threshold": "asymptotic",
        }


def _all_witnesses(container, p: Pattern, radius: int) -> list[tuple[int, int]]:
    m = p.m
    out = []
    for offset in range(2, len(container) - m + 1):
        dist = _hamming(container[offset - 1 : offset - 1 + m], p.symbols)
        if dist <= radius:
            out.append((offset, dist))
    return out


def tuza_verdict(p: Pattern) -> TuzaVerdict:
    bases = be_bases(p)
    p1 = []
    for b in bases:
        for off, dist in _all_witnesses(p_of_b(p, b), p, PROPERTY1_RADIUS):
            p1.append(("".join(map(str, b)), off, dist))
    p2 = _all_witnesses(p.symbols + p.symbols, p, PROPERTY2_RADIUS)
    bound_gcd = reduce(gcd, [len(b) for b in bases], p.m)
    applies = not p1 and not p2
    if not applies:
        predicted = "unknown"
    elif bound_gcd == 1:
        predicted = "evasive"
    else:
        predicted = f"settled({bound_gcd})"
    lengths = [len(b) for b in bases] or [0]
    threshold = max(theorem2_threshold(p.m, L) for L in lengths)
    return TuzaVerdict(
        pattern=str(p),
        bifix_bases=["".join(map(str, b)) for b in bases],
        property1_failures=p1,
        property2_failures=p2,
        lower_bound_applies=applies,
        bound_gcd=bound_gcd,
        predicted=predicted,
        threshold=threshold,
    )


def pattern_block(m: int, sigma: int, start: int, stop: int) -> np.ndarray:
    """Patterns with lexicographic ranks [start, stop) as an int8 array of shape (k, m)."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, m), dtype=np.int8)
    for t in range(m - 1, -1, -1):
        out[:, t] = idx % sigma
        idx //= sigma
    return out


def period_masks(P: np.ndarray) -> np.ndarray:
    """Boolean (k, m+1) array; column j says whether j is a period (column 0 unused)."""
    k, m = P.shape
    per = np.zeros((k, m + 1), dtype=bool)
    per[:, m] = True
    for j in range(1, m):
        per[:, j] = (P[:, : m - j] == P[:, j:]).all(axis=1)
    return per


def block_properties(P: np.ndarray, *, short_bases_only: bool = True):
    """(in_b1, in_b2, periods) for a block of patterns.

    With ``short_bases_only`` B1 membership only looks at bases of length
    <= m/2, which suffices because of the long-base reduction.
    """
    k, m = P.shape
    per = period_masks(P)
    b2 = np.zeros(k, dtype=bool)
    PP = np.concatenate([P, P], axis=1)
    for off in range(1, m):  # 0-based internal offsets of pp
        dist = (PP[:, off : off + m] != P).sum(axis=1)
        b2 |= dist <= PROPERTY2_RADIUS
    b1 = np.zeros(k, dtype=bool)
    for L in range(1, m):
        if short_bases_only and 2 * L > m:
            continue
        d = m - L
        has_base = per[:, d]
        if not has_base.any():
            continue
        ext = np.concatenate([P, P[:, L:]], axis=1)
        for off in range(1, d):
            dist = (ext[:, off : off + m] != P).sum(axis=1)
            b1 |= has_base & (dist <= PROPERTY1_RADIUS)
    return b1, b2, per


def census_b1_b2(m: int, sigma: int = 2, *, chunk: int = 1 << 18, short_bases_only: bool = True) -> tuple[int, int]:
    """Exact |B1(m)| and |B2(m)| by enumerating all sigma^m patterns."""
    cap = CENSUS_CAPS.get(sigma, 0)
    if m > cap:
        raise InstanceTooLarge(f"sigma={sigma}, m={m} exceeds the enumeration cap m <= {cap}")
    total = sigma**m
    n1 = n2 = 0
    for start in range(0, total, chunk):
        P = pattern_block(m, sigma, start, min(total, start + chunk))
        b1, b2, _ = block_properties(P, short_bases_only=short_bases_only)
        n1 += int(b1.sum())
        n2 += int(b2.sum())
    return n1, n2


def b1_bound(m: int, sigma: int = 2) -> float:
    return m**4 / 2 * sigma ** (m / 2 + 2)


def b2_bound(m: int, sigma: int = 2) -> float:
    return m**5 * sigma ** (m / 2 + 4)
