"""Patterns over an integer-coded alphabet, their periods and bifixes.

Public positions are 1-based: ``p.at(1)`` is the first symbol and
``p.sub(i, j)`` is the inclusive slice p[i..j].  The ``symbols`` tuple is the
plain 0-based storage and is what the rest of the package iterates over.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import InvalidPattern


@dataclass(frozen=True)
class Pattern:
    symbols: tuple[int, ...]
    sigma: int = 2

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(a) for a in self.symbols))
        if self.sigma < 2:
            raise InvalidPattern(f"alphabet size must be >= 2, got {self.sigma}")
        if not self.symbols:
            raise InvalidPattern("empty pattern")
        for pos, a in enumerate(self.symbols, start=1):
            if not 0 <= a < self.sigma:
                raise InvalidPattern(
                    f"symbol {a} at position {pos} outside alphabet [0, {self.sigma})"
                )

    @classmethod
    def parse(cls, text: str, sigma: int | None = None) -> "Pattern":
        """Parse a digit string such as ``"1010"``.

        Without ``sigma`` the alphabet is the smallest one (at least binary)
        containing every digit.
        """
        text = text.strip()
        if not text or not text.isdigit():
            raise InvalidPattern(f"pattern must be a non-empty digit string, got {text!r}")
        symbols = tuple(int(ch) for ch in text)
        if sigma is None:
            sigma = max(2, max(symbols) + 1)
        return cls(symbols, sigma)

    @property
    def m(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __str__(self) -> str:
        return "".join(str(a) for a in self.symbols)

    def at(self, i: int) -> int:
        if not 1 <= i <= self.m:
            raise IndexError(f"position {i} outside [1, {self.m}]")
        return self.symbols[i - 1]

    def sub(self, i: int, j: int) -> tuple[int, ...]:
        """Inclusive 1-based slice p[i..j] (empty when j < i)."""
        return self.symbols[max(i, 1) - 1 : j]

    def weight(self, k: int | None = None) -> int:
        """Number of 1-symbols in the prefix p[1..k] (whole pattern by default)."""
        k = self.m if k is None else k
        return sum(1 for a in self.symbols[:k] if a == 1)

    @cached_property
    def border_array(self) -> tuple[int, ...]:
        """Classic failure function: entry i is the longest proper border of p[1..i]."""
        s = self.symbols
        fail = [0] * (self.m + 1)
        k = 0
        for i in range(1, self.m):
            while k and s[i] != s[k]:
                k = fail[k]
            if s[i] == s[k]:
                k += 1
            fail[i + 1] = k
        return tuple(fail)


@dataclass(frozen=True)
class PeriodSet:
    periods: tuple[int, ...]
    gcd_c: int

    def __contains__(self, k: int) -> bool:
        return k in self.periods

    def __iter__(self):
        return iter(self.periods)

    def __len__(self) -> int:
        return len(self.periods)


def periods(p: Pattern) -> PeriodSet:
    """All k in [1, m] with p[i] = p[i + k] for every valid i.

    Walks the border chain of the whole pattern: k is a period exactly when
    m - k is a border length.
    """
    m = p.m
    fail = p.border_array
    found = [m]
    b = fail[m]
    while b:
        found.append(m - b)
        b = fail[b]
    found.sort()
    return PeriodSet(tuple(found), reduce(gcd, found))


def bifixes(p: Pattern) -> frozenset[int]:
    """Lengths l in [1, m] with p[1..l] == p[m-l+1..m]; always contains m."""
    s = p.symbols
    m = p.m
    return frozenset(l for l in range(1, m + 1) if s[:l] == s[m - l :])


def is_bifix_free(p: Pattern) -> bool:
    return periods(p).periods == (p.m,)


def gcd_of_periods(p: Pattern) -> int:
    return periods(p).gcd_c


def all_patterns(m: int, sigma: int = 2) -> Iterator[Pattern]:
    """Every pattern of length m in lexicographic order."""
    from itertools import product

    for syms in product(range(sigma), repeat=m):
        yield Pattern(syms, sigma)


def as_symbols(s: str | Sequence[int] | Iterable[int]) -> tuple[int, ...]:
    if isinstance(s, str):
        return tuple(int(ch) for ch in s)
    return tuple(int(a) for a in s)
