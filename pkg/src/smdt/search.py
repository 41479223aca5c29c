"""Period-driven query algorithms run against a query-counting text oracle.

Both searchers follow the block strategy: grow a window around a seed
position, extending to the left while the known cells form a suffix of the
pattern and to the right otherwise.  ``find_bifix_free`` handles patterns
whose only period is m; ``find_general`` advances the seed by c, the gcd of
all periods, and spends at most c fresh queries per seed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Sequence

from .errors import PatternNotBifixFree
from .pattern import Pattern, as_symbols, is_bifix_free, periods

SENTINEL = -1


@dataclass
class TextOracle:
    """Hidden text with 1-based queries; each in-range position is charged once."""

    text: tuple[int, ...]
    log: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.text = as_symbols(self.text)

    @property
    def n(self) -> int:
        return len(self.text)

    def query(self, pos: int) -> int:
        if pos < 1:
            raise IndexError(f"query at position {pos} < 1")
        if pos > self.n:
            return SENTINEL
        if pos not in self.log:
            self.log[pos] = self.text[pos - 1]
        return self.log[pos]

    def is_known(self, pos: int) -> bool:
        return pos > self.n or pos in self.log

    def peek(self, pos: int) -> int:
        """Value of an already queried (or out-of-range) cell."""
        return SENTINEL if pos > self.n else self.log[pos]

    @property
    def queries_used(self) -> int:
        return len(self.log)

    @property
    def query_order(self) -> list[int]:
        return list(self.log)


@dataclass(frozen=True)
class SearchOutcome:
    found: bool
    first_occurrence: int | None
    queries_used: int


def _is_suffix(oracle: TextOracle, p: Pattern, i: int, j: int) -> bool:
    length = j - i + 1
    sym = p.symbols
    off = p.m - length
    return all(oracle.peek(i + t) == sym[off + t] for t in range(length))


def _window_is_p(oracle: TextOracle, p: Pattern, i: int) -> bool:
    return all(oracle.peek(i + t) == a for t, a in enumerate(p.symbols))


def _grow_block(oracle: TextOracle, p: Pattern, seed: int) -> int:
    """Run the full block loop from ``seed`` until the window spans m cells; return i."""
    m = p.m
    i = j = seed
    oracle.query(seed)
    while j - i != m - 1:
        if _is_suffix(oracle, p, i, j):
            i -= 1
            oracle.query(i)
        else:
            j += 1
            oracle.query(j)
    return i


def find_bifix_free(oracle: TextOracle, p: Pattern) -> SearchOutcome:
    if not is_bifix_free(p):
        raise PatternNotBifixFree(f"pattern {p} has a proper bifix")
    m, n = p.m, oracle.n
    offset = 0
    while n - offset >= m:
        i = _grow_block(oracle, p, offset + m)
        if _window_is_p(oracle, p, i):
            return SearchOutcome(True, i, oracle.queries_used)
        offset += m
    return SearchOutcome(False, None, oracle.queries_used)


def find_general(oracle: TextOracle, p: Pattern) -> SearchOutcome:
    m, n = p.m, oracle.n
    if n < m:
        return SearchOutcome(False, None, oracle.queries_used)
    c = periods(p).gcd_c
    i = _grow_block(oracle, p, m)
    if _window_is_p(oracle, p, i):
        return SearchOutcome(True, i, oracle.queries_used)
    seed = m + c
    while seed <= n:
        fresh = 0 if oracle.is_known(seed) else 1
        oracle.query(seed)
        i = j = seed
        while fresh < c and j - i != m - 1:
            nxt = i - 1 if _is_suffix(oracle, p, i, j) else j + 1
            if not oracle.is_known(nxt):
                fresh += 1
            oracle.query(nxt)
            if nxt < i:
                i = nxt
            else:
                j = nxt
        # s[j-m+1..j] is tested only when every one of its cells is known
        start = j - m + 1
        if start >= 1 and all(oracle.is_known(t) for t in range(start, j + 1)):
            if _window_is_p(oracle, p, start):
                return SearchOutcome(True, start, oracle.queries_used)
        seed += c
    return SearchOutcome(False, None, oracle.queries_used)


def naive_find(s: Sequence[int] | str, p: Pattern) -> SearchOutcome:
    text = as_symbols(s)
    sym = p.symbols
    m = p.m
    for start in range(len(text) - m + 1):
        if text[start : start + m] == sym:
            return SearchOutcome(True, start + 1, len(text))
    return SearchOutcome(False, None, len(text))


def query_budget(p: Pattern, n: int) -> int:
    c = periods(p).gcd_c
    return n - n % c


Searcher = Callable[[TextOracle, Pattern], SearchOutcome]


def worst_case_queries(p: Pattern, n: int, searcher: Searcher = find_general) -> int:
    """Largest queries_used over all sigma^n texts of length n."""
    worst = 0
    for text in product(range(p.sigma), repeat=n):
        out = searcher(TextOracle(text), p)
        worst = max(worst, out.queries_used)
    return worst
