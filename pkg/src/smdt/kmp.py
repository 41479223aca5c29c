"""KMP matching automaton, the signed transfer matrix and the g-tables.

States are numbered 1..m+1; state i means the longest prefix of p that is a
suffix of the text read so far has length i - 1.  State m+1 is absorbing and
is entered as soon as p has occurred.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import AlphabetUnsupported
from .pattern import Pattern


@dataclass(frozen=True)
class KmpAutomaton:
    pattern: Pattern
    delta: tuple[tuple[int, ...], ...]  # delta[i - 1][a] for state i

    @property
    def m(self) -> int:
        return self.pattern.m

    @property
    def sigma(self) -> int:
        return self.pattern.sigma

    @property
    def accepting(self) -> int:
        return self.pattern.m + 1

    def step(self, state: int, a: int) -> int:
        return self.delta[state - 1][a]

    def back_transition(self, state: int) -> int:
        """Target of the mismatch edge out of ``state`` (binary patterns only)."""
        if self.sigma != 2:
            raise AlphabetUnsupported("back transition is defined for binary patterns")
        miss = 1 - self.pattern.symbols[state - 1]
        return self.step(state, miss)


def build_automaton(p: Pattern) -> KmpAutomaton:
    m, s, fail = p.m, p.symbols, p.border_array
    rows: list[tuple[int, ...]] = []
    for q in range(1, m + 1):
        matched = q - 1
        row = []
        for a in range(p.sigma):
            if s[matched] == a:
                row.append(q + 1)
            elif matched == 0:
                row.append(1)
            else:
                # same move as the state reached after falling back along the border
                row.append(rows[fail[matched]][a])
        rows.append(tuple(row))
    rows.append(tuple([m + 1] * p.sigma))
    return KmpAutomaton(p, tuple(rows))


def run(a: KmpAutomaton, s: Sequence[int]) -> int:
    state = 1
    for ch in s:
        if not 0 <= ch < a.sigma:
            raise ValueError(f"symbol {ch} outside alphabet [0, {a.sigma})")
        state = a.delta[state - 1][ch]
    return state


def _require_binary(p: Pattern) -> None:
    if p.sigma != 2:
        raise AlphabetUnsupported(f"algebraic pipeline needs sigma = 2, got {p.sigma}")


def transfer_matrix(p: Pattern) -> np.ndarray:
    """m x m integer matrix T with gbar(n + 1) = T @ gbar(n) on states 1..m.

    Column i lists where state i goes; reading a 1 contributes x, which is -1
    after the substitution x = -1.
    """
    _require_binary(p)
    aut = build_automaton(p)
    m = p.m
    T = np.zeros((m, m), dtype=np.int64)
    for i in range(1, m + 1):
        for sym in (0, 1):
            j = aut.step(i, sym)
            if j <= m:
                T[j - 1, i - 1] += -1 if sym == 1 else 1
    return T


@dataclass(frozen=True)
class GTable:
    """g(n, i) for i = 1..m+1 as ascending coefficient tuples, plus their values at x = -1."""

    n: int
    polys: tuple[tuple[int, ...], ...]

    @property
    def bar(self) -> tuple[int, ...]:
        return tuple(eval_poly(c, -1) for c in self.polys)

    def g(self, i: int) -> tuple[int, ...]:
        return self.polys[i - 1]

    def gbar(self, i: int) -> int:
        return eval_poly(self.polys[i - 1], -1)


def eval_poly(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def g_tables(p: Pattern, n: int) -> list[GTable]:
    """g-tables for every length 0..n by dynamic programming over the automaton."""
    _require_binary(p)
    aut = build_automaton(p)
    states = p.m + 1
    cur = [[0] * (n + 1) for _ in range(states)]
    cur[0][0] = 1
    out = [GTable(0, tuple(_trim(list(c)) for c in cur))]
    for length in range(n):
        nxt = [[0] * (n + 1) for _ in range(states)]
        for i in range(states):
            ci = cur[i]
            if not any(ci):
                continue
            for sym in (0, 1):
                tgt = nxt[aut.delta[i][sym] - 1]
                if sym == 0:
                    for d in range(length + 1):
                        tgt[d] += ci[d]
                else:
                    for d in range(length + 1):
                        tgt[d + 1] += ci[d]
        cur = nxt
        out.append(GTable(length + 1, tuple(_trim(list(c)) for c in cur)))
    return out


def g_table(p: Pattern, n: int) -> GTable:
    return g_tables(p, n)[n]


def gbar_vectors(p: Pattern, n_max: int) -> list[list[int]]:
    """Exact integer vectors gbar(n, 1..m+1) for n = 0..n_max (x = -1 throughout)."""
    _require_binary(p)
    aut = build_automaton(p)
    states = p.m + 1
    cur = [0] * states
    cur[0] = 1
    out = [cur]
    for _ in range(n_max):
        nxt = [0] * states
        for i, v in enumerate(cur):
            if v:
                nxt[aut.delta[i][0] - 1] += v
                nxt[aut.delta[i][1] - 1] -= v
        cur = nxt
        out.append(cur)
    return out


def x_plus_one_valuation(coeffs: Sequence[int]) -> int:
    """Largest l with (x + 1)^l dividing the polynomial (ascending coefficients).

    The zero polynomial is reported as having infinite valuation via a large sentinel.
    """
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    if not c:
        return 1 << 30
    l = 0
    while len(c) > 1:
        # synthetic division by (x + 1), highest degree first
        q = [0] * (len(c) - 1)
        acc = 0
        for d in range(len(c) - 1, 0, -1):
            acc = c[d] - acc
            q[d - 1] = acc
        if eval_poly(c, -1) != 0:  # remainder
            break
        c = q
        l += 1
    return l
