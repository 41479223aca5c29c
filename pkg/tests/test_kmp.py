from itertools import product

import numpy as np
import pytest

from smdt.errors import AlphabetUnsupported
from smdt.kmp import (
    build_automaton,
    eval_poly,
    g_table,
    g_tables,
    gbar_vectors,
    run,
    transfer_matrix,
    x_plus_one_valuation,
)
from smdt.pattern import Pattern

from conftest import binary_patterns


def naive_state(p, s):
    """1 + longest prefix of p that is a suffix of s, or m+1 once p occurred."""
    sym, m = p.symbols, p.m
    for end in range(m, len(s) + 1):
        if tuple(s[end - m : end]) == sym:
            return m + 1
    for length in range(min(m - 1, len(s)), -1, -1):
        if tuple(s[len(s) - length :]) == sym[:length]:
            return length + 1
    return 1


def poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def trimmed(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def test_fig3_transitions(P):
    a = build_automaton(P("1010"))
    assert a.step(4, 0) == 5 and a.step(4, 1) == 2
    assert a.step(3, 0) == 1 and a.step(3, 1) == 4
    assert a.step(1, 0) == 1 and a.step(1, 1) == 2
    assert a.step(2, 0) == 3 and a.step(2, 1) == 2
    assert all(a.step(5, x) == 5 for x in (0, 1))


def test_small_automata(P):
    a = build_automaton(P("1"))
    assert (a.step(1, 1), a.step(1, 0), a.step(2, 0), a.step(2, 1)) == (2, 1, 2, 2)
    b = build_automaton(P("11"))
    assert (b.step(2, 0), b.step(2, 1)) == (1, 3)


@pytest.mark.parametrize("pat, text, state", [("1010", "1010", 5), ("1010", "0000", 1), ("11", "101", 2)])
def test_run_examples(P, pat, text, state):
    assert run(build_automaton(P(pat)), [int(c) for c in text]) == state


@pytest.mark.parametrize("sigma, max_m, max_n", [(2, 5, 10), (3, 3, 6)])
def test_run_matches_naive_state(sigma, max_m, max_n):
    for m in range(1, max_m + 1):
        for syms in product(range(sigma), repeat=m):
            p = Pattern(syms, sigma)
            a = build_automaton(p)
            for n in range(max_n + 1):
                for s in product(range(sigma), repeat=n):
                    assert run(a, s) == naive_state(p, s)


def test_transfer_matrix_1010(P):
    T = transfer_matrix(P("1010"))
    assert T.tolist() == [[1, 0, 1, 0], [-1, -1, 0, -1], [0, 1, 0, 0], [0, 0, -1, 0]]
    assert transfer_matrix(P("1")).tolist() == [[1]]


def test_transfer_matrix_rejects_larger_alphabets():
    with pytest.raises(AlphabetUnsupported):
        transfer_matrix(Pattern.parse("012"))


def test_transfer_matrix_structure():
    for p in binary_patterns(1, 9):
        T = transfer_matrix(p)
        m = p.m
        assert set(np.unique(T)) <= {-1, 0, 1}
        assert all(np.count_nonzero(T[:, j]) <= 2 for j in range(m))
        assert all(T[i, j] == 0 for i in range(m) for j in range(m) if i > j + 1)
        assert all(T[i + 1, i] != 0 for i in range(m - 1))


def test_transfer_matrix_propagates_gbar(P):
    p = P("1010")
    vecs = gbar_vectors(p, 8)
    T = transfer_matrix(p)
    assert (T @ np.array(vecs[5][:4])).tolist() == vecs[6][:4]
    start = np.zeros(4, dtype=np.int64)
    start[0] = 1
    assert (np.linalg.matrix_power(T, 6) @ start).tolist() == [g_table(p, 6).gbar(i) for i in range(1, 5)]


def test_g_table_examples(P):
    assert g_table(P("11"), 2).g(3) == (0, 0, 1)
    for n, tab in enumerate(g_tables(P("1010"), 12)):
        assert sum(eval_poly(c, 1) for c in tab.polys) == 2**n


def test_g_table_matches_enumeration():
    for p in binary_patterns(1, 6):
        a = build_automaton(p)
        tables = g_tables(p, 12)
        for n in range(13):
            polys = [[0] * (n + 1) for _ in range(p.m + 1)]
            for s in product((0, 1), repeat=n):
                polys[run(a, s) - 1][sum(s)] += 1
            assert tables[n].polys == tuple(trimmed(c) for c in polys)
            assert list(tables[n].bar) == gbar_vectors(p, n)[n]


def test_accepting_state_recurrence():
    for p in binary_patterns(1, 6):
        m = p.m
        tables = g_tables(p, 12)
        y = [0, 1] if p.symbols[-1] == 1 else [1]
        for n in range(12):
            nxt = tables[n + 1].g(m + 1)
            cur_acc = list(tables[n].g(m + 1))
            times_x_plus_1 = poly_add([0] + cur_acc, cur_acc)
            y_gm = [0] * (len(y) - 1) + list(tables[n].g(m))
            assert trimmed(poly_add(times_x_plus_1, y_gm)) == nxt


def test_lemma10_zero_parity():
    for p in binary_patterns(1, 6):
        vecs = gbar_vectors(p, 13)
        m = p.m
        for n in range(12):
            assert (vecs[n + 1][m] == 0) == (vecs[n][m - 1] == 0)


@pytest.mark.parametrize(
    "coeffs, val",
    [((1, 2, 1), 2), ((1, 3, 3, 1), 3), ((1, 1), 1), ((2,), 0), ((0, 1, 1), 1), ((1, 0, 1), 0)],
)
def test_x_plus_one_valuation(coeffs, val):
    assert x_plus_one_valuation(coeffs) == val
