from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from smdt.errors import PatternNotBifixFree
from smdt.kmp import build_automaton, run
from smdt.oracle import exact_value
from smdt.pattern import Pattern, is_bifix_free, periods
from smdt.search import (
    SENTINEL,
    TextOracle,
    find_bifix_free,
    find_general,
    naive_find,
    worst_case_queries,
)

from conftest import binary_patterns


def T(text):
    return TextOracle(tuple(int(c) for c in text))


def test_oracle_counts_each_cell_once():
    o = T("0110")
    assert o.query(2) == 1 and o.query(2) == 1
    assert o.queries_used == 1
    assert o.query(5) == SENTINEL and o.query(99) == SENTINEL
    assert o.queries_used == 1
    with pytest.raises(IndexError):
        o.query(0)


def test_bifix_free_examples(P):
    out = find_bifix_free(T("0101"), P("01"))
    assert out.found and out.first_occurrence == 1 and out.queries_used <= 4
    out = find_bifix_free(T("0"), P("01"))
    assert not out.found and out.queries_used == 0
    assert worst_case_queries(P("01"), 5, find_bifix_free) == 4


def test_bifix_free_rejects_bordered(P):
    with pytest.raises(PatternNotBifixFree):
        find_bifix_free(T("0000"), P("1010"))


def test_general_examples(P):
    assert worst_case_queries(P("1010"), 7) <= 6
    out = find_general(T("1011"), P("11"))
    assert out.found and out.first_occurrence == 3
    for text in product((0, 1), repeat=8):
        assert find_general(TextOracle(text), P("1011")).queries_used <= 8


def test_naive_examples(P):
    assert naive_find("11010", P("1010")).first_occurrence == 2
    assert not naive_find("11", P("00")).found


def test_naive_agrees_with_automaton():
    for p in binary_patterns(1, 5):
        a = build_automaton(p)
        for n in range(11):
            for s in product((0, 1), repeat=n):
                assert naive_find(s, p).found == (run(a, s) == p.m + 1)


def test_bifix_free_blocks_never_look_back():
    for p in binary_patterns(2, 5):
        if not is_bifix_free(p):
            continue
        m = p.m
        for n in range(m, 11):
            for s in product((0, 1), repeat=n):
                o = TextOracle(s)
                find_bifix_free(o, p)
                order = o.query_order
                for b in range(len(order) // m):
                    assert min(order[b * m : (b + 1) * m]) > b * m


@settings(max_examples=300, deadline=None)
@given(
    st.lists(st.integers(0, 2), min_size=1, max_size=6),
    st.lists(st.integers(0, 2), min_size=0, max_size=40),
)
def test_general_matches_naive_ternary(pat, text):
    p = Pattern(tuple(pat), 3)
    o = TextOracle(tuple(text))
    got = find_general(o, p)
    ref = naive_find(text, p)
    assert (got.found, got.first_occurrence) == (ref.found, ref.first_occurrence)
    n, c = len(text), periods(p).gcd_c
    assert got.queries_used <= n - n % c
    assert got.queries_used == len(set(o.query_order))
    if is_bifix_free(p):
        out = find_bifix_free(TextOracle(tuple(text)), p)
        assert out.found == ref.found and out.queries_used <= n - n % p.m


def test_strategy_worst_case_is_between_optimum_and_budget():
    for p in binary_patterns(1, 3):
        c = periods(p).gcd_c
        for n in range(p.m, 10):
            worst = worst_case_queries(p, n)
            assert exact_value(p, n) <= worst <= n - n % c
