from itertools import product

import pytest

from smdt.errors import InstanceTooLarge
from smdt.oracle import (
    PartialString,
    can_occur,
    evasive_certificate,
    exact_complexity,
    exact_complexity_memo,
    exact_value,
    must_occur,
)
from smdt.pattern import Pattern, periods
from smdt.search import naive_find

from conftest import binary_patterns


def completions(ps):
    choices = [range(ps.sigma) if c is None else (c,) for c in ps.cells]
    return product(*choices)


def test_partial_string_key_is_canonical():
    a = PartialString.parse("1?0?")
    b = PartialString.unknown(4).assign(1, 1).assign(3, 0)
    assert a == b and a.key == b.key
    assert PartialString.parse("0??").key != PartialString.parse("?0?").key
    assert str(a) == "1?0?"


def test_can_occur_examples(P):
    ps = PartialString.parse("1?1?")
    # "1010" is itself a completion of 1?1?
    assert can_occur(ps, P("1010")) is True
    assert can_occur(ps, P("1010")) == any(naive_find(s, P("1010")).found for s in completions(ps))
    assert can_occur(PartialString.unknown(5), P("0110"))
    assert not can_occur(PartialString.parse("00"), P("11"))


def test_must_occur_examples(P):
    assert must_occur(PartialString.parse("11"), P("11"))
    assert not must_occur(PartialString.parse("1?1"), P("11"))
    assert not must_occur(PartialString.parse("?"), P("1"))


def test_predicates_match_completion_enumeration():
    for p in binary_patterns(1, 3):
        for n in range(0, 6):
            for cells in product((0, 1, None), repeat=n):
                ps = PartialString(cells)
                hits = [naive_find(s, p).found for s in completions(ps)]
                assert can_occur(ps, p) == any(hits)
                assert must_occur(ps, p) == all(hits)


def test_exact_examples(P):
    assert exact_value(P("11"), 2) == 2
    assert exact_value(P("01"), 3) == 2
    assert exact_value(P("0110"), 3) == 0


def test_vectorized_solver_matches_memoized_recursion():
    for p in binary_patterns(1, 3):
        for n in range(0, 8):
            assert exact_value(p, n) == exact_complexity_memo(p, n)


def test_ternary_solver_matches_recursion():
    for syms in [(0,), (1, 2), (0, 0), (2, 1, 2)]:
        p = Pattern(syms, 3)
        for n in range(0, 5):
            assert exact_value(p, n) == exact_complexity_memo(p, n)


def test_report_fields(P):
    r = exact_complexity(P("1010"), 9)
    assert r.rivest_lower == 6 and r.period_upper == 8
    assert r.rivest_lower <= r.exact_value <= min(9, r.period_upper)
    assert r.settled is False


def test_instance_cap(P, monkeypatch):
    with pytest.raises(InstanceTooLarge):
        exact_value(P("1"), 15)
    monkeypatch.setenv("SMDT_MAX_STATES", "100")
    with pytest.raises(InstanceTooLarge):
        exact_value(P("1"), 5)


def test_certificates(P):
    rows = evasive_certificate(P("101"), 10, n_min=3)
    assert [r[0] for r in rows] == list(range(3, 11))
    assert all(flag == (d == n) for n, d, flag in rows)
    assert all(flag for n, _, flag in rows if n >= 5)
    values = [d for _, d, _ in evasive_certificate(P("11"), 10)]
    assert values == sorted(values)
    assert [d for _, d, _ in evasive_certificate(P("1"), 8)] == list(range(1, 9))


def test_lower_and_upper_bounds_small():
    for p in binary_patterns(1, 3):
        c = periods(p).gcd_c
        prev = 0
        for n in range(0, 10):
            d = exact_value(p, n)
            assert n - p.m + 1 <= d <= n - n % c
            assert prev <= d
            prev = d
