from itertools import product

import pytest

from smdt.census import (
    CSV_COLUMNS,
    bifix_free_count,
    census,
    nielsen_bound,
    nielsen_table,
)
from smdt.errors import InstanceTooLarge
from smdt.pattern import Pattern, is_bifix_free
from smdt.tuza import b1_bound, b2_bound, tuza_verdict


def unbordered_counts(sigma, m_max):
    """Known recurrence for unbordered words: u(2k+1) = s u(2k), u(2k) = s u(2k-1) - u(k)."""
    u = {1: sigma}
    for m in range(2, m_max + 1):
        u[m] = sigma * u[m - 1] - (u[m // 2] if m % 2 == 0 else 0)
    return u


@pytest.mark.parametrize("sigma, m_max", [(2, 20), (3, 12), (4, 10)])
def test_bifix_free_counts_match_recurrence(sigma, m_max):
    u = unbordered_counts(sigma, m_max)
    for m in range(1, m_max + 1):
        assert bifix_free_count(m, sigma) == u[m]


def test_census_examples():
    r = census(2)
    assert r.bifix_free_count == 2 and r.b_frac == 0.5
    r = census(3)
    assert r.bifix_free_count == 4 and r.b_frac == 0.5


def test_census_matches_per_pattern_classification():
    for sigma, m_max in ((2, 10), (3, 5)):
        for m in range(1, m_max + 1):
            bf = settled = evasive = 0
            for syms in product(range(sigma), repeat=m):
                p = Pattern(syms, sigma)
                v = tuza_verdict(p)
                bf += is_bifix_free(p)
                settled += v.lower_bound_applies
                evasive += v.predicted == "evasive"
            row = census(m, sigma)
            assert (row.bifix_free_count, row.settled_count, row.tuza_evasive_count) == (bf, settled, evasive)


def test_census_row_invariants():
    for m in range(1, 17):
        r = census(m)
        assert r.settled_count + r.unknown_count == r.total
        assert r.tuza_evasive_count <= r.settled_count
        assert r.unknown_count <= r.b1_count + r.b2_count
        assert r.b1_count <= b1_bound(m) and r.b2_count <= b2_bound(m)


def test_chunking_does_not_change_counts():
    assert census(14, chunk=1000) == census(14)


def test_caps():
    with pytest.raises(InstanceTooLarge):
        census(15, 3)
    with pytest.raises(InstanceTooLarge):
        bifix_free_count(12, 4)


def test_nielsen_rows():
    rows = nielsen_table([2, 3, 4], {2: 20, 3: 12, 4: 11})
    got = {r.sigma: r for r in rows}
    assert abs(got[2].b_frac - 0.268) <= 0.005
    assert got[3].b_frac >= 1 - 1 / 3 - 1 / 9
    assert abs(got[4].b_frac - 0.688) <= 0.01
    assert nielsen_bound(2) == 0.25
    d = got[2].as_dict()
    assert d["limit"] == 0.268 and d["above_lower_bound"]


def test_csv_row_layout():
    r = census(5)
    assert len(r.csv_values()) == len(CSV_COLUMNS)
    assert r.csv_values()[:4] == ["5", "2", "32", "12"]
