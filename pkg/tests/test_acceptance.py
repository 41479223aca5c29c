"""Exit criteria at full size; each test prints one PASS/FAIL line."""

from smdt import verify


def report(capsys, result):
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


def test_c1_searcher_correctness_and_budget(capsys):
    # every binary pattern m in [2, 5], every text n <= 12
    report(capsys, verify.check_searcher(max_m=5, max_n=12))


def test_c2_oracle_sandwich(capsys):
    # m <= 4, n <= 12, with D(13) for monotonicity at n = 12
    report(capsys, verify.check_oracle_bounds(max_m=4, max_n=12))


def test_c3_charpoly_three_way(capsys):
    report(capsys, verify.check_charpoly_three_way(max_m=12))


def test_c4_known_polynomials(capsys):
    report(capsys, verify.check_known_polynomials(k_poly=8, k_skolem=5, horizon=2000))


def test_c5_recurrence_and_divisibility(capsys):
    report(capsys, verify.check_recurrence_divisibility(max_m=6, n_max=30, div_m=3, div_n=10))


def test_c6_nielsen_fractions(capsys):
    targets = ((2, 20, 0.268, 0.005), (3, 12, 0.557, 0.01), (4, 10, 0.688, 0.015))
    report(capsys, verify.check_nielsen(targets))


def test_c7_b1_b2_bounds(capsys):
    report(capsys, verify.check_b1_b2(max_m=16, trend=(12, 16)))


def test_c8_settled_spot_check(capsys):
    report(capsys, verify.check_settled(max_m=4, n_cap=14))
