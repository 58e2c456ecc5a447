"""Exact-series tests: independent oracles first, then the series routes."""

import math
from functools import lru_cache

import pytest

from tcore import exact
from tcore.modular import sigma


# --- independent oracles (kept free of the package's series code) ---------------

@lru_cache(maxsize=None)
def count_partitions(n, largest):
    """Number of partitions of n with parts <= largest, by direct recursion."""
    if n == 0:
        return 1
    if largest == 0:
        return 0
    total = 0
    for part in range(min(n, largest), 0, -1):
        total += count_partitions(n - part, part)
    return total


def inner_by_sigma_recurrence(t, cap):
    """[prod (1-x^n)]^t through degree cap via the log-derivative recurrence
    m g_m = -t sum_j sigma(j) g_{m-j}; independent of binary exponentiation."""
    g = [1]
    for m in range(1, cap + 1):
        s = sum(sigma(j) * g[m - j] for j in range(1, m + 1))
        q, r = divmod(-t * s, m)
        assert r == 0
        g.append(q)
    return g


# --- partition numbers ------------------------------------------------------------

def test_partition_empty():
    assert exact.partition_numbers(0).values == (1,)


@pytest.mark.parametrize("n,expected", [(5, 7), (10, 42)])
def test_partition_small_values(n, expected):
    # expected values recomputed by the enumeration oracle
    assert count_partitions(n, n) == expected
    assert exact.partition_numbers(n).values[n] == expected


def test_partition_series_vs_enumeration():
    series = exact.partition_numbers(25)
    for n in range(26):
        assert series.values[n] == count_partitions(n, n)


def test_partition_limit_validation():
    with pytest.raises(ValueError):
        exact.partition_numbers(-1)
    with pytest.raises(ValueError):
        exact.partition_numbers(exact.PARTITION_LIMIT_CAP + 1)


# --- hook lengths and brute force --------------------------------------------------

def test_hook_lengths_example():
    hooks = exact.hook_lengths((6, 4, 2))
    assert sorted(hooks) == [1, 1, 1, 2, 2, 2, 4, 4, 5, 5, 7, 8]
    assert set(hooks) == {1, 2, 4, 5, 7, 8}
    # so (6,4,2) is a t-core exactly for t outside its hook set
    for t in range(1, 13):
        in_set = t in {1, 2, 4, 5, 7, 8}
        assert (t in hooks) == in_set


def test_bruteforce_examples():
    assert exact.tcore_count_bruteforce(5, 10) == 12
    for t in (1, 2, 7, 40):
        assert exact.tcore_count_bruteforce(t, 0) == 1


def test_bruteforce_validation():
    with pytest.raises(ValueError):
        exact.tcore_count_bruteforce(5, 41)
    with pytest.raises(ValueError):
        exact.tcore_count_bruteforce(0, 5)


# --- t-core series ------------------------------------------------------------------

def test_spot_counts():
    assert exact.tcore_counts(5, 10).values[10] == 12
    assert exact.tcore_counts(6, 10).values[10] == 12
    assert exact.tcore_count(5, 10) == 12
    assert exact.tcore_count(6, 10) == 12


def test_t1_series_collapses():
    series = exact.tcore_counts(1, 40)
    assert series.values[0] == 1
    assert all(v == 0 for v in series.values[1:])


def test_t_above_n_gives_plain_partitions():
    p = exact.partition_numbers(200).values
    assert exact.tcore_counts(201, 200).values == p
    assert exact.tcore_count(11, 10) == 42
    for n in (0, 1, 17, 120, 200):
        assert exact.tcore_count(n + 1, n) == p[n]


def test_oracle_equivalence_small():
    for n in range(0, 21):
        for t in range(1, n + 1):
            assert exact.tcore_counts(t, n).values[n] == exact.tcore_count_bruteforce(t, n)


def test_series_matches_single_point():
    series = exact.tcore_counts(7, 120)
    for n in (0, 1, 13, 59, 120):
        assert exact.tcore_count(7, n) == series.values[n]


def test_inner_factor_independent_recurrence():
    for t, cap in ((4, 30), (50, 20), (600, 16)):
        assert exact.core_inner_factor(t, cap) == inner_by_sigma_recurrence(t, cap)


def test_nonnegative_values():
    for t in (2, 3, 7, 12):
        assert all(v >= 0 for v in exact.tcore_counts(t, 150).values)


def test_tcore_validation():
    with pytest.raises(ValueError):
        exact.tcore_counts(0, 10)
    with pytest.raises(ValueError):
        exact.tcore_counts(5, -1)


# --- closed form for n < 3t ---------------------------------------------------------

def test_closed_form_example():
    # p(10) - 9 p(1) + 0 = 42 - 9 = 33 = p(10) - 10 + 1
    assert exact.tcore_count_closed_small_range(9, 10) == 33


def test_closed_form_below_t_is_plain_partition():
    p = exact.partition_numbers(30).values
    for t in (8, 19, 31):
        for n in range(0, min(t, 31)):
            assert exact.tcore_count_closed_small_range(t, n) == p[n]


def test_closed_form_agrees_with_series():
    for t in range(4, 31):
        series = exact.tcore_counts(t, 3 * t - 1)
        for n in range(0, 3 * t):
            assert exact.tcore_count_closed_small_range(t, n) == series.values[n]


def test_closed_form_agrees_up_to_t100():
    for t in (40, 77, 100):
        for n in (0, t, 2 * t, 3 * t - 1):
            assert exact.tcore_count_closed_small_range(t, n) == exact.tcore_count(t, n)


def test_closed_form_validation():
    with pytest.raises(ValueError):
        exact.tcore_count_closed_small_range(5, 15)


# --- adjacent identities at n-1, n ---------------------------------------------------

def test_top_edge_identities():
    p = exact.partition_numbers(500).values
    for n in range(3, 501):
        c_nm1 = exact.tcore_count(n - 1, n)
        c_n = exact.tcore_count(n, n)
        assert c_nm1 == p[n] - n + 1
        assert c_n == c_nm1 - 1


# --- log of big integers --------------------------------------------------------------

def test_log_of_integer_basics():
    assert exact.log_of_integer(1) == 0.0
    assert math.isclose(exact.log_of_integer(2**64), 64 * math.log(2), rel_tol=1e-15)
    with pytest.raises(ValueError):
        exact.log_of_integer(0)


def test_log_of_integer_vs_mpmath():
    mpmath = pytest.importorskip("mpmath")
    p1000 = exact.partition_numbers(1000).values[1000]
    mpmath.mp.dps = 50
    reference = float(mpmath.log(mpmath.mpf(p1000)))
    assert math.isclose(exact.log_of_integer(p1000), reference, rel_tol=1e-14)
