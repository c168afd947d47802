"""Exact connected-graph counts and the excess generating functions."""
from fractions import Fraction
from math import comb, factorial

import pytest

from graphasym import (
    connected_counts,
    egf_coefficient,
    recover_ak,
    w_series,
)
from graphasym.errors import ResidualNonzero
from graphasym.graphs import connected_rows, graph_egf

import oracles

F = Fraction


def test_counts_match_exhaustive_enumeration():
    rows = connected_rows(6, 15)
    for n in range(1, 7):
        for m in range(0, comb(n, 2) + 1):
            assert rows.coefficient(n, m) == oracles.brute_force_connected(n, m), (n, m)


def test_counts_match_log_oracle():
    rows = connected_rows(9, 12)
    log_rows = oracles.connected_counts_via_log(9, 12)
    for n in range(1, 10):
        for m in range(0, 13):
            expected = log_rows[n][m] * factorial(n)
            assert expected.denominator == 1
            assert rows.coefficient(n, m) == expected


def test_graph_egf_rows_are_binomials():
    g = graph_egf(5, 10)
    for n in range(6):
        for m in range(11):
            assert g[n][m] == comb(comb(n, 2), m)


def test_wpoly_bounds():
    rows = connected_rows(5, 6)
    assert rows.coefficient(4, 7) == 0  # above binom(4,2)
    with pytest.raises(IndexError):
        rows.coefficient(5, 7)  # beyond the tracked w power


def test_count_table_access_rules():
    table = connected_counts(8, 2)
    assert table.get(5, 5) == 222
    assert table.get(5, 3) == 0  # below the tree count
    assert table.get(4, 6) == 1  # complete graph, within k_max because 6 = binom(4,2)
    with pytest.raises(KeyError):
        table.get(9, 9)  # n beyond the table
    with pytest.raises(KeyError):
        table.get(8, 11)  # m beyond n + k_max but below binom(8,2)


def test_count_table_csv():
    table = connected_counts(6, 2)
    lines = list(table.csv_rows())
    assert lines[0] == "n,m,k,count"
    assert "5,5,0,222" in lines
    assert "6,7,1,5700" in lines


def test_w_series_matches_count_table():
    table = connected_counts(12, 4)
    for k in range(-1, 5):
        w = w_series(k, 12)
        for n in range(1, 13):
            assert egf_coefficient(w, n) == table.get(n, n + k), (k, n)


def test_recover_ak_table_values():
    at_one = {
        1: F(5, 24), 2: F(5, 16), 3: F(1105, 1152), 4: F(565, 128),
        5: F(82825, 3072), 6: F(19675, 96), 7: F(1282031525, 688128),
    }
    prime_at_one = {
        1: F(19, 24), 2: F(65, 48), 3: F(1945, 384), 4: F(21295, 768),
        5: F(603965, 3072), 6: F(10454075, 6144), 7: F(1705122725, 98304),
    }
    for k in range(1, 8):
        a = recover_ak(k)
        assert a.at_one() == at_one[k]
        assert a.derivative_at_one() == prime_at_one[k]


def test_recover_a1_polynomial():
    # W_1 (1-T)^3 = (6 T^4 - T^5)/24 exactly
    a = recover_ak(1)
    assert a.coeffs == (0, 0, 0, 0, F(1, 4), F(-1, 24))
    assert a.evaluate(F(0)) == 0


def test_recover_ak_rejects_too_small_degree_bound():
    with pytest.raises(ResidualNonzero):
        recover_ak(1, degree_bound=4)


def test_tree_and_unicycle_series_have_known_closed_coefficients():
    # trees: n^(n-2); unicycles: known small values
    w = w_series(-1, 8)
    for n in range(1, 9):
        assert egf_coefficient(w, n) == n ** max(n - 2, 0)
    w0 = w_series(0, 6)
    assert egf_coefficient(w0, 3) == 1
    assert egf_coefficient(w0, 4) == 15
    assert egf_coefficient(w0, 5) == 222
