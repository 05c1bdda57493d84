import io
import threading

import pytest

from madelung.cusp import QSeries
from madelung.errors import BoundsError, DomainError
from madelung.squares import (
    RepTable,
    brute_force_counts,
    brute_force_r,
    odd_squares_row,
    r_even_squares,
    r_odd_squares,
    r_squares,
    squares_row,
    write_squares_csv,
)
from paper_tables import TABLE_I, TABLE_I_DIMS


def test_examples():
    assert r_squares(2, 1) == 4
    assert r_squares(3, 2) == 12
    assert r_squares(10, 200) == 20513309148
    assert r_odd_squares(1, 1) == 2
    assert r_odd_squares(2, 2) == 4
    assert r_odd_squares(3, 11) == 24
    assert r_even_squares(3, 8) == r_squares(3, 2) == 12
    assert r_even_squares(3, 6) == 0
    assert r_even_squares(4, 0) == 1


def test_brute_force_examples():
    assert brute_force_r(2, 5, "any") == 8
    assert brute_force_r(1, 4, "odd") == 0
    assert brute_force_r(6, 20, "any") == 6552
    assert brute_force_r(3, 11, "odd") == 24


@pytest.mark.parametrize("m", sorted(TABLE_I))
def test_table_one_counts(m):
    got = tuple(r_squares(N, m) for N in TABLE_I_DIMS)
    assert got == TABLE_I[m][1:]


def test_counts_are_exact_ints():
    r = squares_row(10, 200)
    assert all(type(x) is int and x >= 0 for x in r)
    assert r[0] == 1
    assert odd_squares_row(5, 10)[0] == 0


@pytest.mark.parametrize("N", range(1, 7))
def test_brute_force_equivalence(N):
    assert [int(x) for x in brute_force_counts(N, 100, "any")] == list(squares_row(N, 100))
    assert [int(x) for x in brute_force_counts(N, 100, "odd")] == list(odd_squares_row(N, 100))


def test_generating_function():
    M = 60
    # sum over k in Z of q^(k^2)
    coeffs = [0] * (M + 1)
    for k in range(-7, 8):
        coeffs[k * k] += 1
    theta = QSeries(coeffs, M)
    power = QSeries.one(M)
    for N in range(1, 11):
        power = power * theta
        assert power.coeffs == list(squares_row(N, M))


def test_growth_bound():
    r = squares_row(10, 400)
    assert max(r[m] / m**5 for m in range(1, 401)) < 100


def test_odd_row_support():
    # sums of N odd squares are congruent to N mod 8
    for N in range(1, 9):
        r = odd_squares_row(N, 200)
        assert all(r[m] == 0 for m in range(201) if (m - N) % 8)


def test_r_zero_dimension():
    assert r_squares(0, 0) == 1
    assert r_squares(0, 5) == 0


@pytest.mark.parametrize("call", [
    lambda: r_squares(-1, 3),
    lambda: r_squares(2, -1),
    lambda: r_odd_squares(0, 1),
    lambda: r_even_squares(0, 4),
    lambda: brute_force_counts(2, 10, "even"),
    lambda: RepTable("prime"),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_brute_force_bounds():
    with pytest.raises(BoundsError):
        brute_force_counts(9, 10)
    with pytest.raises(BoundsError):
        brute_force_counts(2, 401)
    with pytest.raises(BoundsError):
        brute_force_counts(8, 400)


def test_rows_grow_consistently():
    t = RepTable("any")
    small = t.row(4, 10)
    big = t.row(4, 300)
    assert big[:11] == small
    assert t.row(7, 5) == squares_row(7, 5)


def test_concurrent_growth():
    t = RepTable("odd")
    out = {}

    def work(n, order):
        out[(n, order)] = t.row(n, order)

    threads = [threading.Thread(target=work, args=(n, 50 * n)) for n in range(1, 9)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    for (n, order), row in out.items():
        assert row == odd_squares_row(n, order)


def test_csv_dump():
    fh = io.StringIO()
    write_squares_csv(fh, 2, 5)
    assert fh.getvalue() == "m,r_2(m)\n0,1\n1,4\n2,4\n3,0\n4,4\n5,8\n"
    fh = io.StringIO()
    write_squares_csv(fh, 2, 2, parity="odd")
    assert fh.getvalue().splitlines()[0] == "m,r_2^odd(m)"
