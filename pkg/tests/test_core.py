import math
from decimal import Decimal

import numpy as np
import pytest

import frozen
import oracles
from madelung.core import (
    ConvergenceTrace,
    MadelungQuery,
    coefficient_direct,
    coefficient_half_integral,
    coefficient_recursive,
    convergence_trace,
    heuristic_m_max,
    madelung,
    madelung_direct,
    madelung_ladder,
    madelung_recursive,
)
from madelung.errors import ConvergenceError, DomainError
from madelung.squares import odd_squares_row
from paper_tables import TABLE_I, TABLE_II, TABLE_II_EXPONENTS

EXPONENTS = TABLE_II_EXPONENTS
LN2 = math.log(2.0)


def digit14(text):
    """One unit in the 14th significant digit of a printed value."""
    return 10.0 ** (math.floor(math.log10(abs(float(text)))) - 13)


# --- coefficients -----------------------------------------------------------------


def test_coefficient_direct_examples():
    assert abs(coefficient_direct(0.5, 1) - 1.18165052269629e-1) < 1e-15
    assert abs(coefficient_direct(0.5, 100) - 2.02339226243198e-14) < 1e-27
    assert coefficient_direct(0.0, 5) == 0.0
    assert coefficient_direct(-2.0, 3) == 0.0


@pytest.mark.parametrize("m", sorted(frozen.C_HALF))
def test_coefficients_against_reference(m):
    ref = float(frozen.C_HALF[m])
    assert abs(coefficient_direct(0.5, m) / ref - 1.0) < 1e-15
    assert abs(coefficient_half_integral(m) / ref - 1.0) < 1e-15


def digit15(text):
    return 10.0 ** (math.floor(math.log10(abs(float(text)))) - 14)


@pytest.mark.parametrize("m", sorted(TABLE_I))
def test_coefficients_to_printed_digits(m):
    printed = TABLE_I[m][0]
    for c in (coefficient_direct(0.5, m), coefficient_half_integral(m)):
        assert abs(c - float(printed)) < digit15(printed)


def test_printed_coefficients_are_rounded_reference_values():
    for m, ref in frozen.C_HALF.items():
        assert f"{Decimal(ref):.14e}" == f"{Decimal(TABLE_I[m][0]):.14e}", m


def test_half_integral_examples():
    assert abs(coefficient_half_integral(1) - 1.18165052269629e-1) < 1e-15
    assert abs(coefficient_half_integral(4) - 3.66634491506766e-3) < 1e-17
    assert abs(coefficient_half_integral(40) - 2.62596820286192e-9) < 1e-23


@pytest.mark.parametrize("m", [*range(1, 21), 40, 60, 80, 100])
def test_half_integral_oracle(m):
    assert abs(coefficient_direct(0.5, m) - coefficient_half_integral(m)) < 1e-15


def test_coefficient_recursive_examples():
    assert coefficient_recursive(0.0, 4, 3) == 0.0
    v = coefficient_recursive(0.5, 15, 10)
    assert v < 0 and abs(v) < 1e-10
    assert abs(v / float(frozen.C_RECURSIVE_HALF_15_10) - 1.0) < 1e-13


def test_coefficient_recursive_two_dim_closed_form():
    # c_{1/2,2}(0): sum_k (-1)^k 4 K_{-1/2}(pi k sqrt 2) (2/4k^2)^(-1/4) = -2 sqrt2 / (e^(pi sqrt2) + 1)
    ref = -2.0 * math.sqrt(2.0) / (math.exp(math.pi * math.sqrt(2.0)) + 1.0)
    assert abs(coefficient_recursive(0.5, 2, 0) / ref - 1.0) < 1e-14


@pytest.mark.parametrize("s", [0.5, 1.5, 3.0, 6.0])
@pytest.mark.parametrize("n", [2, 7, 15])
def test_coefficient_recursive_against_mpmath(s, n):
    for m in (0, 3, 20):
        ref = float(oracles.c_recursive(s, n, m))
        assert abs(coefficient_recursive(s, n, m) / ref - 1.0) < 1e-13


@pytest.mark.parametrize("s", [0.1, 0.5, 1.5, 3.0, 6.0, 20.0])
def test_coefficient_positivity(s):
    assert all(coefficient_direct(s, m) > 0 for m in range(1, 120))


def test_coefficient_decay():
    c = [coefficient_direct(0.5, m) for m in range(1, 202)]
    assert all(b / a < 1.0 for a, b in zip(c, c[1:]))


def test_coefficient_domain():
    with pytest.raises(DomainError):
        coefficient_direct(0.5, 0)
    with pytest.raises(DomainError):
        coefficient_recursive(0.5, 0, 1)
    with pytest.raises(DomainError):
        coefficient_half_integral(0)


# --- Madelung values --------------------------------------------------------------------


def test_direct_examples():
    assert madelung_direct(MadelungQuery(1, 0.5)).value == -2.0 * LN2
    v = madelung_direct(MadelungQuery(3, 0.5)).value
    assert abs(v - -1.74756459463318) < 1e-13


def test_recursive_examples():
    assert abs(madelung_recursive(MadelungQuery(2, 0.5)).value - -1.61554262671282) < digit14("-1.61554262671282")
    assert abs(madelung_recursive(MadelungQuery(12, 6.0)).value - -21.2451729486919) < digit14("-21.2451729486919")
    assert abs(madelung_recursive(MadelungQuery(20, 3.0)).value - -16.9916146519184) < digit14("-16.9916146519184")


def test_bessel_part_sixteen_dimensions():
    ref = float(frozen.BESSEL_PART_16)
    part = madelung(16, 0.5).value + 2.0 * LN2
    assert abs(part - ref) < 1e-13


def test_bessel_part_sixteen_dimensions_direct():
    # terms of the direct series reach ~950 in size and cancel down to 0.87,
    # so a few ulp of error per coefficient leave ~1e-13 in the sum
    ref = float(frozen.BESSEL_PART_16)
    part = madelung(16, 0.5, method="direct").value + 2.0 * LN2
    assert abs(part - ref) < 1e-12


@pytest.mark.parametrize("j", range(4))
def test_table_two_columns(j):
    s = EXPONENTS[j]
    ladder = madelung_ladder(20, s)
    for N, row in TABLE_II.items():
        printed = row[1 + j]
        assert abs(ladder[N - 1].value - float(printed)) < digit14(printed), (N, s)


@pytest.mark.parametrize("N", range(2, 11))
@pytest.mark.parametrize("s", EXPONENTS)
def test_method_agreement(N, s):
    a = madelung(N, s, method="direct").value
    b = madelung(N, s, method="recursive").value
    assert abs(a - b) < 1e-12


@pytest.mark.parametrize("s", EXPONENTS)
def test_monotone_in_dimension(s):
    v = [m.value for m in madelung_ladder(20, s)]
    assert all(b < a for a, b in zip(v, v[1:]))


@pytest.mark.parametrize("N", range(1, 7))
def test_crossing_points(N):
    assert abs(madelung(N, 0.0).value + 1.0) < 1e-10
    assert abs(madelung(N, -1.0).value) < 1e-10
    assert abs(madelung(N, 0.0, method="direct").value + 1.0) < 1e-10
    assert abs(madelung(N, -1.0, method="direct").value) < 1e-10


def test_neighbour_limit():
    v = madelung(3, 50.0).value
    assert abs(v + 6.0) < 1e-13
    assert abs((v + 6.0) - float(frozen.M3_50_PLUS_6)) < 1e-14


@pytest.mark.parametrize("N", [1, 2, 4, 6, 8])
@pytest.mark.parametrize("s", [-2.5, -0.5, 0.25, 1.0, 2.5])
def test_continuation_against_closed_forms(N, s):
    ref = float(oracles.zucker_reference(N, s)) if (N, s) != (8, 1.0) else float(frozen.M8_AT_ONE)
    assert abs(madelung(N, s).value - ref) < 1e-13
    assert abs(madelung(N, s, method="direct").value - ref) < 1e-13


def test_value_metadata():
    v = madelung(5, 1.5, method="direct")
    assert v.method_used == "direct"
    assert v.m_max_used >= heuristic_m_max(5)
    assert 0 <= v.remainder_estimate < 1e-14
    r = madelung(5, 1.5)
    assert r.method_used == "recursive"
    assert 0 <= r.remainder_estimate < 1e-14


def test_heuristic_m_max():
    assert heuristic_m_max(2) == 101
    assert heuristic_m_max(10) == 304


def test_looser_tolerance_uses_fewer_terms():
    tight = madelung(6, 0.5, tol=1e-14, method="direct")
    loose = madelung(6, 0.5, tol=1e-6, method="direct")
    assert loose.m_max_used <= tight.m_max_used
    assert abs(loose.value - tight.value) < 1e-6


@pytest.mark.parametrize("kwargs", [
    dict(dimension=0, exponent=0.5),
    dict(dimension=2.5, exponent=0.5),
    dict(dimension=2, exponent=math.nan),
    dict(dimension=2, exponent=0.5, target_remainder=0.0),
    dict(dimension=2, exponent=0.5, method="fast"),
])
def test_query_validation(kwargs):
    with pytest.raises(DomainError):
        MadelungQuery(**kwargs)


def test_unreachable_tolerance_raises():
    with pytest.raises(ConvergenceError):
        madelung(4, 0.5, tol=1e-300, method="direct")


def test_ladder_entries_match_single_calls():
    ladder = madelung_ladder(7, 1.5)
    assert len(ladder) == 7
    for N in (1, 4, 7):
        assert ladder[N - 1].value == madelung(N, 1.5).value


# --- traces ---------------------------------------------------------------------------------


def test_trace_sixteen_dimensions():
    tr = convergence_trace(MadelungQuery(16, 0.5))
    assert isinstance(tr, ConvergenceTrace)
    a = np.array(tr.terms_a)
    signs = np.sign(a)
    assert np.all(signs == (-1.0) ** np.arange(1, len(a) + 1))
    assert 10 <= int(np.argmax(np.abs(a))) + 1 <= 18


def test_trace_pairing():
    tr = convergence_trace(MadelungQuery(8, 0.5))
    a, b = tr.terms_a, tr.terms_paired
    assert len(a) == 2 * len(b)
    scale = math.fsum(abs(x) for x in a)
    for j in range(1, len(b) + 1):
        assert abs(math.fsum(a[: 2 * j]) - math.fsum(b[:j])) < 1e-15 * scale


def test_trace_zeros_in_two_dimensions():
    tr = convergence_trace(MadelungQuery(2, 0.5))
    r = odd_squares_row(2, 8 * len(tr.terms_d) + 2)
    zeros = [m for m, d in enumerate(tr.terms_d) if d == 0.0]
    assert zeros
    assert zeros == [m for m in range(len(tr.terms_d)) if r[8 * m + 2] == 0]
    assert all(d < 0 for d in tr.terms_d if d != 0.0)


def test_trace_truncation_is_monotone():
    tight = convergence_trace(MadelungQuery(5, 0.5, 1e-14))
    loose = convergence_trace(MadelungQuery(5, 0.5, 1e-6))
    assert len(loose.terms_d) < len(tight.terms_d)
    assert len(loose.terms_a) < len(tight.terms_a)


def test_trace_one_dimension():
    tr = convergence_trace(MadelungQuery(1, 0.5))
    assert tr.terms_a == () and tr.terms_paired == ()
    assert len(tr.terms_d) > 0
