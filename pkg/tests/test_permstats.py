import math
from fractions import Fraction

import numpy as np
import pytest
import sympy

from cyclestats import permstats as ps
from cyclestats.partitions import Partition, cauchy_probability, enumerate_partitions
from cyclestats.series import W_series_product


def test_cycle_count_distribution_examples(histograms):
    assert ps.cycle_count_distribution(1).probs == (1,)
    assert ps.cycle_count_distribution(2).probs == (Fraction(1, 2), Fraction(1, 2))
    assert ps.cycle_count_distribution(4).probs == tuple(Fraction(c, 24) for c in (6, 11, 6, 1))
    counts, _ = histograms(4)
    assert [counts[k] for k in range(1, 5)] == [6, 11, 6, 1]


def test_distribution_invariants():
    for n in (1, 5, 17, 60):
        G = ps.cycle_count_distribution(n)
        assert sum(G.probs) == 1
        assert all(g > 0 for g in G.probs)
        assert G[n] == Fraction(1, math.factorial(n))


def test_stirling_against_sympy():
    for n in range(0, 25):
        assert ps.stirling_row(n) == [sympy.functions.combinatorial.numbers.stirling(n, k, kind=1)
                                      for k in range(n + 1)]


@pytest.mark.parametrize("n, r, expected", [(1, 2, 1), (1, 5, 1), (2, 2, Fraction(1, 2)),
                                            (4, 2, Fraction(97, 288))])
def test_E_examples(n, r, expected):
    assert ps.E_r(n, r) == expected


def test_E_matches_enumeration(histograms):
    for n in range(1, 9):
        counts, _ = histograms(n)
        for r in (2, 3):
            assert ps.E_r(n, r) == Fraction(sum(c**r for c in counts.values()), math.factorial(n) ** r)


@pytest.mark.parametrize("n, r, expected", [(0, 2, 1), (0, 4, 1), (3, 2, Fraction(7, 18)),
                                            (4, 2, Fraction(73, 288))])
def test_W_examples(n, r, expected):
    assert ps.W_r_partition_sum(n, r) == expected


def test_W_n4_from_cauchy_squares():
    assert sum(cauchy_probability(lam) ** 2 for lam in enumerate_partitions(4)) == Fraction(73, 288)


def test_W_matches_series():
    for r in (2, 3, 4):
        s = W_series_product(r, 30)
        assert [ps.W_r_partition_sum(n, r) for n in range(31)] == list(s.coeffs)


def test_float_recurrence_matches_exact():
    for n in (1, 2, 10, 100, 300):
        exact = np.array([float(g) for g in ps.cycle_count_distribution(n).probs])
        assert np.allclose(ps.cycle_count_distribution_float(n), exact, rtol=1e-12, atol=1e-300)
    assert ps.E_r_float(50, 2) == pytest.approx(float(ps.E_r(50, 2)), rel=1e-13)


def test_char_function_examples():
    assert ps.char_function(7, 0.0) == pytest.approx(1.0)
    for t in (0.3, 1.0, 2.5):
        assert ps.char_function(1, t) == pytest.approx(complex(math.cos(t), math.sin(t)))
    assert abs(ps.char_function(2, math.pi)) < 1e-15


def test_char_function_is_fourier_series():
    for n in (3, 8):
        G = ps.cycle_count_distribution(n).probs
        for t in (0.1, 0.7, 2.0):
            direct = sum(float(g) * complex(math.cos(k * t), math.sin(k * t)) for k, g in enumerate(G, 1))
            assert ps.char_function(n, t) == pytest.approx(direct, abs=1e-14)


def test_char_function_rising_factorial_identity():
    # prod_{j<=n} (j - 1 + w)/j expanded in w has coefficients G_k(n)
    w = sympy.symbols("w")
    for n in range(1, 31):
        poly = sympy.Poly(sympy.prod([(j - 1 + w) for j in range(1, n + 1)]), w)
        coeffs = [Fraction(int(c), math.factorial(n)) for c in reversed(poly.all_coeffs())]
        assert coeffs[0] == 0
        assert tuple(coeffs[1:]) == ps.cycle_count_distribution(n).probs


def test_taylor_coefficient_of_generating_function():
    # [z^n] (1 - z)^(-w) equals the rising-factorial product divided by n!
    z, w = sympy.symbols("z w")
    series = sympy.series((1 - z) ** (-w), z, 0, 8).removeO()
    for n in range(1, 8):
        coeff = sympy.expand(series.coeff(z, n))
        expected = sympy.expand(sympy.prod([(j - 1 + w) for j in range(1, n + 1)]) / math.factorial(n))
        assert sympy.simplify(coeff - expected) == 0


@pytest.mark.parametrize("n, N", [(2, 8), (10, 16), (1, 4)])
def test_distribution_from_charfun_examples(n, N):
    exact = [float(g) for g in ps.cycle_count_distribution(n).probs]
    assert np.allclose(ps.distribution_from_charfun(n, N), exact, atol=1e-10, rtol=0)


def test_distribution_from_charfun_up_to_200():
    for n in (50, 120, 200):
        exact = np.array([float(g) for g in ps.cycle_count_distribution(n).probs])
        assert np.max(np.abs(ps.distribution_from_charfun(n, n + 1) - exact)) < 1e-10


def test_distribution_from_charfun_rejects_aliasing():
    with pytest.raises(ValueError):
        ps.distribution_from_charfun(5, 5)


def test_c_r_values():
    assert ps.asymptotic_c_r(2) == pytest.approx(1 / (2 * math.sqrt(math.pi)))
    assert ps.asymptotic_c_r(2) == pytest.approx(0.282095, abs=1e-6)
    assert ps.asymptotic_c_r(3) == pytest.approx(1 / (2 * math.pi * math.sqrt(3)))
    assert ps.asymptotic_c_r(3) == pytest.approx(0.0919, abs=1e-4)
    assert ps.asymptotic_c_r(2) == pytest.approx(math.sqrt(2) / (2 * math.pi) * math.sqrt(math.pi) / math.sqrt(2))


def test_asymptotic_E():
    c2, c3 = ps.asymptotic_c_r(2), ps.asymptotic_c_r(3)
    assert ps.asymptotic_E(math.e**2, 2) == pytest.approx(c2 / math.sqrt(2))
    assert ps.asymptotic_E(4096, 2) == pytest.approx(0.282095 / math.sqrt(math.log(4096)), rel=1e-6)
    assert ps.asymptotic_E(100, 3) == pytest.approx(c3 / math.log(100))
    with pytest.raises(ValueError):
        ps.asymptotic_E(1, 2)


def test_asymptotic_W():
    assert ps.asymptotic_W(1, 2, 4.2634) == 4.2634
    assert ps.asymptotic_W(10, 2, 4.2634) == pytest.approx(0.042634)
    assert ps.asymptotic_W(10, 3, 2.59071) == pytest.approx(0.00259071)


def test_E_trend_towards_constant():
    rows = {row["n"]: row["ratio"] for row in ps.trend_E(2, [64, 4096])}
    assert abs(rows[4096] - 1) < abs(rows[64] - 1)


def test_W_bounded_by_single_constant():
    # shape of W_r(n) <= C / n^r: the scaled values stay bounded and settle
    for r in (2, 3):
        scaled = [ps.W_r_partition_sum(n, r) * n**r for n in range(1, 41)]
        C = max(scaled)
        assert all(s <= C for s in scaled)
        assert float(scaled[-1]) < 2 * 4.3


def test_appendix_split_n1():
    s = ps.appendix_split(1, 2)
    assert (s.sigma_A, s.sigma_B, s.sigma_C) == (0, 0, 1)


def test_appendix_sandwich_and_many_cycles_bound():
    for r in (2, 3):
        for n in range(1, 31):
            s = ps.appendix_split(n, r)
            W = ps.W_r_partition_sum(n, r)
            assert min(s.sigma_A, s.sigma_B, s.sigma_C) >= 0
            assert s.sigma_C <= W <= s.upper
            assert s.sigma_A <= Fraction(1, n ** (3 * (r - 1)))


def test_appendix_n40_many_cycles():
    assert ps.appendix_split(40, 2).sigma_A <= Fraction(1, 40**3)


def test_appendix_sets_cover_all_partitions():
    # every partition lies in at least one set; B and C are disjoint
    for n in range(1, 26):
        for lam in enumerate_partitions(n):
            a, b, c = ps._classify(n, sum(lam.mult), lam.longest_part())
            assert a or b or c
            assert not (b and c)


def test_appendix_membership_matches_float_predicates():
    for n in range(1, 30):
        L, a = ps.log2_bound(n), ps.tail_window(n)
        for lam in enumerate_partitions(n):
            omega, T = sum(lam.mult), lam.longest_part()
            got = ps._classify(n, omega, T)
            want = (omega > L, omega <= L and n / L <= T < n - a, n - a <= T <= n)
            # only compare away from float ties
            if min(abs(omega - L), abs(n - a - T), abs(T - n / L)) > 1e-9:
                assert got == want


def test_sigmaC_identity_examples():
    assert ps.tail_window(5) < 1
    s = ps.appendix_split(5, 2)
    assert s.sigma_C == Fraction(1, 25) == ps.sigmaC_closed_form(5, 2)
    assert all(ps.appendix_sigmaC_identity_check(n, 3) for n in range(1, 21))


def test_bad_arguments():
    with pytest.raises(ValueError):
        ps.E_r(0, 2)
    with pytest.raises(ValueError):
        ps.E_r(3, 1)
    with pytest.raises(ValueError):
        ps.W_r_partition_sum(-1, 2)
    with pytest.raises(ValueError):
        ps.cycle_count_distribution(600)
