from fractions import Fraction

import pytest

from cyclestats.ffpoly import Poly, big_omega, cycle_type, d_k, factor, iter_monic, omega, phi, sigma
from cyclestats.partitions import cauchy_probability, enumerate_partitions
from cyclestats.permstats import E_r, W_r_partition_sum
from cyclestats.scanner import (ALPHAS, ShiftSystem, census_max_deviation, deviation_sweep,
                                joint_census, model_value, non_squarefree_tuple_count, scan,
                                squarefree_restricted_count)

FUNCS = {"omega": lambda f, k: omega(f), "big_omega": lambda f, k: big_omega(f),
         "d_k": lambda f, k: d_k(f, k), "phi": lambda f, k: phi(f), "sigma": lambda f, k: sigma(f)}


def naive_count(sys, alpha, k=None):
    """Factor every shifted polynomial one by one."""
    fn = FUNCS[alpha]
    count = 0
    for f in iter_monic(sys.q, sys.n):
        vals = {fn(factor(f + a), k) for a in sys.shifts}
        count += len(vals) == 1
    return count


@pytest.mark.parametrize("q, n", [(2, 3), (3, 3), (3, 4), (5, 3), (5, 4)])
@pytest.mark.parametrize("alpha", ALPHAS)
def test_scan_matches_naive(q, n, alpha):
    k = 2 if alpha == "d_k" else None
    sys = ShiftSystem.constants(q, n, 2)
    assert scan(sys, alpha, k).S == naive_count(sys, alpha, k)


def test_scan_nonconstant_shifts_match_naive():
    sys = ShiftSystem(3, 3, (Poly(3, (0, 1)), Poly(3, (2,)), Poly(3, (1, 2, 1))))
    for alpha in ("omega", "phi"):
        assert scan(sys, alpha).S == naive_count(sys, alpha)


def test_model_values():
    assert model_value("omega", 4, 2) == Fraction(97, 288) == E_r(4, 2)
    assert model_value("phi", 4, 2) == Fraction(73, 288) == W_r_partition_sum(4, 2)
    with pytest.raises(ValueError):
        model_value("tau", 4, 2)


def test_scan_example_q3():
    rep = scan(ShiftSystem.constants(3, 4, 2), "omega")
    assert rep.q_pow_n == 81
    assert rep.probability == Fraction(rep.S, 81)
    assert rep.deviation == pytest.approx(abs(float(rep.probability) - 97 / 288))


def test_shift_system_validation():
    with pytest.raises(ValueError):
        ShiftSystem(3, 2, (0, 0))
    with pytest.raises(ValueError):
        ShiftSystem(3, 2, (Poly(3, (0, 0, 1)),))
    with pytest.raises(ValueError):
        ShiftSystem.constants(3, 2, 4)
    with pytest.raises(ValueError):
        scan(ShiftSystem(3, 2, (0,)), "omega")
    with pytest.raises(ValueError):
        scan(ShiftSystem.constants(3, 2, 2), "d_k", k=1)


@pytest.mark.parametrize("alpha", ["omega", "phi", "d_k"])
def test_translation_invariance(alpha):
    k = 3 if alpha == "d_k" else None
    sys = ShiftSystem(5, 4, (Poly(5, (1,)), Poly(5, (0, 2)), Poly(5, (3, 0, 1))))
    base = scan(sys, alpha, k).S
    for c in (Poly(5, (4,)), Poly(5, (1, 1, 1, 1)), Poly(5, (0, 3))):
        assert scan(sys.translate(c), alpha, k).S == base


@pytest.mark.parametrize("q, n, r", [(3, 3, 2), (5, 4, 3), (7, 3, 2)])
def test_non_squarefree_bound(q, n, r):
    sys = ShiftSystem.constants(q, n, r)
    assert non_squarefree_tuple_count(sys) <= r * q ** (n - 1)


def test_d2_agrees_with_omega_on_squarefree_tuples():
    # on squarefree f, d_2 = 2^omega, so the two events coincide there
    for q, n in ((3, 4), (5, 3), (7, 3)):
        sys = ShiftSystem.constants(q, n, 2)
        assert squarefree_restricted_count(sys, "d_k", 2) == squarefree_restricted_count(sys, "omega")


def test_joint_census_totals_and_marginals():
    sys = ShiftSystem.constants(5, 3, 2)
    census = joint_census(sys)
    assert sum(census.values()) == 125
    marginal = {}
    for (a, _), c in census.items():
        marginal[a] = marginal.get(a, 0) + c
    direct = {}
    for f in iter_monic(5, 3):
        lam = cycle_type(f)
        direct[lam] = direct.get(lam, 0) + 1
    assert marginal == direct


def test_census_deviation_small_for_large_q():
    dev = census_max_deviation(joint_census(ShiftSystem.constants(13, 3, 2)), 13, 3)
    assert dev < 0.1


def test_census_deviation_zero_for_exact_model():
    # a fake census equal to the product model has zero deviation
    lams = list(enumerate_partitions(2))
    total = 4
    census = {(a, b): int(cauchy_probability(a) * cauchy_probability(b) * total)
              for a in lams for b in lams}
    assert census_max_deviation(census, 2, 2) == 0.0


def test_sweep_trend():
    reps = deviation_sweep(4, 2, "omega", [3, 23])
    assert reps[1].deviation < reps[0].deviation
    assert [r.q for r in reps] == [3, 23]
