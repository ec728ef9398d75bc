import json
import math
from fractions import Fraction

import mpmath
import pytest

from fekete import asym, energy, jacobi, specfun
from fekete.exceptions import CapacityError, DomainError
from fekete.jacobi import JacobiParams
from fekete.precision import precision_mode

from _series import add_term, diff_report, new_series, plus, scaled, times_n
from _util import fit_slope, rel_close


def zeta_frac(m, a):
    return specfun.hurwitz_zeta_negint_fraction(m, Fraction(a))


# -- symbolic building blocks (independent re-assembly of the expansions) ----


def lambda_series(alpha: Fraction, beta: Fraction, order: int):
    s = new_series()
    add_term(s, 1, 0, "log2", 1)
    add_term(s, 0, 1, "1", Fraction(-1, 2))
    add_term(s, 0, 0, "log2", alpha + beta)
    add_term(s, 0, 0, "logpi", Fraction(-1, 2))
    for m in range(1, order + 1):
        add_term(s, -m, 0, "1", asym.lambda_tail_fraction(m, alpha, beta))
    return s


def p1_series(alpha: Fraction, gamma_symbol: str, order: int):
    s = new_series()
    add_term(s, 0, 1, "1", alpha)
    add_term(s, 0, 0, gamma_symbol, -1)
    for m in range(1, order + 1):
        add_term(s, -m, 0, "1", asym.value_at_one_tail_fraction(m, alpha))
    return s


def disc_series(alpha: Fraction, beta: Fraction, order: int):
    ab = alpha + beta
    s = new_series()
    add_term(s, 2, 0, "log2", 1)
    add_term(s, 1, 0, "log2", 2 * ab)
    add_term(s, 1, 0, "logpi", -1)
    add_term(s, 0, 1, "1", (Fraction(5, 2) - (alpha + 1) ** 2 - (beta + 1) ** 2) / 2)
    add_term(s, 0, 0, "1", -Fraction(1, 8) - (ab + Fraction(1, 2)) ** 2 / 2)
    add_term(s, 0, 0, "log2", (Fraction(11, 6) + ab * ab) / 2)
    add_term(s, 0, 0, "logpi", 1)
    add_term(s, 0, 0, "logA", 3)
    add_term(s, 0, 0, "lgamma_2p", alpha + 1)
    add_term(s, 0, 0, "psi_2p", -1)
    add_term(s, 0, 0, "lgamma_2q", beta + 1)
    add_term(s, 0, 0, "psi_2q", -1)
    for m in range(1, order + 1):
        add_term(s, -m, 0, "1", asym.discriminant_tail_fraction(m, alpha, beta))
    return s


def potential_target(p: Fraction, q: Fraction, order: int):
    s = new_series()
    add_term(s, 2, 0, "log2", 1)
    add_term(s, 1, 1, "1", -1)
    add_term(s, 1, 0, "log2", 2 * (p + q - 1))
    add_term(s, 0, 1, "1", -2 * ((p - Fraction(1, 4)) ** 2 + (q - Fraction(1, 4)) ** 2))
    add_term(s, 0, 0, "log2", 2 * ((p + q - 1) ** 2 - Fraction(11, 24)))
    add_term(s, 0, 0, "logpi", -(p + q))
    add_term(s, 0, 0, "logA", -3)
    add_term(s, 0, 0, "psi_2p", 1)
    add_term(s, 0, 0, "psi_2q", 1)
    for m in range(1, order + 1):
        add_term(s, -m, 0, "1", asym.potential_tail_fraction(m, p, q))
    return s


def elliptic_target(p: Fraction, q: Fraction, order: int):
    s = new_series()
    add_term(s, 2, 0, "log2", 1)
    add_term(s, 1, 1, "1", -1)
    add_term(s, 1, 0, "log2", -2)
    add_term(s, 0, 1, "1", 2 * (p * p + q * q - Fraction(1, 8)))
    add_term(s, 0, 0, "log2", -2 * ((p + q) ** 2 - Fraction(13, 24)))
    add_term(s, 0, 0, "logA", -3)
    add_term(s, 0, 0, "lgamma_2p", -2 * p)
    add_term(s, 0, 0, "psi_2p", 1)
    add_term(s, 0, 0, "lgamma_2q", -2 * q)
    add_term(s, 0, 0, "psi_2q", 1)
    for m in range(1, order + 1):
        add_term(s, -m, 0, "1", asym.elliptic_tail_fraction(m, p, q))
    return s


def zeta_prime_series(scale: int, a: Fraction, order: int):
    """Series of zeta'(-1, scale*N + a) in powers of N, symbols {1, log2}."""
    s = new_series()
    sc = Fraction(scale)
    log_s = Fraction(int(math.log2(scale)))  # scale in {1, 2}: log(scale) = log_s * log2
    z0 = zeta_frac(0, a)
    z1 = zeta_frac(1, a)
    add_term(s, 2, 1, "1", sc * sc / 2)
    add_term(s, 2, 0, "log2", sc * sc / 2 * log_s)
    add_term(s, 2, 0, "1", -sc * sc / 4)
    add_term(s, 1, 1, "1", -z0 * sc)
    add_term(s, 1, 0, "log2", -z0 * sc * log_s)
    add_term(s, 0, 1, "1", -z1)
    add_term(s, 0, 0, "log2", -z1 * log_s)
    add_term(s, 0, 0, "1", -z1)
    for k in range(1, order + 1):
        coeff = zeta_frac(k + 1, a) / (k * (k + 1)) / sc ** k
        add_term(s, -k, 0, "1", coeff if k % 2 == 0 else -coeff)
    return s


class TestGoldenTailCoefficients:
    def test_interval_c1_c2_exact(self):
        assert asym.interval_tail_fraction(1) == Fraction(1, 4)
        assert asym.interval_tail_fraction(2) == Fraction(23, 192)

    def test_h1_at_unit_charges(self):
        assert asym.potential_h_fraction(1, 1, 1) == Fraction(-9, 2)

    def test_lambda_c1_legendre(self):
        # (1/2) zeta(-1,1) + zeta(-1) = -1/8
        assert asym.lambda_tail_fraction(1, 0, 0) == Fraction(-1, 8)

    def test_psi1_vanishes_for_legendre(self):
        assert asym.discriminant_psi_fraction(1, 0, 0) == 0

    def test_psi1_assembly_from_displayed_zeta_values(self):
        # zeta(-1) = -1/12, zeta(-2) = 0, zeta(-2,1) = 0 plugged into the bracket
        expected = (
            -Fraction(3, 2) * 0 - 2 * Fraction(-1, 12)
            + (1 * Fraction(-1, 12) - 0) * 2
            - Fraction((2 - Fraction(1, 2)) * 1 + 1 - Fraction(1, 2), 2) * 0
            + 0
        )
        assert expected == 0
        assert asym.discriminant_psi_fraction(1, 0, 0) == expected

    def test_p1_tails_match_log_shift_series(self):
        # alpha = 1: log P_n(1) = log(n+1) = log n + sum (-1)^(m-1)/m n^-m
        for m in range(1, 9):
            assert asym.value_at_one_tail_fraction(m, 1) == Fraction((-1) ** (m - 1), m)

    def test_symmetric_field_specialization(self):
        # p = q collapses the bracket to its symmetric form, exactly
        for p in (Fraction(1, 2), Fraction(1), Fraction(7, 10), Fraction(5, 2)):
            for m in range(1, 9):
                expected = (
                    zeta_frac(m + 1, 1)
                    + 2 * zeta_frac(m + 1, 2 * p)
                    + (1 - Fraction(1, 2 ** m)) * zeta_frac(m + 1, 4 * p - 1)
                )
                assert asym.potential_h_fraction(m, p, p) == expected


class TestLeadingCoeffExpansion:
    def test_constant_legendre(self):
        e = asym.leading_coeff_expansion(JacobiParams(0, 0), 2)
        assert e.leading["const"] == pytest.approx(-0.5 * math.log(math.pi), rel=1e-15)
        assert e.leading["n"] == pytest.approx(math.log(2), rel=1e-15)
        assert e.leading["logn"] == -0.5

    def test_truncated_accuracy(self):
        e = asym.leading_coeff_expansion(JacobiParams(0, 0), 3)
        diff = abs(jacobi.leading_coeff_log(50, JacobiParams(0, 0))
                   - asym.evaluate_expansion(e, 50, 3))
        assert diff <= 50.0 ** -4

    @pytest.mark.parametrize("order", [0, 1, 2])
    def test_decay_slope(self, order):
        params = JacobiParams(0.4, 1.6)
        e = asym.leading_coeff_expansion(params, order)
        ns = (20, 40, 80, 160, 320)
        errs = [abs(jacobi.leading_coeff_log(n, params) - asym.evaluate_expansion(e, n, order))
                for n in ns]
        assert abs(fit_slope(ns, errs) + (order + 1)) <= 0.15


class TestValueAtOneExpansion:
    def test_alpha_zero_is_identically_zero(self):
        e = asym.value_at_one_expansion(JacobiParams(0, 1.2), 6)
        assert e.leading["logn"] == 0.0
        assert e.leading["const"] == 0.0
        assert all(c == 0.0 for c in e.tail)

    def test_alpha_one_closed_form(self):
        # log P_n^(1,1)(1) = log(n+1)
        e = asym.value_at_one_expansion(JacobiParams(1, 1), 4)
        diff = abs(asym.evaluate_expansion(e, 100, 4) - math.log(101))
        assert diff <= 1e-9


class TestDiscriminantExpansion:
    def test_constant_legendre_assembly(self):
        e = asym.discriminant_expansion(JacobiParams(0, 0), 1)
        c = specfun.constants()
        expected = (-0.25 + (11 / 12) * math.log(2) + math.log(math.pi)
                    + 3 * c.log_glaisher - math.log(2 * math.pi))
        assert e.leading["const"] == pytest.approx(expected, rel=1e-13)

    def test_constant_by_extrapolation(self):
        # Richardson on logD_n minus its leading terms over n, 2n, 4n
        params = JacobiParams(0, 0)
        e = asym.discriminant_expansion(params, 0)

        def remainder(n):
            lead = e.leading
            value = jacobi.discriminant_log(n, params)
            return float(value - (lead["n2"] * n * n + lead["n"] * n
                                  + lead["logn"] * math.log(n)))

        r1, r2, r4 = remainder(80), remainder(160), remainder(320)
        k1 = 2 * r2 - r1
        k2 = 2 * r4 - r2
        extrapolated = (4 * k2 - k1) / 3
        assert abs(extrapolated - float(e.leading["const"])) <= 1e-6

    def test_truncated_accuracy(self):
        params = JacobiParams(0, 0)
        e = asym.discriminant_expansion(params, 2)
        diff = abs(jacobi.discriminant_log(40, params) - asym.evaluate_expansion(e, 40, 2))
        assert diff <= 40.0 ** -3

    @pytest.mark.parametrize("order", [0, 1, 2])
    def test_decay_slope(self, order):
        params = JacobiParams(0.4, 1.6)
        e = asym.discriminant_expansion(params, order)
        ns = (20, 40, 80, 160, 320)
        errs = [abs(jacobi.discriminant_log(n, params) - asym.evaluate_expansion(e, n, order))
                for n in ns]
        assert abs(fit_slope(ns, errs) + (order + 1)) <= 0.15


class TestPotentialExpansion:
    def test_constant_unit_charges(self):
        # C1(1,1) = (37/12) log 2 - 2 - 3 log A, via psi^(-2)(2) = log(2 pi) - 1
        e = asym.potential_energy_expansion(1, 1, 1)
        c = specfun.constants()
        expected = (37 / 12) * math.log(2) - 2 - 3 * c.log_glaisher
        assert e.leading["const"] == pytest.approx(expected, rel=1e-12)

    def test_constant_by_extrapolation(self):
        e = asym.potential_energy_expansion(1, 1, 0)

        def remainder(n):
            lead = e.leading
            value = energy.potential_energy_exact(n, 1, 1)
            return float(value - (lead["n2"] * n * n + lead["nlogn"] * n * math.log(n)
                                  + lead["n"] * n + lead["logn"] * math.log(n)))

        r1, r2, r4 = remainder(100), remainder(200), remainder(400)
        k1 = 2 * r2 - r1
        k2 = 2 * r4 - r2
        extrapolated = (4 * k2 - k1) / 3
        assert abs(extrapolated - float(e.leading["const"])) <= 1e-5

    def test_logn_coefficient(self):
        # -2 [(p - 1/4)^2 + (q - 1/4)^2] = -2 * (9/16 + 9/16) = -9/4 at p = q = 1
        e = asym.potential_energy_expansion(1, 1, 0)
        assert e.leading["logn"] == pytest.approx(-2.25, abs=1e-15)

    def test_truncated_accuracy(self):
        e = asym.potential_energy_expansion(0.7, 1.3, 2)
        diff = abs(energy.potential_energy_exact(60, 0.7, 1.3)
                   - asym.evaluate_expansion(e, 60, 2))
        assert diff <= 2e-5  # |c_3| ~ 1.8, so O(60^-3)
        diff2 = abs(energy.potential_energy_exact(120, 0.7, 1.3)
                    - asym.evaluate_expansion(e, 120, 2))
        assert diff2 <= diff / 6  # confirms at least cubic decay

    @pytest.mark.parametrize("order", [0, 1, 2])
    def test_decay_slope(self, order):
        e = asym.potential_energy_expansion(0.7, 1.3, order)
        ns = (20, 40, 80, 160, 320)
        errs = [abs(energy.potential_energy_exact(n, 0.7, 1.3)
                    - asym.evaluate_expansion(e, n, order)) for n in ns]
        assert abs(fit_slope(ns, errs) + (order + 1)) <= 0.15

    def test_symmetric_case_same_path(self):
        left = asym.potential_energy_expansion(0.8, 0.8, 5)
        right = asym.potential_energy_expansion(0.8, 0.8, 5)
        assert left == right


class TestEllipticExpansion:
    def test_n_coefficient_charge_independent(self):
        for (p, q) in [(1.0, 1.0), (0.7, 1.3), (2.0, 0.6)]:
            e = asym.elliptic_log_energy_expansion(p, q, 0)
            assert e.leading["n"] == pytest.approx(-2 * math.log(2), rel=1e-15)

    def test_truncated_accuracy(self):
        e = asym.elliptic_log_energy_expansion(1, 1, 2)
        diff = abs(energy.elliptic_log_energy_exact(60, 1, 1)
                   - asym.evaluate_expansion(e, 60, 2))
        assert diff <= 1e-4  # |c_3| ~ 10.4, so O(60^-3)

    @pytest.mark.parametrize("order", [0, 1, 2])
    def test_decay_slope(self, order):
        e = asym.elliptic_log_energy_expansion(0.7, 1.3, order)
        ns = (20, 40, 80, 160, 320)
        errs = [abs(energy.elliptic_log_energy_exact(n, 0.7, 1.3)
                    - asym.evaluate_expansion(e, n, order)) for n in ns]
        assert abs(fit_slope(ns, errs) + (order + 1)) <= 0.15

    def test_leading_term_comparison_with_potential(self):
        # n^2 and n log n coefficients agree with the potential energy for
        # every charge pair; the n coefficients are 2 log 2 (p+q-1) versus
        # -2 log 2, which differ for all positive charges (at p+q = 2 they
        # match only in absolute value)
        for (p, q) in [(1.0, 1.0), (0.5, 1.5), (0.7, 0.8)]:
            pot = asym.potential_energy_expansion(p, q, 0)
            ell = asym.elliptic_log_energy_expansion(p, q, 0)
            assert pot.leading["n2"] == ell.leading["n2"]
            assert pot.leading["nlogn"] == ell.leading["nlogn"]
            assert pot.leading["n"] != ell.leading["n"]
        pot = asym.potential_energy_expansion(1, 1, 0)
        ell = asym.elliptic_log_energy_expansion(1, 1, 0)
        assert abs(pot.leading["n"]) == pytest.approx(abs(ell.leading["n"]), rel=1e-15)


class TestIntervalExpansion:
    def test_constant(self):
        e = asym.interval_energy_expansion(0)
        c = specfun.constants()
        assert e.leading["const"] == pytest.approx(
            (13 / 12) * math.log(2) - 3 * c.log_glaisher, rel=1e-14)

    def test_truncated_accuracy_extended(self):
        with precision_mode("ext"):
            e = asym.interval_energy_expansion(3)
            diff = abs(energy.interval_energy_exact(100) - asym.evaluate_expansion(e, 100, 3))
            # next coefficient is c_4 ~ 0.0477
            assert diff <= float(0.1 * 100.0 ** -4)

    @pytest.mark.parametrize("order", [0, 1, 2])
    def test_decay_slope(self, order):
        e = asym.interval_energy_expansion(order)
        ns = (20, 40, 80, 160, 320)
        errs = [abs(energy.interval_energy_exact(n) - asym.evaluate_expansion(e, n, order))
                for n in ns]
        assert abs(fit_slope(ns, errs) + (order + 1)) <= 0.15


class TestGeneralIntervalExpansion:
    def test_reduces_on_reference_interval(self):
        base = asym.interval_energy_expansion(3)
        general = asym.general_interval_energy_expansion(-1, 1, 3)
        assert general.leading["n2"] == pytest.approx(base.leading["n2"], rel=1e-15)
        assert general.leading["n"] == pytest.approx(base.leading["n"], rel=1e-15)
        assert general.tail == base.tail

    def test_capacity_one_interval(self):
        e = asym.general_interval_energy_expansion(-2, 2, 2)
        assert e.leading["n2"] == 0.0
        assert e.leading["n"] == pytest.approx(-math.log(2), rel=1e-15)

    def test_unit_interval(self):
        e = asym.general_interval_energy_expansion(0, 1, 2)
        assert e.leading["n2"] == pytest.approx(math.log(4), rel=1e-15)
        assert e.leading["n"] == pytest.approx(-3 * math.log(2), rel=1e-15)

    def test_against_rescaled_exact(self):
        spec = energy.IntervalSpec(0.0, 1.0)
        e = asym.general_interval_energy_expansion(0, 1, 2)
        for N in (40, 80):
            exact = energy.interval_energy_on(spec, N)
            approx = asym.evaluate_expansion(e, N, 2)
            assert abs(exact - approx) <= 2.0 * N ** -3


class TestEvaluateExpansion:
    def test_leading_only(self):
        e = asym.interval_energy_expansion(3)
        n = 25
        manual = (float(e.leading["n2"]) * n * n + float(e.leading["nlogn"]) * n * math.log(n)
                  + float(e.leading["n"]) * n + float(e.leading["logn"]) * math.log(n)
                  + float(e.leading["const"]))
        assert asym.evaluate_expansion(e, n, 0) == pytest.approx(manual, rel=1e-15)

    def test_truncation_difference_matches_coefficient(self):
        e = asym.interval_energy_expansion(2)
        n = 200
        delta = abs(asym.evaluate_expansion(e, n, 2) - asym.evaluate_expansion(e, n, 1))
        assert delta <= 23 / 192 * n ** -2 * 1.5
        assert delta >= 23 / 192 * n ** -2 * 0.5

    def test_precision_floor_detection(self):
        # once truncation error falls under the float64 floor, adding terms
        # stops improving: detect the flattening empirically
        e = asym.interval_energy_expansion(10)
        n = 320
        exact = energy.interval_energy_exact(n)
        errs = [abs(exact - asym.evaluate_expansion(e, n, m)) for m in range(11)]
        assert errs[1] < errs[0]
        floor = min(errs)
        assert min(errs[8:]) <= 10 * max(floor, 1e-16 * abs(exact))

    def test_capacity_and_domain_errors(self):
        e = asym.interval_energy_expansion(2)
        with pytest.raises(CapacityError):
            asym.evaluate_expansion(e, 10, 3)
        with pytest.raises(DomainError):
            asym.evaluate_expansion(e, 1, 1)
        with pytest.raises(CapacityError):
            asym.interval_energy_expansion(asym.max_order() + 1)


class TestCompositionConsistency:
    """Recompose the energy expansions from the building-block expansions,
    exactly, coefficient by coefficient in the symbol basis
    {1, log2, logpi, logA, lgamma, psi}."""

    CHARGES = [
        (Fraction(1), Fraction(1)),
        (Fraction(7, 10), Fraction(13, 10)),
        (Fraction(2), Fraction(3, 5)),
    ]

    @pytest.mark.parametrize("p,q", CHARGES)
    def test_potential_from_parts(self, p, q):
        order = 6
        alpha = 2 * p - 1
        beta = 2 * q - 1
        lam = lambda_series(alpha, beta, order + 1)  # times_n consumes one order
        composed = plus(
            times_n(scaled(lam, 2)),
            scaled(lam, 2 * (p + q - 1)),
            scaled(disc_series(alpha, beta, order), -1),
            scaled(p1_series(alpha, "lgamma_2p", order), -2 * p),
            scaled(p1_series(beta, "lgamma_2q", order), -2 * q),
        )
        target = potential_target(p, q, order)
        problems = diff_report(composed, target, min_power=-order)
        assert not problems, "\n".join(problems)

    @pytest.mark.parametrize("p,q", CHARGES)
    def test_elliptic_from_parts(self, p, q):
        order = 6
        alpha = 2 * p - 1
        beta = 2 * q - 1
        lam = lambda_series(alpha, beta, order + 1)
        composed = plus(
            times_n(scaled(lam, 2)),
            scaled(lam, -2),
            scaled(disc_series(alpha, beta, order), -1),
        )
        target = elliptic_target(p, q, order)
        problems = diff_report(composed, target, min_power=-order)
        assert not problems, "\n".join(problems)

    def test_interval_from_discriminant_product(self):
        # E(N) = -N(N-1) log2 - N logN + 3 zeta'(-1,1)
        #        - 3 Z(N+0) - Z(N-1) + Z(2N-1),
        # i.e. the hyperfactorial form of the N-th discriminant expanded
        # through the zeta'(-1, x+a) asymptotics with a in {0, -1}
        order = 6
        composed = new_series()
        add_term(composed, 2, 0, "log2", -1)
        add_term(composed, 1, 0, "log2", 1)
        add_term(composed, 1, 1, "1", -1)
        add_term(composed, 0, 0, "1", Fraction(1, 4))    # 3 * 1/12
        add_term(composed, 0, 0, "logA", -3)             # 3 * (-log A)
        composed = plus(
            composed,
            scaled(zeta_prime_series(1, Fraction(0), order), -3),
            scaled(zeta_prime_series(1, Fraction(-1), order), -1),
            zeta_prime_series(2, Fraction(-1), order),
        )
        target = new_series()
        add_term(target, 2, 0, "log2", 1)
        add_term(target, 1, 1, "1", -1)
        add_term(target, 1, 0, "log2", -2)
        add_term(target, 0, 1, "1", Fraction(-1, 4))
        add_term(target, 0, 0, "log2", Fraction(13, 12))
        add_term(target, 0, 0, "logA", -3)
        for m in range(1, order + 1):
            add_term(target, -m, 0, "1", asym.interval_tail_fraction(m))
        problems = diff_report(composed, target, min_power=-order)
        assert not problems, "\n".join(problems)


class TestSerialization:
    def test_round_trip_std(self):
        e = asym.potential_energy_expansion(0.7, 1.3, 5)
        data = json.loads(json.dumps(asym.expansion_to_json(e)))
        back = asym.expansion_from_json(data)
        assert back.kind == e.kind
        assert back.params == e.params
        assert back.tail == e.tail
        assert back.leading == e.leading

    def test_round_trip_ext(self):
        with precision_mode("ext"):
            e = asym.discriminant_expansion(JacobiParams(0.4, 1.6), 4)
            data = json.loads(json.dumps(asym.expansion_to_json(e)))
            back = asym.expansion_from_json(data)
            assert all(u == v for u, v in zip(back.tail, e.tail))
            assert all(back.leading[k] == e.leading[k] for k in asym.LEADING_KEYS)

    def test_field_names(self):
        data = asym.expansion_to_json(asym.interval_energy_expansion(2))
        assert set(data) == {"kind", "params", "leading", "tail"}
        assert list(data["leading"]) == ["n2", "nlogn", "n", "logn", "const"]
        assert data["tail"][0] == 0.25

    def test_unknown_kind_rejected(self):
        with pytest.raises(DomainError):
            asym.expansion_from_json({"kind": "nope", "leading": {}, "tail": []})


class TestTailSanity:
    def test_tails_finite_and_stable(self):
        # rational assembly vs float-input assembly agree to 1e-10 relative
        for (p, q) in [(0.3, 2.9), (1.5, 0.2), (3.0, 3.0)]:
            for m in range(1, 11):
                exact = asym.potential_tail_fraction(m, Fraction(p), Fraction(q))
                via_float = asym.potential_tail_fraction(m, p, q)
                exact_f = float(exact)
                assert math.isfinite(exact_f)
                if exact != 0:
                    assert abs(float(via_float) - exact_f) <= 1e-10 * abs(exact_f)

    def test_psi_brackets_finite_and_stable(self):
        for (p, q) in [(0.3, 2.9), (1.5, 0.2), (3.0, 3.0)]:
            alpha, beta = 2 * p - 1, 2 * q - 1
            for m in range(1, 11):
                exact = asym.discriminant_psi_fraction(
                    m, Fraction(alpha), Fraction(beta))
                via_float = asym.discriminant_psi_fraction(m, alpha, beta)
                assert math.isfinite(float(exact))
                if exact != 0:
                    assert abs(float(via_float) - float(exact)) <= 1e-10 * abs(float(exact))

    def test_ext_order_capacity(self):
        with precision_mode("ext"):
            e = asym.interval_energy_expansion(16)
            assert e.order == 16
        with pytest.raises(CapacityError):
            asym.interval_energy_expansion(11)
