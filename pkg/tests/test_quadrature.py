import math

import pytest

from regamma.kernel import decompose, regularized_integrand, truncated_exp
from regamma.oracle import brute_force_integral
from regamma.quadrature import (
    ConditionFlag,
    QuadratureConfig,
    exponential_tail,
    geometric_breakpoints,
    integrate_finite,
    integrate_regularized_kernel,
    polynomial_tail_closed_form,
)

CFG = QuadratureConfig()

# pi / (sin(pi z) Gamma(z)), frozen from a 50-digit evaluation
I_HALF = 1.7724538509055160273
I_THREE_HALVES = -3.5449077018110320546
I_FIVE_HALVES = 2.3632718012073547031


class TestIntegrateFinite:
    def test_constant(self):
        res = integrate_finite(lambda x: 1.0, 0.0, 1.0, CFG)
        assert res.value == pytest.approx(1.0, rel=1e-14)
        assert res.abs_error_estimate <= 1e-12
        assert res.condition_flag is ConditionFlag.OK

    def test_parabola(self):
        res = integrate_finite(lambda x: x * x, 0.0, 1.0, CFG)
        assert res.value == pytest.approx(1.0 / 3.0, rel=1e-14)

    def test_decaying_exponential(self):
        res = integrate_finite(lambda x: math.exp(-x), 0.0, 50.0, CFG)
        assert res.value == pytest.approx(1.0 - math.exp(-50.0), rel=1e-10)

    def test_breakpoints_do_not_change_value(self):
        f = lambda x: math.sin(3.0 * x) ** 2
        plain = integrate_finite(f, 0.0, 4.0, CFG)
        seeded = integrate_finite(f, 0.0, 4.0, CFG, breakpoints=[0.5, 1.0, 2.0])
        assert plain.value == pytest.approx(seeded.value, rel=1e-11)

    def test_budget_exhaustion_signals_not_raises(self):
        cfg = QuadratureConfig(eps_rel=1e-15, max_subdivisions=3)
        res = integrate_finite(lambda x: math.sqrt(x), 0.0, 1.0, cfg)
        assert res.condition_flag is ConditionFlag.TOLERANCE_NOT_MET
        assert res.value == pytest.approx(2.0 / 3.0, rel=1e-3)

    def test_result_invariants(self):
        res = integrate_finite(lambda x: math.exp(-x * x), 0.0, 3.0, CFG)
        assert res.evaluations > 0
        assert res.abs_error_estimate >= 0.0
        assert (
            res.abs_error_estimate
            <= CFG.eps_rel * abs(res.value) + CFG.eps_abs
        )

    def test_bad_interval(self):
        with pytest.raises(ValueError):
            integrate_finite(lambda x: x, 1.0, 0.0, CFG)


class TestRegularizedKernel:
    @pytest.mark.parametrize(
        "z,expected",
        [(0.5, I_HALF), (1.5, I_THREE_HALVES), (2.5, I_FIVE_HALVES)],
    )
    def test_reference_values(self, z, expected):
        res = integrate_regularized_kernel(decompose(z), CFG)
        assert res.value == pytest.approx(expected, rel=1e-8)
        assert res.condition_flag is ConditionFlag.OK

    @pytest.mark.parametrize("z", [0.3, 1.7, 3.2, 6.9])
    def test_split_invariance(self, z):
        vals = [
            integrate_regularized_kernel(
                decompose(z), QuadratureConfig(split_point=sp)
            ).value
            for sp in (0.5, 1.0, 2.0)
        ]
        spread = (max(vals) - min(vals)) / abs(vals[0])
        assert spread <= 10.0 * CFG.eps_rel

    @pytest.mark.parametrize("z", [0.7, 2.5, 4.3])
    def test_no_adaptive_blowup_at_origin(self, z):
        e_full = integrate_regularized_kernel(
            decompose(z), QuadratureConfig(split_point=1.0)
        ).evaluations
        e_half = integrate_regularized_kernel(
            decompose(z), QuadratureConfig(split_point=0.5)
        ).evaluations
        assert e_half <= 4 * e_full

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_near_integer_growth_and_flag(self, m):
        delta = 1e-3
        res = integrate_regularized_kernel(decompose(m + delta), CFG)
        predicted = 1.0 / (delta * math.factorial(m - 1))
        assert predicted / 3.0 <= abs(res.value) <= predicted * 3.0
        assert res.condition_flag is ConditionFlag.NEAR_INTEGER_AMPLIFICATION

    def test_sign_pattern(self):
        # single-signed integrand: sign of I(z) is (-1)^n
        for z in (0.4, 1.3, 2.8, 3.1, 4.9):
            res = integrate_regularized_kernel(decompose(z), CFG)
            assert math.copysign(1.0, res.value) == (-1.0) ** math.floor(z)


class TestPolynomialTail:
    def test_empty_for_n_zero(self):
        assert polynomial_tail_closed_form(decompose(0.5), 10.0) == 0.0

    def test_single_term(self):
        # int_10^inf -x^{-1.5} dx = -2/sqrt(10)
        val = polynomial_tail_closed_form(decompose(1.5), 10.0)
        assert val == pytest.approx(-0.63245553203367587, rel=1e-12)

    def test_two_terms(self):
        # int_4^inf (x - 1) x^{-2.5} dx = 11/12
        val = polynomial_tail_closed_form(decompose(2.5), 4.0)
        assert val == pytest.approx(11.0 / 12.0, rel=1e-12)

    @pytest.mark.parametrize("z,n", [(1.5, 1), (2.5, 2)])
    def test_against_brute_force(self, z, n):
        # compare the closed form over [R, 1e6] with decade-wise midpoint sums
        arg = decompose(z)
        R = 10.0

        def poly_part(x):
            return -truncated_exp(-x, n - 1) * x**-z

        brute = 0.0
        lo = R
        while lo < 1e6:
            hi = min(lo * 10.0, 1e6)
            brute += brute_force_integral(poly_part, lo, hi, 300_000)
            lo = hi
        closed = polynomial_tail_closed_form(arg, R) - polynomial_tail_closed_form(
            arg, 1e6
        )
        assert brute == pytest.approx(closed, rel=1e-9)


class TestExponentialTail:
    def test_against_gamma_tail(self):
        # int_X^inf e^{-x} x^{-z} dx at z=0.5, X=1 equals
        # Gamma(0.5, 1) = sqrt(pi) erfc(1); frozen 50-digit value
        res = exponential_tail(0.5, 1.0, CFG)
        assert res.value == pytest.approx(0.27880558528066197650, rel=1e-9)

    def test_negligible_for_large_radius(self):
        res = exponential_tail(1.5, 36.0, CFG)
        assert abs(res.value) < 1e-16


class TestConfigValidation:
    def test_bad_eps_rel(self):
        with pytest.raises(ValueError):
            QuadratureConfig(eps_rel=2.0)

    def test_bad_split(self):
        with pytest.raises(ValueError):
            QuadratureConfig(split_point=0.0)

    def test_geometric_breakpoints_inside(self):
        pts = geometric_breakpoints(1.0, 36.0)
        assert all(1.0 < p < 36.0 for p in pts)
        assert pts == sorted(pts)
