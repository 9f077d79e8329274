import math

import pytest

from regamma.errors import IntegerArgument, NonPositiveArgument, PoleError
from regamma.gamma_core import (
    MethodTag,
    gamma,
    gamma_cauchy_saalschutz,
    gamma_negative,
    gamma_ratio,
    recip_gamma,
    recip_gamma_log_form,
    recip_gamma_neg_reflection,
    recip_gamma_power_subst,
)
from regamma.oracle import gamma_lanczos
from regamma.quadrature import ConditionFlag, QuadratureConfig

CFG = QuadratureConfig()

SQRT_PI = 1.7724538509055160273
INV_SQRT_PI = 0.56418958354775628695
GAMMA_25 = 1.3293403881791370205


class TestRecipGamma:
    def test_positive_integer_exact(self):
        gv = recip_gamma(3.0)
        assert gv.value == 0.5 and gv.is_exact

    def test_zero_exact(self):
        gv = recip_gamma(0.0)
        assert gv.value == 0.0 and gv.is_exact

    @pytest.mark.parametrize("m", [0, -1, -2, -3])
    def test_entire_function_zeros(self, m):
        assert recip_gamma(float(m)).value == 0.0

    def test_half(self):
        assert recip_gamma(0.5, CFG).value == pytest.approx(INV_SQRT_PI, rel=1e-9)

    def test_negative_half_by_reflection(self):
        gv = recip_gamma(-0.5, CFG)
        assert gv.value == pytest.approx(-0.28209479177387814347, rel=1e-9)

    def test_records_method_and_result(self):
        gv = recip_gamma(2.5, CFG)
        assert gv.method is MethodTag.REAL_AXIS
        assert gv.quadrature is not None
        assert gv.quadrature.evaluations > 0

    def test_hankel_dispatch(self):
        gv = recip_gamma(1.5, CFG, MethodTag.HANKEL)
        assert gv.method is MethodTag.HANKEL
        assert gv.value == pytest.approx(recip_gamma(1.5, CFG).value, rel=1e-8)

    def test_cauchy_saalschutz_dispatch(self):
        gv = recip_gamma(0.5, CFG, MethodTag.CAUCHY_SAALSCHUTZ)
        assert gv.value == pytest.approx(INV_SQRT_PI, rel=1e-8)

    def test_large_integer_underflows_to_zero(self):
        assert recip_gamma(500.0).value == 0.0

    def test_near_integer_flagged(self):
        gv = recip_gamma(2.0 + 1e-3, CFG)
        assert gv.condition_flag is ConditionFlag.NEAR_INTEGER_AMPLIFICATION
        assert gv.value == pytest.approx(1.0 / gamma_lanczos(2.0 + 1e-3), rel=1e-8)


class TestNegReflection:
    def test_half(self):
        gv = recip_gamma_neg_reflection(0.5, CFG)
        assert gv.value == pytest.approx(-0.28209479177387814347, rel=1e-9)

    def test_three_halves(self):
        gv = recip_gamma_neg_reflection(1.5, CFG)
        assert gv.value == pytest.approx(0.42314218766081721521, rel=1e-9)

    @pytest.mark.parametrize("z", [2.0 + 1e-8, 2.0 - 1e-8])
    def test_vanishes_toward_integers(self, z):
        assert abs(recip_gamma_neg_reflection(z, CFG).value) <= 1e-7

    def test_integer_rejected(self):
        with pytest.raises(IntegerArgument):
            recip_gamma_neg_reflection(2.0, CFG)


class TestPowerSubstitution:
    def test_half(self):
        gv = recip_gamma_power_subst(0.5, CFG)
        assert gv.value == pytest.approx(INV_SQRT_PI, rel=1e-9)

    @pytest.mark.parametrize("z", [4.5, 9.7])
    def test_matches_real_axis_for_large_arguments(self, z):
        a = recip_gamma_power_subst(z, CFG).value
        b = recip_gamma(z, CFG).value
        assert abs(a - b) / abs(b) <= 10.0 * CFG.eps_rel


class TestLogForm:
    def test_half(self):
        gv = recip_gamma_log_form(0.5, CFG)
        assert gv.value == pytest.approx(INV_SQRT_PI, rel=1e-9)

    def test_matches_real_axis(self):
        a = recip_gamma_log_form(2.3, CFG).value
        b = recip_gamma(2.3, CFG).value
        assert abs(a - b) / abs(b) <= 10.0 * CFG.eps_rel

    @pytest.mark.parametrize("z", [1.0 + 1e-6, 1.0 - 1e-6])
    def test_continuity_across_one(self, z):
        gv = recip_gamma_log_form(z, CFG)
        assert math.isfinite(gv.value)
        assert abs(gv.value - 1.0) < 1e-3
        assert gv.value == pytest.approx(1.0 / gamma_lanczos(z), rel=1e-4)
        assert gv.condition_flag is ConditionFlag.NEAR_INTEGER_AMPLIFICATION


class TestGammaNegative:
    @pytest.mark.parametrize(
        "z,expected",
        [
            (0.5, -3.5449077018110320546),
            (1.5, 2.3632718012073547031),
            (2.5, -0.94530872048294188123),
        ],
    )
    def test_reference_values(self, z, expected):
        assert gamma_negative(z, CFG).value == pytest.approx(expected, rel=1e-8)

    def test_sign_alternates_per_unit_interval(self):
        z = 0.1
        while z < 4.95:
            n = math.floor(z)
            val = gamma_negative(z, CFG).value
            assert math.copysign(1.0, val) == (-1.0) ** (n + 1)
            z += 0.2

    def test_integer_rejected(self):
        with pytest.raises(IntegerArgument):
            gamma_negative(3.0, CFG)


class TestCauchySaalschutz:
    @pytest.mark.parametrize(
        "z,expected",
        [(0.5, -3.5449077018110320546), (1.5, 2.3632718012073547031)],
    )
    def test_reference_values(self, z, expected):
        assert gamma_cauchy_saalschutz(z, CFG).value == pytest.approx(expected, rel=1e-8)

    @pytest.mark.parametrize("z", [0.4, 1.6, 2.2, 3.7, 4.8])
    def test_matches_integration_by_parts_partner(self, z):
        a = gamma_cauchy_saalschutz(z, CFG).value
        b = gamma_negative(z, CFG).value
        assert abs(a - b) / abs(b) <= 10.0 * CFG.eps_rel


class TestGammaRatio:
    def test_equal_arguments(self):
        assert gamma_ratio(1.3, 1.3, CFG).value == pytest.approx(1.0, rel=1e-7)

    def test_recurrence_pair(self):
        assert gamma_ratio(2.5, 1.5, CFG).value == pytest.approx(1.5, rel=1e-7)

    def test_four_thirds(self):
        assert gamma_ratio(0.5, 2.5, CFG).value == pytest.approx(4.0 / 3.0, rel=1e-6)

    def test_integer_denominator_fast_path(self):
        gv = gamma_ratio(2.5, 3.0, CFG)
        assert gv.value == pytest.approx(GAMMA_25 / 2.0, rel=1e-7)

    def test_domain_errors(self):
        with pytest.raises(NonPositiveArgument):
            gamma_ratio(-1.0, 2.5, CFG)
        with pytest.raises(NonPositiveArgument):
            gamma_ratio(2.5, 0.0, CFG)


class TestGamma:
    def test_integer_exact(self):
        gv = gamma(5.0)
        assert gv.value == 24.0 and gv.is_exact

    def test_half(self):
        assert gamma(0.5, CFG).value == pytest.approx(SQRT_PI, rel=1e-9)

    def test_pole(self):
        with pytest.raises(PoleError):
            gamma(-2.0)
        with pytest.raises(PoleError):
            gamma(0.0)

    def test_overflow(self):
        with pytest.raises(OverflowError):
            gamma(172.0)


class TestFunctionalEquations:
    @pytest.mark.parametrize("z", [0.3, 0.7, 1.2, 2.8, 4.6, 7.9])
    def test_recurrence(self, z):
        lhs = recip_gamma(z, CFG).value
        rhs = z * recip_gamma(z + 1.0, CFG).value
        assert abs(lhs - rhs) <= 1e-7 * abs(lhs)

    @pytest.mark.parametrize("z", [0.1, 0.25, 0.4, 0.45])
    def test_reflection_product(self, z):
        g1 = 1.0 / recip_gamma(z, CFG).value
        g2 = 1.0 / recip_gamma(1.0 - z, CFG).value
        assert abs(g1 * g2 * math.sin(math.pi * z) / math.pi - 1.0) <= 1e-6

    @pytest.mark.parametrize("z", [0.3, 1.7, 2.5, 3.9, 6.1])
    def test_cross_representation_equivalence(self, z):
        tags = (MethodTag.REAL_AXIS, MethodTag.POWER_SUBST, MethodTag.LOG_FORM)
        vals = [recip_gamma(z, CFG, tag).value for tag in tags]
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                assert abs(vals[i] - vals[j]) <= 10.0 * CFG.eps_rel * abs(vals[i])
