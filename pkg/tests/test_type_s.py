import math
from math import fsum, sqrt

import pytest

from divbounds import (
    DistributionPair,
    Regime,
    SParameter,
    chi_squared,
    csiszar_divergence,
    generator,
    hellinger,
    omega_s,
    omega_special_cases,
    phi_s,
    psi_s,
    psi_s_d1,
    psi_s_d2,
    psi_s_d3,
    relative_ag_divergence,
    relative_information,
    relative_js_divergence,
    validate,
)
from divbounds.type_s import NonPositiveArgument

S_GRID = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0)


def close(a, b, rel=1e-12, abs_=1e-14):
    return math.isclose(a, b, rel_tol=rel, abs_tol=abs_)


class TestSParameter:
    @pytest.mark.parametrize("s, regime", [
        (0.0, Regime.LIMIT_AT_ZERO),
        (1e-6, Regime.LIMIT_AT_ZERO),
        (-1e-5, Regime.LIMIT_AT_ZERO),
        (1.0, Regime.LIMIT_AT_ONE),
        (1.0 + 5e-6, Regime.LIMIT_AT_ONE),
        (0.5, Regime.GENERIC),
        (-2.0, Regime.GENERIC),
        (2e-5, Regime.GENERIC),
    ])
    def test_regimes(self, s, regime):
        assert SParameter.from_value(s).regime is regime

    def test_canonical(self):
        assert SParameter.from_value(1e-6).canonical == 0.0
        assert SParameter.from_value(1.0 - 1e-6).canonical == 1.0
        assert SParameter.from_value(0.5).canonical == 0.5


class TestPhi:
    def test_golden(self, std_pair):
        assert close(phi_s(std_pair, 2.0), 1.0 / 6.0)
        assert close(phi_s(std_pair, 0.5), 0.13629669484372685)
        assert close(phi_s(std_pair, 0.5), 4.0 * hellinger(std_pair))

    def test_special_cases(self, make_pairs):
        """The five closed special cases against their independent
        base-measure evaluations."""
        for pair in make_pairs(200, seed=51):
            swapped = pair.swapped()
            assert close(phi_s(pair, -1.0), 0.5 * chi_squared(swapped))
            assert close(phi_s(pair, 0.0), relative_information(swapped))
            assert close(phi_s(pair, 0.5), 4.0 * hellinger(pair))
            assert close(phi_s(pair, 1.0), relative_information(pair))
            assert close(phi_s(pair, 2.0), 0.5 * chi_squared(pair))

    def test_swap_dualities(self, make_pairs):
        for pair in make_pairs(100, seed=53):
            swapped = pair.swapped()
            assert close(phi_s(pair, 2.0), phi_s(swapped, -1.0))
            assert close(phi_s(pair, 1.0), phi_s(swapped, 0.0))

    def test_zero_at_equal(self):
        base = validate((0.1, 0.2, 0.7))
        pair = DistributionPair(base, base)
        for s in S_GRID:
            assert phi_s(pair, s) == 0.0


class TestOmega:
    def test_golden(self, std_pair):
        assert close(omega_s(std_pair, -1.0), 1.0 / 30.0)
        assert close(omega_s(std_pair, 2.0), 1.0 / 32.0)
        assert close(omega_s(std_pair, 0.5), 0.03188121493133301)
        assert close(omega_s(std_pair, 0.0), relative_js_divergence(std_pair))
        assert close(omega_s(std_pair, 1.0), relative_ag_divergence(std_pair))

    def test_special_case_table(self, std_pair):
        rows = omega_special_cases(std_pair)
        assert [row.s for row in rows] == [-1.0, 0.0, 0.5, 1.0, 2.0]
        for row in rows:
            assert close(row.family_value, row.reference_value)
        assert close(rows[1].family_value, 0.032269260568785586)
        assert close(rows[3].family_value, 0.03158394240196325)

    def test_special_case_table_bulk(self, make_pairs):
        for pair in make_pairs(300, seed=57):
            for row in omega_special_cases(pair):
                assert close(row.family_value, row.reference_value)

    def test_special_cases_zero_at_equal(self):
        base = validate((0.25, 0.3, 0.45))
        pair = DistributionPair(base, base)
        for row in omega_special_cases(pair):
            assert abs(row.family_value) <= 1e-15
            assert abs(row.reference_value) <= 1e-15

    def test_new_measure_closed_forms(self, make_pairs):
        """The two fractional-parameter members match their displayed
        closed forms."""
        for pair in make_pairs(200, seed=59):
            items = list(zip(pair.p.values, pair.q.values))
            half_neg = (4.0 / 3.0) * (
                fsum(p * sqrt(2.0 * p / (p + q)) for p, q in items) - 1.0)
            two_neg = (1.0 / 6.0) * (
                fsum(p * (2.0 * p / (p + q)) ** 2 for p, q in items) - 1.0)
            assert close(omega_s(pair, -0.5), half_neg, rel=1e-12, abs_=1e-13)
            assert close(omega_s(pair, -2.0), two_neg, rel=1e-12, abs_=1e-13)

    def test_csiszar_consistency(self, make_pairs):
        for pair in make_pairs(300, seed=61):
            for s in S_GRID:
                assert close(omega_s(pair, s),
                             csiszar_divergence(pair, generator(s)))

    def test_continuity_at_removable_points(self, std_pair):
        for s0 in (0.0, 1.0):
            base = omega_s(std_pair, s0)
            for eps in (1e-6, -1e-6):
                assert abs(omega_s(std_pair, s0 + eps) - base) <= (
                    1e-6 * (1.0 + base))

    def test_nonnegativity_bulk(self, make_pairs):
        """omega and phi stay nonnegative across sampled parameters."""
        samples = [-3.0 + 7.0 * (i % 29) / 28.0 for i in range(10_000)]
        for pair, s in zip(make_pairs(10_000, seed=63), samples):
            assert omega_s(pair, s) >= 0.0
            assert phi_s(pair, s) >= 0.0


class TestPsi:
    def test_normalization_exact(self):
        for s in S_GRID:
            assert psi_s(1.0, s) == 0.0

    def test_derivative_goldens(self):
        assert close(psi_s_d1(2.0, 1.0), 0.10615896377410954)
        assert close(psi_s_d2(2.0 / 3.0, 1.0), 0.675)
        assert psi_s_d1(1.0, 0.5) == 0.0

    def test_rejects_nonpositive(self):
        for fn in (psi_s, psi_s_d1, psi_s_d2, psi_s_d3):
            with pytest.raises(NonPositiveArgument):
                fn(0.0, 1.0)
            with pytest.raises(NonPositiveArgument):
                fn(-1.0, 0.5)

    def test_derivative_chain(self):
        """d1/d2/d3 match central finite differences of the next lower
        order at the probe grid."""
        h = 1e-5
        for s in (-1.0, -0.5, 0.0, 0.5, 1.0, 2.0):
            for x in (0.3, 0.7, 1.0, 1.6, 3.0):
                fd1 = (psi_s(x + h, s) - psi_s(x - h, s)) / (2.0 * h)
                fd2 = (psi_s_d1(x + h, s) - psi_s_d1(x - h, s)) / (2.0 * h)
                fd3 = (psi_s_d2(x + h, s) - psi_s_d2(x - h, s)) / (2.0 * h)
                assert close(psi_s_d1(x, s), fd1, rel=1e-6, abs_=1e-9)
                assert close(psi_s_d2(x, s), fd2, rel=1e-6, abs_=1e-9)
                assert close(psi_s_d3(x, s), fd3, rel=1e-6, abs_=1e-9)

    def test_convexity_witness(self):
        xs = [10.0 ** (-3 + 6 * i / 24) for i in range(25)]
        ss = [-3.0 + 7.0 * i / 14 for i in range(15)]
        for s in ss:
            for x in xs:
                assert psi_s_d2(x, s) > 0.0

    def test_third_derivative_sign(self):
        xs = (0.05, 0.3, 1.0, 2.0, 10.0)
        for s in (-1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0):
            for x in xs:
                assert psi_s_d3(x, s) <= 0.0
        # below s = -1 the sign flips for small arguments
        assert psi_s_d3(0.1, -4.0) > 0.0

    def test_generator_wraps_family(self, std_pair):
        gen = generator(0.5)
        assert gen.label == "unified_ag_js[s=0.5]"
        assert close(csiszar_divergence(std_pair, gen),
                     omega_s(std_pair, 0.5))
