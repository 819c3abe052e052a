from fractions import Fraction

import mpmath
import pytest

from ballcert.gammaspec import (
    bernoulli,
    bernoulli_fraction,
    digamma,
    euler_vs_gamma_log_gap,
    lgamma,
    lgamma_derivs,
    log_bound_gaps,
    polygamma,
    polygamma_envelope,
    psi_envelope,
    shift_threshold,
)
from ballcert.realcore import DomainError, mpctx, new_context

CTX = new_context(192)
M = mpctx(256)
TOL = M.mpf(2) ** -180


def _oracle(fn, *args):
    with mpmath.workprec(320):
        return M.convert(fn(*args))


class TestBernoulli:
    def test_b2(self):
        assert bernoulli_fraction(2) == Fraction(1, 6)

    def test_b4(self):
        assert bernoulli_fraction(4) == Fraction(-1, 30)

    def test_b12_via_recurrence(self):
        assert bernoulli_fraction(12) == Fraction(-691, 2730)

    def test_odd_indices_vanish(self):
        assert all(bernoulli_fraction(k) == 0 for k in (3, 5, 7, 9))

    def test_rendering(self):
        v = bernoulli(2, CTX)
        assert abs(v - M.mpf(1) / 6) < TOL

    def test_rejects_odd(self):
        with pytest.raises(DomainError):
            bernoulli(3, CTX)

    def test_rejects_oversized(self):
        with pytest.raises(DomainError):
            bernoulli(514, CTX)


class TestLgamma:
    def test_at_one(self):
        assert abs(lgamma(1, CTX)) < TOL

    def test_at_three_halves(self):
        # ln(sqrt(pi)/2)
        expected = M.ln(M.sqrt(M.pi) / 2)
        assert abs(lgamma(M.mpf(3) / 2, CTX) - expected) < TOL
        assert str(expected).startswith("-0.1207822")

    def test_at_five(self):
        assert abs(lgamma(5, CTX) - M.ln(24)) < TOL

    @pytest.mark.parametrize("x", ["0.05", "0.31", "1.0001", "7.3", "123.4", "5e5"])
    def test_against_reference(self, x):
        xv = M.convert(x)
        ref = _oracle(mpmath.loggamma, xv)
        assert abs(lgamma(xv, CTX) - ref) <= TOL * max(1, abs(ref))

    def test_domain_error(self):
        with pytest.raises(DomainError):
            lgamma(0, CTX)

    def test_recurrence_identity(self):
        # lgamma(x+1) - lgamma(x) = ln x on a grid
        for x in [M.mpf("0.1"), M.mpf(1), M.mpf(17), M.mpf(100)]:
            got = lgamma(x + 1, CTX) - lgamma(x, CTX)
            assert abs(got - M.ln(x)) < TOL * max(1, abs(M.ln(x)))


class TestDigamma:
    def test_at_one_is_minus_gamma(self):
        assert abs(digamma(1, CTX) + M.euler) < TOL

    def test_at_two(self):
        val = digamma(2, CTX)
        assert abs(val - (1 - M.euler)) < TOL
        lo, hi = M.ln(2) - M.mpf(1) / 2, M.ln(2) - M.mpf(1) / 4
        assert lo < val < hi

    def test_at_half(self):
        expected = -M.euler - 2 * M.ln(2)
        assert abs(digamma(M.mpf(1) / 2, CTX) - expected) < TOL

    def test_recurrence(self):
        for x in [M.mpf("0.1"), M.mpf(3), M.mpf(50)]:
            got = digamma(x + 1, CTX) - digamma(x, CTX)
            assert abs(got - 1 / x) < TOL * max(1, 1 / x)


class TestPolygamma:
    def test_trigamma_at_one(self):
        assert abs(polygamma(1, 1, CTX) - M.pi ** 2 / 6) < TOL

    def test_tetragamma_at_one(self):
        expected = -2 * _oracle(mpmath.zeta, 3)
        assert abs(polygamma(2, 1, CTX) - expected) < TOL

    def test_trigamma_band_at_one(self):
        val = polygamma(1, 1, CTX)
        assert M.mpf("1.5") < val < M.mpf(2)

    @pytest.mark.parametrize("k", [1, 2, 3, 5, 8, 16])
    def test_against_reference(self, k):
        for x in [M.mpf("0.2"), M.mpf("2.5"), M.mpf(80)]:
            ref = _oracle(mpmath.psi, k, x)
            assert abs(polygamma(k, x, CTX) - ref) <= M.mpf(2) ** -170 * abs(ref)

    def test_sign_alternation(self):
        for k in range(1, 9):
            val = polygamma(k, M.mpf("1.7"), CTX)
            assert (val > 0) == (k % 2 == 1)

    def test_order_bounds(self):
        with pytest.raises(DomainError):
            polygamma(17, 1, CTX)
        with pytest.raises(DomainError):
            polygamma(0, 1, CTX)

    def test_shift_threshold_consistency(self):
        # two different (valid) shift thresholds agree to margin
        base = shift_threshold(192 + 48)
        for k in (1, 3):
            a = polygamma(k, M.mpf("0.7"), CTX, threshold=base)
            b = polygamma(k, M.mpf("0.7"), CTX, threshold=base + 40)
            assert abs(a - b) < TOL * abs(a)
        la = lgamma(M.mpf("0.7"), CTX, threshold=base)
        lb = lgamma(M.mpf("0.7"), CTX, threshold=base + 40)
        assert abs(la - lb) < TOL


class TestBatchedDerivatives:
    def test_matches_individual_calls(self):
        x = M.mpf("0.37")
        derivs = lgamma_derivs(6, x, CTX)
        assert abs(derivs[0] - lgamma(x, CTX)) < TOL
        assert abs(derivs[1] - digamma(x, CTX)) < TOL
        for k in range(1, 6):
            assert abs(derivs[k + 1] - polygamma(k, x, CTX)) < TOL * abs(derivs[k + 1])


class TestEnvelopes:
    @pytest.mark.parametrize("x", ["0.05", "0.5", "3", "700", "1e4"])
    def test_psi_band_strict(self, x):
        xv = M.convert(x)
        lo, hi = psi_envelope(xv, CTX)
        assert lo < digamma(xv, CTX) < hi

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    @pytest.mark.parametrize("x", ["0.05", "1", "42", "1e4"])
    def test_polygamma_band_strict(self, k, x):
        xv = M.convert(x)
        lo, hi = polygamma_envelope(k, xv, CTX)
        val = polygamma(k, xv, CTX)
        mag = val if k % 2 == 1 else -val
        assert lo < mag < hi


class TestClassicalLogBounds:
    def test_euler_gamma_gap_flips_at_one(self):
        assert euler_vs_gamma_log_gap(M.mpf("0.4"), CTX) < 0
        assert abs(euler_vs_gamma_log_gap(M.mpf(1), CTX)) < TOL
        assert euler_vs_gamma_log_gap(M.mpf(7), CTX) > 0

    def test_log_bounds_at_one(self):
        # 2/3 < ln 2 < 3/4
        lo, hi = log_bound_gaps(M.mpf(1), CTX)
        assert lo > 0 and hi > 0
        assert abs((M.ln(2) - lo) - M.mpf(2) / 3) < TOL

    def test_log_bounds_reverse_below_zero(self):
        lo, hi = log_bound_gaps(M.mpf("-0.5"), CTX)
        assert lo < 0 and hi < 0
