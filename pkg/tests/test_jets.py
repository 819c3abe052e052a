import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ballcert import ballfun
from ballcert.jets import (
    Jet,
    derivative,
    jet_arith,
    jet_exp,
    jet_fn,
    jet_lgamma,
    jet_ln,
    jet_polygamma,
    jet_pow_const,
    jet_var,
)
from ballcert.realcore import DomainError, mpctx, new_context

CTX = new_context(192)
M = mpctx(256)
TOL = M.mpf(2) ** -150


def close(a, b, tol=TOL):
    return abs(M.convert(a) - M.convert(b)) <= tol * max(1, abs(M.convert(b)))


class TestConstruction:
    def test_jet_var(self):
        j = jet_var(2, 2, CTX)
        assert [float(c) for c in j.coeffs] == [2.0, 1.0, 0.0]

    def test_jet_var_longer(self):
        j = jet_var(M.mpf("0.5"), 4, CTX)
        assert len(j.coeffs) == 5 and float(j.coeffs[1]) == 1.0

    def test_order_ceiling(self):
        with pytest.raises(DomainError):
            jet_var(1, 17, CTX)


class TestArithmetic:
    def test_square(self):
        a = jet_var(1, 2, CTX)
        assert [float(c) for c in (a * a).coeffs] == [1.0, 2.0, 1.0]

    def test_self_division(self):
        a = jet_var(1, 2, CTX)
        assert [float(c) for c in (a / a).coeffs] == [1.0, 0.0, 0.0]

    def test_division_by_zero_constant_term(self):
        a = jet_var(1, 1, CTX)
        b = jet_var(0, 1, CTX)
        with pytest.raises(DomainError):
            a / b

    def test_dispatcher(self):
        a, b = jet_var(3, 2, CTX), jet_var(3, 2, CTX)
        assert jet_arith("add", a, b).coeffs[0] == 6
        assert jet_arith("sub", a, b).coeffs[1] == 0
        with pytest.raises(DomainError):
            jet_arith("mod", a, b)

    def test_mismatched_orders_rejected(self):
        with pytest.raises(DomainError):
            jet_var(1, 2, CTX) + jet_var(1, 3, CTX)

    @given(st.floats(min_value=0.1, max_value=50, allow_nan=False),
           st.floats(min_value=0.1, max_value=50, allow_nan=False))
    @settings(max_examples=40, deadline=None)
    def test_leibniz_rule(self, x, y):
        a = jet_ln(jet_var(M.convert(x), 1, CTX))
        b = jet_exp(jet_var(M.convert(x), 1, CTX) * M.convert(y) / 50)
        prod = a * b
        lhs = derivative(prod, 1)
        rhs = derivative(a, 1) * b.coeffs[0] + a.coeffs[0] * derivative(b, 1)
        assert abs(lhs - rhs) <= M.mpf(2) ** -170 * max(1, abs(lhs))


class TestElementaryJets:
    def test_ln_series_at_one(self):
        j = jet_ln(jet_var(1, 3, CTX))
        expected = [0, 1, -0.5, 1 / 3]
        for c, e in zip(j.coeffs, expected):
            assert abs(float(c) - e) < 1e-15

    def test_exp_truncated(self):
        j = jet_exp(jet_var(0, 1, CTX))
        assert [float(c) for c in j.coeffs] == [1.0, 1.0]

    def test_pow_const_binomial(self):
        j = jet_pow_const(jet_var(1, 2, CTX), M.mpf(1) / 2)
        assert [float(c) for c in j.coeffs] == [1.0, 0.5, -0.125]

    def test_fn_dispatcher(self):
        j = jet_fn("ln", jet_var(2, 1, CTX))
        assert close(j.coeffs[0], M.ln(2))
        with pytest.raises(DomainError):
            jet_fn("pow_const", jet_var(2, 1, CTX))

    def test_ln_requires_positive(self):
        with pytest.raises(DomainError):
            jet_ln(jet_var(-1, 1, CTX))


class TestLgammaJets:
    def test_series_at_one(self):
        j = jet_lgamma(jet_var(1, 2, CTX), CTX)
        assert abs(j.coeffs[0]) < TOL
        assert close(j.coeffs[1], -M.euler)
        assert close(j.coeffs[2], M.pi ** 2 / 12)

    def test_value_at_three_halves(self):
        j = jet_lgamma(jet_var(M.mpf(3) / 2, 0, CTX), CTX)
        assert close(j.coeffs[0], M.ln(M.sqrt(M.pi) / 2))

    def test_first_derivative_is_digamma(self):
        j = jet_lgamma(jet_var(2, 1, CTX), CTX)
        assert close(derivative(j, 1), 1 - M.euler)

    def test_chain_rule_through_composition(self):
        # d/dx lnGamma(x^2) = 2x psi(x^2) at x = 2
        x = jet_var(2, 1, CTX)
        j = jet_lgamma(x * x, CTX)
        with mpmath.workprec(300):
            expected = M.convert(4 * mpmath.psi(0, 4))
        assert close(derivative(j, 1), expected)

    def test_polygamma_jet(self):
        x = jet_var(M.mpf(3), 1, CTX)
        j = jet_polygamma(1, x, CTX)
        with mpmath.workprec(300):
            assert close(j.coeffs[0], M.convert(mpmath.psi(1, 3)))
            assert close(derivative(j, 1), M.convert(mpmath.psi(2, 3)))

    def test_polygamma_order_ceiling(self):
        with pytest.raises(DomainError):
            jet_polygamma(10, jet_var(1, 8, CTX), CTX)


class TestDerivativeExtraction:
    def test_basic(self):
        j = Jet((M.mpf(1), M.mpf(2), M.mpf(1)), 240)
        assert float(derivative(j, 2)) == 2.0

    def test_rejects_overflow_order(self):
        j = jet_var(1, 2, CTX)
        with pytest.raises(DomainError):
            derivative(j, 3)

    def test_aq_value_at_two(self):
        j = ballfun.jet_AQ(M.mpf(2), 0, CTX)
        assert close(j.coeffs[0], M.mpf(1) / 2)


class TestAgainstFiniteDifferences:
    @pytest.mark.parametrize("name,builder,x", [
        ("F", ballfun.jet_F, "1.7"),
        ("AQ", ballfun.jet_AQ, "2.6"),
        ("G", ballfun.jet_G, "0.8"),
        ("ln_Q", ballfun.jet_ln_Q, "3.3"),
        ("ln_f_thm2", ballfun.jet_ln_f_thm2, "5.1"),
        ("ln_omega", ballfun.jet_ln_omega, "2.9"),
    ])
    def test_first_derivative_matches_central_difference(self, name, builder, x):
        ctx = new_context(192)
        m = mpctx(192 + 48)
        xv = m.convert(x)
        h = m.ldexp(1, -(192 // 3))
        jet = builder(xv, 1, ctx)
        d_jet = derivative(jet, 1)
        f_hi = builder(xv + h, 0, ctx).coeffs[0]
        f_lo = builder(xv - h, 0, ctx).coeffs[0]
        d_fd = (f_hi - f_lo) / (2 * h)
        assert abs(d_jet - d_fd) <= m.ldexp(1, -(192 // 4)) * max(1, abs(d_jet))
