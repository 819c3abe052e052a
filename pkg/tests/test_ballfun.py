import mpmath
import pytest

from ballcert import ballfun as bf
from ballcert.jets import derivative
from ballcert.realcore import DomainError, SingularPointError, mpctx, new_context

CTX = new_context(192)
M = mpctx(256)
TOL = M.mpf(2) ** -170


def close(a, b, tol=TOL):
    a, b = M.convert(a), M.convert(b)
    return abs(a - b) <= tol * max(1, abs(b))


class TestLnOmega:
    # closed forms of the first five ball volumes
    CLOSED = {1: "2", 2: None, 3: None, 4: None, 5: None}

    def test_closed_forms(self):
        vals = {1: M.mpf(2), 2: M.pi, 3: 4 * M.pi / 3, 4: M.pi ** 2 / 2,
                5: 8 * M.pi ** 2 / 15}
        for n, v in vals.items():
            assert close(bf.ln_omega(n, CTX), M.ln(v))

    def test_domain(self):
        with pytest.raises(DomainError):
            bf.ln_omega(-2, CTX)

    def test_extends_below_zero(self):
        assert close(bf.ln_omega(-1, CTX), -M.ln(M.pi))


class TestF:
    def test_at_one(self):
        assert abs(bf.F(1, CTX)) < TOL

    def test_quarter_at_two(self):
        assert close(bf.F(2, CTX), M.mpf(1) / 4)

    def test_singular_point(self):
        with pytest.raises(SingularPointError):
            bf.F(M.mpf(1) / 2, CTX)

    def test_equals_base_two_variant(self):
        for x in ["0.3", "1.7", "42"]:
            assert bf.F(M.convert(x), CTX) == bf.F_a(2, M.convert(x), CTX)


class TestFa:
    def test_zero_numerator(self):
        assert abs(bf.F_a(3, 1, CTX)) < TOL

    def test_singular_at_reciprocal_base(self):
        e = M.e
        with pytest.raises(SingularPointError):
            bf.F_a(e, 1 / e, CTX)

    def test_base_must_exceed_one(self):
        with pytest.raises(DomainError):
            bf.F_a(1, 2, CTX)


class TestG:
    def test_zero_at_one(self):
        assert abs(bf.G(1, CTX)) < TOL

    def test_closed_form_at_three(self):
        expected = 3 * (2 * M.ln(2) - M.ln(3)) * M.ln(3) / (2 * M.ln(2))
        assert close(bf.G(3, CTX), expected)
        assert str(expected).startswith("0.68394")

    def test_below_one_at_million(self):
        g = bf.G(10 ** 6, CTX)
        assert M.mpf("0.999") < g < 1

    @pytest.mark.parametrize("x", ["1e-3", "0.5", "1", "3", "1e6"])
    def test_product_and_defining_forms_agree(self, x):
        xv = M.convert(x)
        assert abs(bf.G(xv, CTX) - bf.G_defining(xv, CTX)) < M.mpf(2) ** -180


class TestAQ:
    def test_half_at_two(self):
        assert close(bf.AQ(2, CTX), M.mpf(1) / 2)

    def test_range_at_large_argument(self):
        v = bf.AQ(10 ** 6, CTX)
        assert 1 - M.euler < v < 1

    def test_singular_at_one(self):
        with pytest.raises(SingularPointError):
            bf.AQ(1, CTX)


class TestLnQ:
    def test_at_two(self):
        assert close(bf.ln_Q(2, CTX), M.ln(M.pi) / 2)

    def test_at_one(self):
        assert close(bf.ln_Q(1, CTX), M.ln(2))

    def test_extends_below_zero(self):
        # Q(-1) = [pi^(-1/2)/Gamma(1/2)]^(-1) = pi
        assert close(bf.ln_Q(-1, CTX), M.ln(M.pi))

    def test_excluded_point(self):
        with pytest.raises(SingularPointError):
            bf.ln_Q(0, CTX)

    def test_scaling_identity(self):
        for n in (1, 2, 7, 100):
            assert close(n * bf.ln_Q(n, CTX), bf.ln_omega(n, CTX))


class TestSequences:
    def test_seq_s_values(self):
        assert close(bf.seq_s(2, CTX), M.ln(M.pi) / (2 * M.ln(2)))
        assert close(bf.seq_s(3, CTX), M.ln(4 * M.pi / 3) / (3 * M.ln(3)))

    def test_seq_s_requires_two(self):
        with pytest.raises(DomainError):
            bf.seq_s(1, CTX)

    def test_seq_tail_near_limit(self):
        v = M.exp(M.convert(bf.seq_s(10 ** 6, CTX)))
        assert abs(v - M.exp(-M.mpf(1) / 2)) < M.mpf("0.1")

    def test_ratio_r_at_one(self):
        # sqrt(pi)/2 ratio of the first two root volumes
        expected = M.ln(M.sqrt(M.pi) / 2)
        assert close(bf.ratio_r(1, CTX), expected)
        assert str(expected).startswith("-0.1207822")

    def test_ratio_bounds_at_one(self):
        r = M.exp(M.convert(bf.ratio_r(1, CTX)))
        assert M.sqrt(M.mpf(3) / 4) < r < M.power(M.mpf(3) / 4, M.mpf(1) / 4)

    def test_ratio_negative_through_hundred(self):
        assert all(bf.ratio_r(n, CTX) < 0 for n in range(1, 101))

    def test_dimension_type_check(self):
        with pytest.raises(DomainError):
            bf.ratio_r(2.5, CTX)

    def test_continuous_extension_matches(self):
        for n in (2, 5, 19):
            assert close(bf.ln_f_thm2(n, CTX), bf.seq_s(n, CTX))

    def test_ln_f_domain(self):
        with pytest.raises(DomainError):
            bf.ln_f_thm2(1, CTX)

    def test_log_convexity_witness_positive(self):
        for x in (3, 100):
            j = bf.jet_ln_f_thm2(M.mpf(x), 2, CTX)
            assert derivative(j, 2) > 0


class TestSequenceCache:
    def test_agrees_with_direct_evaluation(self):
        cache = bf.sequence_cache(CTX)
        cache.ensure(600)
        for n in (2, 3, 17, 599):
            assert abs(cache.seq_s(n) - bf.seq_s(n, CTX)) < M.mpf(2) ** -190
            assert abs(cache.ratio_r(n) - bf.ratio_r(n, CTX)) < M.mpf(2) ** -190
            assert abs(cache.ln_omega(n) - bf.ln_omega(n, CTX)) < \
                M.mpf(2) ** -185 * max(1, abs(cache.ln_omega(n)))

    def test_incremental_growth_is_stable(self):
        ctx = new_context(128)
        c1 = bf.SequenceCache(ctx)
        c1.ensure(50)
        v_small = c1.seq_s(50)
        c1.ensure(200)
        assert c1.seq_s(50) == v_small
        c2 = bf.SequenceCache(ctx)
        c2.ensure(200)
        assert c2.seq_s(50) == v_small
