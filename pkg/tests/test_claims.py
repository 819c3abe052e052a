import mpmath
import pytest

from ballcert import checker
from ballcert.claims import (
    ClaimCase,
    GridSpec,
    IntRange,
    Kind,
    OpenProblemParams,
    Verdict,
)
from ballcert.realcore import DomainError, mpctx, new_context
from ballcert.registry import EQUATION_COVERAGE, registry

CTX = new_context(192)
M = mpctx(256)

SPEC_IDS = [
    "EQ2_INC", "EQ3_LIMIT", "EQ4_LIMIT", "SERIES_PROBE",
    "OMEGA_1N_DEC_LOGCONVEX", "EQ6_AQ_SIGNS", "EQ7_AQ_RANGE",
    "THM1_F_INC_LOW", "THM1_F_INC_HIGH", "THM1_F_CONCAVE",
    "THM2_LOGCONVEX", "THM2_RATIO_DEC", "EQ9_SHARP", "EQ11_G_BAND",
    "THM3_G_INC", "EQ13_LIMITS", "CONJ_FA_SIGNS", "CONJ_CM_1_MINUS_G",
    "Q_LCM_SCAN", "EQ17_RATIO", "EQ18_BAND", "EQ18_VS_19", "EQ19_BAND",
    "EQ21_BAND", "EQ22_BAND", "EQ20_YAMING", "EQ23_TJM", "EQ24_BAND",
    "EQ24_VS_21", "EQ25_BAND", "EQ26_BAND", "LEM1", "LEM2", "LEM3",
    "THM2_PROOF_LOGCONVEX_FN",
]


class TestGridSpec:
    def test_log_points_deterministic(self):
        g = GridSpec(0.1, 100, 16, "log")
        assert g.points(160) == g.points(160)

    def test_linear_points(self):
        g = GridSpec(0, 1, 5, "linear")
        assert [float(p) for p in g.points(64)] == [0, 0.25, 0.5, 0.75, 1.0]

    def test_validation(self):
        with pytest.raises(DomainError):
            GridSpec(1, 1, 10)
        with pytest.raises(DomainError):
            GridSpec(0, 1, 10, "log")
        with pytest.raises(DomainError):
            GridSpec(0, 1, 1, "linear")


class TestIntRange:
    def test_explicit_end(self):
        assert IntRange(1, 4).resolve(None, 100) == [1, 2, 3, 4]

    def test_open_end_uses_default(self):
        assert IntRange(2).resolve(None, 5) == [2, 3, 4, 5]

    def test_override_extends_fixed_window(self):
        assert IntRange(1, 4).resolve(6, 100) == [1, 2, 3, 4, 5, 6]

    def test_exclusions(self):
        assert IntRange(1, 5, exclude=(2,)).resolve(None, 10) == [1, 3, 4, 5]


class TestRegistryContents:
    def test_contains_every_spec_id(self):
        reg = registry()
        for cid in SPEC_IDS:
            assert cid in reg, cid

    def test_contains_eq26(self):
        assert "EQ26_BAND" in registry()

    def test_one_case_per_id(self):
        reg = registry()
        assert len(set(reg)) == len(reg)

    def test_anchors_non_empty(self):
        assert all(case.anchor for case in registry().values())

    def test_empty_anchor_rejected(self):
        with pytest.raises(DomainError):
            ClaimCase(id="X", kind=Kind.MONOTONE, domain=IntRange(1),
                      strictness="strict", expressions=(), anchor="")

    def test_equation_coverage_complete(self):
        reg = registry()
        for eq in range(1, 28):
            entry = EQUATION_COVERAGE[eq]
            if isinstance(entry, str):
                assert len(entry) > 10  # an out-of-scope / definition note
            else:
                for cid in entry:
                    assert cid in reg

    def test_conjectures_flagged(self):
        reg = registry()
        for cid in ("EQ6_AQ_SIGNS", "CONJ_FA_SIGNS", "CONJ_CM_1_MINUS_G",
                    "Q_LCM_SCAN"):
            assert reg[cid].conjecture


SMALL = GridSpec(0.01, 200, 48, "log")


class TestCheckCase:
    def test_unknown_id(self):
        with pytest.raises(KeyError):
            checker.check_case("NOPE", CTX)

    def test_thm2_logconvex_small(self):
        r = checker.check_case("THM2_LOGCONVEX", CTX, n_max=1000)
        assert r.verdict is Verdict.VERIFIED

    def test_eq9_boundary_at_two(self):
        r = checker.check_case("EQ9_SHARP", CTX, n_max=100)
        assert r.verdict is Verdict.VERIFIED
        assert ("lower sharp constant a", 2) in r.boundary
        assert r.bits_used == CTX.max_bits

    def test_eq9_sharpness_flips(self):
        r = checker.check_case("EQ9_SHARP", CTX, n_max=100,
                               params={"a_shift": 1e-3})
        assert r.verdict is Verdict.COUNTEREXAMPLE
        assert r.witness == 2

    def test_eq18_vs_19_window_and_extension(self):
        ok = checker.check_case("EQ18_VS_19", CTX)
        assert ok.verdict is Verdict.VERIFIED
        extended = checker.check_case("EQ18_VS_19", CTX, n_max=10)
        assert extended.verdict is Verdict.COUNTEREXAMPLE
        assert extended.witness == 5

    def test_eq18_vs_19_witness_values(self):
        # (2/sqrt(pi))^5 vs sqrt(e)
        lhs = M.power(2 / M.sqrt(M.pi), 5)
        rhs = M.sqrt(M.e)
        assert str(lhs).startswith("1.8292")
        assert str(rhs).startswith("1.6487")
        assert lhs > rhs

    def test_eq18_boundary_at_one(self):
        r = checker.check_case("EQ18_BAND", CTX, n_max=30)
        assert r.verdict is Verdict.VERIFIED
        assert ("non-strict upper side", 1) in r.boundary

    def test_eq11_margin_attained_at_three(self):
        r = checker.check_case("EQ11_G_BAND", CTX)
        assert r.verdict is Verdict.VERIFIED
        assert abs(M.convert(r.witness) - 3) < M.mpf("1e-20")
        expected = 3 * (2 * M.ln(2) - M.ln(3)) * M.ln(3) / (2 * M.ln(2)) - M.mpf(2) / 3
        assert abs(M.convert(r.min_margin) - expected) < M.mpf("1e-30")
        assert str(expected).startswith("0.01728")

    def test_monotone_checked_two_ways_agree(self):
        r = checker.check_case("THM3_G_INC", CTX, grid=GridSpec(0.1, 50, 32, "log"))
        assert r.verdict is Verdict.VERIFIED
        assert not any("disagree" in n for n in r.notes)

    def test_grid_override_is_clipped(self):
        r = checker.check_case("EQ11_G_BAND", CTX, grid=GridSpec(0.01, 9, 16, "log"))
        assert r.verdict is Verdict.VERIFIED
        assert float(r.grid["start"]) == 3.0

    def test_singular_point_excluded_with_note(self):
        r = checker.check_case("THM1_F_INC_HIGH", CTX,
                               grid=GridSpec(0.5, 10, 16, "log"))
        assert r.verdict is Verdict.VERIFIED
        assert r.excluded and "singular" in r.excluded[0][1]

    def test_determinism_byte_level(self):
        from ballcert.reporting import render_json, run_header
        a = checker.check_case("EQ26_BAND", CTX, n_max=40)
        b = checker.check_case("EQ26_BAND", CTX, n_max=40)
        h = run_header(CTX, 40, None, ["EQ26_BAND"], "verify")
        assert render_json(h, [a]) == render_json(h, [b])


class TestScans:
    def test_scan_reports_per_order(self):
        grid = GridSpec(0.1, 50, 16, "log")
        reports = checker.scan_derivative_signs("AQ", 3, grid, CTX)
        assert len(reports) == 3
        assert all(r.verdict is Verdict.CONSISTENT_WITH for r in reports)

    def test_scan_fa_needs_base(self):
        with pytest.raises(DomainError):
            checker.scan_derivative_signs("F_a", 2, SMALL, CTX)

    def test_scan_order_ceiling(self):
        with pytest.raises(DomainError):
            checker.scan_derivative_signs("G", 9, SMALL, CTX)

    def test_scan_fa_with_base(self):
        grid = GridSpec(0.6, 50, 12, "log")
        reports = checker.scan_derivative_signs("F_a", 2, grid, CTX, a=2)
        assert all(r.verdict is Verdict.CONSISTENT_WITH for r in reports)

    def test_conjecture_case_vocabulary(self):
        r = checker.check_case("CONJ_CM_1_MINUS_G", CTX,
                               grid=GridSpec(0.05, 100, 24, "log"))
        assert r.verdict is Verdict.CONSISTENT_WITH

    def test_refutation_vocabulary(self):
        # G' > 0 fails when the pattern is negated; simulate via a scan case
        # on ln_Q with the wrong pattern: (-1)^(k-1) instead of (-1)^k
        from ballcert import ballfun as bf
        from ballcert.checker import _Aggregate, _grid_points
        case = ClaimCase(id="X", kind=Kind.DERIVATIVE_SIGNS,
                         domain=GridSpec(1, 10, 4, "log"), strictness="strict",
                         expressions=(), anchor="wrong-sign probe",
                         conjecture=True)
        agg = _Aggregate(case, CTX)
        for x in _grid_points(agg, case.domain, case, CTX):
            from ballcert.jets import derivative
            val = derivative(bf.jet_ln_Q(x, 1, CTX), 1)  # negative quantity
            agg.gap("order 1", x, val, True, lambda c2, x=x: val)
        rep = agg.report(case.domain.to_dict())
        assert rep.verdict is Verdict.REFUTED


class TestLimits:
    def test_extrapolate_eq4(self):
        value, rows = checker.extrapolate_limit("EQ4", CTX)
        target = M.exp(-M.mpf(1) / 2)
        assert abs(M.convert(value) - target) < M.mpf("1e-2")
        assert len(rows) >= 10

    def test_extrapolate_eq3(self):
        value, _ = checker.extrapolate_limit("EQ3", CTX)
        assert abs(M.convert(value) - M.mpf("0.5")) < M.mpf("1e-2")

    def test_extrapolate_eq13(self):
        value, _ = checker.extrapolate_limit("EQ13_upper", CTX)
        assert abs(M.convert(value) - 1) < M.mpf("1e-2")

    def test_unknown_sequence(self):
        with pytest.raises(DomainError):
            checker.extrapolate_limit("EQ5", CTX)

    def test_eq13_divergence_probe(self):
        r = checker.check_case("EQ13_LIMITS", CTX)
        assert r.verdict is Verdict.VERIFIED
        assert r.extras["divergence_verdict"] == "-inf"
        margins = [M.convert(v) for v in r.extras["margins_to_bound"]]
        assert all(b < a for a, b in zip(margins, margins[1:]))
        assert all(v >= 0 for v in margins)


class TestOpenProblem:
    def test_params_box(self):
        OpenProblemParams(a=3, b=3, lam=1, mu=1, alpha=2, beta=4)
        with pytest.raises(DomainError):
            OpenProblemParams(a=2.9, b=3, lam=1, mu=1, alpha=2, beta=4)
        with pytest.raises(DomainError):
            OpenProblemParams(a=3, b=3, lam=1.5, mu=1, alpha=2, beta=4)

    def test_search_requires_ten(self):
        with pytest.raises(DomainError):
            checker.search_open27(5, CTX)

    def test_feasible_instance(self):
        res = checker.verify_feasible_instance(CTX, n_max=60)
        assert res["algebraic_identity"] and res["matches_band_case"]

    def test_search_results(self):
        res = checker.search_open27(120, CTX)
        emp = res["empirical"]
        # every empirical parameter satisfies the constraint box
        OpenProblemParams(a=float(emp["a"]), b=float(emp["b"]),
                          lam=float(emp["lam"]), mu=float(emp["mu"]),
                          alpha=float(emp["alpha"]), beta=float(emp["beta"]))
        # mu binds at the smallest dimension
        assert res["binding"]["mu"][1] == 1
        # bisection matches the closed-form frontier
        for key in ("a", "lam", "alpha", "mu", "b", "beta"):
            frontier_val = M.convert(res["binding"][key][0])
            assert abs(M.convert(emp[key]) - frontier_val) < M.mpf("1e-12")

    def test_search_case_in_registry(self):
        r = checker.check_case("EQ27_OPEN", CTX, n_max=50)
        assert r.verdict is Verdict.CONSISTENT_WITH
        assert r.extras["feasible_instance"]["algebraic_identity"]
