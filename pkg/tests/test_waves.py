"""Wave-fan construction, profile evaluation, and jump-condition residuals."""

import numpy as np
import pytest

from chapgas import (
    DeltaShock,
    GasParams,
    NegativeTime,
    OutsideFan,
    PressurelessNotApplicable,
    PrimState,
    RarefactionContact,
    RegionMismatch,
    SampleKind,
    ShockContact,
    SingleContact,
    TwoContactsVacuum,
    evaluate,
    intermediate_state,
    problem_scale,
    rarefaction_state,
    rh_residual,
    riemann_invariants,
    solve,
    wave_paths,
    wave_positions,
)
from helpers import draw_region_problem, make_problem, rh_scales

EXAMPLE_B = make_problem(1.0, 1.0, 2.0, 0.8, a=0.25, alpha=0.5)


class TestIntermediateState:
    def test_example_b_star(self):
        star = intermediate_state(EXAMPLE_B)
        assert star.rho == pytest.approx(25.0, rel=1e-14)
        assert star.v == 0.8

    def test_region_i_star(self):
        p = make_problem(1.0, 1.0, 1.0, 2.0, a=0.25, alpha=0.5)
        star = intermediate_state(p)
        assert star.rho == pytest.approx(0.04, rel=1e-14)
        assert star.v == 2.0

    def test_rejects_region_iii(self):
        with pytest.raises(RegionMismatch):
            intermediate_state(make_problem(1.0, 1.0, 1.0, -1.0, a=0.25))

    def test_invariant_match_sweep(self):
        rng = np.random.default_rng(5)
        for region in ("I", "II"):
            for alpha in (0.3, 0.5, 0.8):
                for _ in range(40):
                    p = draw_region_problem(rng, region, alpha, 0.0)
                    star = intermediate_state(p)
                    w_l, _ = riemann_invariants(p.left, p.params)
                    w_s, _ = riemann_invariants(star, p.params)
                    assert abs(w_s - w_l) <= 1e-12 * max(1.0, abs(w_l), problem_scale(p))
                    assert star.v == p.right.v


class TestRarefactionState:
    def test_contract_example(self):
        # interior state on the contract's worked fan
        st = rarefaction_state(0.95, 1.0, PrimState(1.0, 1.0), GasParams(0.25, 0.5))
        assert st.rho == pytest.approx(0.390625, rel=1e-14)
        assert st.v == pytest.approx(1.15, rel=1e-14)

    def test_head_recovers_left_state(self):
        g = GasParams(1.0, 0.5)
        left = PrimState(1.0, 0.0)
        head = left.v - g.alpha * g.chap(left.rho)
        st = rarefaction_state(head, 1.0, left, g)
        assert st.rho == pytest.approx(left.rho, rel=1e-13)
        assert st.v == pytest.approx(left.v, abs=1e-13)

    def test_outside_fan_raises(self):
        g = GasParams(1.0, 0.5)
        with pytest.raises(OutsideFan):
            rarefaction_state(-0.5001, 1.0, PrimState(1.0, 0.0), g)

    def test_pressureless_rejected(self):
        with pytest.raises(PressurelessNotApplicable):
            rarefaction_state(0.0, 1.0, PrimState(1.0, 0.0), GasParams(0.0, 0.5))

    def test_lambda1_equals_xi_inside(self):
        # the similarity variable is the first characteristic speed
        from chapgas import eigenvalues

        g = GasParams(0.7, 0.3, beta=1.5)
        left = PrimState(2.0, -0.4)
        t = 2.0
        head = left.v - g.alpha * g.chap(left.rho) + g.beta * t
        for xi in np.linspace(head, head + 1.2, 7):
            st = rarefaction_state(float(xi), t, left, g)
            lam1, _ = eigenvalues(st, g, t)
            assert lam1 == pytest.approx(xi, rel=1e-12, abs=1e-12)


class TestSolveDispatch:
    def test_vacuum_fan(self):
        fan = solve(make_problem(1.0, -1.0, 1.0, 1.0))
        assert isinstance(fan, TwoContactsVacuum)
        assert fan.x_left.c == -1.0
        assert fan.x_right.c == 1.0

    def test_single_contact_pressureless(self):
        fan = solve(make_problem(1.0, 0.5, 2.0, 0.5))
        assert isinstance(fan, SingleContact)
        assert fan.x_c.c == 0.5

    def test_single_contact_on_j(self):
        fan = solve(make_problem(1.0, 1.0, 3.0, 1.0, a=0.5))
        assert isinstance(fan, SingleContact)
        assert fan.x_c.c == 1.0

    def test_pressureless_compression_is_delta(self):
        fan = solve(make_problem(1.0, 1.0, 1.0, 0.0))
        assert isinstance(fan, DeltaShock)

    def test_region_i_fan(self):
        fan = solve(make_problem(1.0, 0.0, 0.5, 1.2, a=1.0))
        assert isinstance(fan, RarefactionContact)
        assert fan.x1m.c == pytest.approx(-0.5, abs=1e-15)
        assert fan.x1p.c == pytest.approx(0.1, rel=1e-12, abs=1e-13)
        assert fan.x2.c == 1.2

    def test_example_b_fan_positions(self):
        fan = solve(EXAMPLE_B)
        assert isinstance(fan, ShockContact)
        assert fan.x1.c == pytest.approx(19.0 / 24.0, rel=1e-12)
        assert fan.x2.c == 0.8

    def test_region_iii_fan(self):
        fan = solve(make_problem(1.0, 1.0, 1.0, -1.0, a=0.25))
        assert isinstance(fan, DeltaShock)
        assert fan.delta.v_delta == pytest.approx(-0.125, abs=1e-15)
        assert fan.delta.w0 == pytest.approx(2.0, rel=1e-15)


class TestWavePaths:
    @pytest.mark.parametrize(
        "p,labels",
        [
            (make_problem(1.0, -1.0, 1.0, 1.0), ["J1", "J2"]),
            (make_problem(1.0, 0.5, 2.0, 0.5), ["J"]),
            (make_problem(1.0, 0.0, 0.5, 1.2, a=1.0), ["R1.head", "R1.tail", "J"]),
            (EXAMPLE_B, ["S1", "J"]),
            (make_problem(1.0, 1.0, 1.0, -1.0, a=0.25), ["Sdelta"]),
        ],
    )
    def test_labels(self, p, labels):
        assert [label for label, _ in wave_paths(solve(p))] == labels

    def test_positions_are_ordered(self):
        rng = np.random.default_rng(17)
        for region in ("I", "II"):
            for _ in range(30):
                p = draw_region_problem(rng, region, 0.5, rng.choice([-1.0, 0.0, 2.0]))
                for t in (0.5, 1.0, 4.0):
                    pos = [x for _, x in wave_positions(solve(p), t)]
                    assert pos == sorted(pos)


class TestRhResidual:
    def test_zero_across_fan_waves(self):
        rng = np.random.default_rng(29)
        for region in ("I", "II"):
            for alpha in (0.3, 0.5, 0.8):
                for beta in (-1.0, 0.0, 2.0):
                    for _ in range(15):
                        p = draw_region_problem(rng, region, alpha, beta)
                        fan = solve(p)
                        s = problem_scale(p)
                        pieces = (
                            [(p.left, fan.star, fan.x1), (fan.star, p.right, fan.x2)]
                            if isinstance(fan, ShockContact)
                            else [(fan.star, p.right, fan.x2)]
                        )
                        for left, right, path in pieces:
                            for t in (0.0, 1.0, 10.0):
                                e1, e2 = rh_residual(left, right, path, p.params, t)
                                s1, s2 = rh_scales(left, right, p.params, t)
                                assert abs(e1) <= 1e-12 * max(s1, s**2)
                                assert abs(e2) <= 1e-12 * max(s2, s**3)

    def test_nonzero_for_wrong_speed(self):
        from chapgas import ParabolicPath

        p = EXAMPLE_B
        fan = solve(p)
        bad = ParabolicPath(c=fan.x1.c + 0.1, beta=0.0)
        e1, _ = rh_residual(p.left, fan.star, bad, p.params, 0.0)
        assert abs(e1) > 1e-3

    def test_lax_inequalities_region_ii(self):
        from chapgas import eigenvalues

        rng = np.random.default_rng(41)
        for _ in range(60):
            p = draw_region_problem(rng, "II", 0.5, 0.0)
            fan = solve(p)
            lam1_l, _ = eigenvalues(p.left, p.params)
            lam1_s, lam2_s = eigenvalues(fan.star, p.params)
            s = 1e-12 * problem_scale(p)
            assert lam1_s - s <= fan.x1.c <= lam1_l + s
            assert fan.x1.c <= lam2_s + s


class TestEvaluate:
    def test_rejects_nonpositive_time(self):
        fan = solve(EXAMPLE_B)
        with pytest.raises(NegativeTime):
            evaluate(fan, 0.0, 0.0)
        with pytest.raises(NegativeTime):
            evaluate(fan, 0.0, -1.0)

    def test_piecewise_values_region_ii(self):
        fan = solve(EXAMPLE_B)
        t = 1.0
        left = evaluate(fan, 0.0, t)
        star = evaluate(fan, 0.796, t)
        right = evaluate(fan, 1.0, t)
        assert left.kind == SampleKind.REGULAR and left.rho == 1.0 and left.u == 1.0
        assert star.rho == pytest.approx(25.0, rel=1e-12) and star.u == 0.8
        assert right.rho == 2.0 and right.u == 0.8

    def test_rarefaction_interior_contract_point(self):
        p = make_problem(1.0, 1.0, 0.04, 2.0, a=0.25, alpha=0.5)
        fan = solve(p)
        assert isinstance(fan, RarefactionContact)
        s = evaluate(fan, 0.95, 1.0)
        assert s.rho == pytest.approx(0.390625, rel=1e-12)
        assert s.u == pytest.approx(1.15, rel=1e-12)

    def test_vacuum_interior_and_outside(self):
        fan = solve(make_problem(2.0, -1.0, 1.0, 1.0))
        inside = evaluate(fan, 0.0, 1.0)
        assert inside.kind == SampleKind.VACUUM
        assert inside.rho is None
        outside = evaluate(fan, -1.5, 1.0)
        assert outside.kind == SampleKind.REGULAR and outside.rho == 2.0

    def test_on_delta_sample(self):
        p = make_problem(1.0, 1.0, 1.0, -1.0, a=0.25, beta=2.0)
        fan = solve(p)
        t = 1.5
        x = fan.delta.position(t)
        s = evaluate(fan, x, t)
        assert s.kind == SampleKind.ON_DELTA
        assert s.weight == pytest.approx(fan.delta.w0 * t, rel=1e-15)
        assert s.u_delta == pytest.approx(fan.delta.v_delta + 2.0 * t, rel=1e-15)
        off = evaluate(fan, x + 1.0, t)
        assert off.kind == SampleKind.REGULAR

    def test_physical_velocity_includes_drift(self):
        p = make_problem(1.0, 1.0, 2.0, 0.8, a=0.25, beta=2.0)
        fan = solve(p)
        far_left = evaluate(fan, -30.0, 1.0)
        assert far_left.u == pytest.approx(1.0 + 2.0, rel=1e-15)


class TestSelfSimilarity:
    def test_profiles_scale_with_time_at_beta_zero(self):
        rng = np.random.default_rng(3)
        for region in ("I", "II"):
            for _ in range(20):
                p = draw_region_problem(rng, region, 0.5, 0.0)
                fan = solve(p)
                for xi in (-1.7, -0.3, 0.2, 0.9, 2.4):
                    a = evaluate(fan, xi * 1.0, 1.0)
                    b = evaluate(fan, xi * 3.0, 3.0)
                    assert a.kind == b.kind == SampleKind.REGULAR
                    assert a.rho == pytest.approx(b.rho, rel=1e-12, abs=1e-300)
                    assert a.u == pytest.approx(b.u, rel=1e-12, abs=1e-12)


class TestFrameShift:
    """With friction, the fan is the frictionless fan in a drifting frame."""

    def test_coefficients_exactly_equal(self):
        rng = np.random.default_rng(13)
        for region in ("I", "II", "III"):
            for _ in range(25):
                p0 = draw_region_problem(rng, region, 0.5, 0.0)
                p2 = make_problem(
                    p0.left.rho, p0.left.v, p0.right.rho, p0.right.v,
                    p0.params.A, p0.params.alpha, 2.0,
                )
                f0, f2 = solve(p0), solve(p2)
                assert type(f0) is type(f2)
                for (l0, path0), (l2, path2) in zip(wave_paths(f0), wave_paths(f2)):
                    assert l0 == l2
                    assert path0.c == path2.c
                    assert path0.beta == 0.0 and path2.beta == 2.0
                if isinstance(f0, ShockContact):
                    assert f0.star == f2.star
                if isinstance(f0, DeltaShock):
                    assert f0.delta.v_delta == f2.delta.v_delta
                    assert f0.delta.w0 == f2.delta.w0

    def test_profile_shifts_by_half_beta_t_squared(self):
        p0 = make_problem(1.0, 0.0, 0.5, 1.2, a=1.0, beta=0.0)
        p2 = make_problem(1.0, 0.0, 0.5, 1.2, a=1.0, beta=2.0)
        f0, f2 = solve(p0), solve(p2)
        t = 1.5
        shift = 0.5 * 2.0 * t * t
        for x in (-1.0, -0.2, 0.05, 0.4, 2.0):
            a = evaluate(f0, x, t)
            b = evaluate(f2, x + shift, t)
            assert a.rho == pytest.approx(b.rho, rel=1e-12)
            assert b.u == pytest.approx(a.u + 2.0 * t, rel=1e-12, abs=1e-12)


class TestSeamContinuity:
    def test_region_i_to_ii_seam(self):
        # nudging the data across the J boundary barely moves the fan
        base = dict(rho_l=1.0, u_l=1.0, rho_r=3.0, a=0.5, alpha=0.5)
        eps = 1e-9
        fan_hi = solve(make_problem(base["rho_l"], base["u_l"], base["rho_r"], 1.0 + eps, a=0.5))
        fan_lo = solve(make_problem(base["rho_l"], base["u_l"], base["rho_r"], 1.0 - eps, a=0.5))
        assert isinstance(fan_hi, RarefactionContact)
        assert isinstance(fan_lo, ShockContact)
        assert fan_hi.star.rho == pytest.approx(fan_lo.star.rho, rel=1e-6)
        assert fan_hi.x2.c == pytest.approx(fan_lo.x2.c, abs=1e-8)
