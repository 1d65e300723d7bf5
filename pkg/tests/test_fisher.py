import math

import numpy as np
import pytest

from unruh_teleport import (
    ConsistencyError,
    DomainError,
    InputState,
    bloch_partial,
    bloch_teleported,
    fisher,
    fisher_from_bloch,
    mode_params,
    preset_dyadic,
)
from unruh_teleport.sampling import sample_dyadic, sample_input, sample_unruh

PHI_PLUS = preset_dyadic("bell-phi-plus")
SINGLET = preset_dyadic("bell-psi-minus")
X_STATE = preset_dyadic("x-state", c11=-0.9, c22=-0.8, c33=-0.7)
INERTIAL = mode_params(0.0, "wsma")


def input_bloch(theta, phi):
    return np.array(
        [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
    )


class TestBlochTeleported:
    def test_inertial_bell_channel_returns_input_bloch(self):
        rng = np.random.default_rng(31)
        for _ in range(30):
            state = sample_input(rng)
            s = bloch_teleported(state, PHI_PLUS, INERTIAL, "normalized")
            assert np.max(np.abs(s - input_bloch(state.theta, state.phi))) < 1e-12

    def test_as_published_is_quarter_of_normalized(self):
        rng = np.random.default_rng(32)
        for _ in range(30):
            state, d, u = sample_input(rng), sample_dyadic(rng), sample_unruh(rng)
            s_n = bloch_teleported(state, d, u, "normalized")
            s_p = bloch_teleported(state, d, u, "as-published")
            assert np.max(np.abs(s_p - s_n / 4.0)) < 1e-13

    def test_pole_has_no_transverse_components(self):
        rng = np.random.default_rng(33)
        for _ in range(10):
            d, u = sample_dyadic(rng), sample_unruh(rng)
            for mode in ("normalized", "as-published"):
                s = bloch_teleported(InputState(0.0, 2.2), d, u, mode)
                assert s[0] == 0.0 and s[1] == 0.0

    def test_as_published_norm_bound(self):
        rng = np.random.default_rng(34)
        for _ in range(100):
            state, d, u = sample_input(rng), sample_dyadic(rng), sample_unruh(rng)
            s = bloch_teleported(state, d, u, "as-published")
            assert np.linalg.norm(s) <= 0.25 + 1e-12

    def test_unknown_mode(self):
        with pytest.raises(DomainError):
            bloch_teleported(InputState(1.0, 1.0), PHI_PLUS, INERTIAL, "raw")


class TestFisherFromBloch:
    def test_center_unit_speed(self):
        result = fisher_from_bloch(np.zeros(3), np.array([1.0, 0.0, 0.0]))
        assert result.value == 1.0
        assert not result.pure_branch

    def test_mixed_radial_term(self):
        result = fisher_from_bloch(np.array([0.5, 0.0, 0.0]), np.array([1.0, 0.0, 0.0]))
        assert abs(result.value - 4.0 / 3.0) < 1e-15

    def test_pure_shell_tangent(self):
        result = fisher_from_bloch(np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]))
        assert result.value == 1.0
        assert result.pure_branch

    def test_overlong_vector_rejected(self):
        with pytest.raises(DomainError):
            fisher_from_bloch(np.array([1.1, 0.0, 0.0]), np.ones(3))

    def test_reflection_invariance(self):
        rng = np.random.default_rng(35)
        flip = np.array([1.0, -1.0, 1.0])
        for _ in range(200):
            s = rng.uniform(-0.5, 0.5, 3)
            ds = rng.uniform(-2.0, 2.0, 3)
            a = fisher_from_bloch(s, ds).value
            b = fisher_from_bloch(s * flip, ds * flip).value
            assert a == b


class TestBlochPartial:
    def test_inertial_bell_theta_partial(self):
        rng = np.random.default_rng(36)
        for _ in range(20):
            state = sample_input(rng)
            ds = bloch_partial(state, PHI_PLUS, INERTIAL, "theta", "normalized", "analytic")
            ct, st = math.cos(state.theta), math.sin(state.theta)
            expected = np.array(
                [ct * math.cos(state.phi), ct * math.sin(state.phi), -st]
            )
            assert np.max(np.abs(ds - expected)) < 1e-12

    def test_phi_partial_vanishes_at_pole(self):
        rng = np.random.default_rng(37)
        for _ in range(10):
            d, u = sample_dyadic(rng), sample_unruh(rng)
            state = InputState(0.0, 1.0)
            for method in ("analytic", "fd"):
                ds = bloch_partial(state, d, u, "phi", "normalized", method)
                assert np.array_equal(ds, np.zeros(3))

    def test_analytic_matches_central_difference(self):
        rng = np.random.default_rng(38)
        checked = 0
        while checked < 150:
            state, d, u = sample_input(rng), sample_dyadic(rng), sample_unruh(rng)
            for mode in ("normalized", "as-published"):
                for param in ("theta", "phi", "r"):
                    analytic = bloch_partial(state, d, u, param, mode, "analytic")
                    scale = np.linalg.norm(analytic)
                    if scale <= 1e-3:
                        continue
                    numeric = bloch_partial(state, d, u, param, mode, "fd")
                    assert np.linalg.norm(analytic - numeric) / scale < 1e-6
                    checked += 1

    def test_one_sided_stencils_at_r_endpoints(self):
        rng = np.random.default_rng(39)
        for r in (0.0, 1e-7, math.pi / 4 - 1e-7, math.pi / 4):
            for _ in range(10):
                state, d = sample_input(rng), sample_dyadic(rng)
                u = mode_params(r, "bsma")
                analytic = bloch_partial(state, d, u, "r", "normalized", "analytic")
                numeric = bloch_partial(state, d, u, "r", "normalized", "fd")
                scale = max(np.linalg.norm(analytic), 1e-3)
                assert np.linalg.norm(analytic - numeric) / scale < 1e-6

    def test_unknown_method(self):
        with pytest.raises(DomainError, match="method"):
            bloch_partial(InputState(1.0, 1.0), PHI_PLUS, INERTIAL, "theta", method="spectral")

    def test_unknown_param(self):
        with pytest.raises(DomainError):
            bloch_partial(InputState(1.0, 1.0), PHI_PLUS, INERTIAL, "lambda")


class TestFisherAnchors:
    def test_weight_information_is_cos_squared_r(self):
        # Includes both poles, where the branch state is pure.
        for theta in np.linspace(0.0, math.pi, 9):
            for phi in np.linspace(0.0, 2.0 * math.pi, 9):
                for r in np.linspace(0.0, math.pi / 4, 9):
                    result = fisher(
                        InputState(float(theta), float(phi)),
                        PHI_PLUS,
                        mode_params(float(r), "wsma"),
                        "theta",
                    )
                    assert abs(result.value - math.cos(float(r)) ** 2) < 1e-9

    def test_inertial_values(self):
        for theta in np.linspace(0.0, math.pi, 21):
            state = InputState(float(theta), 0.77)
            f_theta = fisher(state, PHI_PLUS, INERTIAL, "theta")
            f_phi = fisher(state, PHI_PLUS, INERTIAL, "phi")
            assert abs(f_theta.value - 1.0) < 1e-9
            assert f_theta.pure_branch
            assert abs(f_phi.value - math.sin(float(theta)) ** 2) < 1e-9

    def test_acceleration_information_at_north_pole(self):
        # F_r = 4 for every r > 0; at r = 0 exactly the branch state is pure
        # and the derivative vanishes, so the constant only holds away from 0.
        for r in np.linspace(0.0, math.pi / 4, 22)[1:]:
            result = fisher(InputState(0.0, 0.4), PHI_PLUS, mode_params(float(r), "wsma"), "r")
            assert abs(result.value - 4.0) < 1e-9

    def test_acceleration_information_vanishes_at_inertial_pure_point(self):
        result = fisher(InputState(0.0, 0.4), PHI_PLUS, INERTIAL, "r")
        assert result.pure_branch
        assert result.value == 0.0

    def test_mode_scaling_sixteenth_at_r0(self):
        for d in (PHI_PLUS, SINGLET):
            for theta, phi in ((0.3, 0.7), (1.2, 2.5), (math.pi / 2, math.pi / 4)):
                state = InputState(theta, phi)
                for param in ("theta", "phi", "r"):
                    f_n = fisher(state, d, INERTIAL, param, mode="normalized").value
                    f_p = fisher(state, d, INERTIAL, param, mode="as-published").value
                    assert abs(f_p - f_n / 16.0) < 1e-9


class TestFisherProperties:
    def test_non_negative_and_finite(self):
        rng = np.random.default_rng(41)
        for _ in range(150):
            state, d, u = sample_input(rng), sample_dyadic(rng), sample_unruh(rng)
            for mode in ("normalized", "as-published"):
                for param in ("theta", "phi", "r"):
                    result = fisher(state, d, u, param, mode=mode)
                    assert math.isfinite(result.value)
                    assert result.value >= 0.0

    def test_continuity_toward_pure_shell(self):
        result = fisher(InputState(1.0, 0.3), PHI_PLUS, mode_params(1e-4, "wsma"), "theta")
        assert not result.pure_branch
        assert abs(result.value - 1.0) < 1e-3

    def test_theta_reflection_for_inertial_limit_channel(self):
        # Exact for the (1,-1,1) channel in the single-mode limit, where the
        # weight information is theta-independent.
        u = mode_params(math.pi / 8, "wsma")
        for theta in np.linspace(0.1, math.pi / 2, 7):
            for phi in np.linspace(0.0, 2.0 * math.pi, 5):
                f1 = fisher(InputState(float(theta), float(phi)), PHI_PLUS, u, "theta").value
                f2 = fisher(
                    InputState(float(math.pi - theta), float(phi)), PHI_PLUS, u, "theta"
                ).value
                assert abs(f1 - f2) < 1e-9

    def test_phi_reflection_symmetry(self):
        # Real mode weights make s_x even and s_y odd in phi, so the Fisher
        # value is invariant under phi -> 2*pi - phi.
        u = mode_params(math.pi / 8, "wsma")
        for d in (PHI_PLUS, X_STATE):
            for theta in np.linspace(0.0, math.pi, 7):
                for phi in np.linspace(0.1, math.pi, 7):
                    f1 = fisher(InputState(float(theta), float(phi)), d, u, "theta").value
                    f2 = fisher(
                        InputState(float(theta), float(2.0 * math.pi - phi)), d, u, "theta"
                    ).value
                    assert abs(f1 - f2) < 1e-9

    def test_theta_reflection_is_not_general(self):
        # Regression record: the theta -> pi - theta reflection does NOT hold
        # once acceleration mixes the populations asymmetrically. Pinned
        # counterexample for the partially entangled channel.
        u = mode_params(math.pi / 8, "wsma")
        f1 = fisher(InputState(math.pi / 3, math.pi / 4), X_STATE, u, "theta").value
        f2 = fisher(InputState(2.0 * math.pi / 3, math.pi / 4), X_STATE, u, "theta").value
        assert abs(f1 - f2) > 0.05

    def test_fd_method_records_step(self):
        result = fisher(
            InputState(1.0, 1.0), PHI_PLUS, mode_params(0.1, "wsma"), "theta", method="fd"
        )
        assert result.method == "fd"
        assert result.fd_step == 1e-5
        analytic = fisher(InputState(1.0, 1.0), PHI_PLUS, mode_params(0.1, "wsma"), "theta")
        assert analytic.fd_step is None
        assert abs(result.value - analytic.value) < 1e-6
