"""
Tests for 1D mirrors, Fresnel amplitudes and cavity matrices
"""

import cmath
import math

import numpy as np
import pytest

from core.constants import C
from core.errors import DomainError, ZeroFrequencyError
from materials.dielectric import DrudeModel, PerfectConductor, TabulatedModel, Vacuum
from materials.optical_data import OpticalDataTable
from scattering.cavity import (CavityLoop, airy_g, cavity_s_matrix, det_identity_check, loop_f,
                               loop_log, mirror_s_matrix, q_matrix, resonance_matrix)
from scattering.fresnel import (Mode3D, Polarization, fresnel_for_mode, fresnel_from_epsilon,
                                fresnel_imag_axis, fresnel_zero_frequency)
from scattering.mirror1d import Mirror1D, MirrorKind, mirror1d_amplitudes

L = 1e-6
OMEGA_MIRROR = 5.0 * C / L


def _naive(eps, p, k, xi):
    q2 = (xi / C) ** 2
    kappa = math.sqrt(k * k + q2)
    K = math.sqrt(k * k + eps * q2)
    if p is Polarization.TE:
        return (kappa - K) / (kappa + K)
    return (eps * kappa - K) / (eps * kappa + K)


class TestMirror1D:
    def test_perfect(self):
        mirror = Mirror1D.perfect()
        assert mirror.reflection_imag_axis(1e15) == -1.0
        assert mirror.penetration_length == 0.0
        assert mirror1d_amplitudes(mirror, 1e15) == (-1.0, 0.0)

    def test_transparent(self):
        mirror = Mirror1D.transparent()
        assert mirror.reflection_imag_axis(1e15) == 0.0
        assert mirror.penetration_length == math.inf

    def test_impedance_mismatch(self):
        mirror = Mirror1D.impedance_mismatch(OMEGA_MIRROR)
        assert mirror.kind is MirrorKind.IMPEDANCE_MISMATCH
        assert mirror.reflection_imag_axis(0.0) == -1.0
        assert mirror.reflection_imag_axis(OMEGA_MIRROR) == pytest.approx(-0.5)
        assert mirror.penetration_length == pytest.approx(L / 5.0)

    @pytest.mark.parametrize("omega", [1e13, 1e15, 1e17])
    def test_amplitudes_are_unitary(self, omega):
        r, t = mirror1d_amplitudes(Mirror1D.impedance_mismatch(OMEGA_MIRROR), omega)
        assert abs(r) ** 2 + abs(t) ** 2 == pytest.approx(1.0, rel=1e-14)
        assert (r * t.conjugate() + r.conjugate() * t) == pytest.approx(0.0, abs=1e-14)

    def test_upper_half_plane_only(self):
        with pytest.raises(DomainError):
            mirror1d_amplitudes(Mirror1D.perfect(), 1e15 - 1e3j)

    @pytest.mark.parametrize("kind,Omega", [
        (MirrorKind.IMPEDANCE_MISMATCH, None),
        (MirrorKind.IMPEDANCE_MISMATCH, -1.0),
        (MirrorKind.PERFECT, 1.0),
    ])
    def test_invalid_mirrors(self, kind, Omega):
        with pytest.raises(DomainError):
            Mirror1D(kind, Omega)


class TestFresnel:
    def test_perfect_mirror(self):
        assert fresnel_imag_axis(PerfectConductor(), Polarization.TE, 1e6, 1e14) == -1.0
        assert fresnel_imag_axis(PerfectConductor(), Polarization.TM, 1e6, 1e14) == 1.0

    def test_vacuum_does_not_reflect(self):
        for p in Polarization:
            assert fresnel_imag_axis(Vacuum(), p, 1e6, 1e14) == 0.0

    @pytest.mark.parametrize("eps", [1.5, 10.0, 1e4])
    @pytest.mark.parametrize("k", [0.0, 1e5, 1e7])
    def test_matches_textbook_form(self, eps, k):
        for p in Polarization:
            assert fresnel_from_epsilon(eps, p, k, 1e15) == pytest.approx(
                _naive(eps, p, k, 1e15), rel=1e-12, abs=1e-15)

    def test_dilute_limit_keeps_relative_accuracy(self):
        eps = 1.0 + 1e-12
        r = fresnel_from_epsilon(eps, Polarization.TE, 0.0, 1e15)
        # at normal incidence r_TE = -(eps - 1)/4 to first order
        assert r == pytest.approx(-(eps - 1.0) / 4.0, rel=1e-6)

    def test_bounds_and_signs(self, drude):
        for xi in (1e11, 1e14, 1e17):
            for k in (0.0, 1e5, 1e8):
                te = fresnel_imag_axis(drude, Polarization.TE, k, xi)
                tm = fresnel_imag_axis(drude, Polarization.TM, k, xi)
                assert -1.0 <= te <= 0.0
                assert 0.0 <= tm <= 1.0

    def test_zero_frequency_needs_its_own_function(self, drude):
        with pytest.raises(ZeroFrequencyError):
            fresnel_imag_axis(drude, Polarization.TE, 1e6, 0.0)

    def test_zero_frequency_limits(self, drude, plasma):
        assert fresnel_zero_frequency(drude, Polarization.TE, 1e6) == 0.0
        assert fresnel_zero_frequency(drude, Polarization.TM, 1e6) == 1.0
        assert fresnel_zero_frequency(plasma, Polarization.TM, 1e6) == 1.0
        kp = plasma.plasma_wavenumber
        K = math.hypot(1e6, kp)
        assert fresnel_zero_frequency(plasma, Polarization.TE, 1e6) == pytest.approx(
            (1e6 - K) / (1e6 + K), rel=1e-12)

    def test_dielectric_zero_frequency(self):
        omega = np.geomspace(1e14, 1e16, 20)
        model = TabulatedModel(OpticalDataTable(omega=omega, eps_imag=np.full(20, 0.5)))
        eps0 = model.epsilon(1e10)
        assert fresnel_zero_frequency(model, Polarization.TE, 1e6) == 0.0
        assert fresnel_zero_frequency(model, Polarization.TM, 1e6) == pytest.approx(
            (eps0 - 1.0) / (eps0 + 1.0), rel=1e-6)

    @pytest.mark.parametrize("k", [1e4, 1e5, 1e6, 1e7, 1e8])
    def test_drude_tm_is_continuous(self, drude, k):
        xi = 1e-6 * drude.gamma
        assert fresnel_imag_axis(drude, Polarization.TM, k, xi) == pytest.approx(
            fresnel_zero_frequency(drude, Polarization.TM, k), abs=1e-6)

    @pytest.mark.parametrize("k", [1e7, 3e7, 1e8])
    def test_drude_te_is_continuous_at_large_k(self, drude, k):
        xi = 1e-6 * drude.gamma
        assert fresnel_imag_axis(drude, Polarization.TE, k, xi) == pytest.approx(
            fresnel_zero_frequency(drude, Polarization.TE, k), abs=1e-5)

    @pytest.mark.parametrize("k", [1e5, 1e6, 1e7, 1e8])
    def test_plasma_te_is_continuous(self, plasma, k):
        assert fresnel_imag_axis(plasma, Polarization.TE, k, 1e6) == pytest.approx(
            fresnel_zero_frequency(plasma, Polarization.TE, k), rel=1e-6)

    def test_mode_dispatch(self, drude):
        assert fresnel_for_mode(drude, Mode3D(1e6, 0.0, Polarization.TM)) == 1.0
        mode = Mode3D(1e6, 1e14, Polarization.TE)
        assert fresnel_for_mode(drude, mode) == fresnel_imag_axis(drude, Polarization.TE,
                                                                  1e6, 1e14)
        assert mode.kappa == pytest.approx(math.hypot(1e6, 1e14 / C))

    def test_lossless_drude_zero_frequency_is_plasma(self, plasma):
        lossless = DrudeModel(omega_p=plasma.omega_p, gamma=0.0)
        assert fresnel_zero_frequency(lossless, Polarization.TE, 1e6) == \
            fresnel_zero_frequency(plasma, Polarization.TE, 1e6)


class TestLoopFunctions:
    def test_matches_direct_form(self):
        r, kappa = 0.5, 1e6
        x = 2.0 * kappa * L
        assert loop_f(r, kappa, L) == pytest.approx(r * math.exp(-x) / (1.0 - r * math.exp(-x)),
                                                    rel=1e-14)

    def test_perfect_mirrors_at_small_round_trip(self):
        x = 1e-8
        assert loop_f(1.0, x / (2.0 * L), L) == pytest.approx(1.0 / x, rel=1e-7)
        assert loop_log(1.0, 1e-10) == pytest.approx(math.log(1e-10), rel=1e-9)

    def test_large_round_trip_vanishes(self):
        assert loop_f(1.0, 1e12, L) == 0.0
        assert loop_log(1.0, 1e6) == 0.0

    def test_gain_is_rejected(self):
        with pytest.raises(DomainError):
            loop_f(1.5, 1e6, L)
        with pytest.raises(DomainError):
            CavityLoop(1.5, 1e6, L)

    def test_cavity_loop(self):
        loop = CavityLoop(0.25, 1e6, L)
        assert loop.x == pytest.approx(2.0)
        assert loop.log_denominator == pytest.approx(math.log1p(-0.25 * math.exp(-2.0)))
        assert loop.f == pytest.approx(loop_f(0.25, 1e6, L))


class TestAiry:
    def test_no_reflection(self):
        assert airy_g(0.0, -0.9, 1e15, L) == pytest.approx(1.0)

    def test_resonance_and_antiresonance(self):
        # r1 r2 = 0.81; resonance when 2 omega L / c is a multiple of 2 pi
        resonant = airy_g(-0.9, -0.9, math.pi * C / L, L)
        assert resonant == pytest.approx((1.0 - 0.81 ** 2) / 0.19 ** 2, rel=1e-10)
        anti = airy_g(-0.9, -0.9, 0.5 * math.pi * C / L, L)
        assert anti == pytest.approx((1.0 - 0.81 ** 2) / 1.81 ** 2, rel=1e-10)

    def test_mean_over_a_period_is_one(self):
        n = 1000
        omegas = [math.pi * C / L * i / n for i in range(n)]
        mean = sum(airy_g(-0.9, -0.9, w, L) for w in omegas) / n
        assert mean == pytest.approx(1.0, rel=1e-10)

    def test_gain_and_negative_frequency(self):
        with pytest.raises(DomainError):
            airy_g(1.1, 1.0, 1e15, L)
        with pytest.raises(DomainError):
            airy_g(0.5, 0.5, -1.0, L)


class TestCavityMatrices:
    mirrors = (Mirror1D.impedance_mismatch(OMEGA_MIRROR),
               Mirror1D.impedance_mismatch(3.0 * OMEGA_MIRROR))

    @pytest.mark.parametrize("omega", [0.3 * C / L, 2.0 * C / L, 7.5 * C / L])
    def test_mirror_matrix_is_unitary(self, omega):
        S = mirror_s_matrix(Mirror1D.impedance_mismatch(OMEGA_MIRROR, q=0.3 * L), omega)
        assert np.allclose(S @ S.conj().T, np.eye(2), atol=1e-12)

    @pytest.mark.parametrize("omega", [0.3 * C / L, 2.0 * C / L, 7.5 * C / L])
    def test_cavity_matrix_is_unitary(self, omega):
        S = cavity_s_matrix(*self.mirrors, omega, L)
        assert np.allclose(S @ S.conj().T, np.eye(2), atol=1e-12)

    def test_transparent_second_mirror(self):
        omega = 2.0 * C / L
        m1 = self.mirrors[0]
        S = cavity_s_matrix(m1, Mirror1D.transparent(), omega, L)
        expected = mirror_s_matrix(Mirror1D.impedance_mismatch(OMEGA_MIRROR, q=-0.5 * L), omega)
        assert np.allclose(S, expected, atol=1e-14)

    @pytest.mark.parametrize("omega", [0.3 * C / L, 2.0 * C / L, 7.5 * C / L])
    def test_resonance_identity(self, omega):
        R = resonance_matrix(*self.mirrors, omega, L)
        Q = q_matrix(*self.mirrors, omega, L)
        assert np.allclose(R @ R.conj().T, np.eye(2) + Q + Q.conj().T, atol=1e-12)

    @pytest.mark.parametrize("omega", [0.3 * C / L, 2.0 * C / L, 7.5 * C / L])
    def test_determinant_identity(self, omega):
        assert det_identity_check(*self.mirrors, omega, L) < 1e-12

    def test_determinant_needs_positive_frequency(self):
        with pytest.raises(DomainError):
            det_identity_check(*self.mirrors, 0.0, L)

    def test_phase(self):
        # the round trip picks up e^{2 i omega L / c}
        omega = 2.0 * C / L
        r1, _ = mirror1d_amplitudes(self.mirrors[0], omega)
        r2, _ = mirror1d_amplitudes(self.mirrors[1], omega)
        d = 1.0 - r1 * r2 * cmath.exp(2j * omega * L / C)
        Q = q_matrix(*self.mirrors, omega, L)
        assert Q[0, 0] == pytest.approx(r1 * r2 * cmath.exp(2j * omega * L / C) / d)
