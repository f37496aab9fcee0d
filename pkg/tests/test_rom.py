import numpy as np
import pytest

from povmrobust.errors import DimensionOne, InvalidPovm, ShapeMismatch
from povmrobust.measurement import (
    Povm,
    depolarize_povm,
    post_process,
    projective_povm,
    random_povm,
    random_stochastic_map,
    trivial_povm,
)
from povmrobust.rom import rom, rom_report, uniform_noise_mixture, verify_pseudo_mixture


class TestRom:
    def test_trivial_vanishes(self):
        for q, d in ([1.0], 2), ([0.5, 0.5], 2), ([0.2, 0.3, 0.5], 3):
            assert abs(rom(trivial_povm(q, d))) <= 1e-10

    def test_qubit_projective(self, qubit_z):
        assert rom(qubit_z) == pytest.approx(1.0, abs=1e-10)

    def test_trine(self, trine):
        assert rom(trine) == pytest.approx(1.0, abs=1e-10)

    def test_depolarized_z(self, qubit_z):
        # elements have spectrum {0.75, 0.25}: R = 2 * 0.75 - 1
        assert rom(depolarize_povm(qubit_z, 0.5)) == pytest.approx(0.5, abs=1e-12)

    def test_bound(self):
        for seed, (d, o) in enumerate([(2, 4), (3, 2), (4, 6), (3, 5)]):
            m = random_povm(d, o, 800 + seed)
            value = rom(m)
            assert -1e-9 <= value <= min(o, d) - 1 + 1e-9

    def test_rejects_non_povm(self):
        with pytest.raises(InvalidPovm):
            rom([np.eye(2)])


class TestRomReport:
    def test_qubit_z_hand_check(self, qubit_z):
        report = rom_report(qubit_z)
        assert report.value == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(report.primal_weights, [1.0, 1.0])
        np.testing.assert_allclose(report.dual_states[0], np.diag([1.0, 0.0]), atol=1e-9)
        np.testing.assert_allclose(report.dual_states[1], np.diag([0.0, 1.0]), atol=1e-9)
        mix = report.pseudo_mixture
        assert mix.r == pytest.approx(1.0)
        np.testing.assert_allclose(mix.q, [0.5, 0.5])
        # noise swaps the projectors
        np.testing.assert_allclose(mix.noise.elements[0], np.diag([0.0, 1.0]), atol=1e-9)
        np.testing.assert_allclose(mix.noise.elements[1], np.diag([1.0, 0.0]), atol=1e-9)

    def test_trivial_measurement_signals(self):
        report = rom_report(trivial_povm([0.4, 0.6], 3))
        assert report.trivial
        assert report.pseudo_mixture is None
        assert report.dual_states.shape == (2, 3, 3)

    def test_report_invariants_random(self):
        m = random_povm(3, 4, 321)
        report = rom_report(m)
        # primal weights reproduce the value
        assert abs(report.primal_weights.sum() - 1.0 - report.value) <= 1e-10
        # dual states are unit-trace projectors
        for state in report.dual_states:
            assert abs(np.trace(state).real - 1.0) <= 1e-9
            np.testing.assert_allclose(state @ state, state, atol=1e-9)
        # strong duality
        dual = sum(
            np.einsum("ij,ji->", s, el).real
            for s, el in zip(report.dual_states, m.elements)
        )
        assert abs(dual - 1.0 - report.value) <= 1e-8
        # reconstruction
        mix = report.pseudo_mixture
        assert verify_pseudo_mixture(m, mix.noise, mix.q, mix.r, tol=1e-8)

    def test_degenerate_top_eigenvalue_deterministic(self):
        m = trivial_povm([0.5, 0.5], 2)
        report = rom_report(m)
        # first vector among the maximal ones, in ascending order
        np.testing.assert_allclose(report.dual_states[0], np.diag([1.0, 0.0]), atol=1e-12)


class TestUniformNoiseMixture:
    def test_qubit_z(self, qubit_z):
        noise, q, r = uniform_noise_mixture(qubit_z)
        assert r == pytest.approx(1.0)
        np.testing.assert_allclose(q, [0.5, 0.5])
        np.testing.assert_allclose(noise.elements[0], np.diag([0.0, 1.0]), atol=1e-12)

    def test_trivial_input(self):
        m = trivial_povm([0.5, 0.5], 2)
        noise, q, r = uniform_noise_mixture(m)
        np.testing.assert_allclose(noise.elements, m.elements, atol=1e-12)
        np.testing.assert_allclose(q, [0.5, 0.5])

    def test_random_noise_is_valid_povm(self):
        from povmrobust.measurement import validate_povm

        m = random_povm(3, 4, 55)
        noise, q, r = uniform_noise_mixture(m)
        validate_povm(list(noise.elements))
        assert r == pytest.approx(2.0)
        assert verify_pseudo_mixture(m, noise, q, r, tol=1e-9)

    def test_dimension_one(self):
        with pytest.raises(DimensionOne):
            uniform_noise_mixture(trivial_povm([0.5, 0.5], 1))


class TestVerifyPseudoMixture:
    def test_rejects_perturbed_distribution(self, qubit_z):
        report = rom_report(qubit_z)
        mix = report.pseudo_mixture
        q_bad = mix.q.copy()
        q_bad[0] += 0.01
        assert not verify_pseudo_mixture(qubit_z, mix.noise, q_bad, mix.r, tol=1e-8)

    def test_shape_mismatch(self, qubit_z, trine):
        noise, q, r = uniform_noise_mixture(trine)
        with pytest.raises(ShapeMismatch):
            verify_pseudo_mixture(qubit_z, noise, q, r)


class TestRobustnessProperties:
    def test_faithfulness_converse(self):
        m = depolarize_povm(random_povm(3, 4, 70), 1.0)
        assert rom(m) <= 1e-9
        traces = np.einsum("aii->a", m.elements).real
        deviation = np.abs(m.elements - traces[:, None, None] * np.eye(3) / 3).max()
        assert deviation <= 1e-6

    def test_convexity(self):
        rng = np.random.default_rng(71)
        for i in range(10):
            m1 = random_povm(3, 3, 7000 + i)
            m2 = random_povm(3, 3, 7100 + i)
            p = rng.random()
            mixed = Povm(p * m1.elements + (1 - p) * m2.elements)
            assert rom(mixed) <= p * rom(m1) + (1 - p) * rom(m2) + 1e-9

    def test_monotone_under_post_processing(self):
        m = random_povm(3, 4, 72)
        base = rom(m)
        for i in range(20):
            mapped = post_process(m, random_stochastic_map(4, 1 + i % 6, 7200 + i))
            assert rom(mapped) <= base + 1e-9

    def test_projective_and_rank_one_saturate_bound(self, trine, sic):
        assert rom(projective_povm(np.eye(3))) == pytest.approx(2.0, abs=1e-9)
        assert rom(trine) == pytest.approx(1.0, abs=1e-9)
        assert rom(sic) == pytest.approx(1.0, abs=1e-9)
