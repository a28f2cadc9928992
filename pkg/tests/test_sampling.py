"""W-random posets, exchangeability diagnostics and random graph orders."""

import math

import numpy as np
import pytest

from app.core.exceptions import NotAPosetError, ParameterRangeError, ValidationError
from app.kernels import (
    from_poset,
    interval,
    parse_kernel,
    product2d,
    thin,
    threshold,
    total_unit,
    trivial,
    two_point,
)
from app.posets import build_poset, chain_poset, is_strict_order, restrict, trivial_poset
from app.sampling import (
    LabelDistribution,
    empirical_label_distribution,
    gnp_order,
    independence_test,
    orbit_check,
    sample_relations,
    sample_wposet,
    t_inj_mean_over_samples,
)
from app.sampling.wposet import batch_is_strict_order, shell_positions
from app.utils.streams import substream
from tests import TEST_REPLICATES, TEST_SEED

BUILT_IN_KERNELS = [
    two_point(0.5),
    threshold(2.0),
    threshold(float("inf")),
    total_unit(),
    trivial(),
    product2d(),
    interval(),
    from_poset(build_poset(3, [(1, 2), (1, 3)])),
    thin(two_point(0.5), 0.3),
]


class TestShellPositions:
    def test_positions_are_a_bijection(self):
        n = 6
        positions = shell_positions(n)
        off = positions[~np.eye(n, dtype=bool)]
        assert sorted(off.tolist()) == list(range(n * (n - 1)))
        assert (np.diag(positions) == -1).all()

    def test_prefix_shells_come_first(self):
        small, large = shell_positions(4), shell_positions(9)
        np.testing.assert_array_equal(large[:4, :4], small)


class TestSampleWposet:
    @pytest.mark.parametrize(
        "W", [two_point(0.5), total_unit(), thin(total_unit(), 0.5)], ids=lambda W: W.name
    )
    def test_restriction_consistency(self, W):
        big = sample_wposet(W, 12, substream(TEST_SEED, 0))
        for k in (1, 4, 7):
            small = sample_wposet(W, k, substream(TEST_SEED, 0))
            assert restrict(big, range(1, k + 1)) == small

    def test_trivial_kernel_gives_antichains(self, rng):
        for n in (1, 5, 20):
            assert sample_wposet(trivial(), n, rng) == trivial_poset(n)

    def test_total_kernel_gives_total_orders(self, rng):
        for _ in range(1000):
            n = int(rng.integers(1, 51))
            assert sample_wposet(total_unit(), n, rng).is_total_order()

    def test_two_point_pair_frequency(self, rng):
        rel = sample_relations(two_point(0.5), 2, TEST_REPLICATES, rng)
        below = rel[:, 0, 1].mean()
        assert abs(below - 0.125) < 4 * math.sqrt(0.125 * 0.875 / TEST_REPLICATES)

    def test_broken_kernel_is_detected(self, rng):
        with pytest.raises(NotAPosetError):
            sample_wposet(parse_kernel("constant:0.5"), 12, rng)
        with pytest.raises(NotAPosetError):
            sample_relations(parse_kernel("constant:0.5"), 12, 50, rng)

    def test_size_must_be_positive(self, rng):
        with pytest.raises(ValidationError):
            sample_wposet(total_unit(), 0, rng)

    def test_batch_check_agrees_with_direct_check(self, rng):
        rel = rng.random((200, 4, 4)) < 0.25
        rel[:, np.arange(4), np.arange(4)] = False
        expected = [is_strict_order(r) for r in rel]
        assert batch_is_strict_order(rel).tolist() == expected

    @pytest.mark.slow
    @pytest.mark.parametrize("W", BUILT_IN_KERNELS, ids=lambda W: W.name)
    def test_every_draw_is_a_poset(self, rng, W):
        rel = sample_relations(W, 20, 10**4, rng)
        assert rel.shape == (10**4, 20, 20)
        assert batch_is_strict_order(rel).all()

    def test_from_poset_samples_are_subposets(self, rng):
        P = build_poset(4, [(1, 2), (2, 3), (1, 4)])
        for _ in range(50):
            R = sample_wposet(from_poset(P), 6, rng)
            assert is_strict_order(R.rel)

    @pytest.mark.slow
    def test_injective_density_converges(self, rng):
        stat, values = t_inj_mean_over_samples(chain_poset(2), two_point(0.5), 200, 50, rng)
        assert len(values) == 50
        assert abs(stat.value - 0.125) < 0.01

    def test_injective_mean_is_unbiased(self, rng):
        stat, _ = t_inj_mean_over_samples(chain_poset(2), two_point(0.5), 10, 400, rng)
        assert abs(stat.value - 0.125) <= 4 * stat.stderr

    def test_replicates_ignore_threads(self):
        one = t_inj_mean_over_samples(
            chain_poset(2), two_point(0.5), 8, 12, np.random.default_rng(5), threads=1
        )
        many = t_inj_mean_over_samples(
            chain_poset(2), two_point(0.5), 8, 12, np.random.default_rng(5), threads=3
        )
        assert one[1] == many[1]


class TestExchangeability:
    def test_two_point_pair_frequencies(self, rng):
        dist = empirical_label_distribution(two_point(0.5), 2, TEST_REPLICATES, rng)
        assert dist.total == TEST_REPLICATES
        assert abs(dist.frequency(trivial_poset(2)) - 0.75) < 0.01
        assert abs(dist.frequency(chain_poset(2)) - 0.125) < 0.01
        assert abs(dist.frequency(build_poset(2, [(2, 1)])) - 0.125) < 0.01

    def test_trivial_kernel_puts_all_mass_on_antichain(self, rng):
        dist = empirical_label_distribution(trivial(), 3, 500, rng)
        assert dist.count(trivial_poset(3)) == 500
        assert len(dist.counts) == 1

    def test_orbits_agree(self, rng):
        dist = empirical_label_distribution(two_point(0.5), 3, TEST_REPLICATES, rng)
        report = orbit_check(dist)
        assert len(report.orbits) == 5
        assert report.passed

    @pytest.mark.slow
    @pytest.mark.parametrize("W", BUILT_IN_KERNELS, ids=lambda W: W.name)
    def test_orbits_agree_for_every_kernel(self, W):
        dist = empirical_label_distribution(W, 3, TEST_REPLICATES, substream(TEST_SEED, 30))
        report = orbit_check(dist)
        assert len(report.orbits) == 5
        assert report.passed

    def test_orbit_check_flags_label_bias(self):
        dist = LabelDistribution(2)
        dist.add(chain_poset(2), 900)
        dist.add(build_poset(2, [(2, 1)]), 100)
        assert not orbit_check(dist).passed

    def test_empty_distribution(self):
        with pytest.raises(ValidationError):
            orbit_check(LabelDistribution(2))

    def test_disjoint_blocks_are_independent(self, rng):
        chain2 = chain_poset(2)
        report = independence_test(two_point(0.5), chain2, chain2, TEST_REPLICATES, rng)
        assert abs(report.left - 0.125) < 0.01
        assert abs(report.product - 1 / 64) < 0.003
        assert report.passed

    @pytest.mark.slow
    def test_disjoint_blocks_at_full_scale(self, rng):
        chain2 = chain_poset(2)
        report = independence_test(two_point(0.5), chain2, chain2, 10**6, rng)
        assert report.replicates == 10**6
        assert report.passed

    def test_independence_edge_cases(self, rng):
        chain2 = chain_poset(2)
        zero = independence_test(trivial(), chain2, chain2, 1000, rng)
        assert (zero.joint, zero.left, zero.right) == (0.0, 0.0, 0.0)
        one = independence_test(two_point(0.5), trivial_poset(1), trivial_poset(1), 100, rng)
        assert (one.joint, one.product) == (1.0, 1.0)
        assert one.passed


class TestGraphOrder:
    def test_extremes(self, rng):
        assert gnp_order(7, 0.0, rng) == trivial_poset(7)
        assert gnp_order(7, 1.0, rng) == chain_poset(7)

    def test_probability_range(self, rng):
        with pytest.raises(ParameterRangeError):
            gnp_order(5, 1.5, rng)

    def test_chain_density_grows_with_p(self):
        n = 300
        scale = math.log(n) / n
        densities = [
            gnp_order(n, factor * scale, substream(TEST_SEED, 0)).relation_count / n**2
            for factor in (0.5, 1.0, 2.0, 4.0)
        ]
        assert densities == sorted(densities)
        assert densities[-1] > densities[0]

    @pytest.mark.slow
    def test_chain_density_grows_with_p_at_large_n(self):
        n = 2000
        scale = math.log(n) / n
        densities = [
            gnp_order(n, factor * scale, substream(TEST_SEED, 1)).relation_count / n**2
            for factor in (0.5, 1.0, 2.0, 4.0)
        ]
        inversions = sum(a > b for a, b in zip(densities, densities[1:]))
        assert inversions <= 1
        assert densities[-1] > densities[0]
