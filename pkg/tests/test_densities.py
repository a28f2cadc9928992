"""Exact and Monte-Carlo homomorphism densities between finite posets."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.core.exceptions import BudgetExceededError, SizeError
from app.densities import (
    MapKind,
    MomentAccumulator,
    SamplingMode,
    count_maps,
    sample_induced,
    t_exact,
    t_ind_exact,
    t_inj_exact,
    t_mc,
    t_mc_partitioned,
)
from app.posets import (
    all_labelled_posets,
    build_poset,
    chain_poset,
    disjoint_union,
    enumerate_extensions,
    isomorphism_classes,
    random_relabel,
    relabel,
    trivial_poset,
)
from app.utils.streams import substream
from tests import REFERENCE_DENSITIES, TEST_MC_SAMPLES, TEST_SEED


@st.composite
def labelled_posets(draw, max_n: int = 4):
    """Closure of upward pairs, then an arbitrary relabelling."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(n)))
    return relabel(build_poset(n, chosen), perm)


class TestExactDensities:
    def test_chain_into_chain(self, chain2, chain3):
        assert t_exact(chain2, chain3) == Fraction(*REFERENCE_DENSITIES["t(chain2, chain3)"])
        assert count_maps(chain2, chain3) == (3, 9)

    def test_trivial_pattern_has_density_one(self, chain3):
        for m in (1, 2, 4):
            assert t_exact(trivial_poset(m), chain3) == 1
            assert t_exact(trivial_poset(m), trivial_poset(5)) == 1

    def test_nontrivial_pattern_in_antichain(self, chain2, vee):
        assert t_exact(chain2, trivial_poset(6)) == 0
        assert t_exact(vee, trivial_poset(3)) == 0

    def test_injective(self, chain2, chain3):
        assert t_inj_exact(chain2, chain2) == Fraction(
            *REFERENCE_DENSITIES["t_inj(chain2, chain2)"]
        )
        assert t_inj_exact(chain3, chain2) == 0
        assert t_inj_exact(trivial_poset(2), chain3) == 1

    def test_induced(self, chain2, chain3):
        assert t_ind_exact(chain2, chain2) == Fraction(
            *REFERENCE_DENSITIES["t_ind(chain2, chain2)"]
        )
        assert t_ind_exact(trivial_poset(2), chain3) == 0
        assert t_ind_exact(chain3, chain2) == 0

    def test_extension_sum_small_case(self, chain3):
        E2 = trivial_poset(2)
        parts = [t_ind_exact(Q, chain3) for Q in enumerate_extensions(E2)]
        assert sorted(parts) == [0, Fraction(1, 2), Fraction(1, 2)]
        assert sum(parts) == t_inj_exact(E2, chain3) == 1

    @pytest.mark.slow
    def test_injective_density_is_sum_of_induced_densities(self):
        patterns = [Q for n in (1, 2, 3) for Q in all_labelled_posets(n)]
        hosts = [P for n in (1, 2, 3, 4) for P in all_labelled_posets(n)]
        hosts += [group[0] for group in isomorphism_classes(all_labelled_posets(5))]
        for Q in patterns:
            extensions = enumerate_extensions(Q)
            for P in hosts:
                total = sum((t_ind_exact(R, P) for R in extensions), Fraction(0))
                assert t_inj_exact(Q, P) == total

    def test_isolated_elements_do_not_count_against_budget(self, chain2):
        Q = disjoint_union(chain2, trivial_poset(6))
        good, total = count_maps(Q, chain_poset(10), budget=100)
        assert total == 10**8
        assert Fraction(good, total) == t_exact(chain2, chain_poset(10))

    def test_budget(self, chain3):
        with pytest.raises(BudgetExceededError) as info:
            count_maps(chain3, chain_poset(20), budget=1000)
        assert info.value.bound == 8000

    def test_small_frontier_gives_same_count(self, vee):
        P = build_poset(6, [(1, 2), (2, 3), (1, 4), (4, 5), (5, 6)])
        for kind in MapKind:
            assert count_maps(vee, P, kind, frontier_limit=7) == count_maps(vee, P, kind)


class TestDensityInvariants:
    @given(labelled_posets(max_n=3), labelled_posets(max_n=5), st.integers(0, 2**32 - 1))
    def test_relabelling_either_side(self, Q, P, seed):
        rng = np.random.default_rng(seed)
        for density in (t_exact, t_inj_exact, t_ind_exact):
            expected = density(Q, P)
            assert density(random_relabel(Q, rng), P) == expected
            assert density(Q, random_relabel(P, rng)) == expected

    @given(labelled_posets(max_n=3), labelled_posets(max_n=5))
    def test_sandwich(self, Q, P):
        t_inj = t_inj_exact(Q, P)
        assert t_ind_exact(Q, P) <= t_inj
        assert abs(t_exact(Q, P) - t_inj) <= Fraction(Q.n**2, P.n)

    def test_monte_carlo_is_unbiased(self, vee):
        P = build_poset(5, [(1, 2), (2, 3), (1, 4), (4, 5)])
        estimates = [t_mc(vee, P, 2000, substream(TEST_SEED, i)) for i in range(30)]
        mean = np.mean([e.value for e in estimates])
        pooled = np.sqrt(sum(e.stderr**2 for e in estimates)) / len(estimates)
        assert abs(mean - float(t_exact(vee, P))) <= 4 * pooled


class TestMomentAccumulator:
    @given(
        st.lists(st.floats(-10, 10), min_size=2, max_size=40),
        st.integers(min_value=1, max_value=39),
    )
    def test_merge_matches_direct(self, values, cut):
        cut = min(cut, len(values) - 1)
        merged = MomentAccumulator().add(np.array(values[:cut]))
        merged.merge(MomentAccumulator().add(np.array(values[cut:])))
        direct = np.array(values)
        assert merged.count == len(values)
        assert merged.mean == pytest.approx(direct.mean(), abs=1e-9)
        expected = direct.std(ddof=1) / np.sqrt(len(values))
        assert merged.stderr == pytest.approx(expected, abs=1e-9)

    def test_single_value_has_zero_stderr(self):
        acc = MomentAccumulator().add(np.array([0.3]))
        assert acc.stderr == 0.0
        assert acc.statistic().samples == 1


class TestMonteCarlo:
    def test_chain_into_chain(self, rng, chain2, chain3):
        estimate = t_mc(chain2, chain3, TEST_MC_SAMPLES, rng)
        assert estimate.samples == TEST_MC_SAMPLES
        assert abs(estimate.value - 1 / 3) <= 4 * estimate.stderr

    def test_degenerate_values_are_exact(self, rng, chain2, chain3):
        one = t_mc(trivial_poset(2), chain3, 1000, rng)
        assert (one.value, one.stderr) == (1.0, 0.0)
        zero = t_mc(chain2, trivial_poset(4), 1000, rng)
        assert (zero.value, zero.stderr) == (0.0, 0.0)

    def test_same_seed_same_estimate(self, chain2, chain3):
        whole = t_mc(chain2, chain3, 5000, np.random.default_rng(7), chunk_size=5000)
        again = t_mc(chain2, chain3, 5000, np.random.default_rng(7), chunk_size=5000)
        assert whole == again

    def test_partitioned_result_ignores_threads(self, chain2, chain3):
        serial = t_mc_partitioned(chain2, chain3, 20000, seed=3, parts=4, threads=1)
        parallel = t_mc_partitioned(chain2, chain3, 20000, seed=3, parts=4, threads=4)
        assert serial.value == parallel.value
        assert serial.samples == 20000
        assert abs(serial.value - 1 / 3) <= 4 * serial.stderr


class TestSampleInduced:
    def test_pairs_of_a_chain_are_comparable(self, rng):
        T5 = chain_poset(5)
        for _ in range(50):
            Q = sample_induced(T5, 2, SamplingMode.WITHOUT, rng)
            assert Q.relation_count == 1

    def test_antichain_restricts_to_antichain(self, rng):
        for mode in SamplingMode:
            assert sample_induced(trivial_poset(4), 3, mode, rng) == trivial_poset(3)

    def test_repeated_elements_are_incomparable(self, rng):
        Q = sample_induced(chain_poset(1), 3, "with-replacement", rng)
        assert Q == trivial_poset(3)

    def test_too_many_without_replacement(self, rng, chain3):
        with pytest.raises(SizeError):
            sample_induced(chain3, 4, SamplingMode.WITHOUT, rng)
        assert sample_induced(chain3, 0, SamplingMode.WITHOUT, rng).n == 0

    def test_frequencies_match_induced_density(self, rng, vee):
        P = build_poset(5, [(1, 2), (1, 3), (3, 4), (2, 5)])
        draws = 20000
        hits = sum(
            sample_induced(P, 3, SamplingMode.WITHOUT, rng) == vee for _ in range(draws)
        )
        p = float(t_ind_exact(vee, P))
        assert abs(hits / draws - p) <= 4 * np.sqrt(p * (1 - p) / draws) + 1e-12
