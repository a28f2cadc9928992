"""Convergence of W-random posets to their kernel."""

import numpy as np
import pytest

from app.core.config import settings
from app.core.constants import CONVERGE_COLUMNS
from app.core.exceptions import ValidationError
from app.cut.convergence import converge_experiment, density_family
from app.kernels import total_unit, trivial, two_point
from app.posets import are_isomorphic, chain_poset
from app.utils.streams import substream
from tests import TEST_SEED


class TestDensityFamily:
    def test_members(self):
        family = density_family()
        assert [Q.n for Q in family] == [2, 3, 3, 3]
        assert family[0] == chain_poset(2)
        assert not are_isomorphic(family[2], family[3])


class TestConvergeExperiment:
    def test_trivial_target(self):
        rows = converge_experiment(trivial(), [3, 8], 2, substream(TEST_SEED, 0), restarts=1)
        assert [(row.n, row.rep) for row in rows] == [(3, 0), (3, 1), (8, 0), (8, 1)]
        for row in rows:
            assert row.t_inj_estimate == 0.0
            assert row.delta_upper == pytest.approx(0.0, abs=1e-12)
            assert row.delta_lower == pytest.approx(0.0, abs=1e-12)
            assert row.max_density_gap == pytest.approx(0.0, abs=1e-12)

    def test_rows_cover_every_column(self):
        rows = converge_experiment(two_point(0.5), [4], 1, substream(TEST_SEED, 1), restarts=1)
        assert set(CONVERGE_COLUMNS) <= set(rows[0].model_dump())
        assert rows[0].delta_lower <= rows[0].delta_upper + 1e-9

    def test_same_seed_ignores_threads(self):
        one = converge_experiment(
            two_point(0.5), [5, 9], 3, np.random.default_rng(4), restarts=2, threads=1
        )
        many = converge_experiment(
            two_point(0.5), [5, 9], 3, np.random.default_rng(4), restarts=2, threads=3
        )
        assert one == many

    def test_bad_arguments(self, rng):
        with pytest.raises(ValidationError):
            converge_experiment(two_point(0.5), [5], 0, rng)
        with pytest.raises(ValidationError):
            converge_experiment(two_point(0.5), [], 1, rng)
        with pytest.raises(ValidationError):
            converge_experiment(two_point(0.5), [0, 5], 1, rng)

    def test_target_needs_step_form(self, rng):
        with pytest.raises(ValidationError):
            converge_experiment(total_unit(), [5], 1, rng)

    def test_small_overlays_are_searched(self):
        rows = converge_experiment(two_point(0.5), [4, 6], 1, substream(TEST_SEED, 3), restarts=2)
        assert [row.method for row in rows] == ["exact", "exact"]

    def test_search_limit_falls_back_to_spectral(self, monkeypatch):
        monkeypatch.setattr(settings, "coupling_search_limit", 0)
        rows = converge_experiment(two_point(0.5), [4], 1, substream(TEST_SEED, 3), restarts=2)
        assert rows[0].method == "spectral"
        assert rows[0].delta_lower <= rows[0].delta_upper + 1e-9

    @pytest.mark.slow
    def test_distance_shrinks_with_n(self):
        # Same bound at both sizes
        rows = converge_experiment(
            two_point(0.5), [20, 200], 2, substream(TEST_SEED, 2), restarts=2, max_parts=0
        )
        small = np.mean([row.delta_upper for row in rows if row.n == 20])
        large = np.mean([row.delta_upper for row in rows if row.n == 200])
        assert large < small
        gaps = [row.max_density_gap for row in rows if row.n == 200]
        assert max(gaps) < 0.05
        estimates = [row.t_inj_estimate for row in rows if row.n == 200]
        assert abs(np.mean(estimates) - 0.125) < 0.03
