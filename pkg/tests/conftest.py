"""Shared fixtures: seeded generators, small posets and JSON files."""

import json
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings as hypothesis_settings

from app.posets.poset import Poset, build_poset, chain_poset, trivial_poset
from tests import TEST_SEED

hypothesis_settings.register_profile("posetlim", deadline=None, max_examples=60)
hypothesis_settings.load_profile("posetlim")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(TEST_SEED)


@pytest.fixture
def chain2() -> Poset:
    return chain_poset(2)


@pytest.fixture
def chain3() -> Poset:
    return chain_poset(3)


@pytest.fixture
def antichain2() -> Poset:
    return trivial_poset(2)


@pytest.fixture
def vee() -> Poset:
    """1 below both 2 and 3."""
    return build_poset(3, [(1, 2), (1, 3)])


def write_json(path: Path, payload: dict) -> Path:
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


@pytest.fixture
def poset_files(tmp_path: Path) -> dict:
    return {
        "chain2": write_json(tmp_path / "chain2.json", {"n": 2, "relations": [[1, 2]]}),
        "chain3": write_json(
            tmp_path / "chain3.json", {"n": 3, "relations": [[1, 2], [2, 3], [1, 3]]}
        ),
        "covers3": write_json(
            tmp_path / "covers3.json",
            {"n": 3, "relations": [[1, 2], [2, 3]], "closed": False},
        ),
        "open3": write_json(tmp_path / "open3.json", {"n": 3, "relations": [[1, 2], [2, 3]]}),
    }


@pytest.fixture
def digraph_files(tmp_path: Path) -> dict:
    return {
        "c3": write_json(tmp_path / "c3.json", {"n": 3, "edges": [[1, 2], [2, 3], [3, 1]]}),
        "p2": write_json(tmp_path / "p2.json", {"n": 3, "edges": [[1, 2], [2, 3]]}),
        "chain": write_json(
            tmp_path / "chain.json", {"n": 3, "edges": [[1, 2], [2, 3], [1, 3]]}
        ),
    }


@pytest.fixture
def step_files(tmp_path: Path) -> dict:
    return {
        "const02": write_json(tmp_path / "const02.json", {"mass": [1.0], "values": [[0.2]]}),
        "const05": write_json(tmp_path / "const05.json", {"mass": [1.0], "values": [[0.5]]}),
        "signed": write_json(
            tmp_path / "signed.json", {"mass": [0.5, 0.5], "values": [[1.0, -1.0], [-1.0, 1.0]]}
        ),
        "two_point": write_json(
            tmp_path / "two_point.json",
            {
                "mass": [0.5, 0.5],
                "values": [[0.0, 0.5], [0.0, 0.0]],
                "order": [[False, True], [False, False]],
            },
        ),
    }
