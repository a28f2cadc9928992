"""
Test Suite

Tests for the poset-limit toolkit.
"""

import os
import sys

# Make the ``app`` package importable without installation
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

# Test configuration
TEST_SEED = 20240607
TEST_MC_SAMPLES = 200_000
TEST_TRIPLES = 100_000
TEST_REPLICATES = 100_000

# Reference values of small densities
REFERENCE_DENSITIES = {
    "t(chain2, chain3)": (1, 3),
    "t_inj(chain2, chain2)": (1, 2),
    "t_ind(chain2, chain2)": (1, 2),
    "t_ind(E2, chain3)": (0, 1),
    "t(chain3, total)": (1, 6),
}

__all__ = [
    "TEST_SEED",
    "TEST_MC_SAMPLES",
    "TEST_TRIPLES",
    "TEST_REPLICATES",
    "REFERENCE_DENSITIES",
]
