"""
Poset Limits Toolkit

Homomorphism densities between finite posets, kernels on ordered probability
spaces, W-random posets, cut norms and cut-distance bounds for step kernels,
and tests that a candidate limit is a poset limit.
"""

__version__ = "0.1.0"
__author__ = "Poset Limits Toolkit Team"
__license__ = "MIT"
