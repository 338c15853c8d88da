"""Sliding k-transmitter guarding of orthogonal polygons.

Exact integer geometry, the slice/cross discretization, greedy and exact
hitting-set solvers, and generation of vertex-cover hardness instances.
"""

__version__ = "0.1.0"
