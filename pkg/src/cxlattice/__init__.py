"""Exact sublattice and subalgebra analysis of subspaces of C(X), X finite."""

__version__ = "0.1.0"
