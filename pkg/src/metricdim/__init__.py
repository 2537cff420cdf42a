"""Metric Dimension solvers and the Bipartite Dominating Set reduction to max-degree-3 graphs."""

__version__ = "0.1.0"
