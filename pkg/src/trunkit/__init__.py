"""Generalized truncations of multigraphs."""

__version__ = "0.1.0"
