"""Exact rank and nullity of graph distance matrices."""

__version__ = "0.1.0"
