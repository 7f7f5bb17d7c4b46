"""Exact equivariant series for Hilbert schemes of points, refined vertices and
their slope limits, with verification reports."""

__version__ = "0.1.0"
