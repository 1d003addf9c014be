"""Exact computations in an Eisenstein lattice of signature (13,1) and its mirror arrangement."""

__version__ = "0.1.0"
