"""Cores, strips, k-tableaux, affine Bruhat counter-tableaux and k-Schur functions."""

__version__ = "0.1.0"
