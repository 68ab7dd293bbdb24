"""Exact computation of dual root data for central extensions of loop groups."""

__version__ = "0.1.0"
