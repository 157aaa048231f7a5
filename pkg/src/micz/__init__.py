"""Exact verification tools for generalized MICZ-Kepler problems."""

__version__ = "0.1.0"
