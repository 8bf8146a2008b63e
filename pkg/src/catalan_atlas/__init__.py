"""Exact enumeration of extended Catalan arrangements: chains of ideals,
bounded dominant regions, maximal alcoves, coroot lattice points and polygon
models of generalized cluster complexes."""

__version__ = "0.1.0"
