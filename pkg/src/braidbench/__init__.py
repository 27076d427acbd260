"""Exact-arithmetic workbench for braided Hopf algebras in Z/nZ-graded vector spaces."""

__version__ = "0.1.0"
