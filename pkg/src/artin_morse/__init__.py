"""Discrete Morse theory for the homology of Artin groups with coefficients in Q[q, 1/q]."""
from .kernels import BACKEND

__all__ = ["BACKEND"]
