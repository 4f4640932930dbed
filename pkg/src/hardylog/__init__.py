"""Numerical toolkit for Hardy spaces with logarithmic Musielak-Orlicz
weights on the upper half-plane: operator kernels, norms, the constructive
multiplicative factorization, and Hankel form experiments."""

__version__ = "0.1.0"
