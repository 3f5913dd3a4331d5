"""Quiver Grassmannians of P + I in Dynkin type: Poincare polynomials,
torus fixed points, attracting cells and finite-field point counts."""

__version__ = "0.1.0"
