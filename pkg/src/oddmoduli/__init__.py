"""Compactified moduli of pointed curves whose Weierstrass semigroup is
<g, g+1, ..., 2g-2>, computed by deforming the monomial curve."""

__version__ = "0.1.0"
