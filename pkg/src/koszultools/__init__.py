"""Exact-arithmetic toolkit for Koszulness of quadratic binary operads.

Subpackages cover truncated power series with sign tests, the arity-3
relation spaces as S3-modules, shuffle tree monomials and their
Groebner machinery, Koszul duality of quadratic presentations,
octonion identity checking, and a scenario classifier with a CLI.
"""

__version__ = "0.1.0"
