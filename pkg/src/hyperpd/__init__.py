"""Projective dimension of square-free monomial ideals via their dual hypergraphs."""
__version__ = "0.1.0"
