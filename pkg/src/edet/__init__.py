"""Exact determinants from power-sum identities, over rings with and without commutativity or associativity."""

__version__ = "0.1.0"
