"""Exact diagrammatic calculus for quantum Lie algebras A1, A2, B2 and A3."""

from spiderweb.qalg import LaurentHalf, RationalQ, q_int, q_fact, q_binom

__all__ = ["LaurentHalf", "RationalQ", "q_int", "q_fact", "q_binom"]
