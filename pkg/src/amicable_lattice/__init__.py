"""Exact search and lattice realization of amicable lattice parallelograms."""

__version__ = "0.1.0"

from .exact import ContractError, DomainError, divisors, is_perfect_square, isqrt, parametrize_triples
from .parallelogram import AmicablePair, ParallelogramSpec, amicable_condition, classify
from .rhombus import solve_star, solve_star_star, to_rhombus
from .embed import realize_amicable_pair
from .oracle import brute_parallelogram, brute_rectangles, brute_rhombus

__all__ = [
    "AmicablePair",
    "ContractError",
    "DomainError",
    "ParallelogramSpec",
    "amicable_condition",
    "brute_parallelogram",
    "brute_rectangles",
    "brute_rhombus",
    "classify",
    "divisors",
    "is_perfect_square",
    "isqrt",
    "parametrize_triples",
    "realize_amicable_pair",
    "solve_star",
    "solve_star_star",
    "to_rhombus",
]
