"""Exact q-deformed rationals, Farey determinants and Springborn operations.

Thin wrapper over the C++ core. Fractions are passed as strings ("7/5",
"-1/2", "3", "inf"); polynomials come back as strings in descending powers.
"""

from ._core import (
    check_q_markov_tree,
    companions,
    disk,
    epsilon,
    farey_det,
    gap_partial_sum,
    jump,
    jump_at,
    markov_tree,
    modular_surface_stats,
    q_farey_add,
    q_farey_det,
    q_midpoint,
    q_springborn,
    quantize,
    regularity,
    render_svg,
    springborn_diff,
    springborn_sum,
    suite_names,
    verify,
)

__all__ = [
    "check_q_markov_tree",
    "companions",
    "disk",
    "epsilon",
    "farey_det",
    "gap_partial_sum",
    "jump",
    "jump_at",
    "markov_tree",
    "modular_surface_stats",
    "q_farey_add",
    "q_farey_det",
    "q_midpoint",
    "q_springborn",
    "quantize",
    "regularity",
    "render_svg",
    "springborn_diff",
    "springborn_sum",
    "suite_names",
    "verify",
]
