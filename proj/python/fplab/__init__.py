"""Exact finite-field distance-set and incidence laboratory."""

from ._fplab import (
    BudgetError,
    bisector_energies,
    count_quadratic_solutions,
    coverage,
    difference_set,
    distance_energy,
    distance_set_product,
    doubling,
    evaluate,
    isosceles,
    iterated_sumset,
    lemma_energy_report,
    rep_function,
    square_set,
    sumset,
    thm1_sweep,
    thm2_report,
    thm14_sweep,
    thm15_sweep,
    threshold_exponent,
)

__all__ = [
    "BudgetError",
    "bisector_energies",
    "count_quadratic_solutions",
    "coverage",
    "difference_set",
    "distance_energy",
    "distance_set_product",
    "doubling",
    "evaluate",
    "isosceles",
    "iterated_sumset",
    "lemma_energy_report",
    "rep_function",
    "square_set",
    "sumset",
    "thm1_sweep",
    "thm2_report",
    "thm14_sweep",
    "thm15_sweep",
    "threshold_exponent",
]
