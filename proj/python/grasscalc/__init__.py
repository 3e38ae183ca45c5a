"""Exact intersection calculus on Grassmann bundles.

Thin re-export of the compiled extension: partition/tableau combinatorics,
truncated graded rings over exact rationals, Schur determinants, the
quotient-bundle push-forward and its tableau-count closed form, the
verification suite, and the divisor-data Segre sums.
"""

from ._core import (
    ClassSeries,
    FiberedClass,
    GradedElement,
    GradedRing,
    GrassSetup,
    MissingMonomialsError,
    Partition,
    add_padded,
    check_inequalities,
    chi,
    d1_polynomial_class,
    discriminant,
    evaluate,
    f_coefficient_identities,
    leray_hirsch_divisor,
    mul_by_chi,
    mul_by_pullback,
    mul_linear,
    partitions_of,
    pieri_add_box,
    power,
    pushforward,
    pushforward_chi_power_closedform,
    remove_corner_results,
    run_suite,
    schur_det,
    segre_lhs_symbolic,
    syt_count_bruteforce,
    syt_count_formula,
    theta,
    total_class_from_generators,
)

__all__ = [
    "ClassSeries",
    "FiberedClass",
    "GradedElement",
    "GradedRing",
    "GrassSetup",
    "MissingMonomialsError",
    "Partition",
    "add_padded",
    "check_inequalities",
    "chi",
    "chern_ring",
    "d1_polynomial_class",
    "discriminant",
    "evaluate",
    "f_coefficient_identities",
    "leray_hirsch_divisor",
    "mul_by_chi",
    "mul_by_pullback",
    "mul_linear",
    "partitions_of",
    "pieri_add_box",
    "power",
    "pushforward",
    "pushforward_chi_power_closedform",
    "remove_corner_results",
    "run_suite",
    "schur_det",
    "segre_lhs_symbolic",
    "syt_count_bruteforce",
    "syt_count_formula",
    "theta",
    "total_class_from_generators",
]

__version__ = "0.1.0"


def chern_ring(n, extra=()):
    """Ring with generators c1..cn (degree = index) truncated at n.

    ``extra`` prepends further (name, degree) generators, e.g. the
    divisor data ``[("b0", 0), ("b1", 1)]``.
    """
    gens = list(extra) + [(f"c{k}", k) for k in range(1, n + 1)]
    return GradedRing.create(gens, n)


def chern_series(ring, n):
    """Total class 1 + c1 + ... + cn on a ring built by chern_ring."""
    return total_class_from_generators(ring, [f"c{k}" for k in range(1, n + 1)])
