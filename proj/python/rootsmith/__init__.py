"""Exact computations in crystallographic root systems and their Weyl groups.

The heavy lifting lives in the compiled ``_core`` extension. All root
references are coordinate vectors in the simple-root basis, so results are
independent of any internal ordering.
"""

from ._core import (
    RootSystem,
    closure,
    completions,
    factorization_graph_has_cycle,
    find_conjugator,
    generates_oracle,
    generation_verdict,
    hnf,
    hurwitz_move,
    is_coxeter,
    is_minimal_generating,
    is_parabolic_corank1,
    is_quasi_coxeter,
    is_simple_system,
    is_unimodular_basis,
    lattice_index,
    lattice_span_equal,
    obtusify,
    orbit_partition,
    product_of_reflections,
    reduced_factorizations,
    reflection_length,
    selftest,
    smith_divisors,
)

__all__ = [
    "RootSystem",
    "closure",
    "completions",
    "factorization_graph_has_cycle",
    "find_conjugator",
    "generates_oracle",
    "generation_verdict",
    "hnf",
    "hurwitz_move",
    "is_coxeter",
    "is_minimal_generating",
    "is_parabolic_corank1",
    "is_quasi_coxeter",
    "is_simple_system",
    "is_unimodular_basis",
    "lattice_index",
    "lattice_span_equal",
    "obtusify",
    "orbit_partition",
    "product_of_reflections",
    "reduced_factorizations",
    "reflection_length",
    "selftest",
    "smith_divisors",
]

__version__ = "0.1.0"
