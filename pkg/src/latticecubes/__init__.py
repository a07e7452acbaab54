"""Exact census of lattice cubes with vertices in {0..n}^3.

The package builds every irreducible lattice cube from the parametrization
of equilateral triangles in Z^3 (via the quadratic ring Z[i*sqrt(3)]),
counts placements through the 48-element box-symmetry orbit invariants,
and cross-checks the resulting sequence NC(n) against an independent
brute-force enumerator.
"""

from .census import (
    CubeRecord,
    CubeRegistry,
    build_irreducible_list,
    build_multiples,
    count_cubes,
    placement_count,
    sequence,
)
from .diophantine import (
    NormFormSolution,
    PlaneSolution,
    k_values,
    pi_epsilon,
    solve_norm_form,
    solve_three_squares,
)
from .lattice_geometry import Cube, Vec3, build_cube
from .oracle import brute_force_count, brute_force_orbit_fill
from .symmetry import InvariantSet, generalized_orbit, invariants, symmetry_orbit

__version__ = "0.1.0"

__all__ = [
    "Cube",
    "CubeRecord",
    "CubeRegistry",
    "InvariantSet",
    "NormFormSolution",
    "PlaneSolution",
    "Vec3",
    "brute_force_count",
    "brute_force_orbit_fill",
    "build_cube",
    "build_irreducible_list",
    "build_multiples",
    "count_cubes",
    "generalized_orbit",
    "invariants",
    "k_values",
    "pi_epsilon",
    "placement_count",
    "sequence",
    "solve_norm_form",
    "solve_three_squares",
    "symmetry_orbit",
]
