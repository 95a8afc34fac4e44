"""Topographic-profile algebra for finite discrete dynamical systems.

The profile of a finite dynamical system counts its states level by
level above the limit cycles.  Profiles form a commutative semiring
compatible with disjoint union and tensor product of systems; this
package implements the arithmetic, factorisation and a complete bounded
solver for polynomial equations with constant right-hand sides, plus an
HTTP service and CLI on top.
"""

from .dynamics import (
    EMPTY_SYSTEM,
    FiniteDynamicalSystem,
    disjoint_sum,
    export_dot,
    heights,
    parse_fds,
    profile_of,
    realize,
    serialize_fds,
    tensor_product,
)
from .errors import (
    CapacityError,
    ParseError,
    SearchSpaceError,
    ShapeError,
    TopoprofError,
)
from .profiles import (
    MAX_COUNT,
    ONE,
    ZERO,
    Profile,
    add,
    canonical_key,
    embed_nat,
    format_profile,
    generator_decompose,
    make_profile,
    mul,
    parse_profile,
    scalar_mul,
    size,
)
from .factorization import (
    CensusReport,
    census,
    census_range,
    divisors,
    factor_nat_profile,
    factorisations,
    is_irreducible,
    multiplication_table,
    profiles_of_size,
    profiles_up_to,
    render_multiplication_table,
    try_divide,
)
from .equations import (
    Assignment,
    EquationSystem,
    Monomial,
    ProfilePolynomial,
    SizeProjectedSystem,
    brute_force_oracle,
    combine_to_single,
    evaluate,
    format_equation_system,
    format_polynomial,
    format_solutions,
    ones_profile,
    parse_equation_system,
    size_projection,
    solve,
)
from .reductions import (
    Cnf3Formula,
    format_cnf3,
    parse_cnf3,
    sat_to_system,
    solution_to_assignment,
)

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "CapacityError",
    "CensusReport",
    "Cnf3Formula",
    "EMPTY_SYSTEM",
    "EquationSystem",
    "FiniteDynamicalSystem",
    "MAX_COUNT",
    "Monomial",
    "ONE",
    "ParseError",
    "Profile",
    "ProfilePolynomial",
    "SearchSpaceError",
    "ShapeError",
    "SizeProjectedSystem",
    "TopoprofError",
    "ZERO",
    "add",
    "brute_force_oracle",
    "canonical_key",
    "census",
    "census_range",
    "combine_to_single",
    "disjoint_sum",
    "divisors",
    "embed_nat",
    "evaluate",
    "export_dot",
    "factor_nat_profile",
    "factorisations",
    "format_cnf3",
    "format_equation_system",
    "format_polynomial",
    "format_profile",
    "format_solutions",
    "generator_decompose",
    "heights",
    "is_irreducible",
    "make_profile",
    "mul",
    "multiplication_table",
    "ones_profile",
    "parse_cnf3",
    "parse_equation_system",
    "parse_fds",
    "parse_profile",
    "profile_of",
    "profiles_of_size",
    "profiles_up_to",
    "realize",
    "render_multiplication_table",
    "sat_to_system",
    "scalar_mul",
    "serialize_fds",
    "size",
    "size_projection",
    "solution_to_assignment",
    "solve",
    "tensor_product",
    "try_divide",
]
