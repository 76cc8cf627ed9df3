"""Exact ideal calculus for Leavitt path algebras of finite directed graphs.

The package works with the canonical description of a two-sided ideal: an
admissible pair (H, S) for the graded part plus finitely many cycle parts,
each a cycle without exits in the quotient graph carrying a polynomial with
nonzero constant term.  Everything is symbolic and exact; the algebra itself
is never materialized.
"""

from .classify import (
    AlgebraReport,
    PredicateResult,
    all_ideals_graded,
    classify_algebra,
    every_proper_ideal_completely_irreducible,
    every_proper_ideal_product_of_comp_irred,
    irreducible_equals_completely_irreducible,
    zero_completely_irreducible,
)
from .errors import (
    DegreeTooLarge,
    EmptySet,
    FieldMismatch,
    GraphMismatch,
    ImproperIdeal,
    InvalidGraph,
    LpaError,
    NotALattice,
    NotAdmissible,
    NotGraded,
    NotHereditarySaturated,
    TooLarge,
    UnknownVertex,
    UnsupportedOperands,
    Unsatisfiable,
    ZeroPolynomial,
)
from .gallery import (
    ALL_BUILDERS,
    corpus,
    double_loop_chain,
    loop_chain,
    omega_fan,
    omega_loop,
    one_loop,
    petals,
    plain_chain,
    sink_fork,
    two_sinks,
)
from .graphs import (
    DEFAULT_ENUMERATION_BOUND,
    OMEGA,
    AdmissiblePair,
    Cycle,
    Edge,
    Graph,
    Quotient,
    StrongCsp,
    admissible_leq,
    admissible_pair,
    breaking_vertices,
    condition_k,
    condition_l,
    cycle_exits,
    cycles,
    cycles_without_exits,
    cycles_without_k,
    downward_directed,
    enumerate_hereditary_saturated,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    hereditary_saturated_closure,
    is_hereditary,
    is_saturated,
    maximal_tails,
    quotient_graph,
    strong_csp,
)
from .ideals import (
    CaseResult,
    CyclePart,
    FactorizationReport,
    Ideal,
    canonicalize,
    contains,
    enumerate_graded_primes,
    factor_completely_irreducible,
    factor_prime_powers,
    graded_ideal,
    graded_part,
    ideal_from_json,
    ideal_power,
    ideal_to_json,
    intersect,
    is_completely_irreducible,
    is_graded,
    is_prime,
    is_proper,
    join_graded,
    make_irredundant,
    meet_graded,
    multiply,
    prime_power_decompose,
    quotient_prime_vertices,
    whole_ideal,
    zero_ideal,
)
from .oracles import (
    GeneratorConfig,
    bruteforce_factor_gf,
    closure_oracle,
    enumerate_admissible_pairs,
    glb_oracle,
    lub_oracle,
    maximal_tails_bruteforce,
    random_graph,
    random_prime_power_family,
)
from .poly import (
    FieldSpec,
    LaurentClass,
    Poly,
    divides,
    factor,
    is_irreducible_laurent,
    monic_irreducibles,
    normalize_laurent,
    poly,
    poly_gcd,
    poly_lcm,
    poly_mul,
)
from .rng import SplitMix64

__all__ = [name for name in dir() if not name.startswith("_")]
