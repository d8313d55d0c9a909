"""Symbolic powers of monomial ideals, with exact polyhedral and LP machinery."""

from .core import (
    AmbientRing,
    Monomial,
    MonomialIdeal,
    VariablePrime,
    colon,
    contains,
    ideal_eq,
    ideal_leq,
    initial_degree,
    intersect,
    is_squarefree,
    minimalize,
    multiply,
    power,
    radical,
    saturate,
    saturate_maximal,
    support,
)
from .decomposition import (
    Decomposition,
    IrreducibleComponent,
    PrimaryComponent,
    associated_primes,
    big_height,
    height,
    irreducible_decomposition,
    maximal_associated_primes,
    minimal_part,
    minimal_primes,
    primary_decomposition,
)
from .errors import (
    ContainmentSearchError,
    DomainError,
    ExponentOverflowError,
    ParseError,
    RingMismatchError,
    StrategyError,
    SympowError,
)
from .invariants import (
    WaldschmidtReport,
    alpha_sequence,
    lower_bound_resurgence,
    waldschmidt_approx,
    waldschmidt_exact,
    waldschmidt_extended_lp,
)
from . import kernels as _kernel_backend
from .kernels import available_backends, set_backend
from .lp import LPProblem, LPResult, Sense, Status, is_feasible, is_redundant, solve_lp
from .parsing import IdealExpression, parse_ideal
from .polyhedra import (
    HPolyhedron,
    PolyhedronStats,
    VPolyhedron,
    canonicalize,
    h_to_v,
    intersect_h,
    newton_polyhedron,
    polyhedron_dimension,
    polyhedron_stats,
    symbolic_polyhedron,
    v_to_h,
)
from .symbolic import (
    Strategy,
    SymbolicOptions,
    containment_problem,
    containment_problem_given_a,
    is_symbolic_equal_ordinary,
    localize_at_prime,
    symbolic_defect,
    symbolic_power,
)

__version__ = "0.1.0"


def __getattr__(name):
    if name == "BACKEND":
        return _kernel_backend.BACKEND
    raise AttributeError(f"module 'sympow' has no attribute {name!r}")
