"""Exact-rational models and law checkers for cancellative convex semilattices."""
from .algebra import (
    LawReport,
    ParamQuadruple,
    PolytopeModel,
    SemilatticeInstance,
    induced_leq,
    join,
    perspective,
    solve_assoc_from_pq,
    solve_assoc_from_pr,
    solve_swap_params,
)
from .lp import BACKEND, LinearProgram, LpOutcome, lp_solve
from .numeric import (
    DimensionError,
    DomainError,
    QVector,
    Rational,
    convex_combine,
    rational_make,
    vec,
    vector_cwise_sup,
    vector_linear,
)
from .polytope import (
    Polytope,
    canonicalize,
    contains_point,
    hull_join,
    is_sup_closed,
    mix,
    polytope_equal,
    support,
)
from .riesz import riesz_inf, riesz_sup, support_embed
from .sampling import Sampler
from .wspace import Witness, WMembershipResult, common_witness, w_join, w_membership

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DimensionError",
    "DomainError",
    "LawReport",
    "LinearProgram",
    "LpOutcome",
    "ParamQuadruple",
    "Polytope",
    "PolytopeModel",
    "QVector",
    "Rational",
    "Sampler",
    "SemilatticeInstance",
    "WMembershipResult",
    "Witness",
    "canonicalize",
    "common_witness",
    "contains_point",
    "convex_combine",
    "hull_join",
    "induced_leq",
    "is_sup_closed",
    "join",
    "lp_solve",
    "mix",
    "perspective",
    "polytope_equal",
    "rational_make",
    "riesz_inf",
    "riesz_sup",
    "solve_assoc_from_pq",
    "solve_assoc_from_pr",
    "solve_swap_params",
    "support",
    "support_embed",
    "vec",
    "vector_cwise_sup",
    "vector_linear",
    "w_join",
    "w_membership",
]
