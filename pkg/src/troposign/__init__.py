"""Exact signed tropical arithmetic, polars, matrix cones and lifts."""

from .cones import (
    ConeVerdict,
    cp_factorize,
    is_copositive,
    is_cp,
    is_cpsd,
    is_pd_signed,
    is_psd_signed,
    is_psd_trop,
)
from .core import (
    BOT,
    MINUS_ONE,
    NEG_INF,
    ONE,
    TOP,
    ZERO,
    Bal,
    Neg,
    Pos,
    SignedTrop,
    TropicalError,
    add,
    balances,
    geq,
    gt,
    leq,
    lt,
    modulus,
    mul,
    neg,
    sign_class,
    sqrt_pos,
)
from .linalg import (
    comatrix,
    det_signed,
    dot_signed,
    dot_trop,
    frobenius,
    kleene_star,
    restrict,
    restrict_complement,
    support,
)
from .lift import (
    RationalLift,
    lift_psd,
    lift_scalar,
    sval_extract,
    verify_collapse,
    verify_polar_commutation,
)
from .opt import copositive_qp_value, eval_poly, minimize_poly, poly_roots, solve_quadratic
from .polar import (
    SignedPair,
    check_bend_axioms,
    hat_oplus,
    hat_oplus_vee,
    one_sided_contains,
    oplus_i,
    polar_contains,
    project_onto_hull,
    saturate_diagonal,
    separate,
    two_sided_contains,
    vee_map,
)
from .sat import encode_3sat, feasibility_bruteforce

__version__ = "0.1.0"
