"""Permutations of the projective line over GF(q): chains of x^(q-2) with
degree-one maps, chains of star transpositions, and Carlitz rank."""

from .errors import DepthExhausted, FieldError, GuardError, ParseError, ProjpermError, VerificationError
from .gf import FieldSpec, field_new, format_field, parse_field
from .kernels import BACKEND
from .perm import (
    Permutation,
    StarStats,
    cycle_decomposition,
    format_perm,
    from_cycles,
    parse_perm,
    star_factorize,
    star_stats,
    transposition,
)
from .projline import Mobius, all_mobius, format_mobius, invstar_perm, mobius_to_perm, parse_mobius, perm_to_mobius
from .reps import (
    AlgebraicRep,
    CombinatorialRep,
    enumerate_A,
    enumerate_C,
    eval_algebraic,
    eval_combinatorial,
    format_rep,
    map_F,
    map_G,
    parse_rep,
    phi_step,
    recipe_backward,
    recipe_forward,
)
from .carlitz import (
    CrankBound,
    RankResult,
    carlitz_identity,
    carlitz_rank,
    carlitz_rank_oracle,
    crank_bound,
    decompose_carlitz,
    rank_distribution,
    zieve_identity,
)

__version__ = "0.1.0"
