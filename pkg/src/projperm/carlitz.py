"""Carlitz rank and Carlitz decompositions of permutations of GF(q).

Permutations of GF(q) are handled as permutations of P^1 fixing infinity.
The rank is computed by scanning PGL(2, q): it equals the smallest star
distance of ``nu^-1 o f`` over all degree-one rational maps ``nu``.  An
independent breadth-first search over compositions of x^(q-2) with affine
maps (:func:`carlitz_rank_oracle`) cross-checks it for small q.
"""

from __future__ import annotations

import functools
import itertools
import random
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .errors import DepthExhausted, FieldError, GuardError, VerificationError
from .gf import FieldSpec
from .perm import Permutation, random_perm, star_factorize, star_stats, transposition
from .projline import (
    Mobius,
    _inverse_tables,
    all_affine,
    all_mobius,
    mobius_to_perm,
)
from .reps import AlgebraicRep, CombinatorialRep, eval_algebraic, recipe_backward

__all__ = [
    "RankResult",
    "CrankBound",
    "carlitz_rank",
    "carlitz_rank_oracle",
    "crank_bound",
    "decompose_carlitz",
    "carlitz_identity",
    "zieve_identity",
    "carlitz_printed_chain",
    "zieve_printed_chain",
    "zieve_original_chain",
    "normalize_polynomial_chain",
    "eval_polynomial_chain",
    "transposition_0a",
    "rank_distribution",
    "ORACLE_MAX_Q",
    "EXHAUSTIVE_MAX_Q",
]

ORACLE_MAX_Q = 9
EXHAUSTIVE_MAX_Q = 6


@dataclass(frozen=True)
class RankResult:
    rank: int
    witness: CombinatorialRep
    method: str = "pgl-scan"

    def algebraic(self) -> AlgebraicRep:
        return recipe_backward(self.witness)


@dataclass(frozen=True)
class CrankBound:
    s: int
    t: int
    n: int
    exact: bool


def _require_fixes_infinity(f: Permutation):
    if not f.fixes_infinity():
        raise ValueError("expected a permutation of GF(q), i.e. one fixing infinity")


def carlitz_rank(f: Permutation) -> RankResult:
    """Exact Carlitz rank with a minimal combinatorial witness.

    Ties between minimizing maps are broken by the smallest canonical
    coefficients ``(a, b, c, d)`` of ``nu``.
    """
    _require_fixes_infinity(f)
    field = f.field
    maps = all_mobius(field)
    idx, n = kernels.pgl_scan(f.images, _inverse_tables(field), len(maps))
    nu = maps[idx]
    word = star_factorize(mobius_to_perm(nu.inverse()) * f)
    if len(word) != n:
        raise VerificationError(f"star word of length {len(word)} for distance {n}")
    return RankResult(n, CombinatorialRep(nu, tuple(word)))


@functools.lru_cache(maxsize=16)
def _bfs_levels(field: FieldSpec, max_depth: int) -> bytearray:
    q = field.q
    invstar = [field.inv0(x) for x in range(q)]
    affine = []
    for m in all_affine(field):
        affine.extend(m(x) for x in range(q))
    return kernels.bfs_levels(q, invstar, affine, len(affine) // q, max_depth)


def carlitz_rank_oracle(f: Permutation, max_depth: int | None = None) -> int:
    """Carlitz rank by breadth-first search from the affine maps.

    Level 0 holds the q(q-1) affine permutations and level l+1 the maps
    ``theta o x^(q-2) o g`` with g at level l.  Only for q <= 9.
    """
    _require_fixes_infinity(f)
    field = f.field
    q = field.q
    if q > ORACLE_MAX_Q:
        raise GuardError(f"breadth-first oracle limited to q <= {ORACLE_MAX_Q}")
    if max_depth is None:
        max_depth = q + 2
    levels = _bfs_levels(field, max_depth)
    level = levels[kernels.lehmer_rank(f.images[:q])]
    if level == kernels.UNREACHED:
        raise DepthExhausted(f"{f} not reached within depth {max_depth}")
    return level


def crank_bound(mu: Mobius, sigma: Permutation) -> CrankBound:
    """Upper bound on the Carlitz rank of ``mu o sigma`` from the cycle type of sigma.

    The bound is exact when ``q >= n + s + 2``.
    """
    composite = mobius_to_perm(mu) * sigma
    if not composite.fixes_infinity():
        raise ValueError("mu o sigma moves infinity, so it is not a permutation of GF(q)")
    st = star_stats(sigma)
    return CrankBound(st.s, st.t, st.n, sigma.field.q >= st.n + st.s + 2)


def decompose_carlitz(f: Permutation) -> AlgebraicRep:
    """Write f as ``mu o x^(q-2) o (x - a_k) o ... o x^(q-2) o (x - a_1)``.

    k equals s + t for f's cycle type and mu is always a polynomial.
    """
    _require_fixes_infinity(f)
    field = f.field
    rep = recipe_backward(CombinatorialRep(Mobius.identity(field), tuple(star_factorize(f))))
    if eval_algebraic(rep) != f:
        raise VerificationError(f"decomposition of {f} does not evaluate back to it")
    if not rep.mu.is_polynomial():
        raise VerificationError(f"outer map {rep.mu} of a permutation of GF(q) is not a polynomial")
    return rep


# --- the two classical chains for (0 a) ---


def transposition_0a(field: FieldSpec, a: int) -> Permutation:
    """The 2-cycle (0 a) of GF(q), fixing infinity."""
    return transposition(0, field) * transposition(a, field) * transposition(0, field)


def carlitz_printed_chain(field: FieldSpec, a: int) -> list[tuple[int, int]]:
    """``(-a^2 x) o J o (x - a) o J o (x + 1/a) o J o (x - a)`` as (slope, intercept) pairs."""
    neg, mul, inv = field.neg, field.mul, field.inv
    return [(neg(mul(a, a)), 0), (1, neg(a)), (1, inv(a)), (1, neg(a))]


def zieve_printed_chain(field: FieldSpec, a: int) -> list[tuple[int, int]]:
    """``(-a^2 x + a) o J o (x + a) o J o (x - 1/a) o J o x``."""
    neg, mul, inv = field.neg, field.mul, field.inv
    return [(neg(mul(a, a)), a), (1, a), (1, neg(inv(a))), (1, 0)]


def zieve_original_chain(field: FieldSpec, a: int) -> list[tuple[int, int]]:
    """``(-a x + a) o J o (-x + 1) o J o (-x + 1) o J o (x / a)``, before normalizing."""
    neg, inv = field.neg, field.inv
    return [(neg(a), a), (neg(1), 1), (neg(1), 1), (inv(a), 0)]


def eval_polynomial_chain(field: FieldSpec, thetas: Sequence[tuple[int, int]]) -> Permutation:
    """Evaluate ``theta_0 o J o theta_1 o ... o J o theta_n`` pointwise (J = x^(q-2))."""
    add, mul, inv0 = field.add, field.mul, field.inv0
    images = []
    for x in range(field.q):
        y = x
        for i, (alpha, beta) in enumerate(reversed(thetas)):
            if i:
                y = inv0(y)
            y = add(mul(alpha, y), beta)
        images.append(y)
    images.append(field.q)
    return Permutation(field, tuple(images))


def normalize_polynomial_chain(field: FieldSpec, thetas: Sequence[tuple[int, int]]) -> AlgebraicRep:
    """Make every inner degree-one polynomial monic, absorbing scalars into the first.

    Uses ``J o (c x) = (x / c) o J``; the result is an :class:`AlgebraicRep`
    whose inner factors are ``x - a_i``.
    """
    mul, neg, inv, div = field.mul, field.neg, field.inv, field.div
    carry = 1
    a_list = []
    for alpha, beta in reversed(thetas[1:]):
        if alpha == 0:
            raise FieldError("chain factor has zero slope")
        slope = mul(alpha, carry)
        a_list.append(neg(div(beta, slope)))
        carry = inv(slope)
    alpha0, beta0 = thetas[0]
    return AlgebraicRep(Mobius.linear(field, mul(alpha0, carry), beta0), tuple(a_list))


def _identity_from_word(field: FieldSpec, a: int, word, printed_chain) -> AlgebraicRep:
    if a == 0:
        raise ValueError("a must be nonzero")
    field.check(a)
    rep = recipe_backward(CombinatorialRep(Mobius.identity(field), tuple(word)))
    printed = normalize_polynomial_chain(field, printed_chain(field, a))
    if rep != printed:
        raise VerificationError(f"derived chain {rep} differs from printed chain {printed}")
    if eval_algebraic(rep) != transposition_0a(field, a):
        raise VerificationError(f"{rep} does not evaluate to (0 {a})")
    return rep


def carlitz_identity(field: FieldSpec, a: int) -> AlgebraicRep:
    """Chain for (0 a) obtained from ``(a,inf) o (0,inf) o (a,inf)``."""
    return _identity_from_word(field, a, (a, 0, a), carlitz_printed_chain)


def zieve_identity(field: FieldSpec, a: int) -> AlgebraicRep:
    """Chain for (0 a) obtained from ``(0,inf) o (a,inf) o (0,inf)``."""
    return _identity_from_word(field, a, (0, a, 0), zieve_printed_chain)


def rank_distribution(
    field: FieldSpec, sample: int | None = None, seed: int = 0
) -> dict[int, int]:
    """Histogram of Carlitz ranks over permutations of GF(q).

    Exhaustive (q <= 6) when ``sample`` is None; otherwise counts ranks of
    ``sample`` uniformly random permutations drawn with the given seed.
    """
    q = field.q
    hist: Counter[int] = Counter()
    if sample is None:
        if q > EXHAUSTIVE_MAX_Q:
            raise GuardError(f"exhaustive distribution limited to q <= {EXHAUSTIVE_MAX_Q}")
        for images in itertools.permutations(range(q)):
            f = Permutation._trusted(field, images + (q,))
            hist[carlitz_rank(f).rank] += 1
    else:
        rng = random.Random(seed)
        for _ in range(sample):
            hist[carlitz_rank(random_perm(field, rng, fix_infinity=True)).rank] += 1
    return dict(sorted(hist.items()))
