"""Algebraic and combinatorial chain representations and the maps between them.

An :class:`AlgebraicRep` ``(mu, [a_1..a_k])`` denotes

    mu o x^(q-2) o (x - a_k) o ... o x^(q-2) o (x - a_1)

and a :class:`CombinatorialRep` ``(nu, [b_1..b_k])`` denotes

    nu o (b_1, inf) o (b_2, inf) o ... o (b_k, inf),

both applied right to left.  :func:`recipe_forward` and
:func:`recipe_backward` convert between them without changing the
permutation, using the coefficient maps :func:`map_F` and :func:`map_G`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import GuardError, ParseError
from .gf import FieldSpec
from .perm import Permutation, star_word_to_perm
from .projline import Mobius, format_mobius, invstar_perm, mobius_to_perm, parse_mobius, perm_to_mobius

__all__ = [
    "AlgebraicRep",
    "CombinatorialRep",
    "eval_algebraic",
    "eval_combinatorial",
    "map_F",
    "phi_step",
    "map_G",
    "recipe_forward",
    "recipe_backward",
    "enumerate_A",
    "enumerate_C",
    "parse_rep",
    "format_rep",
    "ENUM_MAX_Q",
    "ENUM_MAX_K",
]

ENUM_MAX_Q = 9
ENUM_MAX_K = 4


@dataclass(frozen=True)
class AlgebraicRep:
    mu: Mobius
    a_list: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "a_list", tuple(self.a_list))

    @property
    def field(self) -> FieldSpec:
        return self.mu.field

    @property
    def k(self) -> int:
        return len(self.a_list)

    def evaluate(self) -> Permutation:
        return eval_algebraic(self)

    def __str__(self):
        return format_rep(self)


@dataclass(frozen=True)
class CombinatorialRep:
    nu: Mobius
    b_list: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "b_list", tuple(self.b_list))

    @property
    def field(self) -> FieldSpec:
        return self.nu.field

    @property
    def k(self) -> int:
        return len(self.b_list)

    def evaluate(self) -> Permutation:
        return eval_combinatorial(self)

    def __str__(self):
        return format_rep(self)


def _algebraic_chain(field: FieldSpec, a_list: Sequence[int]) -> tuple[int, ...]:
    # x^(q-2) o (x - a_k) o ... o x^(q-2) o (x - a_1), as an image table
    inv0, sub = field.inv0, field.sub
    q = field.q
    images = list(range(q + 1))
    for a in a_list:
        images = [y if y == q else inv0(sub(y, a)) for y in images]
    return tuple(images)


def eval_algebraic(r: AlgebraicRep) -> Permutation:
    f = r.field
    chain = _algebraic_chain(f, r.a_list)
    mu = r.mu
    return Permutation._trusted(f, tuple(mu(y) for y in chain))


def eval_combinatorial(r: CombinatorialRep) -> Permutation:
    return mobius_to_perm(r.nu) * star_word_to_perm(r.field, r.b_list)


def map_F(a_list: Sequence[int], field: FieldSpec) -> list[int]:
    """Coefficients of the star transpositions matching an algebraic chain.

    ``b_i = c_{i,i}`` where ``c_{i,0} = 0`` and
    ``c_{i,j} = inv0(c_{i,j-1}) + a_{i-j+1}``.
    """
    inv0, add = field.inv0, field.add
    out = []
    for i in range(1, len(a_list) + 1):
        c = 0
        for j in range(1, i + 1):
            c = add(inv0(c), a_list[i - j])
        out.append(c)
    return out


def phi_step(e_list: Sequence[int], field: FieldSpec) -> list[int]:
    """``(e_1, ..., e_l) -> (inv0(e_2 - e_1), ..., inv0(e_l - e_1))``."""
    if len(e_list) < 2:
        raise ValueError("phi_step needs at least two entries")
    inv0, sub = field.inv0, field.sub
    e1 = e_list[0]
    return [inv0(sub(e, e1)) for e in e_list[1:]]


def map_G(b_list: Sequence[int], field: FieldSpec) -> list[int]:
    """Inverse of :func:`map_F`: ``a_i`` is the head of the (i-1)-fold phi_step iterate."""
    cur = list(b_list)
    out = []
    while cur:
        out.append(cur[0])
        if len(cur) == 1:
            break
        cur = phi_step(cur, field)
    return out


def _nu0(field: FieldSpec, a_list: Sequence[int]) -> Mobius:
    # x^-1 o (x - a_k) o ... o x^-1 o (x - a_1)
    recip = Mobius.reciprocal(field)
    m = Mobius.identity(field)
    for a in a_list:
        m = recip * Mobius.translation(field, field.neg(a)) * m
    return m


def _mu0(field: FieldSpec, a_list: Sequence[int]) -> Mobius:
    # (x + a_1) o x^-1 o (x + a_2) o x^-1 o ... o (x + a_k) o x^-1
    recip = Mobius.reciprocal(field)
    m = Mobius.identity(field)
    for a in reversed(a_list):
        m = Mobius.translation(field, a) * recip * m
    return m


def recipe_forward(r: AlgebraicRep) -> CombinatorialRep:
    f = r.field
    return CombinatorialRep(r.mu * _nu0(f, r.a_list), tuple(map_F(r.a_list, f)))


def recipe_backward(r: CombinatorialRep) -> AlgebraicRep:
    f = r.field
    a_list = map_G(r.b_list, f)
    return AlgebraicRep(r.nu * _mu0(f, a_list), tuple(a_list))


def _check_guard(field: FieldSpec, k: int):
    if k < 1:
        raise ValueError("k must be positive")
    if field.q > ENUM_MAX_Q or k > ENUM_MAX_K:
        raise GuardError(
            f"enumeration limited to q <= {ENUM_MAX_Q}, k <= {ENUM_MAX_K} "
            f"(got q={field.q}, k={k})"
        )


def enumerate_C(sigma: Permutation, k: int) -> set[CombinatorialRep]:
    """All ``(nu, b)`` with ``nu o (b_1,inf) o ... o (b_k,inf) == sigma``."""
    f = sigma.field
    _check_guard(f, k)
    out = set()
    for b in itertools.product(range(f.q), repeat=k):
        # the star word is an involution product; its inverse is the reversed word
        residue = sigma * star_word_to_perm(f, b[::-1])
        nu = perm_to_mobius(residue)
        if nu is not None:
            out.add(CombinatorialRep(nu, b))
    return out


def enumerate_A(sigma: Permutation, k: int) -> set[AlgebraicRep]:
    """All ``(mu, a)`` whose algebraic chain evaluates to sigma."""
    f = sigma.field
    _check_guard(f, k)
    out = set()
    for a in itertools.product(range(f.q), repeat=k):
        chain = Permutation._trusted(f, _algebraic_chain(f, a))
        mu = perm_to_mobius(sigma * chain.inverse())
        if mu is not None:
            out.add(AlgebraicRep(mu, a))
    return out


# --- text form ---

_REP_RE = re.compile(r"^\s*(alg|comb)\s*:\s*(mu|nu)\s*=\s*(.+?)\s*;\s*(a|b)\s*=\s*\[([^\]]*)\]\s*$")


def _format_list(xs) -> str:
    return "[" + ",".join(map(str, xs)) + "]"


def format_rep(r) -> str:
    if isinstance(r, AlgebraicRep):
        return f"alg: mu={format_mobius(r.mu)}; a={_format_list(r.a_list)}"
    return f"comb: nu={format_mobius(r.nu)}; b={_format_list(r.b_list)}"


def parse_rep(field: FieldSpec, text: str):
    m = _REP_RE.match(text)
    if not m:
        raise ParseError(f"bad representation {text!r}")
    kind, mname, mtext, lname, body = m.groups()
    if (kind, mname, lname) not in (("alg", "mu", "a"), ("comb", "nu", "b")):
        raise ParseError(f"mismatched representation labels in {text!r}")
    mob = parse_mobius(field, mtext)
    try:
        coeffs = tuple(int(t) for t in body.split(",")) if body.strip() else ()
    except ValueError:
        raise ParseError(f"bad coefficient list in {text!r}") from None
    for cft in coeffs:
        if not 0 <= cft < field.q:
            raise ParseError(f"coefficient {cft} outside GF({field.q})")
    return AlgebraicRep(mob, coeffs) if kind == "alg" else CombinatorialRep(mob, coeffs)
