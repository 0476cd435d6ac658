"""Degree-one rational maps x -> (ax+b)/(cx+d) acting on P^1(GF(q)).

A :class:`Mobius` is stored in canonical form: the first nonzero entry of
``(a, b, c, d)`` is 1.  Two maps are equal exactly when their canonical
coefficients agree.  ``m1 * m2`` means "apply m2, then m1", the same as
for :class:`~projperm.perm.Permutation`.
"""

from __future__ import annotations

import functools
import re
from array import array
from dataclasses import dataclass

from .errors import FieldError, ParseError
from .gf import FieldSpec
from .perm import Permutation

__all__ = [
    "Mobius",
    "mobius_eval",
    "mobius_compose",
    "mobius_inverse",
    "mobius_from_linear_poly",
    "is_polynomial",
    "mobius_to_perm",
    "perm_to_mobius",
    "invstar_perm",
    "all_mobius",
    "all_affine",
    "parse_mobius",
    "format_mobius",
]


@dataclass(frozen=True)
class Mobius:
    field: FieldSpec
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def new(cls, field: FieldSpec, a: int, b: int, c: int, d: int) -> Mobius:
        """Canonicalize and validate ``(ax+b)/(cx+d)``."""
        for v in (a, b, c, d):
            field.check(v)
        if field.sub(field.mul(a, d), field.mul(b, c)) == 0:
            raise FieldError(f"degenerate map: ({a}*x+{b})/({c}*x+{d}) has zero determinant")
        return cls._canonical(field, a, b, c, d)

    @classmethod
    def _canonical(cls, field, a, b, c, d):
        lead = next(v for v in (a, b, c, d) if v)
        if lead != 1:
            s = field.inv(lead)
            mul = field.mul
            a, b, c, d = mul(a, s), mul(b, s), mul(c, s), mul(d, s)
        return cls(field, a, b, c, d)

    @classmethod
    def identity(cls, field: FieldSpec) -> Mobius:
        return cls(field, 1, 0, 0, 1)

    @classmethod
    def reciprocal(cls, field: FieldSpec) -> Mobius:
        """x -> 1/x."""
        return cls(field, 0, 1, 1, 0)

    @classmethod
    def translation(cls, field: FieldSpec, t: int) -> Mobius:
        """x -> x + t."""
        return cls(field, 1, field.check(t), 0, 1)

    @classmethod
    def linear(cls, field: FieldSpec, a: int, b: int) -> Mobius:
        """x -> a*x + b with a != 0."""
        if a == 0:
            raise FieldError("a degree-one polynomial needs a nonzero leading coefficient")
        return cls.new(field, a, b, 0, 1)

    def key(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __lt__(self, other: Mobius) -> bool:
        return self.key() < other.key()

    def __call__(self, x: int) -> int:
        f = self.field
        q = f.q
        if x == q:
            return f.div(self.a, self.c) if self.c else q
        den = f.add(f.mul(self.c, x), self.d)
        if den == 0:
            return q
        return f.div(f.add(f.mul(self.a, x), self.b), den)

    def __mul__(self, other: Mobius) -> Mobius:
        if not isinstance(other, Mobius):
            return NotImplemented
        if other.field is not self.field and other.field != self.field:
            raise FieldError("cannot compose maps over different fields")
        f = self.field
        add, mul = f.add, f.mul
        a1, b1, c1, d1 = self.key()
        a2, b2, c2, d2 = other.key()
        return Mobius._canonical(
            f,
            add(mul(a1, a2), mul(b1, c2)),
            add(mul(a1, b2), mul(b1, d2)),
            add(mul(c1, a2), mul(d1, c2)),
            add(mul(c1, b2), mul(d1, d2)),
        )

    def inverse(self) -> Mobius:
        neg = self.field.neg
        return Mobius._canonical(self.field, self.d, neg(self.b), neg(self.c), self.a)

    def is_polynomial(self) -> bool:
        return self.c == 0

    def to_perm(self) -> Permutation:
        return mobius_to_perm(self)

    def __str__(self):
        return format_mobius(self)


def mobius_eval(m: Mobius, x: int) -> int:
    return m(x)


def mobius_compose(m1: Mobius, m2: Mobius) -> Mobius:
    """``m1 o m2``: apply m2 first."""
    return m1 * m2


def mobius_inverse(m: Mobius) -> Mobius:
    return m.inverse()


def mobius_from_linear_poly(field: FieldSpec, a: int, b: int) -> Mobius:
    return Mobius.linear(field, a, b)


def is_polynomial(m: Mobius) -> bool:
    return m.is_polynomial()


def mobius_to_perm(m: Mobius) -> Permutation:
    f = m.field
    return Permutation._trusted(f, tuple(m(x) for x in range(f.q + 1)))


def _hom(field: FieldSpec, y: int) -> tuple[int, int]:
    return (1, 0) if y == field.q else (y, 1)


def perm_to_mobius(sigma: Permutation) -> Mobius | None:
    """The unique Mobius map inducing sigma, or None if there is none.

    Interpolates the map sending 0, 1, inf to sigma(0), sigma(1), sigma(inf)
    and then checks it on every point.
    """
    f = sigma.field
    q = f.q
    mul, sub = f.mul, f.sub
    u = _hom(f, sigma.images[q])
    v = _hom(f, sigma.images[0])
    w = _hom(f, sigma.images[1])

    def det(x, y):
        return sub(mul(x[0], y[1]), mul(x[1], y[0]))

    duv = det(u, v)
    lam = f.div(det(w, v), duv)
    mu = f.div(det(u, w), duv)
    m = Mobius._canonical(f, mul(lam, u[0]), mul(mu, v[0]), mul(lam, u[1]), mul(mu, v[1]))
    if all(m(x) == y for x, y in enumerate(sigma.images)):
        return m
    return None


def invstar_perm(field: FieldSpec) -> Permutation:
    """The permutation induced by x^(q-2), extended to fix infinity."""
    return Permutation._trusted(
        field, tuple(field.inv0(x) for x in range(field.q)) + (field.q,)
    )


@functools.lru_cache(maxsize=None)
def all_mobius(field: FieldSpec) -> tuple[Mobius, ...]:
    """Every element of PGL(2, q), sorted by canonical coefficients."""
    q = field.q
    out = []
    mul, sub = field.mul, field.sub
    for a in range(2):
        for b in range(q if a else 2):
            for c in range(q if (a or b) else 2):
                for d in range(q):
                    if a == 0 and b == 0 and c == 0 and d != 1:
                        continue
                    if sub(mul(a, d), mul(b, c)):
                        out.append(Mobius(field, a, b, c, d))
    out.sort()
    return tuple(out)


@functools.lru_cache(maxsize=None)
def all_affine(field: FieldSpec) -> tuple[Mobius, ...]:
    """The q(q-1) degree-one polynomials a*x + b, as canonical Mobius maps."""
    return tuple(m for m in all_mobius(field) if m.is_polynomial())


@functools.lru_cache(maxsize=None)
def _inverse_tables(field: FieldSpec) -> array:
    # flat tables of m^-1 for m in all_mobius order; input to kernels.pgl_scan
    flat = array("i")
    for m in all_mobius(field):
        flat.extend(mobius_to_perm(m.inverse()).images)
    return flat


# --- text form ---

_INT = r"\s*(\d+)\s*"
_POLY_RE = re.compile(rf"^{_INT}\*\s*x\s*\+{_INT}$")
_FRAC_RE = re.compile(rf"^\(\s*{_INT}\*\s*x\s*\+{_INT}\)\s*/\s*\(\s*{_INT}\*\s*x\s*\+{_INT}\)$")


def format_mobius(m: Mobius) -> str:
    """``(a*x+b)/(c*x+d)``; polynomial maps print as ``a*x+b`` over denominator 1."""
    if m.c == 0:
        f = m.field
        return f"{f.div(m.a, m.d)}*x+{f.div(m.b, m.d)}"
    return f"({m.a}*x+{m.b})/({m.c}*x+{m.d})"


def parse_mobius(field: FieldSpec, text: str) -> Mobius:
    text = text.strip()
    mp = _POLY_RE.match(text)
    if mp:
        a, b = (int(g) for g in mp.groups())
        c, d = 0, 1
    else:
        mf = _FRAC_RE.match(text)
        if not mf:
            raise ParseError(f"bad degree-one map {text!r}")
        a, b, c, d = (int(g) for g in mf.groups())
    try:
        return Mobius.new(field, a, b, c, d)
    except FieldError as exc:
        raise ParseError(str(exc)) from None
