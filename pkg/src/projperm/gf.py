"""Arithmetic in finite fields GF(p^n) with small q.

Elements are plain integers in ``range(q)``.  The integer ``i`` stands for
the polynomial ``c_0 + c_1*alpha + ... + c_{n-1}*alpha^(n-1)`` where
``c_0, c_1, ...`` are the base-p digits of ``i`` (least significant first)
and ``alpha`` is a root of the field's modulus.  So ``0`` is the additive
identity, ``1`` the multiplicative identity, and for a prime field the index
is simply the residue.

Moduli are given most-significant coefficient first, as in the text form
``q=3^2;mod=1,0,1`` for ``x^2 + 1``.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass, field

from .errors import FieldError, ParseError

__all__ = [
    "FieldSpec",
    "field_new",
    "default_modulus",
    "is_irreducible",
    "parse_field",
    "format_field",
    "prime_powers",
]

#: Largest order for which a default modulus is supplied.
DEFAULT_MODULUS_LIMIT = 512


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, n)`` with ``q == p**n`` or None."""
    if q < 2:
        return None
    p = next(d for d in itertools.count(2) if q % d == 0)
    n = 0
    while q % p == 0:
        q //= p
        n += 1
    return (p, n) if q == 1 else None


def prime_powers(lo: int, hi: int) -> list[int]:
    """All prime powers q with ``lo <= q <= hi``."""
    return [q for q in range(max(lo, 2), hi + 1) if _prime_power(q)]


# --- polynomials over Z_p, coefficient lists least significant first ---


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num modulo den over Z_p (den has nonzero leading coefficient)."""
    num = _trim(list(num))
    den = _trim(list(den))
    lead_inv = pow(den[-1], p - 2, p)
    while len(num) >= len(den):
        coef = num[-1] * lead_inv % p
        shift = len(num) - len(den)
        for i, d in enumerate(den):
            num[shift + i] = (num[shift + i] - coef * d) % p
        _trim(num)
    return num


def is_irreducible(modulus: tuple[int, ...] | list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2.

    ``modulus`` is most-significant first and must have nonzero leading term.
    """
    poly = list(reversed(modulus))
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n over Z_p.

    Candidates are ordered by their coefficient vector read most-significant
    first below the leading 1, so for ``(3, 2)`` this is ``x^2 + 1``.
    """
    if n == 1:
        return (1, 0)
    if p**n > DEFAULT_MODULUS_LIMIT:
        raise FieldError(
            f"no built-in modulus for q={p}^{n}; supply one explicitly"
        )
    for rest in itertools.product(range(p), repeat=n):
        cand = (1,) + rest
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("irreducible polynomials exist in every degree")


@dataclass(frozen=True)
class FieldSpec:
    """The finite field of order ``q = p**n``.

    Operation tables are built lazily on first use and shared by every
    operation; instances are immutable and hashable.
    """

    p: int
    n: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.n)

    def __repr__(self):
        return f"FieldSpec({format_field(self)!r})"

    # --- tables ---

    def _to_coeffs(self, x: int) -> list[int]:
        out = []
        for _ in range(self.n):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def _from_coeffs(self, c: list[int]) -> int:
        x = 0
        for coef in reversed(c):
            x = x * self.p + coef
        return x

    @functools.cached_property
    def _add(self) -> tuple[tuple[int, ...], ...]:
        p, q = self.p, self.q
        if self.n == 1:
            return tuple(tuple((x + y) % p for y in range(q)) for x in range(q))
        digits = [self._to_coeffs(x) for x in range(q)]
        return tuple(
            tuple(
                self._from_coeffs([(a + b) % p for a, b in zip(digits[x], digits[y])])
                for y in range(q)
            )
            for x in range(q)
        )

    @functools.cached_property
    def _neg(self) -> tuple[int, ...]:
        add = self._add
        return tuple(row.index(0) for row in add)

    @functools.cached_property
    def _mul(self) -> tuple[tuple[int, ...], ...]:
        p, q = self.p, self.q
        if self.n == 1:
            return tuple(tuple(x * y % p for y in range(q)) for x in range(q))
        mod_low = list(reversed(self.modulus))
        digits = [self._to_coeffs(x) for x in range(q)]
        rows = []
        for x in range(q):
            row = []
            for y in range(q):
                prod = [0] * (2 * self.n - 1)
                for i, a in enumerate(digits[x]):
                    if a:
                        for j, b in enumerate(digits[y]):
                            prod[i + j] += a * b
                rem = _poly_mod([c % p for c in prod], mod_low, p)
                row.append(self._from_coeffs(rem))
            rows.append(tuple(row))
        return tuple(rows)

    @functools.cached_property
    def _inv0(self) -> tuple[int, ...]:
        mul = self._mul
        return (0,) + tuple(mul[x].index(1) for x in range(1, self.q))

    # --- element operations ---

    def elements(self) -> range:
        return range(self.q)

    def check(self, x: int) -> int:
        """Validate an element index and return it."""
        if not isinstance(x, int) or not 0 <= x < self.q:
            raise FieldError(f"{x!r} is not an element of GF({self.q})")
        return x

    def add(self, x: int, y: int) -> int:
        return self._add[x][y]

    def sub(self, x: int, y: int) -> int:
        return self._add[x][self._neg[y]]

    def neg(self, x: int) -> int:
        return self._neg[x]

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y]

    def inv(self, x: int) -> int:
        """Multiplicative inverse.  Raises ZeroDivisionError for 0; see :meth:`inv0`."""
        if x == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        return self._inv0[x]

    def div(self, x: int, y: int) -> int:
        return self._mul[x][self.inv(y)]

    def inv0(self, x: int) -> int:
        """The map induced by x^(q-2): 0 goes to 0, everything else to its inverse."""
        return self._inv0[x]

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        mul = self._mul
        result, base = 1, x
        while e:
            if e & 1:
                result = mul[result][base]
            base = mul[base][base]
            e >>= 1
        return result

    def add_table(self) -> tuple[tuple[int, ...], ...]:
        return self._add

    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        return self._mul


def field_new(p: int, n: int = 1, modulus=None) -> FieldSpec:
    """Validate parameters and build a :class:`FieldSpec`.

    ``modulus`` is a coefficient sequence, most significant first, length
    ``n + 1``.  It is ignored for prime fields.  When omitted for ``n > 1``
    the built-in default is used (available for q <= 512).
    """
    if not isinstance(p, int) or not _is_prime(p):
        raise FieldError(f"characteristic {p!r} is not prime")
    if not isinstance(n, int) or n < 1:
        raise FieldError(f"extension degree {n!r} must be a positive integer")
    if p**n <= 2:
        raise FieldError("q must exceed 2")
    if n == 1:
        return FieldSpec(p, 1, (1, 0))
    if modulus is None:
        return FieldSpec(p, n, default_modulus(p, n))
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != n + 1:
        raise FieldError(f"modulus must have {n + 1} coefficients, got {len(modulus)}")
    if any(not 0 <= c < p for c in modulus):
        raise FieldError(f"modulus coefficients must lie in [0, {p})")
    if modulus[0] != 1:
        raise FieldError("modulus must be monic")
    if not is_irreducible(modulus, p):
        raise FieldError(f"modulus {modulus} is reducible over Z_{p}")
    return FieldSpec(p, n, modulus)


_FIELD_RE = re.compile(
    r"^\s*q\s*=\s*(\d+)(?:\s*\^\s*(\d+))?\s*(?:;\s*mod\s*=\s*([\d\s,]+))?\s*$"
)


def parse_field(text: str) -> FieldSpec:
    """Parse ``q=<p>^<n>[;mod=<c_n>,...,<c_0>]``.

    ``q=9`` (without the exponent) is accepted for any prime power.
    """
    m = _FIELD_RE.match(text)
    if not m:
        raise ParseError(f"bad field description {text!r}")
    base, exp, mod = m.groups()
    if exp is None:
        pp = _prime_power(int(base))
        if pp is None:
            raise FieldError(f"{base} is not a prime power")
        p, n = pp
    else:
        p, n = int(base), int(exp)
    modulus = None
    if mod is not None:
        try:
            modulus = [int(c) for c in mod.split(",")]
        except ValueError:
            raise ParseError(f"bad modulus in {text!r}") from None
    return field_new(p, n, modulus)


def format_field(f: FieldSpec) -> str:
    if f.n == 1:
        return f"q={f.p}"
    return f"q={f.p}^{f.n};mod=" + ",".join(map(str, f.modulus))
