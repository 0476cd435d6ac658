"""Permutations of the projective line P^1(GF(q)).

Points are integers ``0..q``: ``0..q-1`` are field elements by index and
``q`` is the point at infinity.  Composition is right to left, so
``p1 * p2`` applies ``p2`` first.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import FieldError, ParseError
from .gf import FieldSpec
from .kernels import star_distance

__all__ = [
    "Permutation",
    "StarStats",
    "transposition",
    "perm_identity",
    "perm_compose",
    "perm_inverse",
    "perm_apply",
    "cycle_decomposition",
    "star_stats",
    "star_factorize",
    "from_cycles",
    "parse_point",
    "format_point",
    "parse_perm",
    "format_perm",
    "random_perm",
]


def format_point(field: FieldSpec, x: int) -> str:
    return "inf" if x == field.q else str(x)


def parse_point(field: FieldSpec, text: str) -> int:
    text = text.strip()
    if text in ("inf", "oo", "∞"):
        return field.q
    try:
        x = int(text)
    except ValueError:
        raise ParseError(f"bad point {text!r}") from None
    if not 0 <= x < field.q:
        raise ParseError(f"point {x} outside GF({field.q})")
    return x


@dataclass(frozen=True)
class Permutation:
    """A bijection of the q+1 points of P^1(GF(q)), stored as an image table."""

    field: FieldSpec
    images: tuple[int, ...]

    def __post_init__(self):
        size = self.field.q + 1
        if len(self.images) != size or sorted(self.images) != list(range(size)):
            raise ValueError(f"{self.images} is not a permutation of {size} points")

    @classmethod
    def _trusted(cls, field: FieldSpec, images: tuple[int, ...]) -> Permutation:
        # skips the bijection check; callers guarantee it
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "images", images)
        return obj

    @classmethod
    def identity(cls, field: FieldSpec) -> Permutation:
        return cls._trusted(field, tuple(range(field.q + 1)))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.field is not self.field and other.field != self.field:
            raise FieldError("cannot compose permutations over different fields")
        mine = self.images
        return Permutation._trusted(self.field, tuple(mine[i] for i in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation._trusted(self.field, tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def fixes_infinity(self) -> bool:
        return self.images[-1] == self.field.q

    def cycles(self) -> list[list[int]]:
        return cycle_decomposition(self)

    def __str__(self):
        return format_perm(self)


def perm_identity(field: FieldSpec) -> Permutation:
    return Permutation.identity(field)


def perm_compose(p1: Permutation, p2: Permutation) -> Permutation:
    """``p1 o p2``: apply p2, then p1."""
    return p1 * p2


def perm_inverse(p: Permutation) -> Permutation:
    return p.inverse()


def perm_apply(p: Permutation, x: int) -> int:
    return p.images[x]


def transposition(b: int, field: FieldSpec) -> Permutation:
    """The star transposition swapping the field element b with infinity."""
    field.check(b)
    images = list(range(field.q + 1))
    images[b], images[field.q] = field.q, b
    return Permutation._trusted(field, tuple(images))


def from_cycles(field: FieldSpec, cycles: Iterable[Sequence[int]]) -> Permutation:
    images = list(range(field.q + 1))
    seen: set[int] = set()
    for cyc in cycles:
        for x in cyc:
            if not 0 <= x <= field.q:
                raise ValueError(f"point {x} outside P^1(GF({field.q}))")
            if x in seen:
                raise ValueError(f"point {x} appears in more than one cycle")
            seen.add(x)
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + 1) % len(cyc)]
    return Permutation._trusted(field, tuple(images))


def cycle_decomposition(p: Permutation) -> list[list[int]]:
    """Disjoint cycles of length >= 2, each starting at its smallest point.

    Infinity (index q) sorts after every field element, and the cycles are
    listed by their first point.
    """
    images = p.images
    seen = [False] * len(images)
    out = []
    for start in range(len(images)):
        if seen[start] or images[start] == start:
            continue
        cyc = [start]
        seen[start] = True
        x = images[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = images[x]
        out.append(cyc)
    return out


class StarStats(NamedTuple):
    s: int
    t: int
    moves_infinity: bool
    n: int


def star_stats(p: Permutation) -> StarStats:
    """Moved finite points, nontrivial orbits and the star distance n."""
    q = p.field.q
    cycles = cycle_decomposition(p)
    s = sum(1 for x in range(q) if p.images[x] != x)
    t = len(cycles)
    moves_inf = p.images[q] != q
    return StarStats(s, t, moves_inf, s + t - 1 if moves_inf else s + t)


def star_factorize(p: Permutation) -> list[int]:
    """A shortest word ``[b_1, ..., b_m]`` with ``p = (b_1,inf) o ... o (b_m,inf)``.

    A cycle ``(c_1 ... c_s)`` avoiding infinity contributes
    ``c_1, c_s, c_{s-1}, ..., c_2, c_1``; the cycle through infinity, rotated
    to ``(x_1 ... x_l inf)``, contributes ``x_l, ..., x_1``.
    """
    q = p.field.q
    word: list[int] = []
    for cyc in cycle_decomposition(p):
        if q in cyc:
            k = cyc.index(q)
            finite = cyc[k + 1:] + cyc[:k]
            word.extend(reversed(finite))
        else:
            word.append(cyc[0])
            word.extend(reversed(cyc[1:]))
            word.append(cyc[0])
    return word


def star_word_to_perm(field: FieldSpec, word: Sequence[int]) -> Permutation:
    """Evaluate ``(b_1,inf) o (b_2,inf) o ... o (b_m,inf)``."""
    q = field.q
    images = list(range(q + 1))
    # build right to left: images currently holds the composite of the suffix
    for b in reversed(word):
        # new = (b,inf) o current
        images = [q if y == b else b if y == q else y for y in images]
    return Permutation._trusted(field, tuple(images))


def star_distance_of(p: Permutation) -> int:
    """Same as ``star_stats(p).n``, through the compiled kernel when available."""
    return star_distance(p.images)


# --- text forms ---

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def format_perm(p: Permutation, one_line: bool = False) -> str:
    f = p.field
    if one_line:
        return "perm:" + ",".join(format_point(f, y) for y in p.images)
    cycles = cycle_decomposition(p)
    if not cycles:
        return "()"
    return "".join(
        "(" + " ".join(format_point(f, x) for x in cyc) + ")" for cyc in cycles
    )


def parse_perm(field: FieldSpec, text: str) -> Permutation:
    """Parse cycle notation ``(0 3)(1 2 inf)`` or one-line ``perm:...``.

    In one-line form the image of infinity may be omitted (it is then fixed).
    ``()``, ``id`` and the empty string denote the identity.
    """
    text = text.strip()
    if text.startswith("perm:"):
        body = text[5:].strip()
        entries = [parse_point(field, t) for t in body.split(",")] if body else []
        if len(entries) == field.q:
            entries.append(field.q)
        if len(entries) != field.q + 1:
            raise ParseError(
                f"one-line permutation needs {field.q} or {field.q + 1} entries"
            )
        try:
            return Permutation(field, tuple(entries))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if text in ("", "id", "()"):
        return Permutation.identity(field)
    if _CYCLE_RE.sub("", text).strip():
        raise ParseError(f"bad cycle notation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        pts = [parse_point(field, t) for t in re.split(r"[\s,]+", body.strip()) if t]
        if len(pts) >= 2:
            cycles.append(pts)
    try:
        return from_cycles(field, cycles)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def random_perm(field: FieldSpec, rng: random.Random, fix_infinity: bool = False) -> Permutation:
    """Uniform random permutation of P^1, or of GF(q) extended by fixing infinity."""
    size = field.q if fix_infinity else field.q + 1
    images = list(range(size))
    rng.shuffle(images)
    if fix_infinity:
        images.append(field.q)
    return Permutation._trusted(field, tuple(images))
