"""Self-check suites run by ``projperm verify``.

Each suite takes a field and a seeded RNG and returns a :class:`SuiteResult`.
Suites whose size guard does not admit the field report ``skipped``.
Exhaustive where cheap, sampled otherwise.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field as dc_field
from typing import Callable

from .carlitz import (
    ORACLE_MAX_Q,
    carlitz_identity,
    carlitz_rank,
    carlitz_rank_oracle,
    crank_bound,
    decompose_carlitz,
    transposition_0a,
    zieve_identity,
)
from .gf import FieldSpec
from .perm import Permutation, random_perm, star_factorize, star_stats, star_word_to_perm, transposition
from .projline import Mobius, all_mobius, invstar_perm, mobius_to_perm, perm_to_mobius
from .reps import (
    ENUM_MAX_Q,
    AlgebraicRep,
    CombinatorialRep,
    enumerate_A,
    enumerate_C,
    eval_algebraic,
    eval_combinatorial,
    map_F,
    map_G,
    recipe_backward,
    recipe_forward,
)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = dc_field(default_factory=list)
    skipped: str | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        if self.skipped:
            return "skip"
        return "pass" if self.ok else "fail"

    def expect(self, cond: bool, what: str):
        self.checked += 1
        if not cond and len(self.failures) < 20:
            self.failures.append(what)


SUITES: dict[str, Callable[[FieldSpec, random.Random], SuiteResult]] = {}


def suite(name):
    def register(fn):
        def run(field, rng):
            res = SuiteResult(name)
            fn(field, rng, res)
            return res

        SUITES[name] = run
        return fn

    return register


def _sample_mobius(field, rng, count):
    maps = all_mobius(field)
    if len(maps) <= count:
        return list(maps)
    return rng.sample(maps, count)


@suite("gf-axioms")
def _gf_axioms(f, rng, res):
    q = f.q
    if q <= 16:
        triples = itertools.product(range(q), repeat=3)
    else:
        triples = ((rng.randrange(q), rng.randrange(q), rng.randrange(q)) for _ in range(4000))
    add, mul = f.add, f.mul
    for x, y, z in triples:
        res.expect(add(add(x, y), z) == add(x, add(y, z)), f"add assoc {x},{y},{z}")
        res.expect(mul(mul(x, y), z) == mul(x, mul(y, z)), f"mul assoc {x},{y},{z}")
        res.expect(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)), f"distrib {x},{y},{z}")
    for x in range(q):
        res.expect(add(x, f.neg(x)) == 0, f"neg {x}")
        if x:
            res.expect(mul(x, f.inv(x)) == 1, f"inv {x}")


@suite("inv0")
def _inv0(f, rng, res):
    for x in range(f.q):
        res.expect(f.inv0(x) == f.pow(x, f.q - 2), f"inv0({x}) != x^(q-2)")
        res.expect(f.inv0(f.inv0(x)) == x, f"inv0 not an involution at {x}")


@suite("pgl")
def _pgl(f, rng, res):
    maps = all_mobius(f)
    res.expect(len(maps) == f.q**3 - f.q, f"|PGL| = {len(maps)}")
    for m in _sample_mobius(f, rng, 400):
        res.expect(perm_to_mobius(mobius_to_perm(m)) == m, f"round trip {m}")
        res.expect(m * m.inverse() == Mobius.identity(f), f"inverse {m}")
    ms = _sample_mobius(f, rng, 40)
    for m1, m2 in itertools.product(ms, ms):
        res.expect(mobius_to_perm(m1 * m2) == mobius_to_perm(m1) * mobius_to_perm(m2), f"hom {m1},{m2}")


@suite("klein")
def _klein(f, rng, res):
    ident = Permutation.identity(f)
    recip = mobius_to_perm(Mobius.reciprocal(f))
    star = invstar_perm(f)
    swap = transposition(0, f)
    group = {ident, recip, star, swap}
    res.expect(recip * star == swap, "x^-1 o x^(q-2) != (0,inf)")
    for g, h in itertools.product(group, group):
        res.expect(g * h in group, "not closed")
    for g in group:
        res.expect((g * g).is_identity(), "element of order > 2")


@suite("commute")
def _commute(f, rng, res):
    star = invstar_perm(f)
    for a, b in itertools.product(range(f.q), repeat=2):
        shift = mobius_to_perm(Mobius.translation(f, f.neg(a)))
        res.expect(
            shift * transposition(b, f) == transposition(f.sub(b, a), f) * shift,
            f"translation a={a} b={b}",
        )
    for b in range(f.q):
        res.expect(star * transposition(b, f) == transposition(f.inv0(b), f) * star, f"invstar b={b}")


@suite("two-cycle")
def _two_cycle(f, rng, res):
    star = invstar_perm(f)
    recip = Mobius.reciprocal(f)
    for a in range(f.q):
        outer = mobius_to_perm(Mobius.translation(f, a) * recip)
        inner = mobius_to_perm(Mobius.translation(f, f.neg(a)))
        res.expect(outer * star * inner == transposition(a, f), f"a={a}")


def _swap(field, u, v):
    images = list(range(field.q + 1))
    images[u], images[v] = v, u
    return Permutation(field, tuple(images))


@suite("conjugation")
def _conjugation(f, rng, res):
    maps = [invstar_perm(f)] + [mobius_to_perm(m) for m in _sample_mobius(f, rng, 12)]
    pairs = list(itertools.combinations(range(f.q + 1), 2))
    if len(pairs) > 60:
        pairs = rng.sample(pairs, 60)
    for g in maps:
        for u, v in pairs:
            res.expect(g * _swap(f, u, v) == _swap(f, g(u), g(v)) * g, f"{g} on ({u},{v})")


def star_word_distances(field: FieldSpec) -> dict[tuple[int, ...], int]:
    """Word length of every permutation of P^1 in the star transpositions (BFS)."""
    start = tuple(range(field.q + 1))
    gens = [transposition(b, field).images for b in range(field.q)]
    dist = {start: 0}
    todo = deque([start])
    while todo:
        cur = todo.popleft()
        for g in gens:
            nxt = tuple(g[y] for y in cur)
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                todo.append(nxt)
    return dist


@suite("star-factorize")
def _star_factorize(f, rng, res):
    if f.q <= 5:
        for images, d in star_word_distances(f).items():
            p = Permutation(f, images)
            word = star_factorize(p)
            res.expect(star_word_to_perm(f, word) == p, f"round trip {p}")
            res.expect(len(word) == star_stats(p).n == d, f"minimality {p}")
    else:
        for _ in range(500):
            p = random_perm(f, rng)
            word = star_factorize(p)
            res.expect(star_word_to_perm(f, word) == p, f"round trip {p}")
            res.expect(len(word) == star_stats(p).n, f"length {p}")


def _tuples(f, rng, kmax=3, cap=3000):
    for k in range(1, kmax + 1):
        if f.q**k <= cap:
            yield from itertools.product(range(f.q), repeat=k)
        else:
            for _ in range(cap // 4):
                yield tuple(rng.randrange(f.q) for _ in range(k))


@suite("fg-inverse")
def _fg_inverse(f, rng, res):
    for a in _tuples(f, rng):
        res.expect(map_G(map_F(a, f), f) == list(a), f"G(F{a})")
        res.expect(map_F(map_G(a, f), f) == list(a), f"F(G{a})")


@suite("recipes")
def _recipes(f, rng, res):
    mus = _sample_mobius(f, rng, 6)
    for a in _tuples(f, rng, cap=400):
        for mu in mus:
            r = AlgebraicRep(mu, a)
            c = recipe_forward(r)
            res.expect(eval_combinatorial(c) == eval_algebraic(r), f"forward {r}")
            res.expect(recipe_backward(c) == r, f"round trip {r}")
            cr = CombinatorialRep(mu, a)
            res.expect(eval_algebraic(recipe_backward(cr)) == eval_combinatorial(cr), f"backward {cr}")


@suite("bijection")
def _bijection(f, rng, res):
    if f.q > ENUM_MAX_Q:
        res.skipped = f"q > {ENUM_MAX_Q}"
        return
    panel = [random_perm(f, rng) for _ in range(4)] + [transposition(0, f), Permutation.identity(f)]
    for sigma in panel:
        for k in (1, 2):
            A, C = enumerate_A(sigma, k), enumerate_C(sigma, k)
            res.expect(len(A) == len(C), f"|A|={len(A)} |C|={len(C)} for {sigma}, k={k}")
            res.expect({recipe_forward(r) for r in A} == C, f"forward image for {sigma}, k={k}")
            res.expect({recipe_backward(r) for r in C} == A, f"backward image for {sigma}, k={k}")


def _perms_of_field(f, rng, exhaustive_max, count):
    q = f.q
    if q <= exhaustive_max:
        return [Permutation(f, p + (q,)) for p in itertools.permutations(range(q))]
    return [random_perm(f, rng, fix_infinity=True) for _ in range(count)]


@suite("rank-crossval")
def _rank_crossval(f, rng, res):
    if f.q > ORACLE_MAX_Q:
        res.skipped = f"q > {ORACLE_MAX_Q}"
        return
    for p in _perms_of_field(f, rng, 5, 200):
        r = carlitz_rank(p)
        res.expect(r.rank == carlitz_rank_oracle(p), f"rank {p}")
        res.expect(eval_combinatorial(r.witness) == p, f"witness {p}")


@suite("crank")
def _crank(f, rng, res):
    if f.q > 16:
        res.skipped = "q > 16"
        return
    maps = all_mobius(f)
    for i in range(200):
        sigma = random_perm(f, rng) if i % 2 else _sparse_perm(f, rng)
        target = sigma(f.q)
        mu = rng.choice([m for m in maps if m(target) == f.q])
        fperm = mobius_to_perm(mu) * sigma
        bound = crank_bound(mu, sigma)
        rank = carlitz_rank(fperm).rank
        res.expect(rank <= bound.n, f"bound {mu} o {sigma}")
        if bound.exact:
            res.expect(rank == bound.n, f"exact {mu} o {sigma}")


def _sparse_perm(f, rng):
    p = Permutation.identity(f)
    for _ in range(rng.randrange(1, 3)):
        u, v = rng.sample(range(f.q + 1), 2)
        p = _swap(f, u, v) * p
    return p


@suite("decompose")
def _decompose(f, rng, res):
    for p in _perms_of_field(f, rng, 5, 200):
        rep = decompose_carlitz(p)
        st = star_stats(p)
        res.expect(eval_algebraic(rep) == p and rep.mu.is_polynomial(), f"decompose {p}")
        res.expect(rep.k == st.s + st.t, f"factor count {p}")


@suite("identities")
def _identities(f, rng, res):
    for a in range(1, f.q):
        target = transposition_0a(f, a)
        res.expect(eval_algebraic(carlitz_identity(f, a)) == target, f"carlitz a={a}")
        res.expect(eval_algebraic(zieve_identity(f, a)) == target, f"zieve a={a}")


def run_suites(field: FieldSpec, names, seed: int = 0) -> list[SuiteResult]:
    out = []
    for name in names:
        out.append(SUITES[name](field, random.Random(seed)))
    return out
