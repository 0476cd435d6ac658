import itertools
import random
from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from projperm.errors import FieldError, ParseError
from projperm.gf import parse_field
from projperm.perm import (
    Permutation,
    cycle_decomposition,
    format_perm,
    from_cycles,
    parse_perm,
    perm_apply,
    perm_compose,
    perm_identity,
    perm_inverse,
    random_perm,
    star_factorize,
    star_stats,
    star_word_to_perm,
    transposition,
)
from projperm.projline import Mobius, all_mobius, invstar_perm, mobius_to_perm


def star_bfs(f):
    """Word length in the generators (b, inf) for every permutation of P^1."""
    size = f.q + 1
    gens = []
    for b in range(f.q):
        g = list(range(size))
        g[b], g[f.q] = f.q, b
        gens.append(g)
    start = tuple(range(size))
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


def swap(f, u, v):
    images = list(range(f.q + 1))
    images[u], images[v] = v, u
    return Permutation(f, tuple(images))


def test_group_ops(F5):
    p = from_cycles(F5, [[0, 3, 5], [1, 2]])
    assert perm_compose(p, perm_inverse(p)) == perm_identity(F5)
    assert perm_apply(transposition(2, F5), 5) == 2
    # (0,inf) o (2,inf): 2 -> inf -> 0
    assert perm_compose(transposition(0, F5), transposition(2, F5))(2) == 0


def test_field_mismatch(F5, F7):
    with pytest.raises(FieldError):
        perm_identity(F5) * perm_identity(F7)


def test_invalid_table(F5):
    with pytest.raises(ValueError):
        Permutation(F5, (0, 0, 1, 2, 3, 4))
    with pytest.raises(ValueError):
        Permutation(F5, (0, 1, 2))


def test_transposition(F5):
    t = transposition(2, F5)
    assert t.images == (0, 1, 5, 3, 4, 2)
    assert (t * t).is_identity()
    # (1, inf) = (x^-1 + 1) o invstar o (x - 1)
    outer = mobius_to_perm(Mobius.translation(F5, 1) * Mobius.reciprocal(F5))
    assert outer * invstar_perm(F5) * mobius_to_perm(Mobius.translation(F5, 4)) == transposition(1, F5)


def test_cycle_examples(F5, F7):
    assert cycle_decomposition(perm_identity(F5)) == []
    assert cycle_decomposition(mobius_to_perm(Mobius.translation(F5, 1))) == [[0, 1, 2, 3, 4]]
    p = from_cycles(F7, [[5, 1, 2], [3, 0]])
    assert cycle_decomposition(p) == [[0, 3], [1, 2, 5]]
    assert from_cycles(F7, cycle_decomposition(p)) == p
    assert [p(x) for x in (4, 6, 7)] == [4, 6, 7]


def test_infinity_sorts_last(F5):
    p = from_cycles(F5, [[5, 3, 1]])
    assert cycle_decomposition(p) == [[1, 5, 3]]
    assert format_perm(p) == "(1 inf 3)"


def test_star_stats_examples(F5, F7):
    assert star_stats(perm_identity(F5)) == (0, 0, False, 0)
    assert star_stats(transposition(3, F5)) == (1, 1, True, 1)
    c3 = from_cycles(F7, [[0, 1, 2]])
    assert star_stats(c3) == (3, 1, False, 4)
    assert star_bfs(parse_field("q=3"))[from_cycles(parse_field("q=3"), [[0, 1, 2]]).images] == 4


def test_star_factorize_examples(F5, F7):
    assert star_factorize(perm_identity(F5)) == []
    assert star_factorize(transposition(2, F5)) == [2]
    c3 = from_cycles(F7, [[0, 1, 2]])
    word = star_factorize(c3)
    assert word == [0, 2, 1, 0]
    prod = transposition(0, F7) * transposition(2, F7) * transposition(1, F7) * transposition(0, F7)
    assert prod == c3


def test_cycle_through_infinity(F7):
    p = from_cycles(F7, [[1, 4, 7, 2]])
    # rotated to (2 1 4 inf): factors 4, 1, 2
    assert star_factorize(p) == [4, 1, 2]
    assert star_word_to_perm(F7, [4, 1, 2]) == p


@pytest.mark.parametrize("q", [3, 4, 5])
def test_factorize_exhaustive_and_minimal(q):
    f = parse_field(f"q={q}")
    dist = star_bfs(f)
    assert len(dist) == len(list(itertools.permutations(range(q + 1))))
    for images, d in dist.items():
        p = Permutation(f, images)
        word = star_factorize(p)
        assert star_word_to_perm(f, word) == p
        assert len(word) == star_stats(p).n == d


@pytest.mark.parametrize("q", [7, 8, 9])
def test_factorize_random(q):
    f = parse_field(f"q={q}")
    rng = random.Random(q)
    for _ in range(10_000):
        p = random_perm(f, rng)
        word = star_factorize(p)
        assert star_word_to_perm(f, word) == p
        assert len(word) == star_stats(p).n


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([3, 4, 5, 7, 8, 9, 11]), st.randoms(use_true_random=False))
def test_cycle_decomposition_canonical(q, rng):
    f = parse_field(f"q={q}")
    p = random_perm(f, rng)
    cycles = cycle_decomposition(p)
    assert from_cycles(f, cycles) == p
    assert cycle_decomposition(from_cycles(f, cycles)) == cycles
    assert all(c[0] == min(c) and len(c) >= 2 for c in cycles)
    assert [c[0] for c in cycles] == sorted(c[0] for c in cycles)
    assert parse_perm(f, format_perm(p)) == p
    assert parse_perm(f, format_perm(p, one_line=True)) == p


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_conjugation_law(q):
    f = parse_field(f"q={q}")
    maps = [invstar_perm(f)] + [mobius_to_perm(m) for m in all_mobius(f)]
    if q == 7:
        maps = maps[::7]
    for g in maps:
        for u, v in itertools.combinations(range(q + 1), 2):
            assert g * swap(f, u, v) == swap(f, g(u), g(v)) * g


def test_parse_forms(F5, F7):
    assert parse_perm(F7, "(0 3)(1 2 5)") == from_cycles(F7, [[0, 3], [1, 2, 5]])
    assert parse_perm(F5, "(2 inf)") == transposition(2, F5)
    assert parse_perm(F5, "perm:1,0,2,3,4") == from_cycles(F5, [[0, 1]])
    assert parse_perm(F5, "perm:inf,1,2,3,4,0") == transposition(0, F5)
    assert parse_perm(F5, "()").is_identity()
    assert format_perm(perm_identity(F5)) == "()"
    assert format_perm(transposition(0, F5), one_line=True) == "perm:inf,1,2,3,4,0"


@pytest.mark.parametrize("text", ["(0 1)(1 2)", "(0 9)", "0 1", "perm:0,1", "perm:0,0,1,2,3", "(0 x)"])
def test_parse_errors(F5, text):
    with pytest.raises(ParseError):
        parse_perm(F5, text)
