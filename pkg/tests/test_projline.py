import itertools

import pytest

from projperm.errors import FieldError, ParseError
from projperm.gf import parse_field
from projperm.perm import Permutation, from_cycles, transposition
from projperm.projline import (
    Mobius,
    all_affine,
    all_mobius,
    format_mobius,
    invstar_perm,
    is_polynomial,
    mobius_eval,
    mobius_from_linear_poly,
    mobius_to_perm,
    parse_mobius,
    perm_to_mobius,
)


def brute_pgl(f):
    # every (a,b,c,d) with nonzero determinant, reduced to distinct point tables
    tables = set()
    for a, b, c, d in itertools.product(range(f.q), repeat=4):
        if f.sub(f.mul(a, d), f.mul(b, c)) == 0:
            continue
        table = []
        for x in range(f.q + 1):
            if x == f.q:
                table.append(f.div(a, c) if c else f.q)
            else:
                den = f.add(f.mul(c, x), d)
                table.append(f.q if den == 0 else f.div(f.add(f.mul(a, x), b), den))
        tables.add(tuple(table))
    return tables


def test_eval_examples(F5):
    ident = Mobius.identity(F5)
    assert all(ident(x) == x for x in range(6))
    r = Mobius.reciprocal(F5)
    assert mobius_eval(r, 0) == 5 and mobius_eval(r, 5) == 0
    t = Mobius.translation(F5, 3)
    assert t(5) == 5 and t(4) == 2


def test_canonical_form(F5):
    m = Mobius.new(F5, 2, 4, 0, 2)
    assert m == Mobius.identity(F5) * Mobius.new(F5, 1, 2, 0, 1)
    assert (m.a, m.b, m.c, m.d) == (1, 2, 0, 1)
    m = Mobius.new(F5, 0, 3, 3, 0)
    assert m == Mobius.reciprocal(F5)
    with pytest.raises(FieldError):
        Mobius.new(F5, 1, 2, 2, 4)


def test_compose_examples(F5):
    ident = Mobius.identity(F5)
    r = Mobius.reciprocal(F5)
    m = Mobius.new(F5, 2, 1, 1, 4)
    assert m * ident == m == ident * m
    assert r * r == ident
    # x+1 after 1/x: 2 -> 3 -> 4
    assert (Mobius.translation(F5, 1) * r)(2) == 4


def test_inverse_examples(F5, F7):
    ident = Mobius.identity(F5)
    assert ident.inverse() == ident
    for a in range(5):
        assert Mobius.translation(F5, a).inverse() == Mobius.translation(F5, F5.neg(a))
    m = Mobius.new(F7, 2, 1, 1, 3)
    composite = m * m.inverse()
    assert all(composite(x) == x for x in range(8))


def test_linear_poly(F5):
    assert mobius_from_linear_poly(F5, 1, 0) == Mobius.identity(F5)
    assert is_polynomial(Mobius.identity(F5))
    assert not is_polynomial(Mobius.reciprocal(F5))
    assert not is_polynomial(Mobius.new(F5, 1, 2, 1, 1))
    with pytest.raises(FieldError):
        mobius_from_linear_poly(F5, 0, 1)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_polynomial_iff_fixes_infinity(q):
    f = parse_field(f"q={q}")
    for m in all_mobius(f):
        assert m.is_polynomial() == (m(f.q) == f.q)
    assert len(all_affine(f)) == q * (q - 1)


def test_to_perm_examples(F3, F5):
    assert mobius_to_perm(Mobius.identity(F5)).is_identity()
    assert mobius_to_perm(Mobius.reciprocal(F3)) == transposition(0, F3)
    assert mobius_to_perm(Mobius.translation(F5, 1)) == from_cycles(F5, [[0, 1, 2, 3, 4]])


def test_perm_to_mobius_examples(F5):
    assert perm_to_mobius(Permutation.identity(F5)) == Mobius.identity(F5)
    swap = transposition(0, F5)
    # oracle: no element of PGL(2,5) induces (0 inf)
    assert swap.images not in brute_pgl(F5)
    assert perm_to_mobius(swap) is None
    # (2x+1)/(x+3) is degenerate over GF(5): 2*3 - 1 = 5
    with pytest.raises(FieldError):
        Mobius.new(F5, 2, 1, 1, 3)
    m = Mobius.new(F5, 2, 1, 1, 4)
    assert perm_to_mobius(mobius_to_perm(m)) == m


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_pgl_order_and_round_trip(q):
    f = parse_field(f"q={q}")
    maps = all_mobius(f)
    assert len(maps) == len(set(maps)) == q**3 - q
    tables = {mobius_to_perm(m).images for m in maps}
    assert len(tables) == q**3 - q
    if q <= 5:
        assert tables == brute_pgl(f)
    if q <= 7:
        for m in maps:
            assert perm_to_mobius(mobius_to_perm(m)) == m


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_homomorphism_exhaustive(q):
    f = parse_field(f"q={q}")
    maps = all_mobius(f)
    perms = {m: mobius_to_perm(m) for m in maps}
    for m1 in maps:
        p1 = perms[m1]
        for m2 in maps:
            assert perms[m1 * m2] == p1 * perms[m2]


def test_invstar_examples(F3, F5):
    s = invstar_perm(F5)
    assert s.images == (0, 1, 3, 2, 4, 5)
    assert invstar_perm(F3).is_identity()
    assert perm_to_mobius(s) is None


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11, 16])
def test_reciprocal_after_invstar_is_swap(q):
    f = parse_field(f"q={q}")
    assert mobius_to_perm(Mobius.reciprocal(f)) * invstar_perm(f) == transposition(0, f)
    assert (perm_to_mobius(invstar_perm(f)) is None) == (q > 3)


def test_text_round_trip(F5, F7):
    f9 = parse_field("q=9")
    for f in (F5, F7, f9):
        for m in all_mobius(f):
            assert parse_mobius(f, format_mobius(m)) == m
    assert format_mobius(Mobius.identity(F5)) == "1*x+0"
    assert format_mobius(Mobius.reciprocal(F5)) == "(0*x+1)/(1*x+0)"
    assert format_mobius(Mobius.linear(F5, 2, 1)) == "2*x+1"


@pytest.mark.parametrize("text", ["x+1", "(1*x+1)/(1*x+1)", "9*x+0", "(1*x+0)/(0*x+0)"])
def test_bad_mobius_text(F5, text):
    with pytest.raises(ParseError):
        parse_mobius(F5, text)
