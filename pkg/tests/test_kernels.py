import itertools
import random
from array import array

import pytest
from hypothesis import given, settings, strategies as st

from projperm import _pykernels, kernels
from projperm.carlitz import _bfs_levels
from projperm.gf import parse_field
from projperm.perm import Permutation, random_perm, star_stats
from projperm.projline import _inverse_tables, all_affine, all_mobius

try:
    from projperm import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
BACKENDS = [pytest.param(_pykernels, id="python"), pytest.param(_ckernels, id="cython", marks=needs_c)]


def test_backend_selected():
    assert kernels.BACKEND == ("cython" if _ckernels is not None else "python")


@pytest.mark.parametrize("impl", BACKENDS)
@settings(max_examples=300, deadline=None)
@given(st.sampled_from([3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19]), st.randoms(use_true_random=False))
def test_star_distance_matches_stats(impl, q, rng):
    f = parse_field(f"q={q}")
    p = random_perm(f, rng)
    assert impl.star_distance(p.images) == star_stats(p).n


@pytest.mark.parametrize("impl", BACKENDS)
def test_lehmer_rank_is_bijective(impl):
    for m in range(1, 7):
        ranks = sorted(impl.lehmer_rank(p) for p in itertools.permutations(range(m)))
        assert ranks == list(range(len(ranks)))


@pytest.mark.parametrize("impl", BACKENDS)
@pytest.mark.parametrize("q", [5, 8, 9])
def test_pgl_scan_first_minimum(impl, q):
    f = parse_field(f"q={q}")
    maps = all_mobius(f)
    tables = _inverse_tables(f)
    rng = random.Random(q)
    for _ in range(20):
        p = random_perm(f, rng, fix_infinity=True)
        dists = [
            star_stats(Permutation(f, tuple(tables[i * (q + 1) + y] for y in p.images))).n
            for i in range(len(maps))
        ]
        best = min(dists)
        assert impl.pgl_scan(p.images, tables, len(maps)) == (dists.index(best), best)


@needs_c
@pytest.mark.parametrize("q", [3, 4, 5, 7, 8])
def test_bfs_backends_agree(q):
    f = parse_field(f"q={q}")
    inv = [f.inv0(x) for x in range(q)]
    affine = []
    for m in all_affine(f):
        affine.extend(m(x) for x in range(q))
    naff = len(affine) // q
    for depth in (0, 1, 2, q + 2):
        assert _pykernels.bfs_levels(q, inv, affine, naff, depth) == _ckernels.bfs_levels(
            q, inv, affine, naff, depth
        )


def test_bfs_reaches_everything_at_default_depth():
    for q in (3, 4, 5, 7, 8, 9):
        f = parse_field(f"q={q}")
        assert kernels.UNREACHED not in _bfs_levels(f, q + 2)


def test_accepts_plain_sequences():
    cands = array("i", [0, 1, 2, 3, 1, 0, 2, 3])
    for impl in filter(None, (_pykernels, _ckernels)):
        assert impl.pgl_scan((1, 0, 2, 3), cands, 2) == (1, 0)
        assert impl.star_distance([3, 1, 2, 0]) == 1


def test_benchmark_script_runs(capsys):
    import runpy
    from pathlib import Path

    script = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    mod = runpy.run_path(str(script))
    mod["main"](["--q", "4", "--scan-q", "5", "--scans", "5", "--repeat", "1"])
    assert "backends agree: True" in capsys.readouterr().out
