"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--q 8] [--repeat 3]

Runs the breadth-first rank oracle over all of Sym(GF(q)) and a batch of
PGL(2, q) scans on each available backend, checks that both agree, and
prints the best wall time of each.
"""

import argparse
import random
import timeit

from projperm import _pykernels
from projperm.gf import parse_field
from projperm.perm import random_perm
from projperm.projline import _inverse_tables, all_affine, all_mobius

try:
    from projperm import _ckernels
except ImportError:
    _ckernels = None


def bfs_inputs(field):
    q = field.q
    invstar = [field.inv0(x) for x in range(q)]
    affine = []
    for m in all_affine(field):
        affine.extend(m(x) for x in range(q))
    return q, invstar, affine, len(affine) // q, q + 2


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=8, help="field size for the BFS (<= 9)")
    ap.add_argument("--scan-q", type=int, default=16, help="field size for the PGL scans")
    ap.add_argument("--scans", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    else:
        print("compiled extension not built; timing the fallback only")

    field = parse_field(f"q={args.q}")
    bfs_args = bfs_inputs(field)
    sfield = parse_field(f"q={args.scan_q}")
    tables, ncand = _inverse_tables(sfield), len(all_mobius(sfield))
    rng = random.Random(0)
    perms = [random_perm(sfield, rng, fix_infinity=True).images for _ in range(args.scans)]

    results = {}
    for name, impl in backends.items():
        levels = impl.bfs_levels(*bfs_args)
        scans = [impl.pgl_scan(p, tables, ncand) for p in perms]
        t_bfs = min(timeit.repeat(lambda: impl.bfs_levels(*bfs_args), number=1, repeat=args.repeat))
        t_scan = min(
            timeit.repeat(lambda: [impl.pgl_scan(p, tables, ncand) for p in perms], number=1, repeat=args.repeat)
        )
        results[name] = (bytes(levels), scans, t_bfs, t_scan)

    outputs = {(r[0], tuple(r[1])) for r in results.values()}
    print(f"backends agree: {len(outputs) == 1}")
    print(f"{'backend':8} {'bfs q=' + str(args.q):>12} {f'{args.scans} scans q={args.scan_q}':>20}")
    for name, (_, _, t_bfs, t_scan) in results.items():
        print(f"{name:8} {t_bfs:11.3f}s {t_scan:19.3f}s")
    if "cython" in results:
        py, cy = results["python"], results["cython"]
        print(f"speedup  {py[2] / cy[2]:11.1f}x {py[3] / cy[3]:19.1f}x")


if __name__ == "__main__":
    main()
