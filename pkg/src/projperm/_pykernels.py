"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module; see
``projperm.kernels`` for the selection logic.  Tables are flat integer
sequences: a permutation of ``size`` points is ``size`` consecutive entries.
"""

from math import factorial

UNREACHED = 255


def star_distance(images):
    """Minimal number of star transpositions (b, inf) whose product is ``images``.

    ``images`` has length q+1 with index q standing for infinity.
    """
    q = len(images) - 1
    seen = [False] * (q + 1)
    s = t = 0
    for start in range(q + 1):
        if seen[start] or images[start] == start:
            continue
        t += 1
        x = start
        while not seen[x]:
            seen[x] = True
            if x != q:
                s += 1
            x = images[x]
    return s + t - 1 if images[q] != q else s + t


def pgl_scan(f, cands, ncand):
    """Index and value of the first minimum of ``star_distance(c o f)`` over candidates.

    ``cands`` holds ``ncand`` tables of length ``len(f)`` back to back.
    """
    size = len(f)
    best_idx, best_n = -1, 1 << 30
    for c in range(ncand):
        base = c * size
        comp = [cands[base + y] for y in f]
        n = star_distance(comp)
        if n < best_n:
            best_idx, best_n = c, n
            if n == 0:
                break
    return best_idx, best_n


def lehmer_rank(perm):
    """Rank of a permutation of range(len(perm)) in [0, len(perm)!)."""
    m = len(perm)
    r = 0
    for i in range(m):
        v = perm[i]
        smaller = 0
        for j in range(i + 1, m):
            if perm[j] < v:
                smaller += 1
        r = r * (m - i) + smaller
    return r


def bfs_levels(q, invstar, affine, naffine, max_depth):
    """Breadth-first Carlitz levels of every permutation of GF(q).

    Level 0 is the set of ``naffine`` tables in ``affine`` (length q each);
    level l+1 collects ``theta o invstar o g`` for g at level l.  Returns a
    bytearray indexed by :func:`lehmer_rank`, with ``UNREACHED`` for
    permutations not found within ``max_depth``.
    """
    thetas = [tuple(affine[i * q:(i + 1) * q]) for i in range(naffine)]
    seen = {}
    frontier = []
    for th in thetas:
        if th not in seen:
            seen[th] = 0
            frontier.append(th)
    depth = 0
    while frontier and depth < max_depth:
        depth += 1
        nxt = []
        for g in frontier:
            h = [invstar[y] for y in g]
            for th in thetas:
                r = tuple([th[y] for y in h])
                if r not in seen:
                    seen[r] = depth
                    nxt.append(r)
        frontier = nxt
    levels = bytearray([UNREACHED]) * factorial(q)
    for perm, lvl in seen.items():
        levels[lehmer_rank(perm)] = lvl
    return levels
