"""
Brute-force reference computations used to cross-check the library.

Nothing here imports the algorithms under test beyond plain data access
(arrangement normals, chamber ids, wall sets), so agreement is meaningful.
"""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction


def _rank(rows):
    m = [list(map(Fraction, r)) for r in rows]
    rank, col, ncols = 0, 0, len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def _kernel_line(rows, dim):
    """A spanning vector of the kernel when it is one-dimensional (cofactor expansion)."""
    # rows: dim-1 vectors in dim space; generalized cross product
    v = []
    for j in range(dim):
        minor = [[r[k] for k in range(dim) if k != j] for r in rows]
        v.append((-1) ** j * _det(minor))
    return v


def _det(m):
    if not m:
        return Fraction(1)
    if len(m) == 1:
        return Fraction(m[0][0])
    return sum((-1) ** j * Fraction(m[0][j]) * _det([r[:j] + r[j + 1:] for r in m[1:]])
               for j in range(len(m)))


def extreme_rays(constraints, dim):
    """Rays of {x : c.x >= 0 for all c} by checking every (dim-1)-subset of constraints."""
    rays = set()
    for sub in itertools.combinations(constraints, dim - 1):
        if _rank(sub) != dim - 1:
            continue
        v = _kernel_line(sub, dim)
        for s in (1, -1):
            w = [s * x for x in v]
            if all(sum(Fraction(a) * b for a, b in zip(c, w)) >= 0 for c in constraints):
                g = 0
                for x in w:
                    g = x if g == 0 else _gcd_frac(g, x)
                rays.add(tuple(x / abs(g) for x in w))
    return rays


def _gcd_frac(a, b):
    a, b = abs(Fraction(a)), abs(Fraction(b))
    while b:
        a, b = b, a % b
    return a


def region_count(normals, dim):
    """Regions of a central arrangement via Whitney's formula for the characteristic polynomial."""
    m = len(normals)
    total = 0
    for k in range(m + 1):
        for sub in itertools.combinations(normals, k):
            r = _rank(sub) if sub else 0
            total += (-1) ** (k - r)
    return total


def chamber_cone(normals, cid):
    return [[(1 if s == "+" else -1) * Fraction(a) for a in n] for n, s in zip(normals, cid)]


def facet_walls(normals, cid, dim):
    """Hyperplanes containing exactly dim-1 independent extreme rays of the chamber's closure."""
    rays = extreme_rays(chamber_cone(normals, cid), dim)
    walls = set()
    for h, n in enumerate(normals):
        on = [r for r in rays if sum(Fraction(a) * b for a, b in zip(n, r)) == 0]
        if on and _rank(on) == dim - 1:
            walls.add(h)
    return walls


def flip(cid, h):
    return cid[:h] + ("-" if cid[h] == "+" else "+") + cid[h + 1:]


def bfs_distances(walls, start):
    dist = {start: 0}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for h in walls[c]:
            d = flip(c, h)
            if d not in dist:
                dist[d] = dist[c] + 1
                queue.append(d)
    return dist


def all_paths(walls, start, length):
    """Every positive path from ``start`` with exactly ``length`` crossings."""
    out = [()]
    ends = [start]
    for _ in range(length):
        nxt, nends = [], []
        for cr, c in zip(out, ends):
            for h in sorted(walls[c]):
                nxt.append(cr + (h,))
                nends.append(flip(c, h))
        out, ends = nxt, nends
    return list(zip(out, ends))


def minimal_paths(walls, c, d):
    """Shortest galleries c -> d by exhaustive search over increasing lengths."""
    length = 0
    while True:
        hits = sorted(cr for cr, e in all_paths(walls, c, length) if e == d)
        if hits:
            return hits
        length += 1


def equivalence_class(walls, start, crossings):
    """
    Closure under replacing a subpath whose length equals the gallery distance
    between its ends by another shortest gallery. Distances come from BFS.
    """
    dist_cache = {}
    min_cache = {}

    def dist(c, d):
        if c not in dist_cache:
            dist_cache[c] = bfs_distances(walls, c)
        return dist_cache[c][d]

    def mins(c, d):
        if (c, d) not in min_cache:
            min_cache[(c, d)] = minimal_paths(walls, c, d)
        return min_cache[(c, d)]

    seen = {tuple(crossings)}
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        seq = [start]
        for h in q:
            seq.append(flip(seq[-1], h))
        for i in range(len(q)):
            for j in range(i + 2, len(q) + 1):
                if dist(seq[i], seq[j]) != j - i:
                    continue
                for alt in mins(seq[i], seq[j]):
                    r = q[:i] + alt + q[j:]
                    if r not in seen:
                        seen.add(r)
                        queue.append(r)
    return seen
