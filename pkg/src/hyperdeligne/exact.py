"""
Exact rational linear algebra used by the arrangement code.

Everything here works over ``fractions.Fraction`` so that sign tests are
error-free. Three tools are provided:

- ``rank`` / ``nullspace`` by fraction-exact Gaussian elimination,
- ``strict_margin``: a small dense simplex (Bland's rule) deciding whether an
  open polyhedral cone, optionally cut by linear equations, is nonempty and
  returning an interior witness,
- ``extreme_rays``: the double-description method for a pointed cone
  ``{x : A x >= 0}``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = tuple[Fraction, ...]


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers (sign preserved)."""
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def _row_reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return len(_row_reduce([list(map(Fraction, r)) for r in rows])[1])


def nullspace(rows: Sequence[Sequence[Fraction]], n: int) -> list[Vector]:
    """Basis of ``{x in Q^n : r . x = 0 for every row r}``."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    red, pivots = _row_reduce([list(map(Fraction, r)) for r in rows])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


# -- strict feasibility -------------------------------------------------------

def _simplex_max(A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]) -> list[Fraction]:
    """
    Maximise ``c.z`` subject to ``A z <= b``, ``z >= 0`` with ``b >= 0``.

    Condensed tableau: one row per constraint, one column per nonbasic
    variable. The all-slack basis is feasible, so no phase one is needed.
    Bland's rule guards against cycling on the (very common) degenerate rows.
    The feasible region must be bounded; callers guarantee that with box
    constraints.
    """
    m, n = len(A), len(c)
    T = [list(A[i]) + [b[i]] for i in range(m)]
    obj = [-x for x in c] + [Fraction(0)]
    nonbasic = list(range(n))           # column j holds variable nonbasic[j]
    basic = [n + i for i in range(m)]   # slacks are labelled n..n+m-1
    zero = Fraction(0)
    while True:
        cands = [j for j in range(n) if obj[j] < 0]
        if not cands:
            break
        s = min(cands, key=lambda j: nonbasic[j])
        best = None
        for i in range(m):
            a = T[i][s]
            if a > 0:
                key = (T[i][n] / a, basic[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise ArithmeticError("unbounded program; missing box constraint")
        r = best[1]
        prow = T[r]
        p = prow[s]
        prow = [x / p for x in prow]
        prow[s] = 1 / p
        T[r] = prow
        for row in (*T[:r], *T[r + 1:], obj):
            f = row[s]
            if f == zero:
                continue
            for j in range(n + 1):
                if j != s and prow[j] != zero:
                    row[j] -= f * prow[j]
            row[s] = -f / p
        basic[r], nonbasic[s] = nonbasic[s], basic[r]
    z = [zero] * (n + m)
    for i, v in enumerate(basic):
        z[v] = T[i][n]
    return z[:n]


def strict_margin(
    strict: Sequence[Sequence[Fraction]],
    equal: Sequence[Sequence[Fraction]] = (),
    dim: int | None = None,
) -> tuple[Fraction, Vector]:
    """
    Solve ``max t`` s.t. ``g.x >= t`` for g in ``strict``, ``e.x = 0`` for e in
    ``equal``, ``-1 <= x_j <= 1`` and ``0 <= t <= 1``.

    Returns ``(t, x)``. The open set ``{g.x > 0, e.x = 0}`` is nonempty iff
    ``t > 0``, in which case ``x`` lies in it.
    """
    if dim is None:
        rows = list(strict) or list(equal)
        dim = len(rows[0])
    n = dim
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    # variables: x+ (n), x- (n), t
    for g in strict:
        g = [Fraction(v) for v in g]
        A.append([-v for v in g] + g + [Fraction(1)])
        b.append(Fraction(0))
    for e in equal:
        e = [Fraction(v) for v in e]
        A.append(e + [-v for v in e] + [Fraction(0)])
        b.append(Fraction(0))
        A.append([-v for v in e] + e + [Fraction(0)])
        b.append(Fraction(0))
    for j in range(2 * n + 1):
        A.append([Fraction(int(k == j)) for k in range(2 * n + 1)])
        b.append(Fraction(1))
    c = [Fraction(0)] * (2 * n) + [Fraction(1)]
    z = _simplex_max(A, b, c)
    x = tuple(z[j] - z[n + j] for j in range(n))
    return z[2 * n], x


# -- extreme rays -------------------------------------------------------------

def _normalise_ray(v: Sequence[Fraction]) -> Vector:
    return tuple(Fraction(x) for x in primitive(v))


def extreme_rays(constraints: Sequence[Sequence[Fraction]], dim: int) -> list[Vector]:
    """
    Extreme rays of the pointed cone ``{x : a.x >= 0 for a in constraints}``.

    Double description: start from the simplicial cone cut out by ``dim``
    independent constraints and add the rest one at a time, combining each
    positive/negative pair of rays that is adjacent (algebraic test on the
    common tight set). Rays come back as primitive integer vectors, sorted.
    """
    A = [tuple(Fraction(v) for v in a) for a in constraints]
    if rank(A) < dim:
        raise ValueError("cone is not pointed: constraints do not have full rank")
    basis_idx: list[int] = []
    for i, a in enumerate(A):
        if rank([A[j] for j in basis_idx] + [a]) > len(basis_idx):
            basis_idx.append(i)
        if len(basis_idx) == dim:
            break
    # rays of {B x >= 0} are the columns of B^{-1}: solve B r_k = e_k
    B = [A[i] for i in basis_idx]
    rays: list[Vector] = []
    for k in range(dim):
        others = [B[j] for j in range(dim) if j != k]
        (r,) = nullspace(others, dim)
        if dot(B[k], r) < 0:
            r = tuple(-x for x in r)
        rays.append(_normalise_ray(r))
    used = list(basis_idx)
    for i, a in enumerate(A):
        if i in basis_idx:
            continue
        vals = [dot(a, r) for r in rays]
        pos = [r for r, v in zip(rays, vals) if v > 0]
        neg = [(r, v) for r, v in zip(rays, vals) if v < 0]
        zero = [r for r, v in zip(rays, vals) if v == 0]
        fresh: list[Vector] = []
        for p in pos:
            vp = dot(a, p)
            tight_p = {j for j in used if dot(A[j], p) == 0}
            for q, vq in neg:
                common = [A[j] for j in used if j in tight_p and dot(A[j], q) == 0]
                if rank(common) != dim - 2:
                    continue
                fresh.append(_normalise_ray([vp * y - vq * x for x, y in zip(p, q)]))
        used.append(i)
        rays = sorted(set(pos + zero + fresh))
    return sorted(set(rays))

