"""
Positive paths in the 1-skeleton, atoms and path equivalence.

A path is stored as its start chamber plus the hyperplane indices it crosses,
listed in time order (first crossing first). Written as a composition the same
path reads right to left: crossings ``[h1, h2, h3]`` are ``a3 o a2 o a1``.

Equivalence is computed by breadth-first closure under the move "replace a
contiguous subpath that is an atom X -> Y by another atom X -> Y". Begin and
End sets are read off the closure: a member that reaches chamber ``E`` after
exactly ``distance(start, E)`` steps begins with the atom ``start -> E``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .arrangement import normalize_id, negate_id
from .errors import CapExceeded, EmptyPath, EndpointMismatch, NotAWall, ParseError
from .skeleton import ChamberGraph, flip

DEFAULT_CAP = 200_000


class PositivePath:
    """Start chamber plus crossings in time order. Immutable and hashable."""

    __slots__ = ("start", "crossings")

    def __init__(self, start: str, crossings: Iterable[int] = ()):
        object.__setattr__(self, "start", normalize_id(start))
        object.__setattr__(self, "crossings", tuple(int(h) for h in crossings))

    def __setattr__(self, name, value):
        raise AttributeError("paths are immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, PositivePath):
            return NotImplemented
        return (self.start, self.crossings) == (other.start, other.crossings)

    def __hash__(self) -> int:
        return hash((self.start, self.crossings))

    def __lt__(self, other: "PositivePath") -> bool:
        return (self.start, self.crossings) < (other.start, other.crossings)

    def __len__(self) -> int:
        return len(self.crossings)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.literal!r})"

    @property
    def length(self) -> int:
        return len(self.crossings)

    @property
    def literal(self) -> str:
        return f"{self.start}:{','.join(map(str, self.crossings))}"

    def then(self, other: "PositivePath") -> "PositivePath":
        """Concatenation in time order: ``self`` first. Endpoints are not checked."""
        return PositivePath(self.start, self.crossings + other.crossings)


class Atom(PositivePath):
    """A positive path already certified minimal; see :func:`as_atom`."""

    __slots__ = ()


def parse_path(literal: str) -> PositivePath:
    """Parse ``<sign-string>:<h1>,<h2>,...`` (indices 0-based, time order)."""
    if ":" not in literal:
        raise ParseError(f"path literal {literal!r} lacks ':'", 1, 1)
    start, _, rest = literal.partition(":")
    start = normalize_id(start.strip())
    if not start or set(start) - {"+", "-"}:
        raise ParseError(f"bad chamber id {start!r}", 1, 1)
    crossings = []
    if rest.strip():
        col = len(start) + 2
        for tok in rest.split(","):
            try:
                h = int(tok)
            except ValueError:
                raise ParseError(f"bad hyperplane index {tok.strip()!r}", 1, col) from None
            if h < 0:
                raise ParseError(f"negative hyperplane index {h}", 1, col)
            crossings.append(h)
            col += len(tok) + 1
    return PositivePath(start, crossings)


def trace(g: ChamberGraph, p: PositivePath) -> list[str]:
    """Chamber sequence ``v0, ..., vl`` visited by ``p``."""
    cur = g.check(p.start)
    seq = [cur]
    for i, h in enumerate(p.crossings):
        if h not in g.chambers[g.index[cur]].walls:
            raise NotAWall(f"step {i}: hyperplane {h} is not a wall of chamber {cur}", step=i)
        cur = flip(cur, h)
        seq.append(cur)
    return seq


def target(g: ChamberGraph, p: PositivePath) -> str:
    return trace(g, p)[-1]


def _walk(start: str, crossings: tuple[int, ...]) -> list[str]:
    seq = [start]
    for h in crossings:
        seq.append(flip(seq[-1], h))
    return seq


def is_atom(g: ChamberGraph, p: PositivePath) -> bool:
    """A path is minimal exactly when it crosses no hyperplane twice."""
    trace(g, p)
    return len(set(p.crossings)) == len(p.crossings)


def as_atom(g: ChamberGraph, p: PositivePath) -> Atom:
    if not is_atom(g, p):
        raise ValueError(f"{p.literal} crosses a hyperplane twice; not an atom")
    return p if isinstance(p, Atom) else Atom(p.start, p.crossings)


def _minimal_crossings(g: ChamberGraph, c: str, d: str) -> tuple[tuple[int, ...], ...]:
    key = ("min", c, d)
    hit = g.cache.get(key)
    if hit is not None:
        return hit
    out: list[tuple[int, ...]] = []

    def extend(cur: str, todo: frozenset[int], acc: list[int]) -> None:
        if not todo:
            out.append(tuple(acc))
            return
        for h in sorted(g.chambers[g.index[cur]].walls & todo):
            acc.append(h)
            extend(flip(cur, h), todo - {h}, acc)
            acc.pop()

    extend(c, g.separating_set(c, d), [])
    res = tuple(out)
    g.cache[key] = res
    return res


def minimal_paths(g: ChamberGraph, c: str, d: str) -> list[Atom]:
    """Every literal minimal gallery from ``c`` to ``d``, lexicographic by crossings."""
    c, d = g.check(c), g.check(d)
    return [Atom(c, cr) for cr in _minimal_crossings(g, c, d)]


def canonical_atom(g: ChamberGraph, c: str, d: str) -> Atom:
    """The lexicographically least minimal gallery from ``c`` to ``d``."""
    c, d = g.check(c), g.check(d)
    todo = set(g.separating_set(c, d))
    cur, acc = c, []
    while todo:
        h = min(g.chambers[g.index[cur]].walls & todo)
        acc.append(h)
        todo.discard(h)
        cur = flip(cur, h)
    return Atom(c, acc)


# -- equivalence --------------------------------------------------------------

def _class(g: ChamberGraph, start: str, crossings: tuple[int, ...], cap: int) -> frozenset[tuple[int, ...]]:
    key = ("cls", start, crossings)
    hit = g.cache.get(key)
    if hit is not None:
        if len(hit) > cap:
            raise CapExceeded(f"equivalence class has {len(hit)} members (cap {cap})")
        return hit
    seen = {crossings}
    queue = deque([crossings])
    while queue:
        q = queue.popleft()
        seq = _walk(start, q)
        n = len(q)
        for i in range(n - 1):
            used = {q[i]}
            for j in range(i + 1, n):
                if q[j] in used:
                    break
                used.add(q[j])
                for alt in _minimal_crossings(g, seq[i], seq[j + 1]):
                    r = q[:i] + alt + q[j + 1:]
                    if r not in seen:
                        seen.add(r)
                        if len(seen) > cap:
                            raise CapExceeded(f"equivalence class of {start}:{crossings} exceeds cap {cap}")
                        queue.append(r)
    res = frozenset(seen)
    g.cache[key] = res
    return res


def equivalence_class(g: ChamberGraph, p: PositivePath, cap: int = DEFAULT_CAP) -> set[PositivePath]:
    trace(g, p)
    return {PositivePath(p.start, q) for q in _class(g, p.start, p.crossings, cap)}


def equivalent(g: ChamberGraph, p: PositivePath, q: PositivePath, cap: int = DEFAULT_CAP) -> bool:
    """Reference test by class membership."""
    trace(g, q)
    if p.start != q.start or len(p) != len(q):
        return False
    return q.crossings in _class(g, p.start, p.crossings, cap)


def begin_chambers(g: ChamberGraph, p: PositivePath, cap: int = DEFAULT_CAP) -> frozenset[str]:
    """Targets ``E`` of the atoms ``s(p) -> E`` with which ``p`` begins."""
    trace(g, p)
    key = ("begin", p.start, p.crossings)
    hit = g.cache.get(key)
    if hit is not None:
        return hit
    s = p.start
    dist = g.distance_matrix[g.index[s]]
    out = {s}
    for q in _class(g, s, p.crossings, cap):
        cur = s
        for k, h in enumerate(q, start=1):
            cur = flip(cur, h)
            if dist[g.index[cur]] != k:
                break
            out.add(cur)
    res = frozenset(out)
    g.cache[key] = res
    return res


def end_chambers(g: ChamberGraph, p: PositivePath, cap: int = DEFAULT_CAP) -> frozenset[str]:
    """Sources ``E`` of the atoms ``E -> t(p)`` with which ``p`` ends."""
    t = trace(g, p)[-1]
    key = ("end", p.start, p.crossings)
    hit = g.cache.get(key)
    if hit is not None:
        return hit
    ti = g.index[t]
    out = {t}
    for q in _class(g, p.start, p.crossings, cap):
        cur = t
        for k, h in enumerate(reversed(q), start=1):
            cur = flip(cur, h)
            if g.distance_matrix[g.index[cur]][ti] != k:
                break
            out.add(cur)
    res = frozenset(out)
    g.cache[key] = res
    return res


def begins_with(g: ChamberGraph, p: PositivePath, a: PositivePath, cap: int = DEFAULT_CAP) -> bool:
    if p.start != a.start:
        raise EndpointMismatch(f"{p.literal} and {a.literal} start in different chambers")
    if not is_atom(g, a):
        raise ValueError(f"{a.literal} is not an atom")
    return target(g, a) in begin_chambers(g, p, cap)


def ends_with(g: ChamberGraph, p: PositivePath, a: PositivePath, cap: int = DEFAULT_CAP) -> bool:
    if target(g, p) != target(g, a):
        raise EndpointMismatch(f"{p.literal} and {a.literal} end in different chambers")
    if not is_atom(g, a):
        raise ValueError(f"{a.literal} is not an atom")
    return a.start in end_chambers(g, p, cap)


@dataclass(frozen=True)
class WallSet:
    chamber: str
    walls: frozenset[int]


def begin_walls(g: ChamberGraph, p: PositivePath, cap: int = DEFAULT_CAP) -> WallSet:
    """Walls of ``s(p)`` across which some equivalent path makes its first crossing."""
    if not p.crossings:
        raise EmptyPath("Begin walls need a path of positive length")
    starts = begin_chambers(g, p, cap)
    s = p.start
    return WallSet(s, frozenset(h for h in g.walls(s) if flip(s, h) in starts))


def end_walls(g: ChamberGraph, p: PositivePath, cap: int = DEFAULT_CAP) -> WallSet:
    """Walls of ``t(p)`` across which some equivalent path makes its last crossing."""
    if not p.crossings:
        raise EmptyPath("End walls need a path of positive length")
    ends = end_chambers(g, p, cap)
    t = target(g, p)
    return WallSet(t, frozenset(h for h in g.walls(t) if flip(t, h) in ends))


# -- opposites ----------------------------------------------------------------

def complete_to_opposite(g: ChamberGraph, a: PositivePath) -> Atom:
    """
    An atom ``p' : -t(a) -> s(a)`` such that ``p'`` followed by ``a`` is again an
    atom. Any minimal gallery works: it crosses exactly the hyperplanes that
    ``a`` leaves alone, so the composite crosses each hyperplane once.
    """
    a = as_atom(g, a)
    d = target(g, a)
    opp = g.check(negate_id(d))
    p = canonical_atom(g, opp, a.start)
    if not is_atom(g, p.then(a)):
        raise AssertionError(f"opposite completion of {a.literal} is not an atom")
    return p


def fraction_form(g: ChamberGraph, a: PositivePath, b: PositivePath) -> tuple[Atom, Atom]:
    """
    Atoms ``p, q`` out of ``-t(a)`` with ``p`` then ``a`` and ``q`` then ``b``
    both atoms, so that ``b^-1 a = q p^-1`` in the groupoid.
    """
    ta, tb = target(g, a), target(g, b)
    if ta != tb:
        raise EndpointMismatch(f"targets differ: {ta} vs {tb}")
    return complete_to_opposite(g, a), complete_to_opposite(g, b)
