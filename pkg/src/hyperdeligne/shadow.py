"""
Combinatorial shadows of the tilting picture.

* ``orient``: the base-chamber order on the 1-skeleton. Across a wall on
  hyperplane H the greater chamber is the one on the same side of H as the
  base chamber.
* ``classify_simples``: for an atom ``C -> D`` the simple at a wall ``h`` of
  ``C`` is torsion-free (F) iff the atom can start across ``h``, and the simple
  at a wall ``h`` of ``D`` is torsion (X) iff the atom can end across ``h``.
  Simple ``S0`` is always (T, Y).
* ``degree_report``: the induction over normal-form factors computing the top
  nonvanishing degree ``k + d``, with ``d`` a free parameter.

Simples are labelled per chamber by ``S0`` (the distinguished simple) and the
chamber's wall hyperplanes. Hyperplane indices start at 0, so the
distinguished simple gets a string label rather than the integer 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .arrangement import Arrangement
from .deligne import DeligneNF, deligne_nf
from .errors import EmptyPath, InvalidSimple, RecursionMismatch, WrongStart
from .paths import (
    DEFAULT_CAP,
    PositivePath,
    _class,
    as_atom,
    begin_walls,
    end_walls,
    target,
    trace,
)
from .skeleton import ChamberGraph

S0 = "S0"
Simple = Union[int, str]


@dataclass(frozen=True)
class OrderedSkeleton:
    graph: ChamberGraph
    base: str
    # (smaller id, larger id, hyperplane) -> greater endpoint
    orientation: dict[tuple[str, str, int], str]

    def greater(self, c: str, d: str, h: int) -> str:
        return self.orientation[(min(c, d), max(c, d), h)]

    def descends(self, c: str, d: str, h: int) -> bool:
        """Whether the arrow ``c -> d`` across ``h`` goes from greater to smaller."""
        return self.greater(c, d, h) == c

    def to_dot(self) -> str:
        lines = ["digraph order {", f'  "{self.base}" [shape=box];']
        for (c, d, h), big in sorted(self.orientation.items()):
            small = d if big == c else c
            lines.append(f'  "{big}" -> "{small}" [label="{h}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def orient(g: ChamberGraph, arr: Arrangement, base: str) -> OrderedSkeleton:
    base = g.check(base)
    w0 = g.chamber(base).witness
    orientation = {}
    for c, d, h in g.edges():
        hp = arr.hyperplanes[h]
        ref = hp.side(w0)
        sc, sd = hp.side(g.chamber(c).witness), hp.side(g.chamber(d).witness)
        if sc == sd or 0 in (ref, sc, sd):
            raise AssertionError(f"edge {c} -- {d} does not straddle hyperplane {h}")
        orientation[(c, d, h)] = c if sc == ref else d
    return OrderedSkeleton(g, base, orientation)


def path_monotone(order: OrderedSkeleton, p: PositivePath) -> bool:
    if p.start != order.base:
        raise WrongStart(f"path starts at {p.start}, base is {order.base}")
    seq = trace(order.graph, p)
    return all(order.descends(u, v, h) for u, v, h in zip(seq, seq[1:], p.crossings))


@dataclass(frozen=True)
class SimpleClass:
    atom: PositivePath
    source_flags: dict[Simple, str]   # simple -> "T" or "F" at s(atom)
    target_flags: dict[Simple, str]   # simple -> "X" or "Y" at t(atom)

    @property
    def f_walls(self) -> frozenset[int]:
        return frozenset(i for i, f in self.source_flags.items() if f == "F")

    @property
    def x_walls(self) -> frozenset[int]:
        return frozenset(i for i, f in self.target_flags.items() if f == "X")


def classify_simples(g: ChamberGraph, a: PositivePath, cap: int = DEFAULT_CAP) -> SimpleClass:
    a = as_atom(g, a)
    if not a.crossings:
        raise EmptyPath("simples are classified for atoms of positive length")
    starts = begin_walls(g, a, cap).walls
    ends = end_walls(g, a, cap).walls
    src: dict[Simple, str] = {S0: "T"}
    src.update({h: ("F" if h in starts else "T") for h in sorted(g.walls(a.start))})
    dst: dict[Simple, str] = {S0: "Y"}
    dst.update({h: ("X" if h in ends else "Y") for h in sorted(g.walls(target(g, a)))})
    return SimpleClass(a, src, dst)


def inverse_shift(g: ChamberGraph, a: PositivePath, simple: Simple, cap: int = DEFAULT_CAP) -> int:
    """Shift picked up by simple ``simple`` of ``t(a)`` under the inverse functor: 1 on X, 0 on Y."""
    t = target(g, a)
    if simple != S0 and simple not in g.walls(t):
        raise InvalidSimple(f"{simple!r} is neither S0 nor a wall of {t}")
    return 1 if classify_simples(g, a, cap).target_flags[simple] == "X" else 0


@dataclass(frozen=True)
class DegreeReport:
    k: int
    d: int
    max_degree: int
    achieving_walls: frozenset[int]
    chamber: str

    def to_json(self) -> dict:
        return {"k": self.k, "d": self.d, "max_degree": self.max_degree,
                "achieving_walls": sorted(self.achieving_walls)}


def _run_recursion(g: ChamberGraph, nf: DeligneNF, d: int, cap: int) -> dict[Simple, tuple[int, bool]]:
    """
    Induction on the number of factors. After ``j`` factors each simple at
    ``t(alpha_j)`` carries ``(bound, hit)``: its Ext groups vanish above
    ``bound``, and ``hit`` says degree ``bound`` is nonzero.

    Level 0 is ``b`` itself: every finite length module reaches degree ``d``
    and no further. Passing factor ``alpha``:

    * Y simple: pulls back to a module, so bounded by the previous top and
      never reaching ``top + 1``.
    * X simple: pulls back to a module shifted by one, bounded by ``top + 1``,
      and nonzero there because some simple that ``alpha`` starts across
      already hit ``top``.

    Returns the state after the last factor.
    """
    top = d
    state: dict[Simple, tuple[int, bool]] = {i: (d, True) for i in [S0, *sorted(g.walls(nf.source))]}
    for j, alpha in enumerate(nf.factors, start=1):
        cls = classify_simples(g, alpha, cap)
        starts = cls.f_walls
        hitting = {i for i, (b, hit) in state.items() if hit and b == top}
        if not starts:
            raise RecursionMismatch(f"factor {j} starts across no wall")
        # a factor starting across s_j forces the previous factor to end across s_j
        if not starts <= hitting:
            raise RecursionMismatch(
                f"factor {j}: starting walls {sorted(starts)} not among "
                f"top-degree simples {sorted(hitting)}"
            )
        nxt = {}
        for i in cls.target_flags:
            shift = inverse_shift(g, alpha, i, cap)
            nxt[i] = (top + 1, True) if shift else (top, False)
        state = nxt
        top += 1
    return state


def degree_report(g: ChamberGraph, nf: DeligneNF, d: int, cap: int = DEFAULT_CAP) -> DegreeReport:
    if d < 0:
        raise ValueError("d must be nonnegative")
    if nf.k < 1:
        raise EmptyPath("degree report needs at least one factor")
    state = _run_recursion(g, nf, d, cap)
    top = max(b for b, hit in state.values() if hit)
    if any(b > top for b, _ in state.values()):
        raise RecursionMismatch("a simple is bounded above the attained top degree")
    attaining = frozenset(i for i, (b, hit) in state.items() if hit and b == top)
    closed = nf.k + d
    last = end_walls(g, nf.factors[-1], cap).walls
    if top != closed or attaining != last:
        raise RecursionMismatch(
            f"recursion gives ({top}, {sorted(attaining)}), closed form ({closed}, {sorted(last)})"
        )
    return DegreeReport(nf.k, d, closed, last, nf.target)


def signature(g: ChamberGraph, p: PositivePath, cap: int = DEFAULT_CAP) -> tuple[int, frozenset[int]]:
    nf = deligne_nf(g, p, cap)
    if nf.k == 0:
        return 0, frozenset()
    return nf.k, end_walls(g, nf.factors[-1], cap).walls


def peel_compare(g: ChamberGraph, p: PositivePath, q: PositivePath, cap: int = DEFAULT_CAP) -> bool:
    """
    Equivalence by peeling: equal signatures are necessary; when they agree,
    drop a common final crossing from suitable representatives and recurse.
    """
    while True:
        if p.start != q.start or target(g, p) != target(g, q):
            return False
        sp, sq = signature(g, p, cap), signature(g, q, cap)
        if sp != sq:
            return False
        k, walls = sp
        if k == 0:
            return True
        h = min(walls)
        p = _drop_last(g, p, h, cap)
        q = _drop_last(g, q, h, cap)


def _drop_last(g: ChamberGraph, p: PositivePath, h: int, cap: int) -> PositivePath:
    rep = min(r for r in _class(g, p.start, p.crossings, cap) if r[-1] == h)
    return PositivePath(p.start, rep[:-1])

