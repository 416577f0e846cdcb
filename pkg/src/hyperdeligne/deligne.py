"""
Deligne normal form of positive paths and the word problem in the Deligne
groupoid.

The normal form is greedy: the first factor is the unique atom whose Begin set
equals the Begin set of the whole path; it is split off and the remainder is
factored the same way. Factors are listed first-in-time first.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Literal

from .errors import EndpointMismatch, NoGreedyAtom, NotAWall
from .paths import (
    DEFAULT_CAP,
    Atom,
    PositivePath,
    _class,
    _walk,
    as_atom,
    begin_chambers,
    begin_walls,
    canonical_atom,
    end_walls,
    fraction_form,
    is_atom,
    target,
    trace,
)
from .skeleton import Arrow, ChamberGraph, flip


@dataclass(frozen=True)
class DeligneNF:
    source: str
    target: str
    factors: tuple[Atom, ...]

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def lengths(self) -> list[int]:
        return [len(f) for f in self.factors]

    def endpoints(self, g: ChamberGraph) -> list[tuple[str, str]]:
        return [(f.start, target(g, f)) for f in self.factors]

    def path(self) -> PositivePath:
        """Literal concatenation of the factors."""
        return PositivePath(self.source, [h for f in self.factors for h in f.crossings])

    def to_text(self, g: ChamberGraph) -> str:
        if not self.factors:
            return f"{self.source} [] {self.target}"
        return " | ".join(
            f"{f.start} [{','.join(map(str, f.crossings))}] {target(g, f)}" for f in self.factors
        )

    def to_json(self, g: ChamberGraph) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "factors": [
                {"crossings": list(f.crossings), "source": f.start, "target": target(g, f)}
                for f in self.factors
            ],
        }


def deligne_nf(g: ChamberGraph, p: PositivePath, cap: int = DEFAULT_CAP) -> DeligneNF:
    seq = trace(g, p)
    key = ("nf", p.start, p.crossings)
    hit = g.cache.get(key)
    if hit is not None:
        return hit
    factors: list[Atom] = []
    start, rest = p.start, p.crossings
    while rest:
        rem = PositivePath(start, rest)
        begins = begin_chambers(g, rem, cap)
        greedy = [
            d for d in sorted(begins)
            if d != start and begin_chambers(g, canonical_atom(g, start, d), cap) == begins
        ]
        if len(greedy) != 1:
            raise NoGreedyAtom(f"{len(greedy)} candidate first factors for {rem.literal}")
        d = greedy[0]
        steps = g.distance(start, d)
        # a class member passing through d after `steps` crossings; drop that prefix
        member = min(q for q in _class(g, start, rest, cap) if _walk(start, q[:steps])[-1] == d)
        factors.append(canonical_atom(g, start, d))
        start, rest = d, member[steps:]
    nf = DeligneNF(p.start, seq[-1], tuple(factors))
    g.cache[key] = nf
    return nf


def nf_validate(g: ChamberGraph, nf: DeligneNF) -> bool:
    """Endpoint chaining, atomic nonempty factors and local normality at each junction."""
    try:
        g.check(nf.source)
        g.check(nf.target)
        cur = nf.source
        for f in nf.factors:
            if f.start != cur or not f.crossings or not is_atom(g, f):
                return False
            cur = target(g, f)
        if cur != nf.target:
            return False
        for prev, nxt in zip(nf.factors, nf.factors[1:]):
            if not begin_walls(g, nxt).walls <= end_walls(g, prev).walls:
                return False
    except (NotAWall, ValueError):
        return False
    return True


def word_problem(g: ChamberGraph, p: PositivePath, q: PositivePath, cap: int = DEFAULT_CAP) -> bool:
    """Whether two positive paths are equivalent, decided by their normal forms."""
    if p.start != q.start or target(g, p) != target(g, q):
        return False
    a, b = deligne_nf(g, p, cap), deligne_nf(g, q, cap)
    return a.k == b.k and a.endpoints(g) == b.endpoints(g)


def extend_atom(
    g: ChamberGraph, a: PositivePath, h: int, side: Literal["prepend", "append"]
) -> Atom | None:
    """
    Add one crossing of ``h`` before (``prepend``) or after (``append``) the
    atom ``a``. The result is an atom iff ``h`` is not a Begin (resp. End)
    wall of ``a``; returns the extended atom, or ``None`` when it is not one.
    """
    a = as_atom(g, a)
    if side == "prepend":
        if h not in g.walls(a.start):
            raise NotAWall(f"hyperplane {h} is not a wall of {a.start}")
        if a.crossings and h in begin_walls(g, a).walls:
            return None
        return Atom(flip(a.start, h), (h,) + a.crossings)
    if side == "append":
        t = target(g, a)
        if h not in g.walls(t):
            raise NotAWall(f"hyperplane {h} is not a wall of {t}")
        if a.crossings and h in end_walls(g, a).walls:
            return None
        return Atom(a.start, a.crossings + (h,))
    raise ValueError(f"side must be 'prepend' or 'append', not {side!r}")


# -- groupoid words -----------------------------------------------------------

class Verdict(enum.Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class GroupoidWord:
    """Letters in time order; exponent -1 traverses an arrow backwards."""

    base: str
    letters: tuple[tuple[Arrow, int], ...] = ()

    @classmethod
    def from_path(cls, g: ChamberGraph, p: PositivePath) -> "GroupoidWord":
        seq = trace(g, p)
        return cls(p.start, tuple((Arrow(u, v, h), 1) for u, v, h in zip(seq, seq[1:], p.crossings)))

    def inverse(self) -> "GroupoidWord":
        return GroupoidWord(self.end(), tuple((a, -e) for a, e in reversed(self.letters)))

    def then(self, other: "GroupoidWord") -> "GroupoidWord":
        return GroupoidWord(self.base, self.letters + other.letters)

    def end(self) -> str:
        cur = self.base
        for a, e in self.letters:
            src, dst = (a.source, a.target) if e == 1 else (a.target, a.source)
            if src != cur:
                raise EndpointMismatch(f"letter {a} (exponent {e}) does not continue from {cur}")
            cur = dst
        return cur


def _fraction(g: ChamberGraph, w: GroupoidWord, cap: int) -> tuple[PositivePath, PositivePath]:
    """
    Rewrite ``w`` as ``num o den^-1``: positive ``den`` runs from some chamber
    ``X`` back to ``w.base`` and positive ``num`` runs from ``X`` to the end.
    Each inverse letter is pushed through the numerator's normal form factors
    with the opposite-chamber fractions.
    """
    den = PositivePath(w.base)
    num = PositivePath(w.base)
    for arrow, e in w.letters:
        if e == 1:
            num = num.then(PositivePath(arrow.source, (arrow.hyperplane,)))
            continue
        b: PositivePath = Atom(arrow.source, (arrow.hyperplane,))
        factors = deligne_nf(g, num, cap).factors
        if not factors:
            num = PositivePath(arrow.source)
            den = b.then(den)
            continue
        qs = []
        for alpha in reversed(factors):
            p_j, q_j = fraction_form(g, alpha, b)
            qs.append(q_j)
            b = p_j
        qs.reverse()
        num = PositivePath(qs[0].start, [h for q in qs for h in q.crossings])
        den = b.then(den)
    return num, den


def _positive_paths_into(g: ChamberGraph, end: str, length: int) -> list[PositivePath]:
    """All positive paths of exactly ``length`` crossings ending at ``end``."""
    out = []
    frontier = [(end, ())]
    for _ in range(length):
        frontier = [(flip(c, h), (h,) + cr) for c, cr in frontier for h in sorted(g.walls(c))]
    for c, cr in frontier:
        out.append(PositivePath(c, cr))
    return out


def groupoid_equal(
    g: ChamberGraph,
    w1: GroupoidWord,
    w2: GroupoidWord,
    bound: int | None = None,
    cap: int = DEFAULT_CAP,
) -> Verdict:
    """
    Compare two groupoid words. Both are brought to right fractions
    ``q_i p_i^-1``; a common right multiple ``p1 r1 ~ p2 r2`` is built from
    the fraction of ``p2^-1 p1`` (and, failing that, searched for among
    multipliers of length <= ``bound``); then the words are equal iff
    ``q1 r1 ~ q2 r2``.
    """
    if bound is None:
        bound = 2 * len(g.arrangement)
    try:
        e1, e2 = w1.end(), w2.end()
    except EndpointMismatch:
        return Verdict.NOT_EQUAL
    if w1.base != w2.base or e1 != e2:
        return Verdict.NOT_EQUAL
    q1, p1 = _fraction(g, w1, cap)
    q2, p2 = _fraction(g, w2, cap)
    mult = _common_multiple(g, p1, p2, bound, cap)
    if mult is None:
        return Verdict.INCONCLUSIVE
    r1, r2 = mult
    same = word_problem(g, r1.then(q1), r2.then(q2), cap)
    return Verdict.EQUAL if same else Verdict.NOT_EQUAL


def _common_multiple(
    g: ChamberGraph, p1: PositivePath, p2: PositivePath, bound: int, cap: int
) -> tuple[PositivePath, PositivePath] | None:
    if p1.start == p2.start and word_problem(g, p1, p2, cap):
        return PositivePath(p1.start), PositivePath(p2.start)
    bridge = GroupoidWord.from_path(g, p1).then(GroupoidWord.from_path(g, p2).inverse())
    r2, r1 = _fraction(g, bridge, cap)
    if word_problem(g, r1.then(p1), r2.then(p2), cap):
        return r1, r2
    for n1, n2 in itertools.product(range(bound + 1), repeat=2):
        if len(p1) + n1 != len(p2) + n2:
            continue
        for c1 in _positive_paths_into(g, p1.start, n1):
            for c2 in _positive_paths_into(g, p2.start, n2):
                if c1.start == c2.start and word_problem(g, c1.then(p1), c2.then(p2), cap):
                    return c1, c2
    return None


def dumps_nf(g: ChamberGraph, nf: DeligneNF) -> str:
    return json.dumps(nf.to_json(g), indent=2)
