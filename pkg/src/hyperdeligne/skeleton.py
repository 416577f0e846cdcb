"""
The oriented 1-skeleton of a simplicial arrangement: chambers as vertices and
one arrow in each direction across every codimension-one wall.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .arrangement import MINUS, PLUS, Arrangement, Chamber, normalize_id
from .errors import NotAWall, NotSimplicial, UnknownChamber


@dataclass(frozen=True, order=True)
class Arrow:
    source: str
    target: str
    hyperplane: int

    def inverse(self) -> "Arrow":
        return Arrow(self.target, self.source, self.hyperplane)


def flip(cid: str, h: int) -> str:
    return cid[:h] + (MINUS if cid[h] == PLUS else PLUS) + cid[h + 1:]


@dataclass
class ChamberGraph:
    arrangement: Arrangement
    chambers: tuple[Chamber, ...]
    arrows: dict[str, tuple[Arrow, ...]]
    index: dict[str, int]
    distance_matrix: list[list[int]]
    # memo tables for path computations; never affect results
    cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def ids(self) -> list[str]:
        return [c.id for c in self.chambers]

    def check(self, cid: str) -> str:
        cid = normalize_id(cid)
        if cid not in self.index:
            raise UnknownChamber(f"{cid!r} is not a chamber")
        return cid

    def chamber(self, cid: str) -> Chamber:
        return self.chambers[self.index[self.check(cid)]]

    def walls(self, cid: str) -> frozenset[int]:
        return self.chamber(cid).walls

    def distance(self, c: str, d: str) -> int:
        return self.distance_matrix[self.index[self.check(c)]][self.index[self.check(d)]]

    def separating_set(self, c: str, d: str) -> frozenset[int]:
        """Hyperplanes on which ``c`` and ``d`` lie on opposite sides."""
        c, d = self.check(c), self.check(d)
        return frozenset(i for i, (x, y) in enumerate(zip(c, d)) if x != y)

    def step(self, c: str, h: int) -> str:
        """The chamber across wall ``h`` of ``c``."""
        c = self.check(c)
        if h not in self.chambers[self.index[c]].walls:
            raise NotAWall(f"hyperplane {h} is not a wall of chamber {c}")
        return flip(c, h)

    @property
    def arrow_count(self) -> int:
        return sum(len(v) for v in self.arrows.values())

    def edges(self) -> list[tuple[str, str, int]]:
        """Undirected edges ``(c, d, h)`` with ``c < d``, sorted."""
        return sorted((a.source, a.target, a.hyperplane)
                      for arrows in self.arrows.values() for a in arrows if a.source < a.target)

    def to_json(self) -> dict:
        return {
            "chambers": [
                {"id": c.id, "witness": [str(x) for x in c.witness], "walls": sorted(c.walls)}
                for c in self.chambers
            ],
            "arrows": [
                {"source": a.source, "target": a.target, "hyperplane": a.hyperplane}
                for c in self.chambers for a in self.arrows[c.id]
            ],
        }

    def to_dot(self) -> str:
        lines = ["graph skeleton {"]
        for c in self.chambers:
            lines.append(f'  "{c.id}" [label="{c.id}"];')
        for c, d, h in self.edges():
            lines.append(f'  "{c}" -- "{d}" [label="{h}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def build_graph(arr: Arrangement) -> ChamberGraph:
    if not arr.simplicial:
        raise NotSimplicial("the 1-skeleton is only built for simplicial arrangements")
    chambers = arr.chambers
    index = {c.id: i for i, c in enumerate(chambers)}
    arrows: dict[str, tuple[Arrow, ...]] = {}
    for c in chambers:
        out = []
        for h in c.walls:
            t = flip(c.id, h)
            # the wall test is authoritative; both sides must agree on it
            if t not in index or h not in chambers[index[t]].walls:
                raise AssertionError(f"wall {h} of {c.id} has no matching chamber across it")
            out.append(Arrow(c.id, t, h))
        arrows[c.id] = tuple(sorted(out, key=lambda a: a.target))
    dist = [[sum(x != y for x, y in zip(c.id, d.id)) for d in chambers] for c in chambers]
    return ChamberGraph(arr, chambers, arrows, index, dist)
