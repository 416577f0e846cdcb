"""
Central real hyperplane arrangements with exact rational data.

Chambers are identified by sign strings over ``'+'``/``'-'``, one character per
hyperplane in input order. Enumeration is incremental: hyperplanes are inserted
one at a time and every current region is split by an exact strict-feasibility
test.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    ChamberNotFound,
    DimensionMismatch,
    DuplicateHyperplane,
    ParseError,
    UnknownChamber,
    UnknownGenerator,
    ZeroNormal,
)
from .exact import dot, extreme_rays, primitive, rank, strict_margin

PLUS, MINUS = "+", "-"
_UNICODE_MINUS = "−"


def normalize_id(sign_string: str) -> str:
    """Accept U+2212 as a minus sign in user-supplied chamber ids."""
    return sign_string.replace(_UNICODE_MINUS, MINUS)


@dataclass(frozen=True)
class Hyperplane:
    """A linear hyperplane, stored as its canonical primitive integer normal."""

    normal: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.normal)

    def evaluate(self, x: Sequence[Fraction]) -> Fraction:
        return dot([Fraction(c) for c in self.normal], x)

    def side(self, x: Sequence[Fraction]) -> int:
        v = self.evaluate(x)
        return (v > 0) - (v < 0)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.normal)


def canonicalize_hyperplane(coeffs: Sequence, dim: int | None = None) -> Hyperplane:
    """
    Unique representative of the hyperplane ``{x : coeffs . x = 0}``: coprime
    integers with the first nonzero entry positive.

    >>> canonicalize_hyperplane([Fraction(1, 2), 1]).normal
    (1, 2)
    """
    if dim is not None and len(coeffs) != dim:
        raise DimensionMismatch(f"expected {dim} coefficients, got {len(coeffs)}")
    vals = [Fraction(c) for c in coeffs]
    if not vals or all(v == 0 for v in vals):
        raise ZeroNormal("hyperplane normal is zero")
    ints = primitive(vals)
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = tuple(-v for v in ints)
    return Hyperplane(ints)


@dataclass(frozen=True)
class Chamber:
    id: str
    witness: tuple[Fraction, ...] = field(compare=False)
    walls: frozenset[int] = field(compare=False)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if ch == PLUS else -1 for ch in self.id)


def negate_id(cid: str) -> str:
    return "".join(MINUS if ch == PLUS else PLUS for ch in cid)


def _constraints(normals: Sequence[Sequence[Fraction]], signs: Sequence[int]) -> list[list[Fraction]]:
    return [[s * a for a in row] for row, s in zip(normals, signs)]


@dataclass(frozen=True)
class Arrangement:
    """A finite central arrangement in ``R^dim``; immutable once built."""

    dim: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise DimensionMismatch("dimension must be at least 1")
        if not self.hyperplanes:
            raise ValueError("an arrangement needs at least one hyperplane")
        seen: dict[Hyperplane, int] = {}
        for i, h in enumerate(self.hyperplanes):
            if h.dim != self.dim:
                raise DimensionMismatch(f"hyperplane {i} has {h.dim} coefficients, expected {self.dim}")
            if h in seen:
                raise DuplicateHyperplane(f"hyperplanes {seen[h]} and {i} coincide ({h})")
            seen[h] = i

    @classmethod
    def from_forms(cls, dim: int, forms: Iterable[Sequence]) -> "Arrangement":
        return cls(dim, tuple(canonicalize_hyperplane(f, dim) for f in forms))

    def __len__(self) -> int:
        return len(self.hyperplanes)

    @cached_property
    def _normals(self) -> list[list[Fraction]]:
        return [[Fraction(c) for c in h.normal] for h in self.hyperplanes]

    def sign_id(self, x: Sequence[Fraction]) -> str:
        """Sign string of a point; raises if the point lies on a hyperplane."""
        out = []
        for i, h in enumerate(self.hyperplanes):
            s = h.side(x)
            if s == 0:
                raise ValueError(f"point lies on hyperplane {i}")
            out.append(PLUS if s > 0 else MINUS)
        return "".join(out)

    def region_witness(self, cid: str, on: int | None = None) -> tuple[Fraction, ...] | None:
        """
        Interior point of the open region with sign string ``cid``; ``None`` if
        empty. With ``on=h`` the sign of hyperplane ``h`` is replaced by the
        equation ``a_h . x = 0`` (relative interior of a candidate wall).
        """
        signs = [1 if ch == PLUS else -1 for ch in cid]
        rows = _constraints(self._normals[: len(signs)], signs)
        equal = []
        if on is not None:
            equal = [rows[on]]
            rows = rows[:on] + rows[on + 1:]
        t, x = strict_margin(rows, equal, dim=self.dim)
        return x if t > 0 else None

    @cached_property
    def chambers(self) -> tuple[Chamber, ...]:
        return tuple(enumerate_chambers(self))

    @cached_property
    def chamber_index(self) -> dict[str, Chamber]:
        return {c.id: c for c in self.chambers}

    def chamber(self, cid: str) -> Chamber:
        cid = normalize_id(cid)
        try:
            return self.chamber_index[cid]
        except KeyError:
            raise UnknownChamber(f"{cid!r} is not a chamber") from None

    @cached_property
    def essential(self) -> bool:
        return is_essential(self)

    @cached_property
    def simplicial(self) -> bool:
        return is_simplicial(self)

    def cone_rays(self, c: Chamber) -> list[tuple[Fraction, ...]]:
        """Extreme rays of the closure of chamber ``c`` (essential arrangements only)."""
        return extreme_rays(_constraints(self._normals, c.signs), self.dim)


def enumerate_chambers(arr: Arrangement) -> list[Chamber]:
    """All chambers of ``arr``, sorted by id, each with a witness and wall set."""
    regions: list[tuple[str, tuple[Fraction, ...]]] = [("", tuple(Fraction(0) for _ in range(arr.dim)))]
    for k, h in enumerate(arr.hyperplanes):
        nxt = []
        for cid, w in regions:
            side = h.side(w)
            for sym in (PLUS, MINUS):
                sgn = 1 if sym == PLUS else -1
                if side == sgn and k > 0:
                    nxt.append((cid + sym, w))
                    continue
                x = arr.region_witness(cid + sym)
                if x is not None:
                    nxt.append((cid + sym, x))
        regions = nxt
    witnesses = dict(regions)
    out = []
    for cid in sorted(witnesses):
        walls = frozenset(h for h in range(len(arr)) if _is_wall(arr, cid, h, witnesses))
        out.append(Chamber(cid, witnesses[cid], walls))
    return out


def _is_wall(arr: Arrangement, cid: str, h: int, witnesses: dict[str, tuple[Fraction, ...]]) -> bool:
    """
    Whether ``{a_h . x = 0}`` meets the closure of chamber ``cid`` in an
    (n-1)-dimensional face. A neighbour across ``h`` gives a segment whose
    crossing point with the hyperplane is checked exactly; otherwise the
    strict-feasibility program decides.
    """
    flipped = cid[:h] + (MINUS if cid[h] == PLUS else PLUS) + cid[h + 1:]
    if flipped in witnesses:
        w, v = witnesses[cid], witnesses[flipped]
        hp = arr.hyperplanes[h]
        fw, fv = hp.evaluate(w), hp.evaluate(v)
        lam = fw / (fw - fv)
        x = tuple(a + lam * (b - a) for a, b in zip(w, v))
        if all(g.side(x) == (1 if ch == PLUS else -1)
               for k, (g, ch) in enumerate(zip(arr.hyperplanes, cid)) if k != h):
            return True
    return arr.region_witness(cid, on=h) is not None


def is_essential(arr: Arrangement) -> bool:
    return rank(arr._normals) == arr.dim


def is_simplicial(arr: Arrangement) -> bool:
    if not is_essential(arr):
        return False
    for c in arr.chambers:
        rays = arr.cone_rays(c)
        if len(rays) != arr.dim or rank(rays) != arr.dim:
            return False
    return True


def opposite_chamber(arr: Arrangement, c: Chamber | str) -> Chamber:
    cid = c.id if isinstance(c, Chamber) else normalize_id(c)
    target = negate_id(cid)
    try:
        return arr.chamber_index[target]
    except KeyError:
        raise ChamberNotFound(f"no chamber opposite to {cid!r}") from None


# -- generators ---------------------------------------------------------------

_GENERATORS: dict[str, tuple[int, list[list[int]]]] = {
    "example-2-6": (2, [[1, 0], [0, 1], [1, 1], [1, 2]]),
    "example-2-3": (3, [
        [1, 0, 0], [0, 1, 0], [0, 0, 1],
        [1, 1, 0], [1, 0, 1], [0, 1, 1],
        [1, 1, 1],
    ]),
    "a2": (2, [[1, 0], [0, 1], [1, 1]]),
}

GENERATOR_NAMES = ("example-2-3", "example-2-6", "a2", "coordinate-<n>")


def generator(name: str) -> Arrangement:
    """
    Built-in arrangements. ``example-2-6`` is the rank-two arrangement of the
    forms t1, t2, t1+t2, t1+2t2; ``example-2-3`` the seven forms t1, t2, t3,
    t1+t2, t1+t3, t2+t3, t1+t2+t3 in R^3; ``coordinate-<n>`` the coordinate
    hyperplanes of R^n.
    """
    if name in _GENERATORS:
        dim, forms = _GENERATORS[name]
        return Arrangement.from_forms(dim, forms)
    m = re.fullmatch(r"coordinate-(\d+)", name)
    if m and int(m.group(1)) >= 1:
        n = int(m.group(1))
        return Arrangement.from_forms(n, [[int(i == j) for j in range(n)] for i in range(n)])
    raise UnknownGenerator(f"unknown generator {name!r}; known: {', '.join(GENERATOR_NAMES)}")


# -- text format --------------------------------------------------------------

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(token: str) -> Fraction:
    if not _RATIONAL.fullmatch(token):
        raise ValueError(f"not a rational: {token!r}")
    if "/" in token:
        p, q = token.split("/")
        if int(q) == 0:
            raise ValueError(f"zero denominator: {token!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(token))


def parse_arrangement(text: str) -> Arrangement:
    """
    Parse the line format::

        # comment
        dim 2
        1 0
        1/2 1
    """
    dim = None
    hyperplanes: list[Hyperplane] = []
    seen: dict[Hyperplane, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col0 = len(line) - len(line.lstrip()) + 1
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if dim is None:
            if len(tokens) != 2 or tokens[0][0] != "dim":
                raise ParseError("expected 'dim <n>' as the first significant line", lineno, col0)
            try:
                dim = int(tokens[1][0])
            except ValueError:
                raise ParseError(f"bad dimension {tokens[1][0]!r}", lineno, tokens[1][1]) from None
            if dim < 1:
                raise ParseError("dimension must be at least 1", lineno, tokens[1][1])
            continue
        if len(tokens) != dim:
            raise ParseError(f"expected {dim} coefficients, found {len(tokens)}", lineno, col0)
        coeffs = []
        for tok, col in tokens:
            try:
                coeffs.append(parse_rational(tok))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, col) from None
        try:
            h = canonicalize_hyperplane(coeffs, dim)
        except ZeroNormal:
            raise ParseError("hyperplane normal is zero", lineno, col0) from None
        if h in seen:
            raise ParseError(f"duplicate of hyperplane {seen[h]} (line {lineno})", lineno, col0)
        seen[h] = len(hyperplanes)
        hyperplanes.append(h)
    if dim is None:
        raise ParseError("missing 'dim <n>' line")
    if not hyperplanes:
        raise ParseError("no hyperplanes given")
    return Arrangement(dim, tuple(hyperplanes))


def format_arrangement(arr: Arrangement) -> str:
    lines = [f"dim {arr.dim}"]
    lines += [str(h) for h in arr.hyperplanes]
    return "\n".join(lines) + "\n"
