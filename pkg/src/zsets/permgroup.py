"""
Permutations in cycle notation and permutation groups given by generators.

Composition is left to right: ``compose(p, q)`` applies ``p`` first, then
``q``, matching the usual reading of products of cycles.  Group order and
membership come from a deterministic Schreier-Sims stabilizer chain whose
base points are the smallest points moved at each stage.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import PcSet
from .errors import DomainError, ModulusMismatch

_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0..degree-1}``; ``images[i]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise DomainError(f"not a permutation: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self) or '()'}, degree={self.degree})"


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint cycle notation such as ``"(1,3)(2,6)(5,7)"``.

    Points left out are fixed; ``""`` and ``"()"`` are the identity.
    """
    body = text.strip()
    if _CYCLE.sub("", body).strip():
        raise DomainError(f"malformed cycle notation {text!r}")
    images = list(range(degree))
    seen: set[int] = set()
    for group in _CYCLE.findall(body):
        if not group.strip():
            continue
        try:
            points = [int(t) for t in group.split(",")]
        except ValueError:
            raise DomainError(f"malformed cycle ({group}) in {text!r}") from None
        for p in points:
            if not 0 <= p < degree:
                raise DomainError(f"point {p} out of range for degree {degree}")
            if p in seen:
                raise DomainError(f"point {p} repeated in {text!r}")
            seen.add(p)
        for i, p in enumerate(points):
            images[p] = points[(i + 1) % len(points)]
    return Permutation(tuple(images))


def format_cycles(p: Permutation) -> str:
    return "".join("(" + ",".join(map(str, c)) + ")" for c in p.cycles())


def _check_degree(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise ModulusMismatch(f"degrees {p.degree} and {q.degree} differ")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` then ``q``."""
    _check_degree(p, q)
    qi = q.images
    return Permutation(tuple(qi[x] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.images):
        inv[x] = i
    return Permutation(tuple(inv))


def apply_to_set(p: Permutation, a: PcSet) -> PcSet:
    if p.degree != a.modulus:
        raise ModulusMismatch(f"permutation of degree {p.degree} cannot act on Z_{a.modulus}")
    return PcSet.of((p.images[x] for x in a.members), a.modulus)


# raw tuple arithmetic for the chain; skips validation on hot paths


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(q[x] for x in p)


def _inv(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


class _Level:
    __slots__ = ("point", "gens", "trans")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[tuple] = []
        # orbit point -> coset representative u with u[point] == orbit point
        self.trans: dict[int, tuple] = {}

    def rebuild(self, ident: tuple) -> None:
        trans = {self.point: ident}
        queue = [self.point]
        for x in queue:
            ux = trans[x]
            for g in self.gens:
                y = g[x]
                if y not in trans:
                    trans[y] = _mul(ux, g)
                    queue.append(y)
        self.trans = trans


class PermGroup:
    """A permutation group given by generators.

    The stabilizer chain is built on first use of :meth:`order` or
    :meth:`contains`, under a lock so that concurrent readers are safe.
    """

    def __init__(self, generators: Iterable[Permutation], degree: Optional[int] = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise DomainError("degree is required for a group with no generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ModulusMismatch(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._levels: Optional[list[_Level]] = None
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, generators=[{', '.join(map(str, self.generators))}])"

    # -- orbits -----------------------------------------------------------

    def orbits(self) -> list[list[int]]:
        """Orbits on points, each sorted, ordered by smallest element."""
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, x in enumerate(g.images):
                ri, rx = find(i), find(x)
                if ri != rx:
                    parent[max(ri, rx)] = min(ri, rx)
        cells: dict[int, list[int]] = {}
        for i in range(self.degree):
            cells.setdefault(find(i), []).append(i)
        return [cells[r] for r in sorted(cells)]

    def orbit(self, point: int) -> list[int]:
        for o in self.orbits():
            if point in o:
                return o
        raise DomainError(f"point {point} out of range")

    # -- stabilizer chain -------------------------------------------------

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            with self._lock:
                if self._levels is None:
                    self._levels = self._schreier_sims()
        return self._levels

    def _sift(self, g: tuple, levels: list[_Level], start: int = 0) -> tuple[tuple, int]:
        for i in range(start, len(levels)):
            lv = levels[i]
            x = g[lv.point]
            u = lv.trans.get(x)
            if u is None:
                return g, i
            g = _mul(g, _inv(u))
        return g, len(levels)

    def _schreier_sims(self) -> list[_Level]:
        n = self.degree
        ident = tuple(range(n))
        gens = [g.images for g in self.generators if not g.is_identity()]
        levels: list[_Level] = []

        def first_moved(g: tuple) -> int:
            return next(i for i, x in enumerate(g) if i != x)

        # every strong generator must move some base point
        for g in gens:
            if all(g[lv.point] == lv.point for lv in levels):
                levels.append(_Level(first_moved(g)))
        for i, lv in enumerate(levels):
            lv.gens = [g for g in gens if all(g[levels[j].point] == levels[j].point for j in range(i))]
            lv.rebuild(ident)

        i = len(levels) - 1
        while i >= 0:
            lv = levels[i]
            restart = False
            for x in list(lv.trans):
                ux = lv.trans[x]
                for s in lv.gens:
                    y = s[x]
                    h = _mul(_mul(ux, s), _inv(lv.trans[y]))
                    if h == ident:
                        continue
                    residue, j = self._sift(h, levels, i + 1)
                    if j == len(levels) and residue == ident:
                        continue
                    if j == len(levels):
                        levels.append(_Level(first_moved(residue)))
                    for lvl in range(i + 1, j + 1):
                        levels[lvl].gens.append(residue)
                        levels[lvl].rebuild(ident)
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1
        return levels

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self._chain()]

    def order(self) -> int:
        out = 1
        for lv in self._chain():
            out *= len(lv.trans)
        return out

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ModulusMismatch(f"degree {p.degree} does not match group degree {self.degree}")
        residue, j = self._sift(p.images, self._chain())
        return j == len(self._chain()) and residue == tuple(range(self.degree))

    __contains__ = contains

    def elements(self) -> Iterable[Permutation]:
        """Every element, via the chain's transversals (use on small groups only)."""
        levels = self._chain()
        ident = tuple(range(self.degree))

        def rec(i: int, acc: tuple):
            if i < 0:
                yield Permutation(acc)
                return
            for u in levels[i].trans.values():
                yield from rec(i - 1, _mul(acc, u))

        yield from rec(len(levels) - 1, ident)


def closure(generators: Sequence[Permutation], limit: int = 10**6) -> set[tuple]:
    """Breadth-first closure of a generating set; an oracle for :class:`PermGroup`."""
    if not generators:
        return set()
    n = generators[0].degree
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    gens = [g.images for g in generators]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > limit:
                        raise DomainError(f"closure exceeds {limit} elements")
        frontier = nxt
    return seen
