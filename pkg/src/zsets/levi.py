"""
Levi (incidence) graphs of block families and automorphism groups of
vertex-coloured graphs.

Automorphisms are found by individualisation-refinement: the colouring is
refined to an equitable partition, the first vertex of the first smallest
non-singleton cell is individualised, and the search descends depth first.
The leftmost leaf is the reference; every other subtree along the leftmost
path is searched for a leaf whose induced map is an automorphism, skipping
vertices already known to lie in the same orbit of the current pointwise
stabiliser.  The generators found generate the whole group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .core import PcSet, sorted_sets
from .errors import DomainError, ModulusMismatch
from .homometry import block_family, dihedral_orbit
from .permgroup import PermGroup, Permutation, apply_to_set


@dataclass(frozen=True)
class ColoredGraph:
    """Simple undirected graph with one small integer colour per vertex."""

    adjacency: tuple[tuple[int, ...], ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.adjacency) != len(self.colors):
            raise DomainError("one colour per vertex is required")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise DomainError(f"self-loop at {v}")
            if len(set(nbrs)) != len(nbrs):
                raise DomainError(f"parallel edges at {v}")
            for u in nbrs:
                if v not in self.adjacency[u]:
                    raise DomainError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], colors: Optional[Sequence[int]] = None):
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge {u}-{v} leaves the vertex range 0..{n - 1}")
            if v in adj[u]:
                raise DomainError(f"parallel edge {u}-{v}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(tuple(sorted(a)) for a in adj), tuple(colors) if colors is not None else (0,) * n)

    @property
    def order(self) -> int:
        return len(self.colors)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in self.adjacency[u] if u < v]

    def is_automorphism(self, images: Sequence[int]) -> bool:
        if len(images) != self.order:
            return False
        col, adj = self.colors, self.adjacency
        if any(col[v] != col[images[v]] for v in range(self.order)):
            return False
        nbr_sets = [set(a) for a in adj]
        return all(images[u] in nbr_sets[images[v]] for v in range(self.order) for u in adj[v])


@dataclass(frozen=True)
class LeviGraph:
    """Points ``0..N-1`` (colour 0) joined to block vertices ``N..N+u-1`` (colour 1)."""

    modulus: int
    blocks: tuple[PcSet, ...]
    graph: ColoredGraph

    def block_vertex(self, b: PcSet) -> int:
        return self.modulus + self.blocks.index(b)

    def to_dot(self) -> str:
        """Graphviz rendering; points are circles, blocks are boxes."""
        lines = ["graph levi {"]
        for i in range(self.modulus):
            lines.append(f'  p{i} [label="{i}", shape=circle, color=0, style=filled, fillcolor="lightblue"];')
        for j, b in enumerate(self.blocks):
            lines.append(f'  b{j} [label="{b}", shape=box, color=1, style=filled, fillcolor="lightyellow"];')
        for j, b in enumerate(self.blocks):
            for i in b.members:
                lines.append(f"  p{i} -- b{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_levi(n: int, blocks: Iterable[PcSet]) -> LeviGraph:
    blocks = list(blocks)
    for b in blocks:
        if b.modulus != n:
            raise ModulusMismatch(f"block {b} does not live in Z_{n}")
        if not b.mask:
            raise DomainError("empty block")
    if len(set(blocks)) != len(blocks):
        raise DomainError("duplicate block")
    ordered = sorted(blocks, key=lambda b: b.mask)
    edges = [(i, n + j) for j, b in enumerate(ordered) for i in b.members]
    colors = [0] * n + [1] * len(ordered)
    return LeviGraph(n, tuple(ordered), ColoredGraph.from_edges(n + len(ordered), edges, colors))


# ---------------------------------------------------------------------------
# partition refinement


def _ranks(keys: Sequence) -> list[int]:
    table = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [table[k] for k in keys]


def refine(adjacency: Sequence[Sequence[int]], colors: Sequence[int]) -> list[int]:
    """Coarsest equitable refinement of an ordered colouring.

    Cell indices are assigned by sorting (old colour, neighbour-colour
    multiset) signatures, so the result commutes with graph isomorphisms.
    """
    colors = _ranks(colors)
    count = max(colors) + 1 if colors else 0
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in adjacency[v]))) for v in range(len(colors))]
        new = _ranks(sig)
        new_count = max(new) + 1 if new else 0
        if new_count == count:
            return new
        colors, count = new, new_count


def _individualize(colors: Sequence[int], v: int) -> list[int]:
    out = [2 * c + 1 for c in colors]
    out[v] -= 1
    return out


def _target_cell(colors: Sequence[int]) -> Optional[int]:
    sizes: dict[int, int] = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    best = None
    for c in sorted(sizes):
        s = sizes[c]
        if s > 1 and (best is None or s < sizes[best]):
            best = c
    return best


def _invariant(adjacency, colors: Sequence[int]) -> tuple:
    """Cell sizes plus the quotient matrix of an equitable colouring."""
    reps: dict[int, int] = {}
    sizes: dict[int, int] = {}
    for v, c in enumerate(colors):
        reps.setdefault(c, v)
        sizes[c] = sizes.get(c, 0) + 1
    return tuple(
        (c, sizes[c], tuple(sorted(colors[u] for u in adjacency[reps[c]]))) for c in sorted(reps)
    )


def _orbit_of(point: int, gens: Sequence[tuple]) -> set[int]:
    orb = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orb:
                orb.add(y)
                stack.append(y)
    return orb


def automorphisms(g: ColoredGraph) -> list[Permutation]:
    """Generators of the colour- and adjacency-preserving automorphism group."""
    n = g.order
    if n == 0:
        return []
    adj = g.adjacency
    root = refine(adj, g.colors)

    # leftmost path
    path: list[tuple[int, int]] = []  # (target cell, individualised vertex)
    parts = [root]
    invs = [_invariant(adj, root)]
    cur = root
    while (cell := _target_cell(cur)) is not None:
        v = min(x for x in range(n) if cur[x] == cell)
        path.append((cell, v))
        cur = refine(adj, _individualize(cur, v))
        parts.append(cur)
        invs.append(_invariant(adj, cur))
    first_leaf = cur  # discrete: vertex x sits at position cur[x]

    def leaf_map(leaf: Sequence[int]) -> tuple[int, ...]:
        at = [0] * n
        for x, pos in enumerate(leaf):
            at[pos] = x
        return tuple(at[first_leaf[x]] for x in range(n))

    def search(colors: list[int], depth: int) -> Optional[tuple[int, ...]]:
        if _invariant(adj, colors) != invs[depth]:
            return None
        cell = _target_cell(colors)
        if cell is None:
            images = leaf_map(colors)
            return images if g.is_automorphism(images) else None
        for u in (x for x in range(n) if colors[x] == cell):
            found = search(refine(adj, _individualize(colors, u)), depth + 1)
            if found is not None:
                return found
        return None

    gens: list[tuple[int, ...]] = []
    for level in reversed(range(len(path))):
        cell, v = path[level]
        part = parts[level]
        prefix = [w for _, w in path[:level]]
        failed: list[int] = []
        for w in (x for x in range(n) if part[x] == cell):
            if w == v:
                continue
            stab = [h for h in gens if all(h[p] == p for p in prefix)]
            if w in _orbit_of(v, stab) or any(w in _orbit_of(f, stab) for f in failed):
                continue
            found = search(refine(adj, _individualize(part, w)), level + 1)
            if found is None:
                failed.append(w)
            else:
                gens.append(found)
    return [Permutation(h) for h in gens]


def automorphism_group(g: ColoredGraph) -> PermGroup:
    return PermGroup(automorphisms(g), degree=g.order)


# ---------------------------------------------------------------------------
# the group of a block family


@dataclass
class AutResult:
    modulus: int
    blocks: tuple[PcSet, ...]
    graph_generators: list[Permutation]
    point_generators: list[Permutation]
    group: PermGroup
    point_orbits: list[list[int]]
    block_orbits: list[list[PcSet]] = field(default_factory=list)
    vertex_orbits: list[list[int]] = field(default_factory=list)

    @property
    def order(self) -> int:
        return self.group.order()


def verify_stabilizes(p: Permutation, blocks: Iterable[PcSet]) -> bool:
    blocks = list(blocks)
    for b in blocks:
        if b.modulus != p.degree:
            raise ModulusMismatch(f"permutation of degree {p.degree} cannot act on Z_{b.modulus}")
    family = set(blocks)
    return {apply_to_set(p, b) for b in family} == family


def z_automorphism_group(n: int, blocks: Iterable[PcSet], close: bool = True) -> AutResult:
    """Automorphism group of a block family, acting on the N points.

    With ``close`` (the default) the family is first expanded to its full
    closure under transpositions and inversions.
    """
    blocks = list(blocks)
    family = block_family(blocks) if close else list(blocks)
    levi = build_levi(n, family)
    full = automorphisms(levi.graph)
    point_gens = []
    for h in full:
        if any(h.images[i] >= n for i in range(n)):
            raise DomainError("automorphism mixes point and block colours")
        p = Permutation(h.images[:n])
        if not p.is_identity():
            point_gens.append(p)
    group = PermGroup(point_gens, degree=n)
    vertex_orbits = PermGroup(full, degree=levi.graph.order).orbits() if full else [[v] for v in range(levi.graph.order)]
    block_orbits = [sorted_sets([levi.blocks[v - n] for v in orb]) for orb in vertex_orbits if orb[0] >= n]
    return AutResult(
        modulus=n,
        blocks=levi.blocks,
        graph_generators=full,
        point_generators=point_gens,
        group=group,
        point_orbits=group.orbits(),
        block_orbits=block_orbits,
        vertex_orbits=vertex_orbits,
    )


def homometric_blocks(n: int, k: int, workers: int = 1) -> list[PcSet]:
    """Every k-subset of Z_N that belongs to some homometric tuple."""
    from .enumeration import census

    return block_family(c for t in census(n, k, workers).tuples for c in t.classes)
