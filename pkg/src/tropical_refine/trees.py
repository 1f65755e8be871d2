"""Leaf-labeled trivalent trees and their slope structure.

A rational parametrized tropical curve with n labeled ends retracts onto a
trivalent tree with n labeled leaves; there are (2n-5)!! of these. They are
enumerated by iterative leaf insertion: starting from the star on leaves
0, 1, 2, leaf k is attached to each of the 2k-3 edges of the smaller tree in
turn. Every labeled topology arises exactly once because pruning the highest
leaf inverts the construction.

Node convention: leaves are 0..n-1, internal vertices are n..2n-3 (vertex n
is the initial star center, vertex n+k-2 is created when leaf k is inserted).
Edge slopes are forced by the balancing condition: oriented from u to v, the
slope of an edge is the sum of the leaf directions on the v side.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import TooFewEnds
from .lattice import Degree, Vec, ZERO, wedge


@dataclass(frozen=True)
class VertexData:
    """An internal vertex with its outgoing slopes and multiplicity."""

    vertex: int
    slopes: tuple[Vec, ...]
    mult: int

    @property
    def is_flat(self) -> bool:
        return self.mult == 0


@dataclass(frozen=True)
class CombinatorialType:
    """A trivalent tree with labeled leaves carrying end directions."""

    leaf_dirs: tuple[Vec, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.leaf_dirs)

    @property
    def internal_vertices(self) -> range:
        return range(self.n, 2 * self.n - 2)

    @functools.cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in range(2 * self.n - 2)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(nb) for v, nb in adj.items()}

    @functools.cached_property
    def bounded_edges(self) -> tuple[tuple[int, int], ...]:
        """Internal-internal edges as sorted pairs, in sorted order."""
        n = self.n
        out = [tuple(sorted(e)) for e in self.edges if e[0] >= n and e[1] >= n]
        return tuple(sorted(out))

    def end_edge(self, leaf: int) -> tuple[int, int]:
        """The (leaf, vertex) edge carrying end `leaf`, as a sorted pair."""
        return tuple(sorted((leaf, self.leaf_vertex(leaf))))

    def leaf_vertex(self, leaf: int) -> int:
        return self.adjacency[leaf][0]

    @property
    def root_vertex(self) -> int:
        """The internal vertex adjacent to leaf 0 (end 1)."""
        return self.leaf_vertex(0)

    @functools.cached_property
    def slopes(self) -> dict[tuple[int, int], Vec]:
        """Directed slope map: slopes[(u, v)] is the displacement direction
        when walking from u to v, i.e. the sum of leaf directions behind v."""
        n = self.n
        adj = self.adjacency
        subtree: dict[tuple[int, int], Vec] = {}

        def far_sum(u: int, v: int) -> Vec:
            # sum of leaf directions in the component of v after cutting (u,v)
            key = (u, v)
            if key in subtree:
                return subtree[key]
            if v < n:
                total = self.leaf_dirs[v]
            else:
                total = ZERO
                for w in adj[v]:
                    if w != u:
                        total = total + far_sum(v, w)
            subtree[key] = total
            return total

        out: dict[tuple[int, int], Vec] = {}
        for u, v in self.edges:
            out[(u, v)] = far_sum(u, v)
            out[(v, u)] = -out[(u, v)]
        return out

    def vertex_slopes(self, v: int) -> tuple[Vec, ...]:
        return tuple(self.slopes[(v, w)] for w in self.adjacency[v])

    @functools.cached_property
    def vertex_data(self) -> tuple[VertexData, ...]:
        out = []
        for v in self.internal_vertices:
            sl = self.vertex_slopes(v)
            out.append(VertexData(v, sl, abs(wedge(sl[0], sl[1]))))
        return tuple(out)

    def multiplicities(self) -> dict[int, int]:
        return {vd.vertex: vd.mult for vd in self.vertex_data}

    def has_flat_vertex(self) -> bool:
        return any(vd.is_flat for vd in self.vertex_data)

    def paths_from_root(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """For every internal vertex, the directed edge path from the root
        vertex to it."""
        adj = self.adjacency
        n = self.n
        paths = {self.root_vertex: ()}
        stack = [self.root_vertex]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v >= n and v not in paths:
                    paths[v] = paths[u] + ((u, v),)
                    stack.append(v)
        return paths

    def canonical_key(self):
        """Label-respecting canonical form hung off the vertex adjacent to
        leaf 0. Leaves become (0, label), internal nodes (1, child, child)
        with children sorted, so keys are totally ordered and equal keys mean
        isomorphic labeled trees."""

        def sub(parent: int, v: int):
            if v < self.n:
                return (0, v)
            kids = sorted(sub(v, w) for w in self.adjacency[v] if w != parent)
            return (1, *kids)

        r = self.root_vertex
        kids = sorted(sub(r, w) for w in self.adjacency[r] if w != 0)
        return ((0, 0), *kids)

    def serialize(self) -> str:
        """Nested-parenthesis form of canonical_key, leaves by label."""

        def render(node) -> str:
            if node[0] == 0:
                return str(node[1])
            return "(" + ",".join(render(c) for c in node[1:]) + ")"

        key = self.canonical_key()
        return "(" + ",".join(render(c) for c in key) + ")"


def overvalence(valences: Iterable[int]) -> int:
    """Total excess valence over trivalent, summed across vertices."""
    return sum(v - 3 for v in valences)


def double_factorial_count(n: int) -> int:
    """(2n-5)!!, the number of trivalent trees on n labeled leaves."""
    if n < 3:
        raise TooFewEnds(f"need at least 3 ends, got {n}")
    out = 1
    for k in range(3, 2 * n - 4, 2):
        out *= k
    return out


def enumerate_types(delta: Degree) -> Iterator[CombinatorialType]:
    """All trivalent combinatorial types for a degree, streamed.

    Memory stays O(n); the shared mutable edge list is copied only at yield
    time. Order is deterministic (insertion-position lexicographic).
    """
    dirs = tuple(delta.entries)
    n = len(dirs)
    if n < 3:
        raise TooFewEnds(f"a curve needs at least 3 ends, got {n}")
    edges: list[tuple[int, int]] = [(0, n), (1, n), (2, n)]

    def grow(next_leaf: int) -> Iterator[CombinatorialType]:
        if next_leaf == n:
            yield CombinatorialType(dirs, tuple(edges))
            return
        w = n + next_leaf - 2
        for i in range(len(edges)):
            u, v = edges[i]
            edges[i] = (u, w)
            edges.append((w, v))
            edges.append((w, next_leaf))
            yield from grow(next_leaf + 1)
            edges.pop()
            edges.pop()
            edges[i] = (u, v)

    return grow(3)
