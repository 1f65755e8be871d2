"""Real splittings of curves with even ends, and quantum-index bookkeeping.

A parametrized curve whose ends have weight 1 or 2 can be presented as the
quotient of a symmetric curve: the even part (the minimal subgraph containing
every weight-2 end, closed under the rule that a vertex with all but one
incident edge even pulls in the last one) is cut at a set of points R, and
the pieces beyond the cuts are doubled. The resulting graph carries an
involution whose quotient recovers the original curve; edge lengths double
and slopes halve on the doubled part.

Cut positions are discretized: on a bounded edge only the interior class
matters, while on an unbounded end the interior position (which creates a
flat trivalent vertex out on the end) and the position at the adjacent
vertex (which makes that vertex quadrivalent) are genuinely different. The
split with every weight-2 end cut at its adjacent vertex is the maximal one;
it is the only splitting without flat vertices, and its quadrivalent
vertices are where the quantum-index arithmetic below happens.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import (FlatVertex, InadmissibleSet, MultipleDivisors,
                     OddQuadMultiplicity, OutOfRange, TropicalError)
from .lattice import Vec, lattice_length, primitive, wedge
from .laurent import HalfLaurent, w_pow_minus_inverse
from .solver import TropicalSolution
from .trees import CombinatorialType, VertexData

EdgeKey = tuple[int, int]


def _key(e) -> EdgeKey:
    a, b = e
    return (a, b) if a <= b else (b, a)


def _is_even(v: Vec) -> bool:
    return v.x % 2 == 0 and v.y % 2 == 0


@dataclass(frozen=True, eq=False)
class WeightedPlaneParam:
    """A parametrized plane curve with end weights 1 or 2.

    Wraps a combinatorial type (whose leaf directions may be non-primitive)
    together with optional exact bounded-edge lengths. Purely combinatorial
    instances (lengths None) support every splitting operation; metric data,
    when present, is carried through splits and quotients.
    """

    tree: CombinatorialType
    lengths: Mapping[EdgeKey, Fraction] | None = None

    def __post_init__(self):
        weights = [lattice_length(d) for d in self.tree.leaf_dirs]
        if any(w > 2 for w in weights):
            raise ValueError("end weights above 2 are out of scope")
        if all(w == 2 for w in weights):
            raise ValueError("need at least one odd (weight-1) end")
        if self.lengths is not None:
            want = set(self.tree.bounded_edges)
            have = {_key(e) for e in self.lengths}
            if want != have:
                raise ValueError("lengths must cover exactly the bounded edges")
            norm = {_key(e): Fraction(v) for e, v in self.lengths.items()}
            if any(v <= 0 for v in norm.values()):
                raise ValueError("edge lengths must be positive")
            object.__setattr__(self, "lengths", norm)

    @classmethod
    def from_solution(cls, sol: TropicalSolution) -> "WeightedPlaneParam":
        return cls(sol.ctype, dict(sol.lengths))

    def even_leaves(self) -> tuple[int, ...]:
        return tuple(l for l, d in enumerate(self.tree.leaf_dirs)
                     if _is_even(d))

    def edge_length(self, e: EdgeKey) -> Fraction | None:
        return None if self.lengths is None else self.lengths[_key(e)]

    def normalized(self):
        """Order-independent content, for equality checks across round trips."""
        return (frozenset(_key(e) for e in self.tree.edges),
                self.tree.leaf_dirs,
                None if self.lengths is None else dict(self.lengths))

    def __eq__(self, other):
        if not isinstance(other, WeightedPlaneParam):
            return NotImplemented
        return self.normalized() == other.normalized()

    def __hash__(self):
        edges, dirs, lens = self.normalized()
        return hash((edges, dirs, None if lens is None else frozenset(lens.items())))


def gamma_even(base: WeightedPlaneParam) -> frozenset[EdgeKey]:
    """Minimal even subgraph: all weight-2 end edges, closed under the
    extendable-vertex rule."""
    tree = base.tree
    even: set[EdgeKey] = {_key(tree.end_edge(l)) for l in base.even_leaves()}
    changed = True
    while changed:
        changed = False
        for v in tree.internal_vertices:
            incident = [_key((v, w)) for w in tree.adjacency[v]]
            missing = [e for e in incident if e not in even]
            if len(missing) == 1:
                even.add(missing[0])
                changed = True
    return frozenset(even)


def even_components(base: WeightedPlaneParam) -> list[frozenset[EdgeKey]]:
    """Connected components of the even subgraph, as edge sets."""
    remaining = set(gamma_even(base))
    comps = []
    while remaining:
        seed = next(iter(remaining))
        comp = {seed}
        remaining.discard(seed)
        frontier = [seed]
        while frontier:
            e = frontier.pop()
            for f in list(remaining):
                if set(e) & set(f):
                    comp.add(f)
                    remaining.discard(f)
                    frontier.append(f)
        comps.append(frozenset(comp))
    return comps


def _root_component(base: WeightedPlaneParam, comp: frozenset[EdgeKey]):
    """Orient a component away from its stem.

    Returns (stem, orient, children) where orient maps each component edge to
    (stem side, far side) and children maps it to the component edges hanging
    below its far side.
    """
    tree = base.tree
    n = tree.n
    incident: dict[int, list[EdgeKey]] = {}
    for e in comp:
        for v in e:
            if v >= n:
                incident.setdefault(v, []).append(e)
    boundary = [v for v, es in incident.items()
                if len(es) < len(tree.adjacency[v])]
    if len(boundary) != 1 or len(incident[boundary[0]]) != 1:
        raise TropicalError("even component has no unique stem vertex")
    stem = boundary[0]
    orient: dict[EdgeKey, tuple[int, int]] = {}
    children: dict[EdgeKey, list[EdgeKey]] = {}
    queue: list[tuple[int, EdgeKey]] = [(stem, incident[stem][0])]
    while queue:
        near, e = queue.pop()
        far = e[0] if e[1] == near else e[1]
        orient[e] = (near, far)
        kids = []
        if far >= n:
            for f in incident[far]:
                if f != e:
                    kids.append(f)
                    queue.append((far, f))
        children[e] = sorted(kids)
    return stem, orient, children


def stem_of(base: WeightedPlaneParam, comp: frozenset[EdgeKey]) -> int:
    return _root_component(base, comp)[0]


def admissible_sets(base: WeightedPlaneParam,
                    comp: frozenset[EdgeKey]) -> Iterator[frozenset[EdgeKey]]:
    """All interior cut classes of one even component.

    Each yielded set is an antichain of component edges meeting every path
    from the stem to an even end exactly once; a cut point sits in the
    interior of each listed edge.
    """
    stem, orient, children = _root_component(base, comp)
    root_edge = next(e for e, (near, _) in orient.items() if near == stem)

    def cuts(e: EdgeKey) -> list[frozenset[EdgeKey]]:
        out = [frozenset({e})]
        kids = children[e]
        if kids:
            for combo in itertools.product(*(cuts(k) for k in kids)):
                out.append(frozenset().union(*combo))
        return out

    return iter(cuts(root_edge))


@dataclass(frozen=True)
class SplitEdge:
    """One edge of a split curve; slope is directed a -> b."""

    a: tuple
    b: tuple
    slope: Vec
    length: Fraction | None
    image: EdgeKey


@dataclass(frozen=True)
class RealSplit:
    """A symmetric model of a weighted curve: two copies glued along the
    part fixed by the involution sigma."""

    base: WeightedPlaneParam
    vertex_points: tuple[int, ...]
    edge_points: tuple[tuple[EdgeKey, Fraction], ...]
    nodes: tuple
    edges: tuple[SplitEdge, ...]
    quad_vertices: tuple[tuple[int, int], ...]   # (base vertex, multiplicity)
    flat_nodes: tuple

    def sigma(self, node):
        tag, x = node
        if tag == "f":
            return node
        return ("-" if tag == "+" else "+", x)

    @staticmethod
    def pi(node):
        """Image of a split node downstairs: a base node id or a cut marker."""
        return node[1]

    @property
    def fixed_nodes(self) -> frozenset:
        return frozenset(nd for nd in self.nodes if nd[0] == "f")

    def is_finite(self, node) -> bool:
        x = self.pi(node)
        return not (isinstance(x, int) and x < self.base.tree.n)

    @functools.cached_property
    def _adjacency(self) -> dict:
        adj: dict[tuple, list[SplitEdge]] = {nd: [] for nd in self.nodes}
        for e in self.edges:
            adj[e.a].append(e)
            adj[e.b].append(e)
        return adj

    def valence(self, node) -> int:
        return len(self._adjacency[node])

    def valences(self) -> dict:
        return {nd: self.valence(nd) for nd in self.nodes
                if self.is_finite(nd)}

    def outgoing_slopes(self, node) -> list[Vec]:
        out = []
        for e in self._adjacency[node]:
            out.append(e.slope if e.a == node else -e.slope)
        return out

    @property
    def is_realizable(self) -> bool:
        return not self.flat_nodes


def _normalize_points(base, rooted, points):
    """Sort raw (edge, offset) pairs into vertex points and interior edge
    points, rejecting duplicates and off-even placements."""
    even = gamma_even(base)
    vertex_points: set[int] = set()
    edge_points: dict[EdgeKey, Fraction] = {}
    for edge, offset in points:
        e = _key(edge)
        if e not in even:
            raise InadmissibleSet(f"point on {e} is not on the even subgraph")
        offset = Fraction(offset)
        if offset < 0:
            raise InadmissibleSet("negative offset")
        near, far = rooted[e]
        if offset == 0:
            vertex_points.add(near)
            continue
        is_end = min(e) < base.tree.n
        if not is_end:
            full = base.edge_length(e)
            if full is not None and offset >= full:
                raise InadmissibleSet(
                    f"offset {offset} reaches past edge {e} of length {full}")
        if e in edge_points and edge_points[e] != offset:
            raise InadmissibleSet(f"two cut points on edge {e}")
        edge_points[e] = offset
    return vertex_points, edge_points


def build_split(base: WeightedPlaneParam,
                points: Iterable[tuple[EdgeKey, Fraction]]) -> RealSplit:
    """Construct the symmetric curve defined by splitting points.

    Each point is (edge, offset); the offset is measured from the edge
    endpoint nearer the stem of its even component, and offset 0 means the
    cut sits at that vertex itself. Admissibility (exactly one cut between
    the stem and every even end, no nesting) is enforced.
    """
    tree = base.tree
    n = tree.n
    comps = even_components(base)
    rooted: dict[EdgeKey, tuple[int, int]] = {}
    comp_parents: dict[int, tuple[int, EdgeKey] | None] = {}
    for comp in comps:
        stem, orient, _ = _root_component(base, comp)
        rooted.update(orient)
        for e, (near, far) in orient.items():
            if far >= n:
                comp_parents[far] = (near, e)
        comp_parents.setdefault(stem, None)
    vertex_points, edge_points = _normalize_points(base, rooted, points)

    # admissibility: walk up from every even end and count separators
    for leaf in base.even_leaves():
        e = _key(tree.end_edge(leaf))
        hits = 1 if e in edge_points else 0
        v = rooted[e][0]
        while True:
            if v in vertex_points:
                hits += 1
            up = comp_parents.get(v)
            if up is None:
                break
            parent_vertex, through = up
            if through in edge_points:
                hits += 1
            v = parent_vertex
        if hits != 1:
            raise InadmissibleSet(
                f"path from the stem to end {leaf} crosses {hits} cut points")

    # pieces: base edges, subdivided at interior cut points
    pieces: list[tuple[tuple, tuple, Vec, Fraction | None, EdgeKey]] = []
    for edge in tree.edges:
        e = _key(edge)
        slope_near_far: Vec
        if e in rooted:
            near, far = rooted[e]
        else:
            near, far = e
        slope = tree.slopes[(near, far)]
        full = None
        if min(e) >= n:
            full = base.edge_length(e)
        elif far < n:
            full = None
        if e in edge_points:
            off = edge_points[e]
            cut = ("cut", e)
            rest = None if full is None else full - off
            pieces.append((near, cut, slope, off, e))
            pieces.append((cut, far, slope, rest, e))
        else:
            pieces.append((near, far, slope, full, e))

    # regions of the complement of the cut points
    removed = set(vertex_points) | {("cut", e) for e in edge_points}
    neighbors: dict = {}
    for a, b, *_ in pieces:
        neighbors.setdefault(a, []).append(b)
        neighbors.setdefault(b, []).append(a)
    region: dict = {x: None for x in neighbors}
    for x in removed:
        region[x] = "fix"
    even_leaf_set = set(base.even_leaves())
    for x in list(region):
        if region[x] is not None:
            continue
        comp_nodes = [x]
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for z in neighbors[y]:
                if z not in seen and z not in removed:
                    seen.add(z)
                    comp_nodes.append(z)
                    stack.append(z)
        tag = "split" if any(isinstance(y, int) and y in even_leaf_set
                             for y in comp_nodes) else "fix"
        for y in comp_nodes:
            region[y] = tag

    def lift(x, sign):
        return (sign, x)

    split_edges: list[SplitEdge] = []
    node_set: set = set()
    for a, b, slope, length, image in pieces:
        doubling = region[a] == "split" or region[b] == "split"
        if doubling:
            if slope.x % 2 or slope.y % 2:
                raise InadmissibleSet(
                    f"cannot halve odd slope {tuple(slope)} on {image}")
            half = Vec(slope.x // 2, slope.y // 2)
            twice = None if length is None else 2 * length
            for sign in ("+", "-"):
                ta = lift(a, sign if region[a] == "split" else "f")
                tb = lift(b, sign if region[b] == "split" else "f")
                split_edges.append(SplitEdge(ta, tb, half, twice, image))
                node_set.update((ta, tb))
        else:
            ta, tb = lift(a, "f"), lift(b, "f")
            split_edges.append(SplitEdge(ta, tb, slope, length, image))
            node_set.update((ta, tb))

    # classify special finite vertices of the split curve
    valence: dict = {}
    slopes_at: dict = {}
    for e in split_edges:
        for nd, sl in ((e.a, e.slope), (e.b, -e.slope)):
            valence[nd] = valence.get(nd, 0) + 1
            slopes_at.setdefault(nd, []).append(sl)

    def finite(nd):
        x = nd[1]
        return not (isinstance(x, int) and x < n)

    base_mults = tree.multiplicities()
    quads = []
    flats = []
    for nd in sorted(node_set, key=repr):
        if not finite(nd):
            continue
        if valence[nd] == 4 and isinstance(nd[1], int):
            quads.append((nd[1], base_mults[nd[1]]))
        sl = slopes_at[nd]
        if valence[nd] >= 3 and all(
                wedge(sl[0], s) == 0 and wedge(sl[1], s) == 0 for s in sl):
            flats.append(nd)

    return RealSplit(
        base=base,
        vertex_points=tuple(sorted(vertex_points)),
        edge_points=tuple(sorted(edge_points.items())),
        nodes=tuple(sorted(node_set, key=repr)),
        edges=tuple(split_edges),
        quad_vertices=tuple(sorted(quads)),
        flat_nodes=tuple(flats),
    )


def quotient_curve(split: RealSplit) -> WeightedPlaneParam:
    """Quotient by the involution; inverse of build_split.

    Doubled pieces get their lengths halved and slopes doubled, then the
    subdivision points are smoothed away. The result reuses the base node
    ids, so equality with the original is literal.
    """
    n = split.base.tree.n
    by_pair: dict[tuple, tuple[Vec, Fraction | None, EdgeKey]] = {}
    for e in split.edges:
        if e.a[0] == "-" or e.b[0] == "-":
            continue
        doubled = e.a[0] == "+" or e.b[0] == "+"
        a, b = e.a[1], e.b[1]
        if doubled:
            slope = Vec(2 * e.slope.x, 2 * e.slope.y)
            length = None if e.length is None else e.length / 2
        else:
            slope, length = e.slope, e.length
        if (b, a) in by_pair:
            prev_slope, _, _ = by_pair[(b, a)]
            if prev_slope != -slope:
                raise TropicalError("inconsistent piece slopes in quotient")
            continue
        by_pair[(a, b)] = (slope, length, e.image)

    # smooth the valence-2 cut nodes back into single edges
    merged: dict[EdgeKey, tuple[int, int, Vec, Fraction | None]] = {}
    partial: dict = {}
    for (a, b), (slope, length, image) in by_pair.items():
        partial.setdefault(image, []).append((a, b, slope, length))
    for image, parts in partial.items():
        if len(parts) == 1:
            a, b, slope, length = parts[0]
            merged[image] = (a, b, slope, length)
            continue
        if len(parts) != 2:
            raise TropicalError(f"edge {image} split into {len(parts)} pieces")
        (a1, b1, s1, l1), (a2, b2, s2, l2) = parts
        if not isinstance(b1, tuple):
            (a1, b1, s1, l1), (a2, b2, s2, l2) = (a2, b2, s2, l2), (a1, b1, s1, l1)
        if b1 != a2 or s1 != s2:
            raise TropicalError(f"pieces of {image} do not chain")
        total = None if (l1 is None or l2 is None) else l1 + l2
        merged[image] = (a1, b2, s1, total)

    edges = []
    leaf_dirs: list[Vec | None] = [None] * n
    lengths: dict[EdgeKey, Fraction] = {}
    metric = split.base.lengths is not None
    for image in sorted(merged):
        a, b, slope, length = merged[image]
        edges.append((a, b))
        if isinstance(a, int) and a < n:
            leaf_dirs[a] = -slope
        elif isinstance(b, int) and b < n:
            leaf_dirs[b] = slope
        elif metric:
            lengths[_key((a, b))] = length
    tree = CombinatorialType(tuple(leaf_dirs), tuple(edges))
    return WeightedPlaneParam(tree, lengths if metric else None)


def maximal_split(base: WeightedPlaneParam) -> RealSplit:
    """The unique splitting with every weight-2 end cut at its adjacent
    vertex; no flat vertices, one quadrivalent vertex per even end.

    Requires all even ends parallel (a single divisor); even ends meeting at
    a shared vertex would make it flat and are rejected.
    """
    tree = base.tree
    evens = base.even_leaves()
    if evens:
        prims = {primitive(tree.leaf_dirs[l]) for l in evens}
        if len(prims) > 1:
            raise MultipleDivisors(
                f"even ends span {len(prims)} directions, need exactly one")
    end_edges = {_key(tree.end_edge(l)) for l in evens}
    if gamma_even(base) != end_edges:
        raise FlatVertex("even subgraph extends past the weight-2 ends; "
                         "some vertex joining them is flat")
    split = build_split(base, [(e, Fraction(0)) for e in sorted(end_edges)])
    assert len(split.quad_vertices) == len(evens) and not split.flat_nodes
    return split


def _mult_map(vertex_mults) -> dict[int, int]:
    if isinstance(vertex_mults, Mapping):
        return dict(vertex_mults)
    out = {}
    for vd in vertex_mults:
        if isinstance(vd, VertexData):
            out[vd.vertex] = vd.mult
        else:
            v, m = vd
            out[v] = m
    return out


def m_prime(split: RealSplit, vertex_mults) -> HalfLaurent:
    """First-order real multiplicity of the split curve.

    4 * prod over quadrivalent W of (q^(m_W/2) - q^(-m_W/2)) / (q - 1/q)
      * prod over the other vertices of (q^(m_V/2) - q^(-m_V/2)).

    vertex_mults carries the base-vertex multiplicities (a mapping, a list of
    VertexData, or (vertex, mult) pairs).
    """
    mults = _mult_map(vertex_mults)
    quads = dict(split.quad_vertices)
    for v, m in quads.items():
        if mults.get(v, m) != m:
            raise TropicalError(
                f"vertex {v}: split says multiplicity {m}, caller {mults[v]}")
        if m % 2:
            raise OddQuadMultiplicity(f"vertex {v} has odd multiplicity {m}")
    num = HalfLaurent(4)
    for v in sorted(mults):
        num = num * w_pow_minus_inverse(mults[v])
    den = w_pow_minus_inverse(2) ** len(quads)
    return num.exact_div(den)


def oriented_solution_count(split: RealSplit) -> int:
    """Number of oriented first-order real solutions over the split curve:
    2^(m - 2s) times the product of the quadrivalent multiplicities, where m
    counts ends of the primitive parent degree."""
    s = len(split.base.even_leaves())
    m = split.base.tree.n + s
    out = 1 << (m - 2 * s)
    for _, mw in split.quad_vertices:
        out *= mw
    return out


# -- quantum indices ---------------------------------------------------------


def trivalent_quantum_index(u: Vec, v: Vec) -> tuple[Fraction, Fraction]:
    """The two possible quantum indices of a trivalent vertex with outgoing
    slopes u, v: plus or minus half its multiplicity."""
    m = abs(wedge(u, v))
    if m == 0:
        raise FlatVertex("flat vertex has no quantum index")
    return (Fraction(m, 2), Fraction(-m, 2))


def quad_indices(m1: int, delta: int) -> list[int]:
    """Quantum indices of the m1 first-order solutions at a quadrivalent
    vertex of type (m1; delta): delta * (2k + 1 - m1) for k = 0..m1-1."""
    if m1 < 1:
        raise OutOfRange(f"m1 must be at least 1, got {m1}")
    if delta < 1:
        raise OutOfRange(f"delta must be at least 1, got {delta}")
    return [delta * (2 * k + 1 - m1) for k in range(m1)]


def quad_refined_sum(m1: int, delta: int) -> HalfLaurent:
    """Sum of q^index over the quadrivalent solutions; equals the exact
    quotient (q^(delta*m1) - q^(-delta*m1)) / (q^delta - q^(-delta))."""
    return HalfLaurent.from_pairs(
        (2 * idx, 1) for idx in quad_indices(m1, delta))


def coamoeba_area(m1: int, k: int) -> Fraction:
    """Signed coamoeba defect of the k-th solution sheet, in units of pi^2:
    (2k + 1)/m1 - 1."""
    if m1 < 1:
        raise OutOfRange(f"m1 must be at least 1, got {m1}")
    if not 0 <= k < m1:
        raise OutOfRange(f"k must lie in [0, {m1}), got {k}")
    return Fraction(2 * k + 1, m1) - 1


def c_k_values(m1: int) -> list[Fraction]:
    """Cotangent arguments of the solution sheets, as exact multiples of pi:
    (2k + 1) / (2 m1) for k = 0..m1-1."""
    if m1 < 1:
        raise OutOfRange(f"m1 must be at least 1, got {m1}")
    return [Fraction(2 * k + 1, 2 * m1) for k in range(m1)]
