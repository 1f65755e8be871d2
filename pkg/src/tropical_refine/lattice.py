"""Lattice vectors, toric degrees and their dual polygons, moment vectors.

Conventions used throughout the package:

* the ambient lattice is Z^2 and the symplectic pairing is the determinant,
  ``wedge(u, v) = u.x*v.y - u.y*v.x``;
* a *degree* is an ordered list of nonzero integer vectors summing to zero,
  one per labeled unbounded end of a curve; the weight of an end is the
  lattice length (gcd of coordinates) of its vector, so weight-2 ends are
  simply non-primitive entries such as (-2, 0);
* the *moment* of an end with direction n passing through a point p is
  wedge(n, p); the moments of all ends of a curve sum to zero (the tropical
  Menelaus relation), so a constraint vector only ever stores the moments of
  ends 2..n and end 1 is implied.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DegenerateDegree, InsufficientMultiplicity, LengthMismatch


class Vec(tuple):
    """An integer lattice vector.

    Subclasses tuple for cheap hashing/equality but overrides arithmetic so
    that + and - are componentwise rather than concatenation.
    """

    __slots__ = ()

    def __new__(cls, x, y):
        if not isinstance(x, int) or not isinstance(y, int):
            raise TypeError("lattice vectors need integer coordinates")
        return tuple.__new__(cls, (x, y))

    @property
    def x(self) -> int:
        return self[0]

    @property
    def y(self) -> int:
        return self[1]

    def __add__(self, other):
        return Vec(self[0] + other[0], self[1] + other[1])

    def __sub__(self, other):
        return Vec(self[0] - other[0], self[1] - other[1])

    def __neg__(self):
        return Vec(-self[0], -self[1])

    def scale(self, k: int) -> "Vec":
        return Vec(k * self[0], k * self[1])

    def __repr__(self):
        return f"Vec({self[0]}, {self[1]})"


ZERO = Vec(0, 0)


def wedge(u, v) -> int:
    """Determinant pairing of two lattice vectors (also their moment form)."""
    return u[0] * v[1] - u[1] * v[0]


def lattice_length(v) -> int:
    """gcd of |x|, |y|; the integer length (weight) of a lattice vector."""
    return gcd(abs(v[0]), abs(v[1]))


def primitive(v) -> Vec:
    """The primitive vector on the same ray."""
    g = lattice_length(v)
    if g == 0:
        raise ValueError("zero vector has no direction")
    return Vec(v[0] // g, v[1] // g)


def rot90(v) -> Vec:
    """Counterclockwise quarter turn."""
    return Vec(-v[1], v[0])


def angle_cmp(u, v) -> int:
    # counterclockwise order starting just above the positive x-axis
    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    w = wedge(u, v)
    if w > 0:
        return -1
    if w < 0:
        return 1
    return 0


@dataclass(frozen=True)
class Degree:
    """Ordered multiset of end directions; the label of an end is its index."""

    entries: tuple[Vec, ...]
    name: str | None = None

    def __post_init__(self):
        ents = tuple(Vec(e[0], e[1]) for e in self.entries)
        object.__setattr__(self, "entries", ents)
        if any(e == ZERO for e in ents):
            raise DegenerateDegree("degree entries must be nonzero")
        total = functools.reduce(Vec.__add__, ents, ZERO)
        if total != ZERO:
            raise DegenerateDegree(
                f"degree entries must sum to zero, got {tuple(total)}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def weights(self) -> tuple[int, ...]:
        return tuple(lattice_length(e) for e in self.entries)

    def is_primitive(self) -> bool:
        return all(w == 1 for w in self.weights())

    def canonical(self) -> "Degree":
        """Entries sorted lexicographically by direction (stable in labels)."""
        return Degree(tuple(sorted(self.entries)), name=self.name)

    def to_json(self) -> dict:
        d: dict = {"entries": [[e.x, e.y] for e in self.entries]}
        if self.name is not None:
            d["name"] = self.name
        return d

    @classmethod
    def from_json(cls, data: dict) -> "Degree":
        return cls(tuple(Vec(int(x), int(y)) for x, y in data["entries"]),
                   name=data.get("name"))


def delta_d(d: int) -> Degree:
    """The standard projective degree d: each of (-1,0), (0,-1), (1,1) taken
    d times."""
    if d < 1:
        raise ValueError("d must be positive")
    ents = (Vec(-1, 0),) * d + (Vec(0, -1),) * d + (Vec(1, 1),) * d
    return Degree(ents, name=f"delta_{d}")


def build_delta_s(delta: Degree, n1: Vec, s: int) -> Degree:
    """Replace 2s copies of the primitive direction n1 by s doubled ends.

    The first 2s entries equal to n1 are removed (remaining labels compact to
    the left, preserving order) and s copies of 2*n1 are appended at the end.
    """
    n1 = Vec(n1[0], n1[1])
    if lattice_length(n1) != 1:
        raise ValueError("n1 must be primitive")
    if s < 0:
        raise ValueError("s must be nonnegative")
    if not delta.is_primitive():
        raise ValueError("degree surgery starts from a primitive degree")
    available = sum(1 for e in delta.entries if e == n1)
    if available < 2 * s:
        raise InsufficientMultiplicity(
            f"need {2 * s} ends of direction {tuple(n1)}, degree has {available}")
    kept: list[Vec] = []
    removed = 0
    for e in delta.entries:
        if e == n1 and removed < 2 * s:
            removed += 1
        else:
            kept.append(e)
    kept.extend(n1.scale(2) for _ in range(s))
    name = None
    if delta.name is not None:
        name = f"{delta.name}({s})" if s else delta.name
    return Degree(tuple(kept), name=name)


def split_even_ends(delta_s: Degree) -> tuple[Degree, int]:
    """Undo weight-2 surgery: return the primitive parent degree and s.

    Each weight-2 entry 2*n becomes two consecutive copies of n; weight-1
    entries pass through. Entries of weight > 2 are rejected.
    """
    out: list[Vec] = []
    s = 0
    for e in delta_s.entries:
        w = lattice_length(e)
        if w == 1:
            out.append(e)
        elif w == 2:
            p = primitive(e)
            out.extend((p, p))
            s += 1
        else:
            raise ValueError(f"end of weight {w} not supported, only 1 and 2")
    return Degree(tuple(out), name=delta_s.name), s


@dataclass(frozen=True)
class LatticePolygon:
    """Convex lattice polygon, vertices counterclockwise, anchored so the
    lexicographically smallest vertex sits at the origin and comes first."""

    vertices: tuple[Vec, ...]

    def area2(self) -> int:
        """Twice the area (shoelace)."""
        vs = self.vertices
        return sum(wedge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def sides(self) -> list[tuple[Vec, Vec]]:
        """List of (start vertex, edge vector) pairs in ccw order."""
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)] - vs[i]) for i in range(len(vs))]


def _anchor(vertices: Sequence[Vec]) -> tuple[Vec, ...]:
    lo = min(vertices)
    i = vertices.index(lo)
    rotated = tuple(vertices[i:]) + tuple(vertices[:i])
    return tuple(v - lo for v in rotated)


def polygon_of(delta: Degree) -> LatticePolygon:
    """Dual polygon of a degree: each distinct primitive direction becomes an
    outward normal whose side has the summed weight as lattice length."""
    weight_by_normal: dict[Vec, int] = {}
    for e in delta.entries:
        weight_by_normal.setdefault(primitive(e), 0)
        weight_by_normal[primitive(e)] += lattice_length(e)
    if len(weight_by_normal) < 3:
        raise DegenerateDegree("all directions lie on one line")
    normals = sorted(weight_by_normal, key=functools.cmp_to_key(angle_cmp))
    verts: list[Vec] = [ZERO]
    for n in normals[:-1]:
        verts.append(verts[-1] + rot90(n).scale(weight_by_normal[n]))
    return LatticePolygon(_anchor(verts))


def normals_of(poly: LatticePolygon) -> Degree:
    """Primitive outward normals with side-length multiplicity, canonically
    ordered. Inverse to polygon_of on canonicalized primitive degrees."""
    ents: list[Vec] = []
    for _, side in poly.sides():
        g = lattice_length(side)
        p = primitive(side)
        ents.extend([Vec(p.y, -p.x)] * g)
    return Degree(tuple(sorted(ents)))


def as_fraction(value) -> Fraction:
    """Accept Fraction, int, or a 'p/q' string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class MomentVector:
    """Moments of ends 2..n; the moment of end 1 is forced by Menelaus."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values",
                           tuple(as_fraction(v) for v in self.values))

    @property
    def implied_first(self) -> Fraction:
        return -sum(self.values, Fraction(0))

    def full(self) -> tuple[Fraction, ...]:
        return (self.implied_first,) + self.values

    def __len__(self) -> int:
        return len(self.values) + 1


def frac_str(value) -> str:
    """Lossless text form of a rational: "3", "-7/2"."""
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def menelaus_sum(full_moments: Iterable, delta: Degree) -> Fraction:
    """Sum of a full moment list; zero for any actual curve of this degree."""
    vals = [as_fraction(v) for v in full_moments]
    if len(vals) != len(delta):
        raise LengthMismatch(
            f"{len(vals)} moments for a degree with {len(delta)} ends")
    return sum(vals, Fraction(0))
