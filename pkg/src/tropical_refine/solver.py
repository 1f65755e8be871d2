"""Exact solver for the boundary-moment evaluation map.

Fixing a combinatorial type, a parametrized curve is pinned down by the
position of the root vertex (the one adjacent to end 1) and the lengths of
the n-3 bounded edges. Each end moment is an affine function of these n-1
unknowns, so prescribing the moments of ends 2..n gives a square integer
linear system. Its determinant factors as the product of the vertex
multiplicities, which gives the solver a built-in cross-check.

All arithmetic is over Fraction; a solution is accepted only when every edge
length is strictly positive. A length of exactly zero means the constraint
sits on a wall of the moment cone and callers must resample.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import DegenerateType, NonGenericMoments
from .lattice import MomentVector, Vec, wedge
from .laurent import HalfLaurent, q_analog
from .trees import CombinatorialType


def evaluation_matrix(ctype: CombinatorialType) -> list[list[int]]:
    """Integer matrix of the evaluation map.

    Row j-1 (for end j in 2..n) gives the moment of end j; columns are the
    root position (x, y) followed by the bounded edge lengths in the order of
    ctype.bounded_edges.
    """
    n = ctype.n
    bounded = ctype.bounded_edges
    col = {e: 2 + i for i, e in enumerate(bounded)}
    paths = ctype.paths_from_root()
    slopes = ctype.slopes
    rows = []
    for leaf in range(1, n):
        nj = ctype.leaf_dirs[leaf]
        row = [0] * (len(bounded) + 2)
        row[0] = -nj.y
        row[1] = nj.x
        for u, v in paths[ctype.leaf_vertex(leaf)]:
            row[col[tuple(sorted((u, v)))]] += wedge(nj, slopes[(u, v)])
        rows.append(row)
    return rows


def _solve_exact(matrix: list[list[int]], rhs: list[Fraction]):
    """Gaussian elimination over Fraction with exact pivoting.

    Returns (det, solution); solution is None when det == 0. The determinant
    is the signed product of pivots, so it is exact as well.
    """
    m = [[Fraction(x) for x in row] + [rhs[i]] for i, row in enumerate(matrix)]
    size = len(m)
    det = Fraction(1)
    for c in range(size):
        pivot_row = next((r for r in range(c, size) if m[r][c] != 0), None)
        if pivot_row is None:
            return Fraction(0), None
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            det = -det
        pv = m[c][c]
        det *= pv
        for r in range(c + 1, size):
            if m[r][c] != 0:
                factor = m[r][c] / pv
                for k in range(c, size + 1):
                    m[r][k] -= factor * m[c][k]
    x = [Fraction(0)] * size
    for r in range(size - 1, -1, -1):
        acc = m[r][size] - sum((m[r][k] * x[k] for k in range(r + 1, size)),
                               Fraction(0))
        x[r] = acc / m[r][r]
    return det, x


@dataclass(frozen=True)
class TropicalSolution:
    """A parametrized curve of a fixed type through the given moments."""

    ctype: CombinatorialType
    moments: MomentVector
    root: tuple[Fraction, Fraction]
    lengths: dict[tuple[int, int], Fraction]
    det_abs: int

    def positions(self) -> dict[int, tuple[Fraction, Fraction]]:
        """Exact plane position of every internal vertex."""
        slopes = self.ctype.slopes
        pos = {self.ctype.root_vertex: self.root}
        for v, path in self.ctype.paths_from_root().items():
            if v in pos:
                continue
            x, y = self.root
            for a, b in path:
                ln = self.lengths[tuple(sorted((a, b)))]
                s = slopes[(a, b)]
                x += ln * s.x
                y += ln * s.y
            pos[v] = (x, y)
        return pos

    def end_moments(self) -> tuple[Fraction, ...]:
        """Recomputed moments of all n ends (including end 1) from geometry."""
        pos = self.positions()
        out = []
        for leaf in range(self.ctype.n):
            nj = self.ctype.leaf_dirs[leaf]
            px, py = pos[self.ctype.leaf_vertex(leaf)]
            out.append(nj.x * py - nj.y * px)
        return tuple(out)

    def verify(self) -> None:
        """Assert the defining equations hold exactly; raises on any drift."""
        got = self.end_moments()
        want = self.moments.full()
        if got != want:
            raise AssertionError(f"moment mismatch: {got} != {want}")
        if sum(got, Fraction(0)) != 0:
            raise AssertionError("Menelaus sum nonzero")
        if self.det_abs != prod(self.ctype.multiplicities().values()):
            raise AssertionError("determinant does not factor over vertices")

    def refined_multiplicity(self) -> HalfLaurent:
        """Product of quantum integers [m_V] over the vertices."""
        out = HalfLaurent(1)
        for m in self.ctype.multiplicities().values():
            out = out * q_analog(m)
        return out

    def classical_multiplicity(self) -> int:
        return self.det_abs


def solve(ctype: CombinatorialType, mu: MomentVector) -> TropicalSolution | None:
    """Solve the moment constraints for one combinatorial type.

    Returns None when the type does not realize (some length negative),
    raises DegenerateType when the system is singular (a flat vertex) and
    NonGenericMoments when a length vanishes exactly.
    """
    n = ctype.n
    if len(mu) != n:
        raise ValueError(f"moment vector for {len(mu)} ends, type has {n}")
    matrix = evaluation_matrix(ctype)
    det, x = _solve_exact(matrix, list(mu.values))
    if det == 0:
        raise DegenerateType("singular evaluation map (flat vertex)")
    det_int = int(det)
    assert det == det_int and abs(det_int) == prod(
        ctype.multiplicities().values()
    ), "determinant must factor as the product of vertex multiplicities"
    lengths = {e: x[2 + i] for i, e in enumerate(ctype.bounded_edges)}
    if any(v < 0 for v in lengths.values()):
        return None
    if any(v == 0 for v in lengths.values()):
        raise NonGenericMoments("an edge length vanishes; resample moments")
    return TropicalSolution(ctype, mu, (x[0], x[1]), lengths, abs(det_int))
