"""Toric degrees, their dual polygons, and the trees that parametrize curves.

A toric degree is a balanced multiset of nonzero lattice vectors: the
outgoing directions of a tropical curve's unbounded ends. Rational curves of
a degree with n ends are parametrized by trees with n labeled leaves, and
the generic (trivalent) ones are counted by the double factorial (2n-5)!!.
"""

from tropical_refine import (Degree, Vec, build_delta_s, delta_d,
                             double_factorial_count, enumerate_types,
                             polygon_of, split_even_ends)


def fmt(v: Vec) -> str:
    return f"({v.x},{v.y})"


triangle = Degree(((-1, 0), (0, -1), (1, 1)))
conic = delta_d(2)

print("triangle degree:", " ".join(fmt(v) for v in triangle))
print("conic degree:   ", " ".join(fmt(v) for v in conic))

poly = polygon_of(conic)
print("dual polygon of the conic:", " ".join(fmt(v) for v in poly.vertices))
print("twice its area:", poly.area2())
print()

# Merging s pairs of parallel ends into weight-2 ends produces the degree
# family Delta(s); split_even_ends recovers the parent and s.
merged = build_delta_s(conic, Vec(-1, 0), 1)
print("conic with one merged pair:", " ".join(fmt(v) for v in merged))
parent, s = split_even_ends(merged)
print("recovered parent has", len(parent), "ends; s =", s)
print()

print("trivalent tree counts per number of ends:")
for n in range(3, 8):
    dirs = [Vec(1, k) for k in range(n - 1)]
    total = Vec(sum(v.x for v in dirs), sum(v.y for v in dirs))
    dirs.append(Vec(-total.x, -total.y))
    count = sum(1 for _ in enumerate_types(Degree(tuple(dirs))))
    print(f"  n = {n}: {count} types, (2n-5)!! = {double_factorial_count(n)}")

print()
print("one combinatorial type of the conic degree:")
first = next(iter(enumerate_types(conic)))
print("  leaf directions:", " ".join(fmt(v) for v in first.leaf_dirs))
print("  edges:", first.edges)
print("  vertex multiplicities:", first.multiplicities())
