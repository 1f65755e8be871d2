"""Quantum indices of real curves through a quadrivalent vertex.

A quadrivalent vertex holding a weight-m1 tangency splits real curves into
m1 classes, one per quantum index delta*(2k+1-m1). Their refined sum has the
closed form (q^(delta*m1) - q^(-delta*m1)) / (q^delta - q^(-delta)), and the
indices are delta*m1 times the normalized coamoeba areas 2c_k - 1.
"""

from tropical_refine import (Vec, c_k_values, coamoeba_area, quad_indices,
                             quad_refined_sum, trivalent_quantum_index,
                             w_pow_minus_inverse)

print("index tables for small tangency weight m1 and lattice width delta:")
for m1, delta in ((1, 1), (2, 1), (3, 1), (3, 2), (4, 1), (5, 3)):
    indices = quad_indices(m1, delta)
    total = quad_refined_sum(m1, delta)
    print(f"  m1 = {m1}, delta = {delta}: indices {indices}, sum {total}")
print()

m1, delta = 4, 2
total = quad_refined_sum(m1, delta)
closed = w_pow_minus_inverse(2 * delta * m1).exact_div(
    w_pow_minus_inverse(2 * delta))
print(f"closed form check for m1 = {m1}, delta = {delta}:")
print("  table sum:  ", total)
print("  closed form:", closed)
print("  at q = 1:", total.eval_q1(), "(one per class, m1 classes)")
print()

m1 = 3
print(f"coamoeba geometry for m1 = {m1}:")
print("  c_k values:   ", c_k_values(m1))
print("  area fractions:", [coamoeba_area(m1, k) for k in range(m1)])
print("  index/(delta*m1):", [str(a) for a in
                              (coamoeba_area(m1, k) for k in range(m1))])
print()

print("a trivalent vertex has quantum index +-m/2 depending on orientation:")
for pair in ((Vec(-2, 0), Vec(1, 1)), (Vec(0, -1), Vec(1, 1))):
    plus, minus = trivalent_quantum_index(*pair)
    print(f"  slopes ({pair[0].x},{pair[0].y}) and ({pair[1].x},{pair[1].y}):"
          f" indices {plus} and {minus}")
