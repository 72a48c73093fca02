#!/usr/bin/env python3
"""Discrete strong maximal operator on the integer lattice: values and halos.

Walks through the basic objects: exact evaluation at a point, the level set
(halo) above a rational threshold, and how block witnesses push the halo
ratio toward the one-dimensional ceiling 2/alpha - 1 without ever reaching
it.  Everything printed is an exact fraction.
"""

from fractions import Fraction as F

from taublab import (
    eval_strong_max,
    halo,
    halo_ratio,
    interval,
    interval_witness,
    lattice_set,
    product_witness,
    strong_max_witness,
)


def main():
    print("== evaluating the operator ==")
    E = lattice_set([0, 1, 2])
    for m in [0, 3, 4, 7, -2]:
        value, box = strong_max_witness(E, (m,))
        print(f"  max density over boxes through {m:>2}: {value}  (box {box.lo}..{box.hi})")

    print("\n== halo of a pair at alpha = 1/2 ==")
    pair = lattice_set([0, 1])
    h = halo(pair, F(1, 2))
    print(f"  members: {[p[0] for p in h.members.points]}")
    print(f"  ratio:   {halo_ratio(pair, F(1, 2))}")

    print("\n== block witnesses approach 2/alpha - 1 = 3 at alpha = 1/2 ==")
    for k in (2, 6, 20, 60, 200, 600):
        est = interval_witness(k, F(1, 2))
        print(f"  k={k:>4}: ratio {est.value!s:>10} = {float(est.value):.5f}")
    print("  ceiling: 3 (never attained by a finite set)")

    print("\n== planar products escape the 1-D ceiling ==")
    alpha = F(1, 4)
    best_1d = max(interval_witness(k, alpha).value for k in range(1, 21))
    square = product_witness(interval(12), interval(12))
    print(f"  best 1-D block ratio at 1/4 (k <= 20): {best_1d} = {float(best_1d):.3f}")
    print(f"  12 x 12 product ratio at 1/4:          {halo_ratio(square, alpha)} "
          f"= {float(halo_ratio(square, alpha)):.3f}")
    print("  thin slabs of the product contribute rows the 1-D operator cannot see")

    print("\n== planar value at a product point factorizes ==")
    e1, e2 = interval(10), lattice_set([0])
    prod = product_witness(e1, e2)
    m = (12, 1)
    v = eval_strong_max(prod, m)
    v1 = eval_strong_max(e1, (m[0],))
    v2 = eval_strong_max(e2, (m[1],))
    print(f"  value at {m}: {v};  1-D factors: {v1} * {v2} = {v1 * v2}")


if __name__ == "__main__":
    main()
