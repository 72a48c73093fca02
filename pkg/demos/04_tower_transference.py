#!/usr/bin/env python3
"""Towers and transference: replaying lattice witnesses inside a system.

A tower is a base set whose first several images under the action stay
pairwise disjoint.  Indexing tower translates by the points of a discrete
witness builds a measurable set whose ergodic halo ratio dominates the
discrete one, with exact equality while the orbit is long enough that no
window wraps around.
"""

from fractions import Fraction as F

from taublab import (
    interval,
    lattice_set,
    make_cyclic,
    make_torus,
    rokhlin_tower,
    transfer_witness,
)


def main():
    print("== towers ==")
    tower = rokhlin_tower(make_cyclic(8), (5,))
    print(f"  cycle of 8, height 5: base atom {tower.base.atoms}, "
          f"translates {tower.translates()}")
    planar = rokhlin_tower(make_torus(4, 4), (3, 3))
    print(f"  4x4 torus, heights (3,3): {len(planar.translates())} disjoint translates")
    try:
        rokhlin_tower(make_cyclic(2), (3,))
    except Exception as exc:
        print(f"  cycle of 2, height 3: refused ({type(exc).__name__})")

    print("\n== transference ==")
    cases = [
        (lattice_set([0, 1]), F(1, 2), 100),
        (lattice_set([0, 3, 4, 5]), F(2, 5), 256),
        (interval(60), F(1, 2), 4096),
    ]
    for E, alpha, size in cases:
        res = transfer_witness(make_cyclic(size), E, alpha)
        marker = "==" if res.ergodic_ratio == res.discrete_ratio else ">="
        print(f"  witness {len(E):>2} points at alpha {alpha!s:>4} "
              f"into cycle {size:>4}: ergodic {res.ergodic_ratio} {marker} "
              f"discrete {res.discrete_ratio}")

    planar = lattice_set([(0, 0), (1, 1), (0, 1)])
    res = transfer_witness(make_torus(16, 16), planar, F(1, 3))
    marker = "==" if res.ergodic_ratio == res.discrete_ratio else ">="
    print(f"  planar witness  3 points at alpha  1/3 into 16x16 torus: "
          f"ergodic {res.ergodic_ratio} {marker} discrete {res.discrete_ratio}")

    print("\n  shrinking the system until translates collide:")
    try:
        transfer_witness(make_cyclic(3), lattice_set([0, 1]), F(1, 2))
    except Exception as exc:
        print(f"  cycle of 3: {exc}")


if __name__ == "__main__":
    main()
