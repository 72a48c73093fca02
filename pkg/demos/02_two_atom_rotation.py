#!/usr/bin/env python3
"""The two-atom rotation: the smallest system with a discontinuous constant.

The rotation by a half swaps two atoms of mass 1/2.  The maximal function of
any indicator only takes the values 0, 2/3 and 1, so the Tauberian constant
is the step function 2 (below 2/3) / 1 (from 2/3 on): nothing like the
smooth 2/alpha - 1 profile that non-periodic transformations produce.
"""

from fractions import Fraction as F

from taublab import MeasurableSet, eval_ergodic_max, exact_tauberian, make_cyclic


def main():
    system = make_cyclic(2)

    print("== maximal values over all nonempty sets and atoms ==")
    for mask in (1, 2, 3):
        atoms = [i for i in range(2) if mask >> i & 1]
        E = MeasurableSet.of(system, atoms)
        values = [eval_ergodic_max(system, E, atom) for atom in range(2)]
        print(f"  E = atoms {atoms}: values {values}")

    print("\n== exact Tauberian constant across thresholds ==")
    grid = [F(1, 10), F(1, 2), F(13, 20), F(2, 3), F(3, 4), F(9, 10)]
    for alpha in grid:
        est = exact_tauberian(system, alpha)
        print(f"  C({alpha!s:>5}) = {est.value}   witness atoms {est.witness}")
    print("  the constant drops from 2 to 1 exactly at 2/3 = (2N-2)/(2N-1), N=2")


if __name__ == "__main__":
    main()
