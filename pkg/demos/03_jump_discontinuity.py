#!/usr/bin/env python3
"""Jump discontinuities of the Tauberian constant on finite cycles.

A uniform cycle of length N has tower index N, and its constant jumps at
(2N-2)/(2N-1): just below, the complement of one atom certifies N/(N-1);
just above, every halo collapses onto its own set and the constant is 1.
The values below the jump are exhaustively enumerated, not assumed.
"""

from fractions import Fraction as F

from taublab import exact_tauberian, index, make_cyclic


def main():
    print(" N   jump point    C(jump - 1/100)   C(jump + 1/100)   index")
    for n in range(2, 7):
        system = make_cyclic(n)
        jump = F(2 * n - 2, 2 * n - 1)
        below = exact_tauberian(system, jump - F(1, 100))
        above = exact_tauberian(system, jump + F(1, 100))
        idx = index(system)
        print(f" {n}   {jump!s:>10}    {below.value!s:>12}      {above.value!s:>12}      {idx.value}")

    print("\nwitness below the jump for N = 5:")
    system = make_cyclic(5)
    est = exact_tauberian(system, F(8, 9) - F(1, 100))
    print(f"  atoms {est.witness} (everything but one atom of the cycle)")
    print(f"  ratio {est.value}: the missing atom sees the set on both sides of a")
    print("  window of length 2N-1, reaching density (2N-2)/(2N-1)")


if __name__ == "__main__":
    main()
