"""Slow, obviously-correct reference implementations used only by tests.

These deliberately share no code with the package: plain nested loops over
every box in a dilated region, direct window scans along orbits, and bitmask
tower searches.  Expected values frozen into the test suite were computed
with these oracles.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def brute_strong_max(points, m, pad=None):
    """Max density over ALL integer boxes containing m whose corners lie in the
    bounding box of E union {m} dilated by `pad` on every axis."""
    pts = sorted({tuple(p) for p in points})
    n = len(pts[0])
    m = tuple(m)
    if pad is None:
        pad = len(pts) + 1
    lo = [min(min(p[i] for p in pts), m[i]) - pad for i in range(n)]
    hi = [max(max(p[i] for p in pts), m[i]) + pad for i in range(n)]
    best = Fraction(0)
    for corner_lo in product(*(range(lo[i], m[i] + 1) for i in range(n))):
        for corner_hi in product(*(range(m[i], hi[i] + 1) for i in range(n))):
            vol = 1
            for a, b in zip(corner_lo, corner_hi):
                vol *= b - a + 1
            cnt = sum(
                1 for p in pts if all(a <= c <= b for a, c, b in zip(corner_lo, p, corner_hi))
            )
            d = Fraction(cnt, vol)
            if d > best:
                best = d
    return best


def brute_halo(points, alpha):
    """Per-point brute force over the ceil(#E/alpha)-dilated bounding region."""
    pts = sorted({tuple(p) for p in points})
    n = len(pts[0])
    alpha = Fraction(alpha)
    dil = (len(pts) * alpha.denominator + alpha.numerator - 1) // alpha.numerator
    lo = [min(p[i] for p in pts) - dil for i in range(n)]
    hi = [max(p[i] for p in pts) + dil for i in range(n)]
    members = []
    for m in product(*(range(lo[i], hi[i] + 1) for i in range(n))):
        if brute_strong_max(pts, m, pad=1) > alpha:
            members.append(m)
    return sorted(members)


def brute_one_sided_max(points, m):
    xs = sorted(p if isinstance(p, int) else p[0] for p in points)
    best = Fraction(0)
    horizon = xs[-1] - m + 2 if m <= xs[-1] else 1
    for n in range(1, horizon + 1):
        cnt = sum(1 for x in xs if m <= x <= m + n - 1)
        d = Fraction(cnt, n)
        if d > best:
            best = d
    return best


def brute_one_sided_halo(points, alpha):
    xs = sorted(p if isinstance(p, int) else p[0] for p in points)
    alpha = Fraction(alpha)
    dil = (len(xs) * alpha.denominator + alpha.numerator - 1) // alpha.numerator
    members = []
    for m in range(xs[0] - dil, xs[-1] + dil + 1):
        if brute_one_sided_max(xs, m) > alpha:
            members.append(m)
    return members


def brute_tower_index(perm):
    """Largest k such that some nonempty atom subset A has A, TA, ..., T^(k-1)A
    pairwise disjoint, by exhaustive bitmask search."""
    n = len(perm)
    best = 0
    for mask in range(1, 1 << n):
        images = [mask]
        while True:
            nxt = 0
            for i in range(n):
                if images[-1] >> i & 1:
                    nxt |= 1 << perm[i]
            union = 0
            ok = True
            for im in images:
                union |= im
            if union & nxt:
                break
            images.append(nxt)
        if len(images) > best:
            best = len(images)
    return best


def brute_ergodic_max(generators, atom, in_E, side):
    """Max window density along the orbit, windows [-a, b] per axis with
    0 <= a, b <= side, by direct enumeration.  `generators` are permutations
    as index lists, `in_E` a predicate on atoms."""
    n = len(generators)
    inverses = []
    for g in generators:
        inv = [0] * len(g)
        for i, j in enumerate(g):
            inv[j] = i
        inverses.append(inv)

    def shift(a, axis, power):
        g = generators[axis] if power > 0 else inverses[axis]
        for _ in range(abs(power)):
            a = g[a]
        return a

    best = Fraction(0)
    for los in product(*(range(-side, 1) for _ in range(n))):
        for his in product(*(range(0, side + 1) for _ in range(n))):
            vol = 1
            for a, b in zip(los, his):
                vol *= b - a + 1
            cnt = 0
            for offs in product(*(range(a, b + 1) for a, b in zip(los, his))):
                cell = atom
                for axis, power in enumerate(offs):
                    cell = shift(cell, axis, power)
                if in_E(cell):
                    cnt += 1
            d = Fraction(cnt, vol)
            if d > best:
                best = d
    return best
