"""Discrete strong and one-sided maximal operators on the integer lattice.

Everything here is exact.  Densities are counts divided by box volumes,
compared by integer cross-multiplication; level sets use strictly-greater
comparison against a rational threshold.  No float enters any decision.

The averaging windows of the strong operator are the lattice traces of open
axis-parallel rectangles containing the origin.  Anchored at a point m, those
traces are exactly the integer boxes [lo, hi] with lo <= m <= hi
coordinatewise, so all suprema below are finite maxima over integer boxes:

* a maximising box for the value at m can be taken with every face touching
  a coordinate of E or of m itself (pulling a face inward past empty slabs
  strictly increases density), and
* a point m can only belong to the level set {max > p/q} if some box B
  containing m satisfies q * #(E in B) > p * #B, which forces #B < #E * q/p
  and B to meet E; this gives explicit finite search regions for halos.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian

from .errors import DomainError
from .estimate import TauberianEstimate
from .rational import require_alpha

Point = tuple[int, ...]


def _as_point(coords) -> Point:
    pt = tuple(int(c) for c in coords)
    if not pt:
        raise DomainError("a lattice point needs at least one coordinate")
    return pt


@dataclass(frozen=True)
class LatticeSet:
    """A finite subset of Z^dim, stored deduplicated in lexicographic order."""

    dim: int
    points: tuple[Point, ...]

    @classmethod
    def from_points(cls, points, dim: int | None = None) -> "LatticeSet":
        pts = sorted({_as_point(p) for p in points})
        if pts:
            d = len(pts[0])
            if any(len(p) != d for p in pts):
                raise DomainError("all points of a lattice set must share one dimension")
            if dim is not None and dim != d:
                raise DomainError(f"points have dimension {d}, expected {dim}")
            dim = d
        elif dim is None:
            raise DomainError("an empty lattice set needs an explicit dimension")
        if dim < 1:
            raise DomainError("lattice dimension must be >= 1")
        return cls(dim=dim, points=tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point) -> bool:
        pt = tuple(int(c) for c in point)
        i = bisect_left(self.points, pt)
        return i < len(self.points) and self.points[i] == pt

    def bounding_box(self) -> "IntBox":
        if not self.points:
            raise DomainError("empty lattice set has no bounding box")
        lo = tuple(min(p[i] for p in self.points) for i in range(self.dim))
        hi = tuple(max(p[i] for p in self.points) for i in range(self.dim))
        return IntBox(lo=lo, hi=hi)

    def translate(self, vector) -> "LatticeSet":
        v = _as_point(vector)
        if len(v) != self.dim:
            raise DomainError("translation vector dimension mismatch")
        return LatticeSet(
            dim=self.dim,
            points=tuple(sorted(tuple(c + d for c, d in zip(p, v)) for p in self.points)),
        )

    def negate(self) -> "LatticeSet":
        return LatticeSet(
            dim=self.dim,
            points=tuple(sorted(tuple(-c for c in p) for p in self.points)),
        )


def lattice_set(points, dim: int | None = None) -> LatticeSet:
    """Convenience constructor; 1-D points may be given as bare integers."""
    pts = [(p,) if isinstance(p, int) else p for p in points]
    return LatticeSet.from_points(pts, dim=dim)


def interval(k: int) -> LatticeSet:
    """The 1-D block {0, ..., k-1}."""
    if k < 1:
        raise DomainError("interval length must be >= 1")
    return LatticeSet(dim=1, points=tuple((i,) for i in range(k)))


@dataclass(frozen=True)
class IntBox:
    """An axis-parallel integer box [lo, hi], inclusive on both ends."""

    lo: Point
    hi: Point

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise DomainError("box corners must share one dimension")
        if any(a > b for a, b in zip(self.lo, self.hi)):
            raise DomainError(f"box has lo > hi: {self.lo} > {self.hi}")

    @property
    def dim(self) -> int:
        return len(self.lo)

    def contains(self, point) -> bool:
        return all(a <= c <= b for a, c, b in zip(self.lo, point, self.hi))

    def lattice_count(self) -> int:
        n = 1
        for a, b in zip(self.lo, self.hi):
            n *= b - a + 1
        return n


def box_lattice_count(box: IntBox) -> int:
    """Number of lattice points inside the box."""
    return box.lattice_count()


@dataclass(frozen=True)
class HaloSet:
    """The exact super-level set {m : strong max of the indicator > alpha}."""

    alpha: Fraction
    members: LatticeSet
    source: LatticeSet


# ---------------------------------------------------------------------------
# Covered-segment engine.
#
# One-dimensional workhorse shared by the 1-D halo, the one-sided halo, and
# every row-range of the 2-D halo.  Given integer weights on a contiguous
# span of cells, where every cell outside the span would contribute the
# uniform negative weight -penalty, it reports which cells lie inside some
# contiguous run with strictly positive total.
# ---------------------------------------------------------------------------


def _covered_segments(weights: list[int], penalty: int):
    """Return (flags, left_reach, right_reach).

    flags[i] is True iff some contiguous range containing span cell i has
    positive total weight.  left_reach / right_reach count how many cells
    beyond the span edges are covered by ranges extending into the uniform
    -penalty region.  Ranges reaching outside the span are dominated by their
    trimmed versions for in-span cells, so flags only consider in-span
    ranges; conversely an off-span cell at distance t is covered iff the best
    range pinned to that edge still has total > penalty * t.
    """
    n = len(weights)
    prefix = [0] * (n + 1)
    for i, w in enumerate(weights):
        prefix[i + 1] = prefix[i] + w
    # best start to the left of each cell, best end to the right
    pref_min = [0] * n
    running = prefix[0]
    for i in range(n):
        if prefix[i] < running:
            running = prefix[i]
        pref_min[i] = running
    suff_max = [0] * n
    running = prefix[n]
    for i in range(n - 1, -1, -1):
        if prefix[i + 1] > running:
            running = prefix[i + 1]
        suff_max[i] = running
    flags = [suff_max[i] - pref_min[i] > 0 for i in range(n)]
    best_from_left_edge = max(prefix[1:], default=0)  # ranges [span start, d]
    best_to_right_edge = prefix[n] - min(prefix[:n], default=0)  # ranges [j, span end]
    left_reach = (best_from_left_edge - 1) // penalty if best_from_left_edge > 0 else 0
    right_reach = (best_to_right_edge - 1) // penalty if best_to_right_edge > 0 else 0
    return flags, left_reach, right_reach


def _flags_to_intervals(flags: list[bool], offset: int) -> list[tuple[int, int]]:
    out = []
    i, n = 0, len(flags)
    while i < n:
        if flags[i]:
            j = i
            while j + 1 < n and flags[j + 1]:
                j += 1
            out.append((offset + i, offset + j))
            i = j + 1
        else:
            i += 1
    return out


def _merge_intervals(intervals: list[tuple[int, int]]) -> list[tuple[int, int]]:
    if not intervals:
        return []
    intervals = sorted(intervals)
    merged = [intervals[0]]
    for a, b in intervals[1:]:
        la, lb = merged[-1]
        if a <= lb + 1:
            if b > lb:
                merged[-1] = (la, b)
        else:
            merged.append((a, b))
    return merged


# ---------------------------------------------------------------------------
# Strong maximal operator: exact evaluation at a point.
# ---------------------------------------------------------------------------


def _check_operator_input(E: LatticeSet, m) -> Point:
    if len(E) == 0:
        raise DomainError("maximal operators need a nonempty set")
    pt = _as_point(m)
    if len(pt) != E.dim:
        raise DomainError(f"point has dimension {len(pt)}, set has dimension {E.dim}")
    return pt


def strong_max_witness(E: LatticeSet, m) -> tuple[Fraction, IntBox]:
    """Exact value of the strong maximal operator on the indicator of E at m,
    together with the lexicographically smallest maximising box."""
    pt = _check_operator_input(E, m)
    if E.dim == 1:
        return _strong_max_1d(E, pt[0])
    if E.dim == 2:
        return _strong_max_2d(E, pt)
    return _strong_max_nd(E, pt)


def eval_strong_max(E: LatticeSet, m) -> Fraction:
    """sup over integer boxes containing m of #(E in box) / #box, exactly."""
    return strong_max_witness(E, m)[0]


class _BestBox:
    """Keeps the maximum density with lexicographic (lo, hi) tie-break."""

    __slots__ = ("num", "den", "key")

    def __init__(self):
        self.num = -1
        self.den = 1
        self.key = None

    def offer(self, num: int, den: int, lo: Point, hi: Point):
        lhs = num * self.den
        rhs = self.num * den
        if lhs > rhs:
            self.num, self.den, self.key = num, den, (lo, hi)
        elif lhs == rhs and self.key is not None and (lo, hi) < self.key:
            self.key = (lo, hi)

    def result(self) -> tuple[Fraction, IntBox]:
        lo, hi = self.key
        return Fraction(self.num, self.den), IntBox(lo=lo, hi=hi)


def _axis_candidates(coords: list[int], v: int) -> tuple[list[int], list[int]]:
    los = sorted({c for c in coords if c <= v} | {v})
    his = sorted({c for c in coords if c >= v} | {v})
    return los, his


def _strong_max_1d(E: LatticeSet, m: int) -> tuple[Fraction, IntBox]:
    xs = [p[0] for p in E.points]
    los, his = _axis_candidates(xs, m)
    best = _BestBox()
    for lo in los:
        cl = bisect_left(xs, lo)
        for hi in his:
            cnt = bisect_right(xs, hi) - cl
            best.offer(cnt, hi - lo + 1, (lo,), (hi,))
    return best.result()


def _strong_max_2d(E: LatticeSet, m: Point) -> tuple[Fraction, IntBox]:
    rows = sorted({p[0] for p in E.points})
    cols = sorted({p[1] for p in E.points})
    col_index = {c: i for i, c in enumerate(cols)}
    by_row: dict[int, list[int]] = {}
    for r, c in E.points:
        by_row.setdefault(r, []).append(col_index[c])
    row_los, row_his = _axis_candidates(rows, m[0])
    col_los, col_his = _axis_candidates(cols, m[1])
    nc = len(cols)
    best = _BestBox()
    for a in row_los:
        for b in row_his:
            if b < a:
                continue
            counts = [0] * nc
            for r, idxs in by_row.items():
                if a <= r <= b:
                    for i in idxs:
                        counts[i] += 1
            prefix = [0] * (nc + 1)
            for i, v in enumerate(counts):
                prefix[i + 1] = prefix[i] + v
            h = b - a + 1
            for lo2 in col_los:
                cl = bisect_left(cols, lo2)
                for hi2 in col_his:
                    if hi2 < lo2:
                        continue
                    cnt = prefix[bisect_right(cols, hi2)] - prefix[cl]
                    best.offer(cnt, h * (hi2 - lo2 + 1), (a, lo2), (b, hi2))
    return best.result()


def _strong_max_nd(E: LatticeSet, m: Point) -> tuple[Fraction, IntBox]:
    n = E.dim
    cand = [_axis_candidates(sorted({p[i] for p in E.points}), m[i]) for i in range(n)]
    best = _BestBox()
    for lo in _cartesian(*(c[0] for c in cand)):
        for hi in _cartesian(*(c[1] for c in cand)):
            vol = 1
            for a, b in zip(lo, hi):
                vol *= b - a + 1
            cnt = sum(1 for p in E.points if all(a <= c <= b for a, c, b in zip(lo, p, hi)))
            best.offer(cnt, vol, lo, hi)
    return best.result()


def exceeds(E: LatticeSet, m, alpha: Fraction) -> bool:
    """True iff the strong maximal value at m is strictly greater than alpha."""
    alpha = require_alpha(alpha)
    return eval_strong_max(E, m) > alpha


# ---------------------------------------------------------------------------
# Halos.
# ---------------------------------------------------------------------------


def halo(E: LatticeSet, alpha: Fraction) -> HaloSet:
    """Exact level set {m in Z^n : strong max of the indicator of E at m > alpha}.

    The members always contain E, and are contained in the bounding box of E
    dilated by ceil(#E / alpha) along every axis; only that region (in fact a
    much smaller hyperbolic neighbourhood of the bounding box) is searched.
    """
    alpha = require_alpha(alpha)
    if len(E) == 0:
        raise DomainError("halo of an empty set is undefined")
    p, q = alpha.numerator, alpha.denominator
    if E.dim == 1:
        members = _halo_1d(E, p, q)
    elif E.dim == 2:
        members = _halo_2d(E, p, q)
    else:
        members = _halo_nd(E, p, q, alpha)
    return HaloSet(alpha=alpha, members=members, source=E)


def halo_ratio(E: LatticeSet, alpha: Fraction) -> Fraction:
    """#halo(E, alpha) / #E, the quantity whose supremum over E is the
    Tauberian constant at alpha."""
    h = halo(E, alpha)
    return Fraction(len(h.members), len(E))


def _halo_1d(E: LatticeSet, p: int, q: int) -> LatticeSet:
    xs = [pt[0] for pt in E.points]
    lo, hi = xs[0], xs[-1]
    span = hi - lo + 1
    weights = [-p] * span
    for x in xs:
        weights[x - lo] = q - p
    flags, left, right = _covered_segments(weights, p)
    pts = [(lo - t,) for t in range(left, 0, -1)]
    pts += [(lo + i,) for i, f in enumerate(flags) if f]
    pts += [(hi + t,) for t in range(1, right + 1)]
    return LatticeSet(dim=1, points=tuple(pts))


def _halo_2d(E: LatticeSet, p: int, q: int) -> LatticeSet:
    r_lo = min(pt[0] for pt in E.points)
    r_hi = max(pt[0] for pt in E.points)
    c_lo = min(pt[1] for pt in E.points)
    c_hi = max(pt[1] for pt in E.points)
    H = r_hi - r_lo + 1
    C = c_hi - c_lo + 1
    # cum[i][c]: points of E with row < r_lo + i in span column c
    cum = [[0] * C]
    cells = {(pt[0] - r_lo, pt[1] - c_lo) for pt in E.points}
    for i in range(H):
        row = cum[-1][:]
        for c in range(C):
            if (i, c) in cells:
                row[c] += 1
        cum.append(row)

    cover: dict[int, list[tuple[int, int]]] = {}

    def mark(row: int, flags, left: int, right: int):
        intervals = _flags_to_intervals(flags, c_lo)
        if left:
            intervals.append((c_lo - left, c_lo - 1))
        if right:
            intervals.append((c_hi + 1, c_hi + right))
        if intervals:
            cover.setdefault(row, []).extend(intervals)

    # boxes whose rows stay inside the row band of E
    for ai in range(H):
        top = cum[ai]
        for bi in range(ai, H):
            bot = cum[bi + 1]
            h = bi - ai + 1
            ph = p * h
            weights = [q * (bot[c] - top[c]) - ph for c in range(C)]
            flags, left, right = _covered_segments(weights, ph)
            if not any(flags):
                continue
            intervals = _flags_to_intervals(flags, c_lo)
            if left:
                intervals.append((c_lo - left, c_lo - 1))
            if right:
                intervals.append((c_hi + 1, c_hi + right))
            for r in range(r_lo + ai, r_lo + bi + 1):
                cover.setdefault(r, []).extend(intervals)

    # boxes sticking out above the row band cover rows r_hi + t; their in-band
    # part is [a, r_hi] and each empty extension row costs p per cell
    for ai in range(H):
        top = cum[ai]
        bot = cum[H]
        h0 = H - ai
        base = [q * (bot[c] - top[c]) for c in range(C)]
        t = 1
        while True:
            ph = p * (h0 + t)
            weights = [base[c] - ph for c in range(C)]
            flags, left, right = _covered_segments(weights, ph)
            if not any(flags):
                break
            mark(r_hi + t, flags, left, right)
            t += 1

    # boxes sticking out below the row band, symmetric
    for bi in range(H):
        bot = cum[bi + 1]
        h0 = bi + 1
        base = [q * bot[c] for c in range(C)]
        t = 1
        while True:
            ph = p * (h0 + t)
            weights = [base[c] - ph for c in range(C)]
            flags, left, right = _covered_segments(weights, ph)
            if not any(flags):
                break
            mark(r_lo - t, flags, left, right)
            t += 1

    pts = []
    for row, intervals in cover.items():
        for a, b in _merge_intervals(intervals):
            pts.extend((row, c) for c in range(a, b + 1))
    return LatticeSet(dim=2, points=tuple(sorted(pts)))


def _halo_nd(E: LatticeSet, p: int, q: int, alpha: Fraction) -> LatticeSet:
    """Dimension-general fallback: test every point of the pruned region.

    A halo point at per-axis distances d_i from the bounding box needs a box
    with volume at least prod(d_i + 1) and at most #E * q / p lattice points,
    so the region {prod(d_i + 1) < #E * q / p} suffices.
    """
    bbox = E.bounding_box()
    budget = len(E) * q  # require prod(d_i + 1) * p < budget
    n = E.dim
    members = []

    def walk(axis: int, coords: list[int], partial: int):
        if axis == n:
            if exceeds(E, tuple(coords), alpha):
                members.append(tuple(coords))
            return
        lo, hi = bbox.lo[axis], bbox.hi[axis]
        reach = budget // (p * partial)  # d + 1 <= reach
        for v in range(lo - reach, hi + reach + 1):
            d = max(lo - v, v - hi, 0)
            grown = partial * (d + 1)
            if grown * p >= budget:
                continue
            coords.append(v)
            walk(axis + 1, coords, grown)
            coords.pop()

    walk(0, [], 1)
    return LatticeSet(dim=n, points=tuple(sorted(members)))


# ---------------------------------------------------------------------------
# One-sided (forward window) operator, dimension 1.
# ---------------------------------------------------------------------------


def _check_one_sided(E: LatticeSet):
    if E.dim != 1:
        raise DomainError("one-sided operators are defined on Z only")
    if len(E) == 0:
        raise DomainError("maximal operators need a nonempty set")


def one_sided_max(E: LatticeSet, m) -> Fraction:
    """sup over N >= 1 of #(E in [m, m+N-1]) / N; zero when no forward window
    meets E.  The maximum is attained with the window ending at a point of E."""
    _check_one_sided(E)
    pt = _as_point(m)
    if len(pt) != 1:
        raise DomainError("point dimension mismatch")
    m0 = pt[0]
    xs = [pnt[0] for pnt in E.points]
    if m0 > xs[-1]:
        return Fraction(0)
    start = bisect_left(xs, m0)
    best_num, best_den = 0, 1
    for j in range(start, len(xs)):
        cnt = j - start + 1
        length = xs[j] - m0 + 1
        if cnt * best_den > best_num * length:
            best_num, best_den = cnt, length
    return Fraction(best_num, best_den)


def one_sided_halo(E: LatticeSet, alpha: Fraction) -> HaloSet:
    """Level set of the one-sided operator, computed exactly."""
    alpha = require_alpha(alpha)
    _check_one_sided(E)
    p, q = alpha.numerator, alpha.denominator
    xs = [pt[0] for pt in E.points]
    lo, hi = xs[0], xs[-1]
    span = hi - lo + 1
    weights = [-p] * span
    for x in xs:
        weights[x - lo] = q - p
    prefix = [0] * (span + 1)
    for i, w in enumerate(weights):
        prefix[i + 1] = prefix[i] + w
    suff_max = [0] * span
    running = prefix[span]
    for i in range(span - 1, -1, -1):
        if prefix[i + 1] > running:
            running = prefix[i + 1]
        suff_max[i] = running
    flags = [suff_max[i] - prefix[i] > 0 for i in range(span)]
    best_from_left = max(prefix[1:], default=0)
    left = (best_from_left - 1) // p if best_from_left > 0 else 0
    pts = [(lo - t,) for t in range(left, 0, -1)]
    pts += [(lo + i,) for i, f in enumerate(flags) if f]
    members = LatticeSet(dim=1, points=tuple(pts))
    return HaloSet(alpha=alpha, members=members, source=E)


def one_sided_halo_ratio(E: LatticeSet, alpha: Fraction) -> Fraction:
    h = one_sided_halo(E, alpha)
    return Fraction(len(h.members), len(E))


# ---------------------------------------------------------------------------
# Structured witnesses.
# ---------------------------------------------------------------------------


def interval_witness(k: int, alpha: Fraction) -> TauberianEstimate:
    """The block {0, ..., k-1} with its exact halo ratio at alpha.

    Along suitable k -> infinity subsequences these ratios climb towards the
    one-dimensional ceiling 2/alpha - 1 and never exceed it.
    """
    alpha = require_alpha(alpha)
    E = interval(k)
    return TauberianEstimate(
        alpha=alpha,
        value=halo_ratio(E, alpha),
        witness=E,
        strategy="interval-family",
        mode="exact",
    )


def product_witness(E1: LatticeSet, E2: LatticeSet) -> LatticeSet:
    """Cartesian product of two 1-D sets, a 2-D witness family.

    Every 2-D box is a product of two intervals, so the strong maximal value
    of a product set factors into the two 1-D values; product witnesses are
    the natural probes for the planar constants.
    """
    if E1.dim != 1 or E2.dim != 1:
        raise DomainError("product witnesses take two 1-D sets")
    if len(E1) == 0 or len(E2) == 0:
        raise DomainError("product witnesses need nonempty factors")
    pts = [(a[0], b[0]) for a in E1.points for b in E2.points]
    return LatticeSet(dim=2, points=tuple(sorted(pts)))
