"""Finite atomic probability spaces with commuting measure-preserving actions.

A system is a finite set of atoms with positive rational masses summing to 1,
acted on by finitely many commuting mass-preserving permutations, one per
lattice direction.  On such a system every supremum in the ergodic maximal
operator is a finite maximum: along each direction the orbit of an atom is
periodic with some period Q, and a window longer than 2Q - 1 cells can be
shortened without decreasing the window density (split off a full period; the
density of the split-off block is the full-period average, which is itself
attained by a window of length exactly Q containing the origin).

Halos, halo measures, Tauberian ratios and their exhaustive suprema over all
nonempty atom subsets are therefore computed exactly, with rational
arithmetic end to end.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
import random

from .errors import DomainError
from .estimate import TauberianEstimate
from .lattice import LatticeSet, halo as lattice_halo, halo_ratio as lattice_halo_ratio
from .rational import require_alpha

EXHAUSTIVE_ATOM_LIMIT = 20


@dataclass(frozen=True)
class AtomicSystem:
    """(Omega, mu) with commuting invertible mass-preserving shifts."""

    masses: tuple[Fraction, ...]
    dim: int
    generators: tuple[tuple[int, ...], ...]

    @property
    def atom_count(self) -> int:
        return len(self.masses)

    def mass(self, atom: int) -> Fraction:
        return self.masses[atom]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problem: str | None = None
    atoms: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_system(system: AtomicSystem) -> ValidationReport:
    """Check every system invariant; report the first violation found."""
    n = system.atom_count
    if n < 1:
        return ValidationReport(False, "system needs at least one atom")
    if system.dim < 1:
        return ValidationReport(False, "dimension must be >= 1")
    if len(system.generators) != system.dim:
        return ValidationReport(
            False,
            f"expected {system.dim} generators, got {len(system.generators)}",
        )
    for a, m in enumerate(system.masses):
        if not m > 0:
            return ValidationReport(False, "atom mass must be positive", (a,))
    if sum(system.masses, Fraction(0)) != 1:
        return ValidationReport(False, "masses must sum exactly to 1")
    for g_idx, g in enumerate(system.generators):
        if sorted(g) != list(range(n)):
            return ValidationReport(
                False, f"generator {g_idx} is not a permutation of the atoms"
            )
        for a in range(n):
            if system.masses[g[a]] != system.masses[a]:
                return ValidationReport(
                    False, f"generator {g_idx} does not preserve mass", (a, g[a])
                )
    for i in range(system.dim):
        for j in range(i + 1, system.dim):
            gi, gj = system.generators[i], system.generators[j]
            for a in range(n):
                if gi[gj[a]] != gj[gi[a]]:
                    return ValidationReport(
                        False, f"generators {i} and {j} do not commute", (a,)
                    )
    return ValidationReport(True)


def _require_valid(system: AtomicSystem):
    report = validate_system(system)
    if not report.ok:
        raise DomainError(f"invalid system: {report.problem} (atoms {report.atoms})")


def make_cyclic(n: int) -> AtomicSystem:
    """Uniform rotation on n atoms; n = 2 is the finite model of the rotation
    by 1/2 on the circle."""
    if n < 1:
        raise DomainError("cyclic system needs at least one atom")
    return AtomicSystem(
        masses=tuple([Fraction(1, n)] * n),
        dim=1,
        generators=(tuple((i + 1) % n for i in range(n)),),
    )


def make_torus(*sizes: int) -> AtomicSystem:
    """Product of cyclic shifts: one commuting generator per coordinate."""
    if not sizes:
        raise DomainError("torus needs at least one size")
    if any(s < 1 for s in sizes):
        raise DomainError("torus sizes must be >= 1")
    total = 1
    for s in sizes:
        total *= s
    strides = []
    acc = 1
    for s in reversed(sizes):
        strides.append(acc)
        acc *= s
    strides.reverse()

    def index(coords):
        return sum(c * st for c, st in zip(coords, strides))

    generators = []
    for axis, size in enumerate(sizes):
        perm = [0] * total
        for coords in _cartesian(*(range(s) for s in sizes)):
            shifted = list(coords)
            shifted[axis] = (shifted[axis] + 1) % size
            perm[index(coords)] = index(shifted)
        generators.append(tuple(perm))
    return AtomicSystem(
        masses=tuple([Fraction(1, total)] * total),
        dim=len(sizes),
        generators=tuple(generators),
    )


@dataclass(frozen=True)
class MeasurableSet:
    system: AtomicSystem
    atoms: tuple[int, ...]

    @classmethod
    def of(cls, system: AtomicSystem, atoms) -> "MeasurableSet":
        atom_tuple = tuple(sorted({int(a) for a in atoms}))
        if any(a < 0 or a >= system.atom_count for a in atom_tuple):
            raise DomainError("atom index out of range")
        return cls(system=system, atoms=atom_tuple)

    @property
    def measure(self) -> Fraction:
        return sum((self.system.masses[a] for a in self.atoms), Fraction(0))

    def __len__(self) -> int:
        return len(self.atoms)

    def __contains__(self, atom: int) -> bool:
        return atom in set(self.atoms)

    def image(self, axis: int = 0) -> "MeasurableSet":
        g = self.system.generators[axis]
        return MeasurableSet.of(self.system, (g[a] for a in self.atoms))


@lru_cache(maxsize=None)
def _inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


@lru_cache(maxsize=None)
def _cycles(perm: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        a = start
        while not seen[a]:
            seen[a] = True
            cyc.append(a)
            a = perm[a]
        out.append(tuple(cyc))
    return tuple(out)


@lru_cache(maxsize=None)
def _cycle_length_of(perm: tuple[int, ...]) -> tuple[int, ...]:
    length = [0] * len(perm)
    for cyc in _cycles(perm):
        for a in cyc:
            length[a] = len(cyc)
    return tuple(length)


def apply_power(system: AtomicSystem, atom: int, exponents) -> int:
    """U_1^{j_1} ... U_n^{j_n} applied to an atom."""
    exps = tuple(int(e) for e in exponents)
    if len(exps) != system.dim:
        raise DomainError("exponent vector dimension mismatch")
    for axis, e in enumerate(exps):
        perm = system.generators[axis]
        period = _cycle_length_of(perm)[atom]
        e %= period
        for _ in range(e):
            atom = perm[atom]
    return atom


def _axis_line(system: AtomicSystem, atom: int, axis: int, back: int, fwd: int) -> list[int]:
    perm = system.generators[axis]
    inv = _inverse(perm)
    a = atom
    for _ in range(back):
        a = inv[a]
    line = [a]
    for _ in range(back + fwd):
        a = perm[a]
        line.append(a)
    return line


def _check_eval_args(system: AtomicSystem, E: MeasurableSet, atom: int):
    if E.system != system:
        raise DomainError("set belongs to a different system")
    if len(E) == 0:
        raise DomainError("ergodic maximal operators need a nonempty set")
    if not (0 <= atom < system.atom_count):
        raise DomainError("atom index out of range")


def eval_ergodic_max(
    system: AtomicSystem, E: MeasurableSet, atom: int, side_bound: int | None = None
) -> Fraction:
    """Exact supremum of window averages of the indicator of E along the orbit
    of the atom, over integer boxes containing the origin.

    With ``side_bound=None`` each axis enumerates window arms up to its orbit
    period minus one, which attains the supremum; an explicit bound instead
    enumerates arms 0..side_bound on every axis (used by soundness checks).
    """
    _check_eval_args(system, E, atom)
    in_E = [False] * system.atom_count
    for a in E.atoms:
        in_E[a] = True
    if side_bound is None:
        arms = [_cycle_length_of(system.generators[i])[atom] - 1 for i in range(system.dim)]
    else:
        if side_bound < 0:
            raise DomainError("side bound must be >= 0")
        arms = [side_bound] * system.dim
    if system.dim == 1:
        return _eval_max_1d(system, in_E, atom, arms[0])
    return _eval_max_nd(system, in_E, atom, arms)


def _eval_max_1d(system: AtomicSystem, in_E: list[bool], atom: int, arm: int) -> Fraction:
    line = _axis_line(system, atom, 0, arm, arm)
    vals = [1 if in_E[a] else 0 for a in line]
    prefix = [0] * (len(vals) + 1)
    for i, v in enumerate(vals):
        prefix[i + 1] = prefix[i] + v
    center = arm
    best_num, best_den = 0, 1
    for a in range(arm + 1):
        left = prefix[center - a]
        for b in range(arm + 1):
            cnt = prefix[center + b + 1] - left
            length = a + b + 1
            if cnt * best_den > best_num * length:
                best_num, best_den = cnt, length
    return Fraction(best_num, best_den)


def _eval_max_nd(system: AtomicSystem, in_E: list[bool], atom: int, arms: list[int]) -> Fraction:
    n = system.dim
    # row-major patch of orbit values over offsets [-arm_i, arm_i]
    flat = [atom]
    for axis in range(n):
        expanded: list[int] = []
        for a in flat:
            expanded.extend(_axis_line(system, a, axis, arms[axis], arms[axis]))
        flat = expanded
    shape = [2 * arm + 1 for arm in arms]
    vals = [1 if in_E[a] else 0 for a in flat]
    # n-dimensional prefix sums, one axis at a time
    strides = [0] * n
    acc = 1
    for i in range(n - 1, -1, -1):
        strides[i] = acc
        acc *= shape[i]
    for axis in range(n):
        stride = strides[axis]
        block = stride * shape[axis]
        for base in range(0, len(vals), block):
            for off in range(stride):
                idx = base + off + stride
                while idx < base + block:
                    vals[idx] += vals[idx - stride]
                    idx += stride

    def rect_sum(lo_idx, hi_idx):
        total = 0
        for corner in _cartesian(*((0, 1) for _ in range(n))):
            idx = 0
            sign = 1
            skip = False
            for i, c in enumerate(corner):
                if c:
                    idx += hi_idx[i] * strides[i]
                else:
                    if lo_idx[i] == 0:
                        skip = True
                        break
                    idx += (lo_idx[i] - 1) * strides[i]
                    sign = -sign
            if not skip:
                total += sign * vals[idx]
        return total

    best_num, best_den = 0, 1
    arm_ranges = [range(arm + 1) for arm in arms]
    for los in _cartesian(*arm_ranges):
        lo_idx = [arms[i] - los[i] for i in range(n)]
        for his in _cartesian(*arm_ranges):
            hi_idx = [arms[i] + his[i] for i in range(n)]
            vol = 1
            for a, b in zip(los, his):
                vol *= a + b + 1
            cnt = rect_sum(lo_idx, hi_idx)
            if cnt * best_den > best_num * vol:
                best_num, best_den = cnt, vol
    return Fraction(best_num, best_den)


def _windowed_max(arr: list[int], w: int) -> list[int]:
    out = []
    dq: deque[int] = deque()
    for i, v in enumerate(arr):
        while dq and arr[dq[-1]] <= v:
            dq.pop()
        dq.append(i)
        if dq[0] <= i - w:
            dq.popleft()
        if i >= w - 1:
            out.append(arr[dq[0]])
    return out


def _windowed_min(arr: list[int], w: int) -> list[int]:
    out = []
    dq: deque[int] = deque()
    for i, v in enumerate(arr):
        while dq and arr[dq[-1]] >= v:
            dq.pop()
        dq.append(i)
        if dq[0] <= i - w:
            dq.popleft()
        if i >= w - 1:
            out.append(arr[dq[0]])
    return out


def ergodic_halo(system: AtomicSystem, E: MeasurableSet, alpha: Fraction) -> MeasurableSet:
    """Atoms whose ergodic maximal value strictly exceeds alpha."""
    alpha = require_alpha(alpha)
    if E.system != system:
        raise DomainError("set belongs to a different system")
    if len(E) == 0:
        raise DomainError("ergodic maximal operators need a nonempty set")
    if system.dim == 1:
        return MeasurableSet.of(system, _halo_atoms_1d(system, set(E.atoms), alpha))
    return MeasurableSet.of(system, _halo_atoms_nd(system, set(E.atoms), alpha))


def _halo_atoms_1d(system: AtomicSystem, atoms_in_E: set[int], alpha: Fraction) -> list[int]:
    """Per-cycle linear-time level-set scan.

    Within a cycle of length P, if the full-period weight is positive the
    whole cycle is in the halo (repeat the period); otherwise any positive
    window reduces to one with both arms shorter than P, handled by sliding
    prefix extrema over a tripled copy of the cycle.
    """
    p, q = alpha.numerator, alpha.denominator
    members: list[int] = []
    for cyc in _cycles(system.generators[0]):
        P = len(cyc)
        w = [q - p if a in atoms_in_E else -p for a in cyc]
        total = sum(w)
        if total > 0:
            members.extend(cyc)
            continue
        x = w * 3
        G = [0] * (3 * P + 1)
        for i, v in enumerate(x):
            G[i + 1] = G[i] + v
        up = _windowed_max(G, P)  # up[j] = max G[j : j+P]
        dn = _windowed_min(G, P)
        for i in range(P):
            # arms a, b in [0, P-1]: max over b of G[i+P+b+1] minus min over a of G[i+P-a]
            if up[i + P + 1] - dn[i + 1] > 0:
                members.append(cyc[i])
    return members


def _halo_atoms_nd(system: AtomicSystem, atoms_in_E: set[int], alpha: Fraction) -> list[int]:
    """Volume-bounded level-set search for several commuting generators.

    A witnessing window can be taken with per-axis lengths at most 2Q_i - 1
    (orbit periods), whereupon no atom of E is counted more than 2^n times:
    a positive window then forces vol < 2^n * #E * q / p, so only atoms
    within that reach of E are candidates and only boxes below that volume
    need testing.
    """
    p, q = alpha.numerator, alpha.denominator
    n = system.dim
    vol_bound = (q * (1 << n) * len(atoms_in_E) + p - 1) // p  # vol < bound suffices
    inverses = [_inverse(g) for g in system.generators]

    candidates: set[int] = set(atoms_in_E)
    periods_of = [_cycle_length_of(g) for g in system.generators]
    # a witnessing offset satisfies |j_i| <= Q_i - 1 per axis on top of the
    # volume budget, so spreading stops at the axis period
    axis_caps = [max(periods_of[i]) - 1 for i in range(n)]

    def spread(axis: int, atoms: set[int], budget: int):
        """All U^{-j} images of `atoms` with prod(|j_i| + 1) <= budget."""
        if axis == n:
            candidates.update(atoms)
            return
        g, inv = system.generators[axis], inverses[axis]
        forward = set(atoms)
        backward = set(atoms)
        d = 0
        while d + 1 <= budget and d <= axis_caps[axis]:
            spread(axis + 1, forward | backward, budget // (d + 1))
            if len(candidates) == system.atom_count:
                return
            d += 1
            forward = {g[a] for a in forward}
            backward = {inv[a] for a in backward}

    spread(0, set(atoms_in_E), vol_bound)

    members = []
    for atom in sorted(candidates):
        if atom in atoms_in_E or _threshold_test_nd(
            system, atoms_in_E, atom, p, q, vol_bound, periods_of
        ):
            members.append(atom)
    return members


def _threshold_test_nd(system, atoms_in_E, atom, p, q, vol_bound, periods_of) -> bool:
    n = system.dim
    arms = [min(periods_of[i][atom] - 1, vol_bound - 1) for i in range(n)]
    flat = [atom]
    for axis in range(n):
        expanded: list[int] = []
        for a in flat:
            expanded.extend(_axis_line(system, a, axis, arms[axis], arms[axis]))
        flat = expanded
    shape = [2 * arm + 1 for arm in arms]
    strides = [0] * n
    acc = 1
    for i in range(n - 1, -1, -1):
        strides[i] = acc
        acc *= shape[i]
    vals = [1 if a in atoms_in_E else 0 for a in flat]
    for axis in range(n):
        stride = strides[axis]
        block = stride * shape[axis]
        for base in range(0, len(vals), block):
            for off in range(stride):
                idx = base + off + stride
                while idx < base + block:
                    vals[idx] += vals[idx - stride]
                    idx += stride

    def rect_sum(lo_idx, hi_idx):
        total = 0
        for corner in _cartesian(*((0, 1) for _ in range(n))):
            idx = 0
            sign = 1
            skip = False
            for i, c in enumerate(corner):
                if c:
                    idx += hi_idx[i] * strides[i]
                else:
                    if lo_idx[i] == 0:
                        skip = True
                        break
                    idx += (lo_idx[i] - 1) * strides[i]
                    sign = -sign
            if not skip:
                total += sign * vals[idx]
        return total

    def boxes(axis: int, los: list[int], his: list[int], vol: int) -> bool:
        if axis == n:
            lo_idx = [arms[i] - los[i] for i in range(n)]
            hi_idx = [arms[i] + his[i] for i in range(n)]
            return q * rect_sum(lo_idx, hi_idx) > p * vol
        for a in range(arms[axis] + 1):
            if vol * (a + 1) >= vol_bound:
                break  # even the one-sided window is too big already
            for b in range(arms[axis] + 1):
                grown = vol * (a + b + 1)
                if grown >= vol_bound:
                    break
                los.append(a)
                his.append(b)
                hit = boxes(axis + 1, los, his, grown)
                los.pop()
                his.pop()
                if hit:
                    return True
        return False

    return boxes(0, [], [], 1)


def ergodic_halo_measure(system: AtomicSystem, E: MeasurableSet, alpha: Fraction) -> Fraction:
    return ergodic_halo(system, E, alpha).measure


# ---------------------------------------------------------------------------
# Tauberian suprema over subsets.
# ---------------------------------------------------------------------------


def _subset_ratio(system: AtomicSystem, atoms: tuple[int, ...], alpha: Fraction, one_sided: bool) -> Fraction:
    E = MeasurableSet(system=system, atoms=atoms)
    if one_sided:
        measure = one_sided_ergodic_halo_measure(system, E, alpha)
    else:
        measure = ergodic_halo_measure(system, E, alpha)
    return measure / E.measure


def _exhaustive_tauberian(system: AtomicSystem, alpha: Fraction, one_sided: bool) -> TauberianEstimate:
    n = system.atom_count
    best_value: Fraction | None = None
    best_witness: tuple[int, ...] | None = None
    for mask in range(1, 1 << n):
        atoms = tuple(i for i in range(n) if mask >> i & 1)
        ratio = _subset_ratio(system, atoms, alpha, one_sided)
        if best_value is None or ratio > best_value or (
            ratio == best_value and atoms < best_witness
        ):
            best_value, best_witness = ratio, atoms
    return TauberianEstimate(
        alpha=alpha,
        value=best_value,
        witness=best_witness,
        strategy="exhaustive-subsets",
        mode="exact",
    )


def _heuristic_tauberian(
    system: AtomicSystem,
    alpha: Fraction,
    one_sided: bool,
    rng_seed: int,
    budget: int,
) -> TauberianEstimate:
    """Deterministic local search over atom subsets: arc seeds along every
    cycle, complement-of-one-atom seeds, then add/remove-one-atom hill
    climbing under an evaluation budget."""
    n = system.atom_count
    evals = 0

    def ratio_of(atoms: tuple[int, ...]) -> Fraction:
        nonlocal evals
        evals += 1
        return _subset_ratio(system, atoms, alpha, one_sided)

    seeds: list[tuple[int, ...]] = []
    if system.dim == 1:
        for cyc in _cycles(system.generators[0]):
            for length in range(1, len(cyc) + 1):
                seeds.append(tuple(sorted(cyc[:length])))
    seeds.append(tuple(range(n)))
    for a in range(min(n, 32)):
        seeds.append(tuple(i for i in range(n) if i != a))

    best_value = Fraction(0)
    best_witness: tuple[int, ...] = ()
    for s in seeds:
        if not s:
            continue
        r = ratio_of(s)
        if r > best_value or (r == best_value and (not best_witness or s < best_witness)):
            best_value, best_witness = r, s

    rng = random.Random(rng_seed)
    current = best_witness
    current_value = best_value
    while evals < budget:
        move_atom = rng.randrange(n)
        atoms = set(current)
        if move_atom in atoms:
            if len(atoms) == 1:
                continue
            atoms.remove(move_atom)
        else:
            atoms.add(move_atom)
        cand = tuple(sorted(atoms))
        r = ratio_of(cand)
        if r > current_value:
            current, current_value = cand, r
            if r > best_value:
                best_value, best_witness = r, cand
        elif r == current_value and cand < current:
            current = cand
    return TauberianEstimate(
        alpha=alpha,
        value=best_value,
        witness=best_witness,
        strategy="subset-local-search",
        mode="heuristic",
    )


def exact_tauberian(
    system: AtomicSystem,
    alpha: Fraction,
    max_enum: int = EXHAUSTIVE_ATOM_LIMIT,
    rng_seed: int = 0,
    budget: int = 2000,
) -> TauberianEstimate:
    """sup over nonempty atom subsets of halo measure / set measure.

    Exhaustive (and exact, with a lexicographically least witness) up to
    ``max_enum`` atoms; beyond that an explicitly flagged heuristic lower
    bound is returned.
    """
    alpha = require_alpha(alpha)
    _require_valid(system)
    if system.atom_count <= max_enum:
        return _exhaustive_tauberian(system, alpha, one_sided=False)
    return _heuristic_tauberian(system, alpha, False, rng_seed, budget)


# ---------------------------------------------------------------------------
# Index and towers.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TowerBase:
    base: MeasurableSet
    heights: tuple[int, ...]

    def translates(self) -> list[tuple[int, ...]]:
        system = self.base.system
        out = []
        for exps in _cartesian(*(range(h) for h in self.heights)):
            out.append(tuple(sorted(apply_power(system, a, exps) for a in self.base.atoms)))
        return out

    def is_disjoint(self) -> bool:
        seen: set[int] = set()
        for tr in self.translates():
            for a in tr:
                if a in seen:
                    return False
                seen.add(a)
        return True


@dataclass(frozen=True)
class IndexResult:
    """Largest tower height of a single transformation.

    ``infinite`` is the marker for transformations admitting arbitrarily tall
    towers;  a finite atomic system always has a finite index, bounded by its
    atom count.
    """

    value: int
    infinite: bool
    certificate: TowerBase
    cycle_lengths: tuple[int, ...]


def index(system: AtomicSystem) -> IndexResult:
    """The largest N with some positive-mass A making A, TA, ..., T^(N-1)A
    pairwise disjoint.  On a finite atomic system with all masses positive
    this is the longest cycle length: a single atom of a longest cycle is a
    tower base, and any tower forces every orbit it touches to have at least
    the tower's height of distinct points."""
    if system.dim != 1:
        raise DomainError("the tower index is defined for one transformation only")
    _require_valid(system)
    cycles = _cycles(system.generators[0])
    lengths = tuple(sorted(len(c) for c in cycles))
    best_cycle = max(cycles, key=len)
    value = len(best_cycle)
    base = MeasurableSet.of(system, [best_cycle[0]])
    cert = TowerBase(base=base, heights=(value,))
    if not cert.is_disjoint():
        raise AssertionError("cycle-derived tower certificate failed its invariant")
    return IndexResult(value=value, infinite=False, certificate=cert, cycle_lengths=lengths)


def rokhlin_tower(system: AtomicSystem, heights) -> TowerBase:
    """A single-atom base whose box of translates up to the given heights is
    pairwise disjoint; errors when the system has no room."""
    _require_valid(system)
    hts = tuple(int(h) for h in heights)
    if len(hts) != system.dim:
        raise DomainError("heights vector dimension mismatch")
    if any(h < 1 for h in hts):
        raise DomainError("tower heights must be >= 1")
    base = MeasurableSet.of(system, [0])
    tower = TowerBase(base=base, heights=hts)
    if not tower.is_disjoint():
        raise DomainError(
            f"no tower of heights {hts} from atom 0: translates collide "
            f"(orbit periods {[_cycle_length_of(g)[0] for g in system.generators]})"
        )
    return tower


@dataclass(frozen=True)
class TransferResult:
    witness: MeasurableSet
    ergodic_ratio: Fraction
    discrete_ratio: Fraction
    embedded_halo_atoms: tuple[int, ...]
    shift: tuple[int, ...]


def transfer_witness(system: AtomicSystem, discrete_E: LatticeSet, alpha: Fraction) -> TransferResult:
    """Replay a discrete witness inside a measure-preserving system.

    The discrete set (translated into the nonnegative orthant) indexes
    translates of a one-atom base; every lattice point of the discrete halo
    then contributes a distinct atom to the ergodic halo, so the ergodic
    ratio dominates the discrete one.  Requires the halo's exponent box to
    map to pairwise distinct atoms, otherwise the system is too small.
    """
    alpha = require_alpha(alpha)
    _require_valid(system)
    if discrete_E.dim != system.dim:
        raise DomainError("lattice witness dimension must match the system dimension")
    if len(discrete_E) == 0:
        raise DomainError("transfer needs a nonempty lattice witness")
    discrete_halo = lattice_halo(discrete_E, alpha)
    bound = max(abs(c) for pt in discrete_halo.members for c in pt)
    shift = tuple([bound] * system.dim)
    shifted_E = discrete_E.translate(shift)
    shifted_halo = discrete_halo.members.translate(shift)
    base_atom = 0
    halo_atoms = [apply_power(system, base_atom, pt) for pt in shifted_halo.points]
    if len(set(halo_atoms)) != len(halo_atoms):
        span = 2 * bound + 1
        raise DomainError(
            "system too small for the halo of this witness: translates collide; "
            f"need pairwise distinct translates over a box of span {span} per axis"
        )
    witness_atoms = [apply_power(system, base_atom, pt) for pt in shifted_E.points]
    E = MeasurableSet.of(system, witness_atoms)
    ergodic_ratio = ergodic_halo_measure(system, E, alpha) / E.measure
    discrete_ratio = Fraction(len(discrete_halo.members), len(discrete_E))
    if ergodic_ratio < discrete_ratio:
        raise AssertionError("transference inequality violated; this is a bug")
    return TransferResult(
        witness=E,
        ergodic_ratio=ergodic_ratio,
        discrete_ratio=discrete_ratio,
        embedded_halo_atoms=tuple(sorted(halo_atoms)),
        shift=shift,
    )


def jump_profile(n_cycle: int, alpha_grid, max_enum: int = EXHAUSTIVE_ATOM_LIMIT) -> list[TauberianEstimate]:
    """Exact Tauberian values of the uniform n-cycle along a threshold grid.

    The profile exhibits the jump of the constant at (2N-2)/(2N-1) for index
    N: the complement of one atom certifies at least N/(N-1) below the jump,
    and above it every halo collapses to its own set.
    """
    if n_cycle < 2:
        raise DomainError("jump profiles need a cycle of length >= 2")
    if n_cycle > max_enum:
        raise DomainError(
            f"refusing exhaustive enumeration over {n_cycle} atoms (limit {max_enum})"
        )
    system = make_cyclic(n_cycle)
    rows = []
    for alpha in alpha_grid:
        rows.append(exact_tauberian(system, require_alpha(alpha), max_enum=max_enum))
    return rows


# ---------------------------------------------------------------------------
# One-sided (forward window) ergodic operator.
# ---------------------------------------------------------------------------


def one_sided_ergodic_max(system: AtomicSystem, E: MeasurableSet, atom: int) -> Fraction:
    """Forward-window analogue: sup over N >= 0 of the average of the
    indicator over atom, T atom, ..., T^N atom.  Windows longer than the
    orbit period reduce to the full-period average, so lengths 1..P attain
    the supremum."""
    if system.dim != 1:
        raise DomainError("one-sided ergodic operators take a single transformation")
    _check_eval_args(system, E, atom)
    in_E = set(E.atoms)
    P = _cycle_length_of(system.generators[0])[atom]
    perm = system.generators[0]
    best_num, best_den = 0, 1
    cnt = 0
    a = atom
    for length in range(1, P + 1):
        if a in in_E:
            cnt += 1
        if cnt * best_den > best_num * length:
            best_num, best_den = cnt, length
        a = perm[a]
    return Fraction(best_num, best_den)


def one_sided_ergodic_halo(system: AtomicSystem, E: MeasurableSet, alpha: Fraction) -> MeasurableSet:
    alpha = require_alpha(alpha)
    if system.dim != 1:
        raise DomainError("one-sided ergodic operators take a single transformation")
    if E.system != system:
        raise DomainError("set belongs to a different system")
    if len(E) == 0:
        raise DomainError("ergodic maximal operators need a nonempty set")
    p, q = alpha.numerator, alpha.denominator
    atoms_in_E = set(E.atoms)
    members: list[int] = []
    for cyc in _cycles(system.generators[0]):
        P = len(cyc)
        w = [q - p if a in atoms_in_E else -p for a in cyc]
        x = w * 2
        G = [0] * (2 * P + 1)
        for i, v in enumerate(x):
            G[i + 1] = G[i] + v
        up = _windowed_max(G, P)  # up[j] = max G[j : j+P]
        for i in range(P):
            if up[i + 1] - G[i] > 0:
                members.append(cyc[i])
    return MeasurableSet.of(system, members)


def one_sided_ergodic_halo_measure(system: AtomicSystem, E: MeasurableSet, alpha: Fraction) -> Fraction:
    return one_sided_ergodic_halo(system, E, alpha).measure


def one_sided_exact_tauberian(
    system: AtomicSystem,
    alpha: Fraction,
    max_enum: int = EXHAUSTIVE_ATOM_LIMIT,
    rng_seed: int = 0,
    budget: int = 2000,
) -> TauberianEstimate:
    """One-sided analogue of :func:`exact_tauberian`."""
    alpha = require_alpha(alpha)
    _require_valid(system)
    if system.dim != 1:
        raise DomainError("one-sided ergodic operators take a single transformation")
    if system.atom_count <= max_enum:
        return _exhaustive_tauberian(system, alpha, one_sided=True)
    return _heuristic_tauberian(system, alpha, True, rng_seed, budget)
