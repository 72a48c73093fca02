"""Search strategies for certified Tauberian lower bounds, plus exploratory
smoothness probes.

Every strategy returns a :class:`TauberianEstimate` whose value is the halo
ratio its witness actually achieves, never an extrapolation.  ``mode`` is
"exact" when the strategy provably maximised over its stated candidate space
(an exhaustive window, a finite structured family) and "heuristic" for local
search.  The only upper bounds ever asserted anywhere are the two closed-form
one-dimensional ceilings, 2/alpha - 1 (two-sided) and 1/alpha (one-sided).
"""

from __future__ import annotations

import math
import os
import random
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian

from .errors import DomainError
from .estimate import TauberianEstimate
from .lattice import (
    LatticeSet,
    halo_ratio,
    interval,
    one_sided_halo_ratio,
    product_witness,
)
from .rational import require_alpha

EXHAUSTIVE_WINDOW_LIMIT = 24

STRATEGIES = ("exhaustive", "interval-family", "box-family", "product-family",
              "staircase-family", "anneal")


def thread_count() -> int:
    """Worker cap from TAUBLAB_THREADS; 1 (serial) when unset."""
    raw = os.environ.get("TAUBLAB_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 1
    return max(1, n)


def _map_ordered(fn, items):
    items = list(items)
    workers = thread_count()
    if workers == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class SearchConfig:
    dim: int = 1
    window: tuple[tuple[int, int], ...] = ((0, 11),)
    strategy: str = "interval-family"
    rng_seed: int = 0
    budget: int = 2000
    max_block: int = 60
    one_sided: bool = False
    anneal_seed_block: int | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("dimension must be >= 1")
        if len(self.window) != self.dim:
            raise DomainError("window must give bounds for every axis")
        if any(lo > hi for lo, hi in self.window):
            raise DomainError("window bounds must satisfy lo <= hi")
        if self.strategy not in STRATEGIES:
            raise DomainError(f"unknown strategy {self.strategy!r}; choose from {STRATEGIES}")
        if self.one_sided and self.dim != 1:
            raise DomainError("one-sided searches are 1-D only")

    def window_cardinality(self) -> int:
        n = 1
        for lo, hi in self.window:
            n *= hi - lo + 1
        return n

    def window_points(self) -> list[tuple[int, ...]]:
        return list(_cartesian(*(range(lo, hi + 1) for lo, hi in self.window)))

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "window": [list(b) for b in self.window],
            "strategy": self.strategy,
            "rng_seed": self.rng_seed,
            "budget": self.budget,
            "max_block": self.max_block,
            "one_sided": self.one_sided,
            "anneal_seed_block": self.anneal_seed_block,
        }


def _ratio(E: LatticeSet, alpha: Fraction, one_sided: bool) -> Fraction:
    return one_sided_halo_ratio(E, alpha) if one_sided else halo_ratio(E, alpha)


def _certify(E: LatticeSet, alpha: Fraction, strategy: str, mode: str, one_sided: bool) -> TauberianEstimate:
    return TauberianEstimate(
        alpha=alpha,
        value=_ratio(E, alpha, one_sided),
        witness=E,
        strategy=strategy,
        mode=mode,
    )


class _Best:
    """Maximum with lexicographically-least-witness tie-break."""

    def __init__(self):
        self.value: Fraction | None = None
        self.witness: LatticeSet | None = None

    def offer(self, value: Fraction, witness: LatticeSet):
        if (
            self.value is None
            or value > self.value
            or (value == self.value and witness.points < self.witness.points)
        ):
            self.value, self.witness = value, witness


def exhaustive_search(window, alpha: Fraction, one_sided: bool = False) -> TauberianEstimate:
    """Exact maximum of the halo ratio over every translation class of
    nonempty subsets of the window.

    Classes are deduplicated by keeping only subsets whose per-axis minimum
    sits on the window's low corner (translation equivariance makes the ratio
    class-invariant); witnesses are reported translated so their per-axis
    minima are 0.
    """
    alpha = require_alpha(alpha)
    window = tuple((int(lo), int(hi)) for lo, hi in window)
    card = 1
    for lo, hi in window:
        card *= hi - lo + 1
    if card > EXHAUSTIVE_WINDOW_LIMIT:
        raise DomainError(
            f"window has {card} points; exhaustive search refuses above {EXHAUSTIVE_WINDOW_LIMIT}"
        )
    points = list(_cartesian(*(range(lo, hi + 1) for lo, hi in window)))
    lows = tuple(lo for lo, _ in window)
    n = len(window)
    best = _Best()
    for mask in range(1, 1 << len(points)):
        chosen = [points[i] for i in range(len(points)) if mask >> i & 1]
        canonical = all(min(p[i] for p in chosen) == lows[i] for i in range(n))
        if not canonical:
            continue
        E = LatticeSet.from_points(
            tuple(tuple(c - lo for c, lo in zip(p, lows)) for p in chosen)
        )
        best.offer(_ratio(E, alpha, one_sided), E)
    return TauberianEstimate(
        alpha=alpha,
        value=best.value,
        witness=best.witness,
        strategy="exhaustive",
        mode="exact",
    )


def _family_members(family: str, dim: int, max_block: int):
    if max_block < 1:
        raise DomainError("family size bound must be >= 1")
    if family in ("intervals", "interval-family"):
        if dim != 1:
            raise DomainError("the interval family is 1-D")
        return [interval(k) for k in range(1, max_block + 1)]
    if family in ("boxes", "box-family"):
        members = []
        for sides in _cartesian(*(range(1, max_block + 1) for _ in range(dim))):
            pts = _cartesian(*(range(s) for s in sides))
            members.append(LatticeSet.from_points(pts))
        return members
    if family in ("products", "product-family"):
        if dim != 2:
            raise DomainError("the product family is 2-D")
        return [
            product_witness(interval(k), interval(l))
            for k in range(1, max_block + 1)
            for l in range(1, max_block + 1)
        ]
    if family in ("staircases", "staircase-family"):
        if dim != 2:
            raise DomainError("the staircase family is 2-D")
        return [
            LatticeSet.from_points([(i, i) for i in range(k)])
            for k in range(1, max_block + 1)
        ]
    raise DomainError(f"unknown family {family!r}")


def family_search(
    family: str,
    alpha: Fraction,
    dim: int = 1,
    max_block: int = 60,
    one_sided: bool = False,
) -> TauberianEstimate:
    """Best ratio over a structured witness family, certified by recomputation."""
    alpha = require_alpha(alpha)
    members = _family_members(family, dim, max_block)
    if not members:
        raise DomainError("empty witness family")
    names = {
        "intervals": "interval-family",
        "boxes": "box-family",
        "products": "product-family",
        "staircases": "staircase-family",
    }
    best = _Best()
    for value, E in _map_ordered(lambda E: (_ratio(E, alpha, one_sided), E), members):
        best.offer(value, E)
    return TauberianEstimate(
        alpha=alpha,
        value=best.value,
        witness=best.witness,
        strategy=names.get(family, family),
        mode="exact",
    )


def _anneal_population(config: SearchConfig) -> list[LatticeSet]:
    extents = [hi - lo + 1 for lo, hi in config.window]
    cap = min(config.max_block, min(extents))
    if config.anneal_seed_block is not None:
        k = config.anneal_seed_block
        if k < 1 or k > min(extents):
            raise DomainError("anneal seed block does not fit the window")
        sizes = [k]
    else:
        sizes = list(range(1, cap + 1))
    lows = [lo for lo, _ in config.window]
    pop = []
    for k in sizes:
        pts = _cartesian(*(range(lo, lo + k) for lo in lows))
        pop.append(LatticeSet.from_points(pts))
    return pop


def anneal_search(config: SearchConfig, alpha: Fraction) -> TauberianEstimate:
    """Seeded annealing over add/remove-one-point moves inside the window.

    Ratio comparisons are exact rational; the temperature enters only the
    acceptance probability of a worsening move (geometric schedule).  The
    returned value is always the best ratio actually achieved.
    """
    alpha = require_alpha(alpha)
    rng = random.Random(config.rng_seed)
    window_points = config.window_points()
    population = _anneal_population(config)
    best = _Best()
    evaluated: dict[tuple, Fraction] = {}

    def ratio_of(E: LatticeSet) -> Fraction:
        cached = evaluated.get(E.points)
        if cached is None:
            cached = _ratio(E, alpha, config.one_sided)
            evaluated[E.points] = cached
        return cached

    for E in population:
        best.offer(ratio_of(E), E)
    current = best.witness
    current_value = best.value
    temperature = 1.0
    for _ in range(config.budget):
        pt = window_points[rng.randrange(len(window_points))]
        pts = set(current.points)
        if pt in pts:
            if len(pts) == 1:
                temperature *= 0.999
                continue
            pts.remove(pt)
        else:
            pts.add(pt)
        candidate = LatticeSet.from_points(pts)
        value = ratio_of(candidate)
        if value > current_value:
            accept = True
        elif value == current_value:
            accept = True
        else:
            drop = float(current_value - value)
            accept = rng.random() < math.exp(-drop / max(temperature, 1e-9))
        if accept:
            current, current_value = candidate, value
            best.offer(value, candidate)
        temperature *= 0.999
    return TauberianEstimate(
        alpha=alpha,
        value=best.value,
        witness=best.witness,
        strategy="anneal",
        mode="heuristic",
    )


def run_strategy(config: SearchConfig, alpha: Fraction) -> TauberianEstimate:
    if config.strategy == "exhaustive":
        return exhaustive_search(config.window, alpha, one_sided=config.one_sided)
    if config.strategy == "anneal":
        return anneal_search(config, alpha)
    return family_search(
        config.strategy,
        alpha,
        dim=config.dim,
        max_block=config.max_block,
        one_sided=config.one_sided,
    )


@dataclass(frozen=True)
class SweepResult:
    entries: tuple[tuple[Fraction, TauberianEstimate], ...]
    config: SearchConfig

    def alphas(self) -> list[Fraction]:
        return [a for a, _ in self.entries]

    def values(self) -> list[Fraction]:
        return [e.value for _, e in self.entries]

    def to_json_dict(self) -> dict:
        return {
            "config": self.config.to_json_dict(),
            "entries": [est.to_json_dict() for _, est in self.entries],
        }


def sweep(alpha_grid, config: SearchConfig) -> SweepResult:
    """Run the configured strategy on every grid level, then re-evaluate every
    witness found at every level so the reported envelope is the pointwise
    best over all witnesses.  Halo nesting makes each witness's ratio
    nonincreasing in alpha, hence so is the envelope."""
    grid = [require_alpha(a) for a in alpha_grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("threshold grid must be strictly increasing")
    raw = _map_ordered(lambda a: run_strategy(config, a), grid)
    witnesses: list[LatticeSet] = []
    seen = set()
    for est in raw:
        if est.witness is not None and est.witness.points not in seen:
            seen.add(est.witness.points)
            witnesses.append(est.witness)

    def envelope_at(pair) -> TauberianEstimate:
        alpha, base = pair
        best = _Best()
        best.offer(base.value, base.witness)
        for w in witnesses:
            best.offer(_ratio(w, alpha, config.one_sided), w)
        return TauberianEstimate(
            alpha=alpha,
            value=best.value,
            witness=best.witness,
            strategy=base.strategy,
            mode=base.mode,
        )

    entries = _map_ordered(envelope_at, zip(grid, raw))
    return SweepResult(entries=tuple(zip(grid, entries)), config=config)


# ---------------------------------------------------------------------------
# Exploratory smoothness probes.  These report data about the lower-bound
# curve; they prove nothing about the true constants and say so.
# ---------------------------------------------------------------------------

PROBE_DISCLAIMER = (
    "exploratory probe of the lower-bound envelope; not a proof of any "
    "smoothness or decay property of the true constants"
)


@dataclass(frozen=True)
class ModulusReport:
    exponent: Fraction
    pairs_considered: int
    max_quotient: Fraction | float
    argmax: tuple[Fraction, Fraction] | None
    exploratory: bool = True
    note: str = PROBE_DISCLAIMER


def reference_sweep(curve, config: SearchConfig | None = None) -> SweepResult:
    """Wrap an explicit (alpha, value) curve as a SweepResult, for probing
    closed-form references.  Witnesses are absent; mode is 'reference'."""
    entries = []
    for alpha, value in curve:
        alpha = require_alpha(alpha)
        entries.append(
            (alpha,
             TauberianEstimate(alpha=alpha, value=Fraction(value), witness=None,
                               strategy="reference", mode="reference"))
        )
    cfg = config if config is not None else SearchConfig()
    return SweepResult(entries=tuple(entries), config=cfg)


def holder_modulus(sweep_result: SweepResult, p: Fraction) -> ModulusReport:
    """Largest pairwise quotient |v_i - v_j| / |a_i - a_j|^p over the curve.

    Exact rational for integer p, float otherwise.
    """
    p = Fraction(p)
    points = [(a, est.value) for a, est in sweep_result.entries]
    if len(points) < 3:
        raise DomainError("modulus probe needs at least 3 grid points")
    if p <= 0:
        raise DomainError("modulus exponent must be positive")
    best = None
    arg = None
    count = 0
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            a1, v1 = points[i]
            a2, v2 = points[j]
            count += 1
            if p.denominator == 1:
                quotient: Fraction | float = abs(v1 - v2) / abs(a1 - a2) ** p.numerator
            else:
                quotient = float(abs(v1 - v2)) / float(abs(a1 - a2)) ** float(p)
            if best is None or quotient > best:
                best, arg = quotient, (a1, a2)
    return ModulusReport(exponent=p, pairs_considered=count, max_quotient=best, argmax=arg)


@dataclass(frozen=True)
class SolyanikReport:
    fitted_exponent: float
    intercept: float
    residuals: tuple[float, ...]
    points_used: int
    exploratory: bool = True
    note: str = PROBE_DISCLAIMER


def solyanik_probe(sweep_result: SweepResult, tail_from: Fraction = Fraction(9, 10)) -> SolyanikReport:
    """Least-squares slope of log(value - 1) against log(1/alpha - 1) on the
    grid tail near 1; the slope estimates the decay exponent of value -> 1."""
    pts = [
        (a, est.value)
        for a, est in sweep_result.entries
        if a > tail_from and est.value > 1
    ]
    if len(pts) < 4:
        raise DomainError(
            "decay probe needs at least 4 grid points past "
            f"{tail_from} with values above 1 (got {len(pts)})"
        )
    xs = [math.log(float(Fraction(1, 1) / a - 1)) for a, _ in pts]
    ys = [math.log(float(v - 1)) for _, v in pts]
    fit = statistics.linear_regression(xs, ys)
    residuals = tuple(y - (fit.intercept + fit.slope * x) for x, y in zip(xs, ys))
    return SolyanikReport(
        fitted_exponent=fit.slope,
        intercept=fit.intercept,
        residuals=residuals,
        points_used=len(pts),
    )
