"""Certified lower-bound records for Tauberian constants.

An estimate is never an extrapolation: ``value`` is always the halo ratio
that its ``witness`` actually achieves at ``alpha``, recomputed from the
witness when the estimate is built.  ``mode`` distinguishes exhaustively
certified maxima ("exact") from heuristic lower bounds ("heuristic").
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .rational import format_rational


@dataclass(frozen=True)
class TauberianEstimate:
    alpha: Fraction
    value: Fraction
    witness: Any  # LatticeSet for discrete searches, tuple of atom indices for ergodic ones
    strategy: str = "direct"
    mode: str = "exact"

    def to_json_dict(self) -> dict:
        from .lattice import LatticeSet

        if isinstance(self.witness, LatticeSet):
            witness: Any = [list(p) for p in self.witness.points]
        elif self.witness is None:
            witness = None
        else:
            witness = list(self.witness)
        return {
            "alpha": format_rational(self.alpha),
            "value": format_rational(self.value),
            "witness": witness,
            "strategy": self.strategy,
            "mode": self.mode,
        }
