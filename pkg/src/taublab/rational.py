"""Exact rational thresholds and densities.

All level-set decisions in this package are strict comparisons of exact
rationals, so thresholds are carried as :class:`fractions.Fraction` values
(arbitrary-precision integers, always in lowest terms).  On the wire a
rational is the string ``"p/q"`` in lowest terms (or ``"p"`` when q == 1);
decimal notation is rejected deliberately, because behaviour jumps exactly
at rational thresholds such as 2/3 and a decimal cannot name them.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, InputFormatError


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into an exact Fraction.

    Decimal strings such as ``"0.5"`` are refused with a hint: write
    ``"1/2"`` instead.
    """
    if not isinstance(text, str):
        raise InputFormatError(f"rational must be a string, got {type(text).__name__}")
    s = text.strip()
    if "." in s or "e" in s.lower():
        raise InputFormatError(
            f"decimal notation {s!r} is not accepted; write an exact fraction like 1/2"
        )
    parts = s.split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]), 1)
        if len(parts) == 2:
            return Fraction(int(parts[0]), int(parts[1]))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"cannot parse rational from {s!r}: {exc}") from exc
    raise InputFormatError(f"cannot parse rational from {s!r}")


def format_rational(value: Fraction) -> str:
    """Render a Fraction as the lowest-terms wire string ``"p/q"`` / ``"p"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def require_alpha(alpha: Fraction) -> Fraction:
    """Validate a level threshold: must be a rational strictly inside (0, 1)."""
    if isinstance(alpha, float):
        raise DomainError(
            f"threshold {alpha!r} is a float; thresholds must be exact rationals"
        )
    alpha = Fraction(alpha)
    if not (0 < alpha < 1):
        raise DomainError(f"threshold must lie strictly inside (0, 1), got {alpha}")
    return alpha
