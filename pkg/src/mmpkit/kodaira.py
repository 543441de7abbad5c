"""Curve-level invariants: genus, plurigenera, Riemann-Roch, and a
finite-sample Kodaira-dimension estimator for plurigenus growth data.

The estimator is an explicit heuristic for an asymptotic quantity: all
plurigenera zero gives -infinity; an eventually constant positive
sequence gives 0; otherwise the log-log slope through the two largest
samples is rounded, clamped below by 1 and above by the maximal
dimension when one is supplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import log

from .errors import (
    CoefficientOutOfRangeError,
    InsufficientSamplesError,
    NegativeCoefficientError,
)


@dataclass(frozen=True)
class KappaEstimate:
    """Kodaira dimension estimate; value None encodes -infinity."""

    value: int | None
    note: str = ""

    @property
    def is_minus_infinity(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "-inf" if self.value is None else str(self.value)


class PairClass(Enum):
    CANONICAL_OR_TERMINAL = "CanonicalOrTerminal"
    KLT = "Klt"
    LC = "Lc"
    NOT_LC = "NotLc"


def plane_curve_genus(d: int) -> int:
    """Genus (d-1)(d-2)/2 of a smooth plane curve of degree d."""
    if d < 1:
        raise ValueError("degree must be positive")
    return (d - 1) * (d - 2) // 2


def curve_kappa(g: int) -> KappaEstimate:
    """Kodaira dimension of a smooth projective curve of genus g."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    if g == 0:
        return KappaEstimate(None, "deg K = -2 < 0: rational curve")
    if g == 1:
        return KappaEstimate(0, "deg K = 0: elliptic curve")
    return KappaEstimate(1, "deg K > 0: general type")


def curve_plurigenus(g: int, m: int) -> int:
    """h^0 of the m-th canonical power on a genus-g curve."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    if m < 1:
        raise ValueError("m must be positive")
    if g == 0:
        return 0
    if g == 1:
        return 1
    if m == 1:
        return g
    return (2 * m - 1) * (g - 1)


def riemann_roch_curve(deg: int, g: int) -> int:
    """Euler characteristic 1 + deg D - g on a genus-g curve."""
    return 1 + deg - g


def _validate_samples(samples) -> list[tuple[int, int]]:
    pts = [(int(m), int(p)) for m, p in samples]
    if not pts:
        raise ValueError("need at least one sample")
    seen = set()
    for m, p in pts:
        if m < 1:
            raise ValueError(f"sample index m = {m} must be positive")
        if p < 0:
            raise ValueError(f"plurigenus {p} must be nonnegative")
        if m in seen:
            raise ValueError(f"duplicate sample index m = {m}")
        seen.add(m)
    return sorted(pts)


def estimate_kappa(samples, max_dim: int | None = None) -> KappaEstimate:
    """Estimate the growth exponent of a finite plurigenus sequence."""
    pts = _validate_samples(samples)
    if all(p == 0 for _, p in pts):
        return KappaEstimate(None, "all sampled plurigenera vanish")
    positive = [(m, p) for m, p in pts if p > 0]
    if len(positive) < 2:
        raise InsufficientSamplesError(
            "growth estimation needs at least two positive samples"
        )
    # boundedness window: at least the top half of the samples, never fewer
    # than two of them
    top = pts[min(len(pts) // 2, len(pts) - 2):]
    top_values = [p for _, p in top]
    if max(top_values) == min(top_values) and top_values[0] > 0:
        return KappaEstimate(
            0,
            f"plurigenus constant at {top_values[0]} from m = {top[0][0]} on",
        )
    (m1, p1), (m2, p2) = positive[-2], positive[-1]
    slope = log(p2 / p1) / log(m2 / m1)
    value = max(1, round(slope))
    note = f"rounded log({p2}/{p1}) / log({m2}/{m1}) over window m = {m1}..{m2}"
    if max_dim is not None:
        value = min(value, max_dim)
    else:
        note += "; unclamped (no maximal dimension supplied)"
    return KappaEstimate(value, note)


def _validate_coeffs(coeffs) -> list[Fraction]:
    return [Fraction(c) for c in coeffs]


def classify_pair_on_curve(coeffs) -> PairClass:
    """Classify a pair on a smooth curve from its boundary coefficients."""
    cs = _validate_coeffs(coeffs)
    if any(c < 0 for c in cs):
        raise NegativeCoefficientError("boundary coefficients must be nonnegative")
    if all(c == 0 for c in cs):
        return PairClass.CANONICAL_OR_TERMINAL
    if all(c < 1 for c in cs):
        return PairClass.KLT
    if all(c <= 1 for c in cs):
        return PairClass.LC
    return PairClass.NOT_LC


def fano_pair_on_p1_check(coeffs) -> bool:
    """Anti-ampleness of K + B on the line: true iff the coefficients sum below 2."""
    cs = _validate_coeffs(coeffs)
    if any(not 0 <= c <= 1 for c in cs):
        raise CoefficientOutOfRangeError("coefficients must lie in [0, 1]")
    return sum(cs) < 2
