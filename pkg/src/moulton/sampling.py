"""Seeded samplers for rationals and points of a region.

All randomness flows through a caller-supplied :class:`random.Random`, so
results are reproducible from the seed.  Rationals are grid values
``lo + (hi - lo) * j / den`` with ``den <= 64``, which keeps witnesses short.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .model import IDEAL_VERTICAL, Affine, Ideal, MoultonPoint
from .regions import Region

DEFAULT_SPAN = Fraction(4)
DENOMINATORS = (1, 2, 3, 4, 8, 16, 32, 64)


def rational(rng: random.Random, lo: Fraction, hi: Fraction, den: Optional[int] = None) -> Fraction:
    """A grid rational strictly inside ``(lo, hi)``."""
    if den is None:
        den = rng.choice(DENOMINATORS)
    den = max(den, 2)
    return lo + (hi - lo) * Fraction(rng.randint(1, den - 1), den)


def _span(lo, hi, span):
    if lo is None and hi is None:
        return -span, span
    if lo is None:
        return hi - 2 * span, hi
    if hi is None:
        return lo, lo + 2 * span
    return lo, hi


def affine_window(region: Region, span=DEFAULT_SPAN):
    x0, x1, y0, y1 = region.window()
    return _span(x0, x1, span) + _span(y0, y1, span)


def random_point(
    region: Region,
    rng: random.Random,
    tries: int = 200,
    span=DEFAULT_SPAN,
    ideal_rate: float = 0.15,
) -> Optional[MoultonPoint]:
    """Rejection-sample a point of ``region``; None if every try misses."""
    x0, x1, y0, y1 = affine_window(region, span)
    s0, s1 = _span(*region.slope_window(), span)
    aff, ide = region.affine_possible, region.ideal_possible
    for _ in range(tries):
        if ide and (not aff or rng.random() < ideal_rate):
            if rng.random() < 0.05:
                p = IDEAL_VERTICAL
            else:
                p = Ideal(rational(rng, s0, s1))
        else:
            p = Affine(rational(rng, x0, x1), rational(rng, y0, y1))
        if p in region:
            return p
    return None
