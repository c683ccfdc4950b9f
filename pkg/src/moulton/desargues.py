"""Desargues configurations: exact closure test and witness search.

Configurations live on raw canonical triples so the same code runs on any
:class:`PlaneModel`: a Moulton plane, or the classical real projective plane.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Protocol, Sequence

from . import kernels as K
from .errors import DegenerateError
from .model import MoultonPoint
from .regions import Region
from .sampling import DEFAULT_SPAN, DENOMINATORS, affine_window

__all__ = [
    "PlaneModel",
    "ClassicalPlane",
    "DesarguesConfig",
    "ClosureWitness",
    "desargues_closes",
    "find_nonclosing",
    "random_configuration",
    "LABELS",
]

Triple = tuple[int, int, int]
LABELS = ("o", "a1", "a2", "a3", "b1", "b2", "b3")
_PAIRS = ((0, 1), (0, 2), (1, 2))


class PlaneModel(Protocol):
    def join(self, p: Triple, q: Triple) -> Triple: ...

    def meet(self, l: Triple, m: Triple) -> Triple: ...

    def incident(self, p: Triple, l: Triple) -> bool: ...

    def residual(self, p: Triple, l: Triple) -> Fraction: ...


class ClassicalPlane:
    """The real projective plane on homogeneous integer triples."""

    def __repr__(self):
        return "ClassicalPlane()"

    join = staticmethod(K.join)
    meet = staticmethod(K.meet)

    @staticmethod
    def incident(p, l) -> bool:
        return K.dot(p, l) == 0

    @staticmethod
    def residual(p, l) -> Fraction:
        v = K.dot(p, l)
        return Fraction(v, p[2]) if p[2] else Fraction(v)


def _triple(p) -> Triple:
    if isinstance(p, MoultonPoint):
        return p.t
    if hasattr(p, "coords"):
        return p.coords
    return K.canon_point(*p)


@dataclass(frozen=True)
class DesarguesConfig:
    """Centre ``o`` and triangles ``a``, ``b`` with ``o, a[i], b[i]`` collinear."""

    o: Triple
    a: tuple[Triple, Triple, Triple]
    b: tuple[Triple, Triple, Triple]

    @classmethod
    def from_points(cls, o, a: Sequence, b: Sequence) -> DesarguesConfig:
        if len(a) != 3 or len(b) != 3:
            raise DegenerateError("degenerate configuration: triangles need three points")
        return cls(_triple(o), tuple(map(_triple, a)), tuple(map(_triple, b)))

    @property
    def points(self) -> tuple[Triple, ...]:
        return (self.o, *self.a, *self.b)

    def labeled(self) -> dict[str, MoultonPoint]:
        return {n: MoultonPoint.from_triple(t) for n, t in zip(LABELS, self.points)}

    def validate(self, plane: PlaneModel) -> None:
        if _degeneracy(plane, self.o, self.a, self.b):
            raise DegenerateError("degenerate configuration")


def _degeneracy(plane, o, a, b) -> bool:
    pts = (o, *a, *b)
    if len(set(pts)) != 7:
        return True
    for ai, bi in zip(a, b):
        if not plane.incident(bi, plane.join(o, ai)):
            return True
    for tri in (a, b):
        if plane.incident(tri[2], plane.join(tri[0], tri[1])):
            return True
    for i, j in _PAIRS:
        if plane.join(a[i], a[j]) == plane.join(b[i], b[j]):
            return True
    return False


@dataclass(frozen=True)
class ClosureWitness:
    """The meets ``c12, c13, c23`` of corresponding sides and the verdict.

    ``residual`` is the exact incidence defect of ``c23`` against the line
    ``c12 v c13``; it is zero exactly when the configuration closes.
    """

    c12: Triple
    c13: Triple
    c23: Triple
    closes: bool
    axis: Optional[Triple]
    residual: Fraction

    @property
    def meets(self) -> tuple[Triple, Triple, Triple]:
        return (self.c12, self.c13, self.c23)


def _closure(plane, a, b) -> ClosureWitness:
    c = [plane.meet(plane.join(a[i], a[j]), plane.join(b[i], b[j])) for i, j in _PAIRS]
    c12, c13, c23 = c
    if c12 == c13 or c12 == c23 or c13 == c23:
        axis = plane.join(c12, c13) if c12 != c13 else None
        return ClosureWitness(c12, c13, c23, True, axis, Fraction(0))
    axis = plane.join(c12, c13)
    closes = plane.incident(c23, axis)
    return ClosureWitness(c12, c13, c23, closes, axis, plane.residual(c23, axis))


def desargues_closes(plane: PlaneModel, cfg: DesarguesConfig) -> ClosureWitness:
    cfg.validate(plane)
    return _closure(plane, cfg.a, cfg.b)


# -- search -------------------------------------------------------------------


def _point_on(plane, line: Triple, u: Fraction, v: Fraction) -> Optional[Triple]:
    """Affine point of ``line`` with abscissa ``u`` (or ordinate ``v`` if vertical)."""
    a, b, c = line
    if b == 0:
        if a == 0:
            return None
        return _vertical(a, c, v)
    x, xd = u.numerator, u.denominator
    kn, kd = getattr(plane, "kn", 1), getattr(plane, "kd", 1)
    if x < 0 and a * b > 0:
        # left branch: kn*a*x + kd*(b*y + c) = 0
        return K.canon_point(kd * b * x, -(kn * a * x + kd * c * xd), kd * b * xd)
    return K.canon_point(b * x, -(a * x + c * xd), b * xd)


def _vertical(a, c, v: Fraction) -> Triple:
    # x = -c/a, y = v
    return K.canon_point(-c * v.denominator, v.numerator * a, a * v.denominator)


class _Sampler:
    def __init__(self, region: Region, rng: random.Random, den: Optional[int]):
        x0, x1, y0, y1 = affine_window(region, DEFAULT_SPAN)
        self.x0, self.dx = x0, x1 - x0
        self.y0, self.dy = y0, y1 - y0
        self.rng = rng
        self.den = den

    def _coord(self, lo, span):
        rng = self.rng
        den = self.den or rng.choice(DENOMINATORS[1:])
        return lo + span * Fraction(rng.randint(1, den - 1), den)

    def x(self):
        return self._coord(self.x0, self.dx)

    def y(self):
        return self._coord(self.y0, self.dy)

    def point(self) -> Triple:
        x, y = self.x(), self.y()
        d = x.denominator * y.denominator
        return K.canon_point(x.numerator * y.denominator, y.numerator * x.denominator, d)


def _attempt(plane, region: Region, s: _Sampler):
    inside = region.contains_t
    o = s.point()
    if not inside(o):
        return None
    a, b = [], []
    for _ in range(3):
        p = s.point()
        if not inside(p) or p == o:
            return None
        line = plane.join(o, p)
        q = _point_on(plane, line, s.x(), s.y())
        if q is None or not inside(q):
            return None
        a.append(p)
        b.append(q)
    if _degeneracy(plane, o, a, b):
        return None
    w = _closure(plane, a, b)
    if not all(inside(c) for c in w.meets):
        return None
    return DesarguesConfig(o, tuple(a), tuple(b)), w


def random_configuration(
    plane: PlaneModel, region: Region, rng: random.Random, tries: int = 1000
) -> Optional[tuple[DesarguesConfig, ClosureWitness]]:
    """A valid configuration with all ten points in ``region``, closing or not."""
    s = _Sampler(region, rng, None)
    for _ in range(tries):
        hit = _attempt(plane, region, s)
        if hit is not None:
            return hit
    return None


def _search(plane, region: Region, budget: int, seed: int):
    """One partition: a grid pass on denominator 8, then mixed denominators."""
    rng = random.Random(seed)
    grid = _Sampler(region, rng, 8)
    mixed = _Sampler(region, rng, None)
    grid_tries = budget // 10
    for i in range(budget):
        hit = _attempt(plane, region, grid if i < grid_tries else mixed)
        if hit is not None and not hit[1].closes:
            return hit
    return None


def _partition_seed(seed: int, j: int) -> int:
    return seed * 1_000_003 + j


def find_nonclosing(
    plane: PlaneModel,
    region: Region,
    budget: int,
    seed: int = 0,
    partitions: int = 1,
    workers: int = 1,
) -> Optional[tuple[DesarguesConfig, ClosureWitness]]:
    """First exactly non-closing configuration with all ten points in ``region``.

    The budget counts sampled candidate configurations and is split evenly
    over ``partitions``; the hit from the lowest-numbered partition wins, so
    the result depends on ``seed`` and ``partitions`` but not on ``workers``.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    partitions = max(1, min(partitions, budget))
    shares = [budget // partitions + (j < budget % partitions) for j in range(partitions)]
    seeds = [_partition_seed(seed, j) for j in range(partitions)]
    if workers > 1 and partitions > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_search, itertools.repeat(plane), itertools.repeat(region), shares, seeds))
    else:
        results = []
        for share, sd in zip(shares, seeds):
            results.append(_search(plane, region, share, sd))
            if results[-1] is not None:
                break
    for hit in results:
        if hit is not None:
            cfg, _ = hit
            return cfg, desargues_closes(plane, cfg)
    return None
