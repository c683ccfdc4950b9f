"""Piecewise S-linear arcs, chart chains, continuation and holonomy.

A leg of an arc is a closed segment of a Moulton line.  A projective line is
a circle, so two endpoints split it into two segments; a third point on the
line (the via point) says which one is meant.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .charts import Atlas, Chart, glue
from .errors import CoverageError, DegenerateError, GeometryError
from .model import (
    Affine,
    Ideal,
    MoultonLine,
    MoultonPoint,
    as_k,
    line_param,
    line_point,
    mincident,
    mjoin,
)
from .projective import PPoint, Projectivity, fit_projectivity, proj_equal
from .regions import (
    EVERYTHING,
    IDEAL_SLOPE_IN_NEG,
    IDEAL_SLOPE_IN_POS,
    NOT_ON_RAY,
    X_NEG,
    X_POS,
    Or,
    Region,
    line_cuts,
)
from .sampling import rational

__all__ = [
    "Leg",
    "PolylineArc",
    "ChainLink",
    "ChartChain",
    "Continuation",
    "HolonomyResult",
    "leg_cells",
    "leg_in_region",
    "arc_in_region",
    "build_chain",
    "continue_along",
    "holonomy",
    "canonical_loop",
    "SLIT_CYLINDER",
    "route_arc",
]


@dataclass(frozen=True)
class Leg:
    start: MoultonPoint
    end: MoultonPoint
    via: MoultonPoint
    line: MoultonLine

    @classmethod
    def make(cls, k, start, end, via) -> Leg:
        if start == end:
            raise DegenerateError("leg endpoints coincide")
        if via == start or via == end:
            raise DegenerateError("via point must differ from the leg endpoints")
        line = mjoin(k, start, end)
        if not mincident(k, via, line):
            raise GeometryError(f"via point {via!r} is not on {line!r}")
        return cls(start, end, via, line)

    def reversed(self) -> Leg:
        return Leg(self.end, self.start, self.via, self.line)


@dataclass(frozen=True)
class PolylineArc:
    k: Fraction
    legs: tuple[Leg, ...]

    @classmethod
    def build(cls, k, waypoints: Sequence[MoultonPoint], vias: Sequence[MoultonPoint]) -> PolylineArc:
        k = as_k(k)
        if len(waypoints) < 2:
            raise GeometryError("an arc needs at least two waypoints")
        if len(vias) != len(waypoints) - 1:
            raise GeometryError("an arc needs one via point per leg")
        legs = tuple(
            Leg.make(k, p, q, v) for p, q, v in zip(waypoints, waypoints[1:], vias)
        )
        return cls(k, legs)

    @property
    def waypoints(self) -> list[MoultonPoint]:
        return [self.legs[0].start] + [leg.end for leg in self.legs]

    @property
    def vias(self) -> list[MoultonPoint]:
        return [leg.via for leg in self.legs]

    @property
    def start(self) -> MoultonPoint:
        return self.legs[0].start

    @property
    def end(self) -> MoultonPoint:
        return self.legs[-1].end

    @property
    def is_loop(self) -> bool:
        return self.start == self.end

    def reversed(self) -> PolylineArc:
        return PolylineArc(self.k, tuple(leg.reversed() for leg in reversed(self.legs)))

    def concat(self, other: PolylineArc) -> PolylineArc:
        if self.end != other.start or self.k != other.k:
            raise GeometryError("arcs do not chain")
        return PolylineArc(self.k, self.legs + other.legs)

    def __add__(self, other):
        return self.concat(other)


# -- exact segment decomposition ----------------------------------------------


def _stations(leg: Leg, cuts: Sequence[Fraction]):
    """Traversal-ordered parameters (None = the point at infinity) and direction."""
    tp = line_param(leg.line, leg.start)
    tq = line_param(leg.line, leg.end)
    tv = line_param(leg.line, leg.via)
    if tp is not None and tq is not None and tv is not None and min(tp, tq) < tv < max(tp, tq):
        d = 1 if tq > tp else -1
        inner = sorted((c for c in cuts if min(tp, tq) < c < max(tp, tq)), reverse=d < 0)
        return [tp, *inner, tq], d
    if tp is not None and tq is not None:
        d = 1 if tq < tp else -1
        if d > 0:
            out = sorted(c for c in cuts if c > tp) + [None] + sorted(c for c in cuts if c < tq)
        else:
            out = sorted((c for c in cuts if c < tp), reverse=True) + [None]
            out += sorted((c for c in cuts if c > tq), reverse=True)
        return [tp, *out, tq], d
    if tp is not None:
        d = 1 if tv > tp else -1
        beyond = sorted((c for c in cuts if (c - tp) * d > 0), reverse=d < 0)
        return [tp, *beyond, None], d
    d = -1 if tv > tq else 1
    before = sorted((c for c in cuts if (tq - c) * d > 0), reverse=d < 0)
    return [None, *before, tq], d


def leg_cells(k, leg: Leg, region: Optional[Region] = None, cuts=None) -> list[tuple[str, MoultonPoint]]:
    """The leg as alternating closed points and open intervals, in order.

    Each entry is ``("pt", point)`` or ``("open", representative)``; region
    membership is constant on every open interval, so testing the
    representative decides the whole interval.
    """
    if cuts is None:
        cuts = line_cuts(k, leg.line, EVERYTHING if region is None else region)
    st, d = _stations(leg, cuts)
    cells = [("pt", line_point(k, leg.line, st[0]))]
    for a, b in zip(st, st[1:]):
        if a is not None and b is not None:
            rep = (a + b) / 2
        elif b is None:
            rep = a + d
        else:
            rep = b - d
        cells.append(("open", line_point(k, leg.line, rep)))
        cells.append(("pt", line_point(k, leg.line, b)))
    return cells


def leg_in_region(k, leg: Leg, region: Region) -> bool:
    return all(p in region for _, p in leg_cells(k, leg, region))


def arc_in_region(arc: PolylineArc, region: Region) -> bool:
    return all(leg_in_region(arc.k, leg, region) for leg in arc.legs)


# -- chains -------------------------------------------------------------------


@dataclass(frozen=True)
class ChainLink:
    chart: str
    entry: MoultonPoint


@dataclass(frozen=True)
class ChartChain:
    links: tuple[ChainLink, ...]

    @property
    def names(self) -> list[str]:
        return [link.chart for link in self.links]

    def __len__(self):
        return len(self.links)


def _arc_cells(atlas: Atlas, arc: PolylineArc):
    cover = Or(*(c.domain for c in atlas.charts.values()))
    cells = []
    for i, leg in enumerate(arc.legs):
        lc = leg_cells(atlas.k, leg, cover)
        cells.extend(lc if i == 0 else lc[1:])
    names = list(atlas.charts)
    return [
        (kind, p, frozenset(n for n in names if p in atlas.charts[n].domain)) for kind, p in cells
    ]


def build_chain(atlas: Atlas, arc: PolylineArc, start_chart: str) -> ChartChain:
    """Greedy cover of ``arc`` by atlas charts, switching only when forced.

    At each switch the next chart must contain the current cell and the next
    one and must have recorded overlap samples with the current chart; among
    those, the chart that covers the longest stretch ahead is chosen.
    """
    if start_chart not in atlas.charts:
        raise GeometryError(f"unknown chart {start_chart!r}")
    cells = _arc_cells(atlas, arc)
    for kind, p, inside in cells:
        if not inside:
            raise CoverageError(p)
    if start_chart not in cells[0][2]:
        raise GeometryError(f"arc does not start in chart {start_chart!r}")

    def reach(name, i):
        while i + 1 < len(cells) and name in cells[i + 1][2]:
            i += 1
        return i

    order = list(atlas.charts)
    links = [ChainLink(start_chart, arc.start)]
    cur, pos = start_chart, reach(start_chart, 0)
    while pos < len(cells) - 1:
        here, ahead = cells[pos][2], cells[pos + 1][2]
        options = [n for n in order if n in here and n in ahead and n != cur]
        if not options:
            raise CoverageError(cells[pos + 1][1])
        glued = [n for n in options if atlas.has_overlap(cur, n)]
        if not glued:
            raise GeometryError(
                f"no recorded overlap between {cur!r} and any of {options} at {cells[pos][1]!r}"
            )
        nxt = max(glued, key=lambda n: (reach(n, pos), -order.index(n)))
        links.append(ChainLink(nxt, cells[pos][1]))
        cur, pos = nxt, reach(nxt, pos)
    return ChartChain(tuple(links))


@dataclass
class Continuation:
    final: Chart
    image: PPoint
    chain: ChartChain
    charts: list[Chart]

    def __iter__(self):
        return iter((self.final, self.image))


def continue_along(
    atlas: Atlas, arc: PolylineArc, start_chart: str, initial: Optional[Chart] = None
) -> Continuation:
    """Glue the charts of the chain one after another, starting from ``start_chart``.

    ``initial`` replaces the atlas version of the start chart, e.g. one
    already adjusted by an earlier continuation.
    """
    chain = build_chain(atlas, arc, start_chart)
    cur = initial if initial is not None else atlas[start_chart]
    adjusted = [cur]
    for prev, link in zip(chain.links, chain.links[1:]):
        samples = atlas.overlap(prev.chart, link.chart)
        cur = glue(atlas.k, cur, atlas[link.chart], samples)
        adjusted.append(cur)
    return Continuation(cur, cur(arc.end), chain, adjusted)


@dataclass(frozen=True)
class HolonomyResult:
    transform: Projectivity
    loop: PolylineArc
    base: str

    @property
    def trivial(self) -> bool:
        return proj_equal(self.transform, Projectivity.identity())


def holonomy(atlas: Atlas, loop: PolylineArc, start_chart: str) -> HolonomyResult:
    """Projectivity relating the start chart to its continuation around ``loop``.

    ``transform`` satisfies ``final = transform o start`` on the start
    chart's domain.
    """
    if not loop.is_loop:
        raise GeometryError("holonomy needs a closed loop")
    cont = continue_along(atlas, loop, start_chart)
    final = cont.final
    last = cont.chain.links[-1].chart
    if last != start_chart:
        samples = atlas.overlap(last, start_chart)
        if samples is None:
            raise GeometryError(f"no recorded overlap between {last!r} and {start_chart!r}")
        final = glue(atlas.k, final, atlas[start_chart], samples)
    start = atlas[start_chart]
    pts = atlas.samples_in(start_chart)
    t = fit_projectivity([(start(x), final(x)) for x in pts])
    return HolonomyResult(t, loop, start_chart)


def canonical_loop(k) -> PolylineArc:
    """A loop once around the cylinder C_k, each leg inside one builtin chart.

    Waypoints (1,1), Ideal(1), (-1,-1), (-1,1), Ideal(-1), (2,-3), (2,2).  The
    via point of the leg leaving (-1,1) is computed from ``k`` because that
    leg runs along a left branch.
    """
    k = as_k(k)
    wps = [
        Affine(1, 1), Ideal(1), Affine(-1, -1), Affine(-1, 1), Ideal(-1),
        Affine(2, -3), Affine(2, 2), Affine(1, 1),
    ]
    vias = [
        Affine(2, 2), Affine(-2, -2), Affine(-1, 0), Affine(-2, k + 1),
        Affine(3, -4), Affine(2, 0), Affine(Fraction(3, 2), Fraction(3, 2)),
    ]
    return PolylineArc.build(k, wps, vias)


# the cylinder C_k cut along the half line {(x, 0): x > 0}; simply connected
SLIT_CYLINDER = NOT_ON_RAY & (X_POS | X_NEG | IDEAL_SLOPE_IN_POS | IDEAL_SLOPE_IN_NEG)

# quadrants in the order a path from Q1 must visit them inside SLIT_CYLINDER
ROUTE = ("Q1", "Q3", "Q2", "Q4")
_SIGNS = {"Q1": (1, 1), "Q2": (-1, 1), "Q3": (-1, -1), "Q4": (1, -1)}


def quadrant(p: MoultonPoint) -> Optional[str]:
    if not isinstance(p, Affine) or p.x == 0 or p.y == 0:
        return None
    return {(True, True): "Q1", (False, True): "Q2", (False, False): "Q3", (True, False): "Q4"}[
        (p.x > 0, p.y > 0)
    ]


def _quad_point(rng, q):
    sx, sy = _SIGNS[q]
    one, four = Fraction(1, 4), Fraction(4)
    return Affine(sx * rational(rng, one, four), sy * rational(rng, one, four))


def _line_via(k, p, q):
    """A via point strictly between two affine points on their joining line."""
    line = mjoin(k, p, q)
    tp, tq = line_param(line, p), line_param(line, q)
    return line_point(k, line, (tp + tq) / 2)


def route_arc(k, start: MoultonPoint, end: MoultonPoint, rng: random.Random, detours: int = 2) -> PolylineArc:
    """A random arc inside :data:`SLIT_CYLINDER` from ``start`` to ``end``.

    ``start`` and ``end`` must be affine points off the axes with ``start``
    in the first quadrant.  The arc runs through the quadrants in the order
    Q1, Q3, Q2, Q4, passing from Q1 to Q3 through a random positive ideal
    point, from Q3 to Q2 across the negative x-axis and from Q2 to Q4 through
    a random negative ideal point.  ``detours`` bounds the number of random
    intermediate waypoints per quadrant.
    """
    k = as_k(k)
    if quadrant(start) != "Q1" or quadrant(end) is None:
        raise GeometryError("route_arc needs start in Q1 and an affine end off the axes")
    target = ROUTE.index(quadrant(end))
    wps, vias = [start], []

    def step(p, q):
        if p != q:
            vias.append(_line_via(k, p, q))
            wps.append(q)

    cur = start
    for i in range(target + 1):
        qd = ROUTE[i]
        for _ in range(rng.randint(0, detours)):
            step(cur, _quad_point(rng, qd))
            cur = wps[-1]
        if i == target:
            break
        nxt = end if i + 1 == target and rng.random() < 0.3 else _quad_point(rng, ROUTE[i + 1])
        if qd == "Q1":
            s = rational(rng, Fraction(1, 4), Fraction(4))
            vias.append(Affine(cur.x + 1, cur.y + s))
            wps.append(Ideal(s))
            vias.append(Affine(nxt.x - 1, nxt.y - s))
            wps.append(nxt)
        elif qd == "Q3":
            # cross the negative x-axis on a vertical leg, then move inside Q2
            top = Affine(cur.x, -cur.y)
            vias.append(Affine(cur.x, 0))
            wps.append(top)
            step(top, nxt)
        else:
            s = -rational(rng, Fraction(1, 4), Fraction(4))
            # up the left branch, whose slope is k*s
            vias.append(Affine(cur.x - 1, cur.y - k * s))
            wps.append(Ideal(s))
            vias.append(Affine(nxt.x + 1, nxt.y + s))
            wps.append(nxt)
        cur = wps[-1]
    step(cur, end)
    return PolylineArc.build(k, wps, vias)
