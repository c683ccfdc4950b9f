"""Piecewise-projective charts of M_k into P2(R), gluing and dense extension."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from . import kernels as K
from .errors import (
    DegenerateError,
    DensityError,
    GeometryError,
    OnRemovedLineError,
    OutsideChartError,
)
from .model import (
    Affine,
    Graph,
    MoultonLine,
    MoultonPoint,
    as_k,
    line_point,
    mincident,
    mjoin,
)
from .projective import PLine, PPoint, Projectivity, compose, fit_projectivity, pjoin, pmeet
from .regions import (
    IDEAL_SLOPE_IN_NEG,
    IDEAL_SLOPE_IN_POS,
    IS_IDEAL,
    X_NEG,
    X_POS,
    Y_NEG,
    Y_POS,
    Or,
    Region,
    line_cuts,
)
from .sampling import random_point, rational

__all__ = [
    "Chart",
    "Atlas",
    "Verdict",
    "chart_apply",
    "verify_chart_homomorphism",
    "overlap_map",
    "glue",
    "chart_union",
    "image_line",
    "extend_dense",
    "builtin_atlas_Ck",
    "identity_chart",
]


@dataclass(frozen=True)
class Chart:
    """A map from an open region of M_k into P2(R).

    Each piece applies its projectivity to the classical embedding of the
    point; the first piece whose region contains the point wins.
    """

    name: str
    domain: Region
    pieces: tuple[tuple[Region, Projectivity], ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if not self.pieces:
            raise GeometryError(f"chart {self.name!r} has no pieces")

    def __contains__(self, p) -> bool:
        return p in self.domain

    def piece_for(self, p: MoultonPoint) -> Projectivity:
        for region, t in self.pieces:
            if p in region:
                return t
        raise GeometryError(f"no piece of chart {self.name!r} contains {p!r}")

    def __call__(self, p: MoultonPoint) -> PPoint:
        if p not in self.domain:
            raise OutsideChartError(f"outside chart {self.name!r}: {p!r}")
        return PPoint._raw(K.apply_point(self.piece_for(p).m, p.t))

    def post_compose(self, psi: Projectivity, name: Optional[str] = None) -> Chart:
        """The chart ``psi o self``."""
        pieces = tuple((r, compose(t, psi)) for r, t in self.pieces)
        return Chart(name or self.name, self.domain, pieces)

    def restrict(self, domain: Region, name: Optional[str] = None) -> Chart:
        return Chart(name or self.name, domain, self.pieces)


def identity_chart(name: str, domain: Region) -> Chart:
    return Chart(name, domain, ((domain, Projectivity.identity()),))


def chart_apply(k, chart: Chart, p: MoultonPoint) -> PPoint:
    as_k(k)
    return chart(p)


@dataclass
class Verdict:
    ok: bool
    lines_checked: int
    line: Optional[MoultonLine] = None
    points: tuple = ()
    images: tuple = ()
    reason: str = ""

    def __bool__(self):
        return self.ok


def _cell_params(cuts: Sequence[Fraction]):
    """One parameter inside every cell of the line cut at ``cuts``, plus the cuts."""
    if not cuts:
        return [Fraction(0), Fraction(1), Fraction(-1)]
    out = [cuts[0] - 1, cuts[-1] + 1]
    for a, b in zip(cuts, cuts[1:]):
        out.append((a + b) / 2)
    out.extend(cuts)
    return out


def _chart_cut_region(chart: Chart) -> Region:
    return Or(chart.domain, *(r for r, _ in chart.pieces))


def sample_line_points(
    k, line: MoultonLine, region: Region, rng: random.Random, extra: int = 6, cut_region=None
) -> list[MoultonPoint]:
    """Distinct points of ``line`` inside ``region``.

    Every cell between consecutive cut parameters contributes a point, so
    each component of ``line`` inside the region is represented; ``extra``
    random parameters are added on top.
    """
    cuts = line_cuts(k, line, cut_region or region)
    params = _cell_params(cuts)
    lo = (cuts[0] if cuts else Fraction(0)) - 4
    hi = (cuts[-1] if cuts else Fraction(0)) + 4
    params += [rational(rng, lo, hi) for _ in range(extra)]
    seen = set()
    out = []
    for t in params + [None]:
        p = line_point(k, line, t)
        if p in region and p not in seen:
            seen.add(p)
            out.append(p)
    return out


def _check_line(k, chart: Chart, line: MoultonLine, pts) -> Optional[Verdict]:
    imgs = [chart(p) for p in pts]
    i0 = imgs[0]
    for j in range(1, len(imgs)):
        if imgs[j] != i0:
            base = pjoin(i0, imgs[j])
            for m in range(1, len(imgs)):
                if K.dot(imgs[m].coords, base.coords) != 0:
                    return Verdict(
                        False, 0, line, (pts[0], pts[j], pts[m]), (i0, imgs[j], imgs[m]),
                        "images not collinear",
                    )
            break
    if len(set(imgs)) < len(imgs):
        # two distinct points with one image: not locally injective
        seen = {}
        for p, im in zip(pts, imgs):
            if im in seen:
                q = seen[im]
                return Verdict(False, 0, line, (q, p), (im, im), "images coincide")
            seen[im] = p
    return None


def verify_chart_homomorphism(k, chart: Chart, budget: int = 1000, seed: int = 0) -> Verdict:
    """Search for a line of M_k whose image under ``chart`` is not collinear.

    Lines come from joins of random domain points, with every third one a
    random kinked line (negative slope) so that piece boundaries are crossed.
    ``ok`` means no violation was found among ``budget`` lines.
    """
    k = as_k(k)
    if budget < 1:
        raise ValueError("budget must be positive")
    rng = random.Random(seed)
    cut_region = _chart_cut_region(chart)
    if random_point(chart.domain, rng, tries=1000) is None:
        raise GeometryError(f"empty domain for chart {chart.name!r}")
    checked = 0
    for i in range(8 * budget):
        if checked >= budget:
            break
        if i % 3 == 2:
            line = Graph(-rational(rng, Fraction(0), Fraction(8)), rational(rng, Fraction(-8), Fraction(8)))
        else:
            p = random_point(chart.domain, rng)
            q = random_point(chart.domain, rng)
            if p is None or q is None or p == q:
                continue
            line = mjoin(k, p, q)
        pts = sample_line_points(k, line, chart.domain, rng, cut_region=cut_region)
        if len(pts) < 3:
            continue
        checked += 1
        bad = _check_line(k, chart, line, pts)
        if bad is not None:
            bad.lines_checked = checked
            return bad
    return Verdict(True, checked)


def line_image_verdict(k, chart: Chart, line: MoultonLine, pts) -> Verdict:
    """Check one given line on given domain points."""
    for p in pts:
        if not mincident(k, p, line):
            raise GeometryError(f"{p!r} is not on {line!r}")
    bad = _check_line(k, chart, line, list(pts))
    return bad if bad is not None else Verdict(True, 1)


def overlap_map(established: Chart, incoming: Chart, samples: Sequence[MoultonPoint]) -> Projectivity:
    """The projectivity ``psi`` with ``psi o incoming == established`` on ``samples``."""
    for x in samples:
        if x not in established.domain or x not in incoming.domain:
            raise GeometryError(
                f"overlap sample {x!r} not in both {established.name!r} and {incoming.name!r}"
            )
    return fit_projectivity([(incoming(x), established(x)) for x in samples])


def glue(k, established: Chart, incoming: Chart, overlap_sample: Sequence[MoultonPoint]) -> Chart:
    """Adjust ``incoming`` so that it agrees with ``established`` on the overlap.

    Raises ``InconsistentError`` when the two charts do not differ by one
    projectivity on the sample.
    """
    as_k(k)
    return incoming.post_compose(overlap_map(established, incoming, overlap_sample))


def chart_union(first: Chart, second: Chart, name: Optional[str] = None) -> Chart:
    """One chart on the union of the domains; ``first`` wins on the overlap."""
    pieces = [(r & first.domain, t) for r, t in first.pieces]
    rest = second.domain & ~first.domain
    pieces += [(r & rest, t) for r, t in second.pieces]
    return Chart(name or f"{first.name}+{second.name}", first.domain | second.domain, pieces)


def image_line(k, chart: Chart, line: MoultonLine, budget: int = 64, seed: int = 0) -> PLine:
    """Classical line through the images of two domain points of ``line``."""
    rng = random.Random(seed)
    cut_region = _chart_cut_region(chart)
    for _ in range(max(1, budget // 8)):
        pts = sample_line_points(k, line, chart.domain, rng, extra=8, cut_region=cut_region)
        for p, q in combinations(pts, 2):
            ip, iq = chart(p), chart(q)
            if ip != iq:
                return pjoin(ip, iq)
    raise DensityError()


def extend_dense(k, chart: Chart, a: MoultonPoint, b: MoultonPoint, query: MoultonPoint) -> PPoint:
    """Value at ``query`` of the extension of ``chart`` from a dense domain.

    The image of ``query`` is the meet of the image lines of ``a v query``
    and ``b v query``; ``query`` must avoid the line ``a v b``.
    """
    k = as_k(k)
    if a == b:
        raise DegenerateError("base points coincide")
    if chart(a) == chart(b):
        raise DegenerateError("base points have equal images")
    if mincident(k, query, mjoin(k, a, b)):
        raise OnRemovedLineError()
    la = image_line(k, chart, mjoin(k, a, query))
    lb = image_line(k, chart, mjoin(k, b, query))
    return pmeet(la, lb)


@dataclass
class Atlas:
    """Finitely many charts of M_k with recorded overlap samples.

    ``overlaps`` maps an unordered pair of chart names to its sample points,
    or to None when the domains are disjoint.
    """

    k: Fraction
    charts: dict[str, Chart]
    overlaps: dict[frozenset, Optional[tuple[MoultonPoint, ...]]] = field(default_factory=dict)

    def __post_init__(self):
        self.k = as_k(self.k)
        for pair, samples in self.overlaps.items():
            names = sorted(pair)
            for n in names:
                if n not in self.charts:
                    raise GeometryError(f"overlap refers to unknown chart {n!r}")
            if samples is None:
                continue
            if len(samples) < 5:
                raise GeometryError(f"overlap {names} needs at least 5 samples")
            a, b = (self.charts[n] for n in names)
            for x in samples:
                if x not in a.domain or x not in b.domain:
                    raise GeometryError(f"overlap sample {x!r} not in both of {names}")

    def __getitem__(self, name) -> Chart:
        return self.charts[name]

    def overlap(self, a: str, b: str) -> Optional[tuple[MoultonPoint, ...]]:
        return self.overlaps.get(frozenset((a, b)))

    def has_overlap(self, a: str, b: str) -> bool:
        return self.overlap(a, b) is not None

    def samples_in(self, name: str) -> list[MoultonPoint]:
        """Every recorded overlap sample lying in chart ``name``."""
        chart = self.charts[name]
        out = []
        for pair in sorted(self.overlaps, key=lambda s: sorted(s)):
            for x in self.overlaps[pair] or ():
                if x in chart.domain and x not in out:
                    out.append(x)
        return out


def _quadrant_samples(sx, sy):
    pts = [(1, 1), (2, 1), (1, 2), (3, 5), (2, 3), (5, 2)]
    return tuple(Affine(sx * x, sy * y) for x, y in pts)


def builtin_atlas_Ck(k) -> Atlas:
    """Four half-cylinder charts covering C_k = M_k minus (y-axis and q).

    U1 = right half plane, U3 = left half plane, U2 = first and third
    quadrants with the positive ideal slopes, U4 = second and fourth quadrants
    with the negative ideal slopes.  Only U4 is not the identity: its left
    piece undoes the kink with ``(x, y) -> (k x, y)``.
    """
    k = as_k(k)
    ident = Projectivity.identity()
    u2 = (X_POS & Y_POS) | (X_NEG & Y_NEG) | IDEAL_SLOPE_IN_POS
    u4 = (X_NEG & Y_POS) | (X_POS & Y_NEG) | IDEAL_SLOPE_IN_NEG
    charts = {
        "U1": identity_chart("U1", X_POS),
        "U2": identity_chart("U2", u2),
        "U3": identity_chart("U3", X_NEG),
        "U4": Chart("U4", u4, ((X_NEG, Projectivity.diag(k, 1, 1)), (X_POS | IS_IDEAL, ident))),
    }
    overlaps = {
        frozenset(("U1", "U2")): _quadrant_samples(1, 1),
        frozenset(("U2", "U3")): _quadrant_samples(-1, -1),
        frozenset(("U3", "U4")): _quadrant_samples(-1, 1),
        frozenset(("U4", "U1")): _quadrant_samples(1, -1),
        frozenset(("U1", "U3")): None,
        frozenset(("U2", "U4")): None,
    }
    return Atlas(k, charts, overlaps)
