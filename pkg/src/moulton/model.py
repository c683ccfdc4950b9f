"""The Moulton projective planes M_k in the Moulton model.

Lines of negative slope ``s`` are kinked on the y-axis: slope ``s`` for
``x >= 0`` and slope ``k*s`` for ``x <= 0``.  Ideal points are labelled by
the right-half slope ``s`` of their parallel class.

Points and lines are thin wrappers around canonical integer triples (see
:mod:`moulton._pykernels`); a line is stored as the classical line carrying
its right branch.  With ``k = 1`` the triples are exactly the homogeneous
coordinates of the embedding ``(x, y) -> (x:y:1)``, ``Ideal(s) -> (1:s:0)``,
``IdealVertical -> (0:1:0)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from . import kernels as K
from .errors import DegenerateError, GeometryError
from .projective import PPoint, integerize, to_fraction

__all__ = [
    "MoultonPoint",
    "Affine",
    "Ideal",
    "IdealVertical",
    "IDEAL_VERTICAL",
    "MoultonLine",
    "Vertical",
    "Graph",
    "LineAtInfinity",
    "LINE_AT_INFINITY",
    "MoultonPlane",
    "MoultonAutomorphism",
    "mjoin",
    "mmeet",
    "mincident",
    "moulton_automorphism",
    "line_point",
    "line_param",
    "as_k",
]


def as_k(k) -> Fraction:
    k = to_fraction(k)
    if k <= 0:
        raise GeometryError(f"Moulton parameter must be positive, got {k}")
    return k


class MoultonPoint:
    __slots__ = ("t",)

    def __eq__(self, other):
        return isinstance(other, MoultonPoint) and self.t == other.t

    def __hash__(self):
        return hash(self.t)

    @staticmethod
    def from_triple(t) -> MoultonPoint:
        if t[2] != 0:
            cls = Affine
        elif t[0] != 0:
            cls = Ideal
        else:
            cls = IdealVertical
        obj = object.__new__(cls)
        obj.t = t
        return obj

    @property
    def is_affine(self) -> bool:
        return self.t[2] != 0

    def embed(self) -> PPoint:
        """Classical image under the identity chart."""
        return PPoint._raw(self.t)


class Affine(MoultonPoint):
    __slots__ = ()

    def __init__(self, x, y):
        xn, yn, d = integerize((x, y, 1))
        self.t = K.canon_point(xn, yn, d)

    @property
    def x(self) -> Fraction:
        return Fraction(self.t[0], self.t[2])

    @property
    def y(self) -> Fraction:
        return Fraction(self.t[1], self.t[2])

    def __repr__(self):
        return f"Affine({self.x}, {self.y})"


class Ideal(MoultonPoint):
    """Common point at infinity of the lines with right-half slope ``slope``."""

    __slots__ = ()

    def __init__(self, slope):
        s = to_fraction(slope)
        self.t = K.canon_point(s.denominator, s.numerator, 0)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.t[1], self.t[0])

    def __repr__(self):
        return f"Ideal({self.slope})"


class IdealVertical(MoultonPoint):
    __slots__ = ()

    def __init__(self):
        self.t = (0, 1, 0)

    def __repr__(self):
        return "IdealVertical()"


IDEAL_VERTICAL = IdealVertical()


class MoultonLine:
    __slots__ = ("t",)

    def __eq__(self, other):
        return isinstance(other, MoultonLine) and self.t == other.t

    def __hash__(self):
        return hash(("line", self.t))

    @staticmethod
    def from_triple(t) -> MoultonLine:
        if t[1] != 0:
            cls = Graph
        elif t[0] != 0:
            cls = Vertical
        else:
            cls = LineAtInfinity
        obj = object.__new__(cls)
        obj.t = t
        return obj

    @property
    def kinked(self) -> bool:
        a, b = self.t[0], self.t[1]
        return a * b > 0


class Vertical(MoultonLine):
    __slots__ = ()

    def __init__(self, c):
        c = to_fraction(c)
        self.t = K.canon_line(c.denominator, 0, -c.numerator)

    @property
    def c(self) -> Fraction:
        return Fraction(-self.t[2], self.t[0])

    def __repr__(self):
        return f"Vertical({self.c})"


class Graph(MoultonLine):
    """``y = s x + b`` on ``x >= 0``; on ``x <= 0`` the slope is ``k s`` if ``s < 0``."""

    __slots__ = ()

    def __init__(self, s, b):
        sn, minus_one, bn = integerize((s, -1, b))
        self.t = K.canon_line(sn, minus_one, bn)

    @property
    def s(self) -> Fraction:
        return Fraction(-self.t[0], self.t[1])

    @property
    def b(self) -> Fraction:
        return Fraction(-self.t[2], self.t[1])

    def __repr__(self):
        return f"Graph({self.s}, {self.b})"


class LineAtInfinity(MoultonLine):
    __slots__ = ()

    def __init__(self):
        self.t = (0, 0, 1)

    def __repr__(self):
        return "LineAtInfinity()"


LINE_AT_INFINITY = LineAtInfinity()


class MoultonPlane:
    """Incidence structure of M_k over raw canonical triples.

    This is the fast path used by searches; the module-level functions wrap
    it for :class:`MoultonPoint` / :class:`MoultonLine` values.
    """

    def __init__(self, k=2):
        self.k = as_k(k)
        self.kn = self.k.numerator
        self.kd = self.k.denominator

    def __repr__(self):
        return f"MoultonPlane(k={self.k})"

    @property
    def classical(self) -> bool:
        return self.k == 1

    def join(self, p, q):
        """Line through two points (raw triples); ZERO when p == q."""
        return K.m_join(self.kn, self.kd, p, q)

    def meet(self, l, m):
        return K.m_meet(self.kn, self.kd, l, m)

    def incident(self, p, l) -> bool:
        return K.m_incident(self.kn, self.kd, p, l)

    def residual(self, p, l) -> Fraction:
        """Signed defect of incidence; zero exactly when ``p`` lies on ``l``.

        Affine points are measured in the line's own equation (left branch
        when the kink applies), normalised by the point's last coordinate.
        """
        x, y, z = p
        a, b, c = l
        if z != 0 and x * z < 0 and a * b > 0:
            v = self.kn * a * x + self.kd * (b * y + c * z)
            return Fraction(v, self.kd * z)
        v = a * x + b * y + c * z
        return Fraction(v, z) if z else Fraction(v)

    # convenience wrappers on MoultonPoint / MoultonLine
    def line(self, p: MoultonPoint, q: MoultonPoint) -> MoultonLine:
        return mjoin(self.k, p, q)

    def point(self, l: MoultonLine, m: MoultonLine) -> MoultonPoint:
        return mmeet(self.k, l, m)

    wrap_point = staticmethod(MoultonPoint.from_triple)
    wrap_line = staticmethod(MoultonLine.from_triple)


def _kparts(k):
    k = as_k(k)
    return k.numerator, k.denominator


def mjoin(k, p: MoultonPoint, q: MoultonPoint) -> MoultonLine:
    kn, kd = _kparts(k)
    t = K.m_join(kn, kd, p.t, q.t)
    if t == K.ZERO:
        raise DegenerateError("degenerate join")
    return MoultonLine.from_triple(t)


def mmeet(k, l: MoultonLine, m: MoultonLine) -> MoultonPoint:
    kn, kd = _kparts(k)
    t = K.m_meet(kn, kd, l.t, m.t)
    if t == K.ZERO:
        raise DegenerateError("degenerate meet")
    return MoultonPoint.from_triple(t)


def mincident(k, p: MoultonPoint, l: MoultonLine) -> bool:
    kn, kd = _kparts(k)
    return K.m_incident(kn, kd, p.t, l.t)


class MoultonAutomorphism:
    """``(x, y) -> (a x, b y + c)`` with ``a, b > 0``.

    Acts on points by calling the instance and on lines via :meth:`line`.
    """

    def __init__(self, a, b, c):
        self.a, self.b, self.c = to_fraction(a), to_fraction(b), to_fraction(c)
        if self.a <= 0 or self.b <= 0:
            raise GeometryError("automorphism scale factors must be positive")

    def __repr__(self):
        return f"MoultonAutomorphism(a={self.a}, b={self.b}, c={self.c})"

    def __call__(self, p: MoultonPoint) -> MoultonPoint:
        if isinstance(p, Affine):
            return Affine(self.a * p.x, self.b * p.y + self.c)
        if isinstance(p, Ideal):
            return Ideal(self.b * p.slope / self.a)
        return p

    def line(self, l: MoultonLine) -> MoultonLine:
        if isinstance(l, Graph):
            return Graph(self.b * l.s / self.a, self.b * l.b + self.c)
        if isinstance(l, Vertical):
            return Vertical(self.a * l.c)
        return l

    def inverse(self) -> MoultonAutomorphism:
        return MoultonAutomorphism(1 / self.a, 1 / self.b, -self.c / self.b)


def moulton_automorphism(k, a, b, c) -> MoultonAutomorphism:
    as_k(k)
    return MoultonAutomorphism(a, b, c)


# -- lines as circles --------------------------------------------------------
#
# Every line is R u {oo} under one coordinate: x on a Graph, y on a Vertical,
# the slope label on the line at infinity.  ``None`` stands for the point oo.


def line_point(k, l: MoultonLine, t: Optional[Fraction]) -> MoultonPoint:
    """The point of ``l`` with parameter ``t``."""
    if isinstance(l, Graph):
        if t is None:
            return Ideal(l.s)
        s = l.s
        if s < 0 and t < 0:
            s = as_k(k) * s
        return Affine(t, s * t + l.b)
    if isinstance(l, Vertical):
        return IDEAL_VERTICAL if t is None else Affine(l.c, t)
    return IDEAL_VERTICAL if t is None else Ideal(t)


def line_param(l: MoultonLine, p: MoultonPoint) -> Optional[Fraction]:
    """Inverse of :func:`line_point`; assumes ``p`` lies on ``l``."""
    if isinstance(l, Graph):
        return p.x if isinstance(p, Affine) else None
    if isinstance(l, Vertical):
        return p.y if isinstance(p, Affine) else None
    return p.slope if isinstance(p, Ideal) else None
