"""Exact homogeneous coordinates for the real projective plane.

Scalars are :class:`fractions.Fraction`; triples and matrices are stored as
canonical integer tuples so that projective equality is tuple equality.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from . import kernels as K
from .errors import (
    DegenerateError,
    GeneralPositionError,
    InconsistentError,
    ParseError,
    SingularError,
)

__all__ = [
    "HomogeneousTriple",
    "PPoint",
    "PLine",
    "Projectivity",
    "to_fraction",
    "pjoin",
    "pmeet",
    "pincident",
    "collinear",
    "fit_projectivity",
    "apply",
    "compose",
    "invert",
    "proj_equal",
]


def to_fraction(v) -> Fraction:
    """Coerce ``v`` to an exact rational.

    Accepts ints, Fractions and ``"num/den"`` strings.  Floats are refused:
    they would silently carry rounding error into predicates that test
    equality.
    """
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise ParseError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        s = v.strip()
        num, sep, den = s.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise ParseError(f"not a rational literal: {v!r}") from None
        if d == 0:
            raise ParseError(f"zero denominator: {v!r}")
        return Fraction(n, d)
    raise ParseError(f"not a rational: {v!r}")


def integerize(values: Iterable) -> list[int]:
    """Scale rationals by the lcm of their denominators."""
    fr = [to_fraction(v) for v in values]
    d = lcm(*(f.denominator for f in fr))
    return [f.numerator * (d // f.denominator) for f in fr]


class HomogeneousTriple:
    """A point or line of P2(R), up to nonzero scale."""

    __slots__ = ("coords",)
    role = ""

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise ValueError("a homogeneous triple needs three coordinates")
        t = self._canon(*integerize(coords))
        if t == K.ZERO:
            raise DegenerateError("all coordinates zero")
        self.coords = t

    @staticmethod
    def _canon(a, b, c):
        raise NotImplementedError

    @classmethod
    def _raw(cls, t):
        obj = object.__new__(cls)
        obj.coords = t
        return obj

    def __eq__(self, other):
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self):
        return hash((self.role, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return f"{type(self).__name__}({':'.join(map(str, self.coords))})"


class PPoint(HomogeneousTriple):
    """Point of P2(R).  Points off the line z=0 are stored with z > 0."""

    __slots__ = ()
    role = "point"
    _canon = staticmethod(K.canon_point)

    @property
    def is_finite(self) -> bool:
        return self.coords[2] != 0

    def affine(self) -> tuple[Fraction, Fraction]:
        x, y, z = self.coords
        if z == 0:
            raise ValueError(f"{self!r} is at infinity")
        return Fraction(x, z), Fraction(y, z)


class PLine(HomogeneousTriple):
    __slots__ = ()
    role = "line"
    _canon = staticmethod(K.canon_line)


def pjoin(p: PPoint, q: PPoint) -> PLine:
    t = K.join(p.coords, q.coords)
    if t == K.ZERO:
        raise DegenerateError("degenerate join")
    return PLine._raw(t)


def pmeet(l: PLine, m: PLine) -> PPoint:
    t = K.meet(l.coords, m.coords)
    if t == K.ZERO:
        raise DegenerateError("degenerate meet")
    return PPoint._raw(t)


def pincident(p: PPoint, l: PLine) -> bool:
    return K.dot(p.coords, l.coords) == 0


def collinear(p1: PPoint, p2: PPoint, p3: PPoint) -> bool:
    return K.det3(p1.coords, p2.coords, p3.coords) == 0


class Projectivity:
    """Invertible 3x3 matrix acting on column vectors, up to nonzero scale."""

    __slots__ = ("m",)

    def __init__(self, rows: Sequence[Sequence]):
        flat = [v for row in rows for v in row]
        if len(flat) != 9 or any(len(r) != 3 for r in rows):
            raise ValueError("a projectivity needs a 3x3 matrix")
        m = K.canon_matrix(tuple(integerize(flat)))
        if K.mat_det(m) == 0:
            raise SingularError()
        self.m = m

    @classmethod
    def _raw(cls, m):
        m = K.canon_matrix(m)
        if K.mat_det(m) == 0:
            raise SingularError()
        obj = object.__new__(cls)
        obj.m = m
        return obj

    @classmethod
    def identity(cls) -> Projectivity:
        return cls._raw((1, 0, 0, 0, 1, 0, 0, 0, 1))

    @classmethod
    def diag(cls, a, b, c) -> Projectivity:
        return cls([[a, 0, 0], [0, b, 0], [0, 0, c]])

    @property
    def rows(self) -> list[list[int]]:
        m = self.m
        return [list(m[0:3]), list(m[3:6]), list(m[6:9])]

    def is_identity(self) -> bool:
        return self.m == (1, 0, 0, 0, 1, 0, 0, 0, 1)

    def __call__(self, p: PPoint) -> PPoint:
        return apply(self, p)

    def __eq__(self, other):
        return isinstance(other, Projectivity) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"Projectivity({self.rows})"


def apply(t: Projectivity, p: PPoint) -> PPoint:
    return PPoint._raw(K.apply_point(t.m, p.coords))


def compose(t1: Projectivity, t2: Projectivity) -> Projectivity:
    """The map ``p -> t2(t1(p))``."""
    return Projectivity._raw(K.mat_mul(t2.m, t1.m))


def invert(t: Projectivity) -> Projectivity:
    return Projectivity._raw(K.mat_adj(t.m))


def proj_equal(t1: Projectivity, t2: Projectivity) -> bool:
    return t1.m == t2.m


def _frame_matrix(pts):
    """Matrix sending e1, e2, e3, (1,1,1) to the four given points.

    Returns None when the points are not in general position.
    """
    p1, p2, p3, p4 = pts
    d = K.det3(p1, p2, p3)
    if d == 0:
        return None
    # Cramer: p4 = l1*p1 + l2*p2 + l3*p3, scaled by d to stay integral
    l1 = K.det3(p4, p2, p3)
    l2 = K.det3(p1, p4, p3)
    l3 = K.det3(p1, p2, p4)
    if l1 == 0 or l2 == 0 or l3 == 0:
        return None
    return (
        l1 * p1[0], l2 * p2[0], l3 * p3[0],
        l1 * p1[1], l2 * p2[1], l3 * p3[1],
        l1 * p1[2], l2 * p2[2], l3 * p3[2],
    )


def _general_position(pts) -> bool:
    return all(K.det3(a, b, c) != 0 for a, b, c in combinations(pts, 3))


def fit_projectivity(
    pairs: Sequence[tuple[PPoint, PPoint]],
    validation: Sequence[tuple[PPoint, PPoint]] = (),
) -> Projectivity:
    """Solve for the projectivity taking each source point to its target.

    The first four sources (in input order) with no three collinear fix the
    map by frame transport; every other pair, and every validation pair, must
    then be satisfied exactly.

    Raises:
        GeneralPositionError: no four sources are in general position.
        InconsistentError: the targets admit no such projectivity.
    """
    pairs = list(pairs)
    if len(pairs) < 4:
        raise GeneralPositionError()
    src = [p.coords for p, _ in pairs]
    for idx in combinations(range(len(pairs)), 4):
        frame = [src[i] for i in idx]
        if _general_position(frame):
            break
    else:
        raise GeneralPositionError()
    a = _frame_matrix(frame)
    b = _frame_matrix([pairs[i][1].coords for i in idx])
    if b is None:
        raise InconsistentError()
    t = Projectivity._raw(K.mat_mul(b, K.mat_adj(a)))
    for p, q in list(pairs) + list(validation):
        if K.apply_point(t.m, p.coords) != q.coords:
            raise InconsistentError()
    return t
