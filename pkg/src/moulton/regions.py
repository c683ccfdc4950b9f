"""Exactly decidable regions of M_k.

A region is a boolean expression over a fixed set of open atoms.  Membership
is evaluated on canonical triples, so it needs no division.  Each atom also
reports the coordinate values where its truth can change (``cuts``); along a
line, membership is constant between consecutive cut parameters, which is
what makes segment containment decidable.
"""

from __future__ import annotations

from fractions import Fraction
from .errors import ParseError
from .model import Graph, MoultonLine, Vertical, as_k
from .projective import to_fraction

__all__ = [
    "Region",
    "X_POS",
    "X_NEG",
    "Y_POS",
    "Y_NEG",
    "IS_AFFINE",
    "IS_IDEAL",
    "NOT_ON_RAY",
    "EVERYTHING",
    "IDEAL_SLOPE_IN_POS",
    "IDEAL_SLOPE_IN_NEG",
    "Box",
    "IdealSlopeIn",
    "And",
    "Or",
    "Not",
    "region_contains",
    "line_cuts",
    "region_from_json",
]


def _lt(a: Fraction, x: int, z: int) -> bool:
    """a < x/z, for z > 0."""
    return a.numerator * z < x * a.denominator


def _gt(a: Fraction, x: int, z: int) -> bool:
    return a.numerator * z > x * a.denominator


class Region:
    """Base class; combine with ``&``, ``|`` and ``~``."""

    def contains_t(self, t) -> bool:
        raise NotImplementedError

    def __contains__(self, p) -> bool:
        if isinstance(p, tuple):
            return self.contains_t(p)
        return self.contains_t(p.t if hasattr(p, "t") else p.coords)

    def __and__(self, other):
        return And(self, other)

    def __or__(self, other):
        return Or(self, other)

    def __invert__(self):
        return Not(self)

    def cuts(self):
        """(x values, y values, ideal slopes) where membership may flip."""
        return set(), set(), set()

    # sampling hints; None means unbounded
    def window(self):
        return (None, None, None, None)

    def slope_window(self):
        return (None, None)

    affine_possible = True
    ideal_possible = True

    def __eq__(self, other):
        return type(self) is type(other) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(repr(self.to_json()))

    def __repr__(self):
        return f"Region({self.to_json()!r})"


class _Atom(Region):
    name = ""

    def to_json(self):
        return self.name


class _XPos(_Atom):
    name = "X_POS"
    ideal_possible = False

    def contains_t(self, t):
        return t[2] != 0 and t[0] > 0

    def cuts(self):
        return {Fraction(0)}, set(), set()

    def window(self):
        return (Fraction(0), None, None, None)


class _XNeg(_Atom):
    name = "X_NEG"
    ideal_possible = False

    def contains_t(self, t):
        return t[2] != 0 and t[0] < 0

    def cuts(self):
        return {Fraction(0)}, set(), set()

    def window(self):
        return (None, Fraction(0), None, None)


class _YPos(_Atom):
    name = "Y_POS"
    ideal_possible = False

    def contains_t(self, t):
        return t[2] != 0 and t[1] > 0

    def cuts(self):
        return set(), {Fraction(0)}, set()

    def window(self):
        return (None, None, Fraction(0), None)


class _YNeg(_Atom):
    name = "Y_NEG"
    ideal_possible = False

    def contains_t(self, t):
        return t[2] != 0 and t[1] < 0

    def cuts(self):
        return set(), {Fraction(0)}, set()

    def window(self):
        return (None, None, None, Fraction(0))


class _IsAffine(_Atom):
    name = "IS_AFFINE"
    ideal_possible = False

    def contains_t(self, t):
        return t[2] != 0


class _IsIdeal(_Atom):
    name = "IS_IDEAL"
    affine_possible = False

    def contains_t(self, t):
        return t[2] == 0


class _NotOnRay(_Atom):
    """Everything except the closed ray {(x, 0): x >= 0}."""

    name = "NOT_ON_RAY"

    def contains_t(self, t):
        return not (t[2] != 0 and t[1] == 0 and t[0] >= 0)

    def cuts(self):
        return {Fraction(0)}, {Fraction(0)}, set()


X_POS = _XPos()
X_NEG = _XNeg()
Y_POS = _YPos()
Y_NEG = _YNeg()
IS_AFFINE = _IsAffine()
IS_IDEAL = _IsIdeal()
NOT_ON_RAY = _NotOnRay()


def _bound(v):
    if v is None:
        return None
    if isinstance(v, str) and v.strip() in ("inf", "+inf", "-inf"):
        return None
    return to_fraction(v)


def _fmt_bound(v, sign):
    return sign + "inf" if v is None else f"{v.numerator}/{v.denominator}"


class Box(Region):
    """Open box ``x0 < x < x1, y0 < y < y1``; a ``None`` bound is infinite."""

    ideal_possible = False

    def __init__(self, x0, x1, y0, y1):
        self.x0, self.x1, self.y0, self.y1 = map(_bound, (x0, x1, y0, y1))

    def contains_t(self, t):
        x, y, z = t
        if z == 0:
            return False
        return (
            (self.x0 is None or _lt(self.x0, x, z))
            and (self.x1 is None or _gt(self.x1, x, z))
            and (self.y0 is None or _lt(self.y0, y, z))
            and (self.y1 is None or _gt(self.y1, y, z))
        )

    def cuts(self):
        xs = {v for v in (self.x0, self.x1) if v is not None}
        ys = {v for v in (self.y0, self.y1) if v is not None}
        return xs, ys, set()

    def window(self):
        return (self.x0, self.x1, self.y0, self.y1)

    def to_json(self):
        return {
            "BOX": [
                _fmt_bound(self.x0, "-"),
                _fmt_bound(self.x1, ""),
                _fmt_bound(self.y0, "-"),
                _fmt_bound(self.y1, ""),
            ]
        }


class IdealSlopeIn(Region):
    """Ideal points ``Ideal(s)`` with ``lo < s < hi``; never the vertical one."""

    affine_possible = False

    def __init__(self, lo, hi):
        self.lo, self.hi = _bound(lo), _bound(hi)

    def contains_t(self, t):
        d, n, z = t
        if z != 0 or d == 0:
            return False
        # canonical ideal points have d > 0 and slope n/d
        return (self.lo is None or _lt(self.lo, n, d)) and (
            self.hi is None or _gt(self.hi, n, d)
        )

    def cuts(self):
        return set(), set(), {v for v in (self.lo, self.hi) if v is not None}

    def slope_window(self):
        return (self.lo, self.hi)

    def to_json(self):
        return {"IDEAL_SLOPE_IN": [_fmt_bound(self.lo, "-"), _fmt_bound(self.hi, "")]}


def _merge_cuts(children):
    xs, ys, ss = set(), set(), set()
    for c in children:
        a, b, s = c.cuts()
        xs |= a
        ys |= b
        ss |= s
    return xs, ys, ss


def _tighter(a, b, pick):
    if a is None:
        return b
    if b is None:
        return a
    return pick(a, b)


def _looser(a, b, pick):
    if a is None or b is None:
        return None
    return pick(a, b)


class And(Region):
    def __init__(self, *children):
        self.children = tuple(children)
        self.affine_possible = all(c.affine_possible for c in self.children)
        self.ideal_possible = all(c.ideal_possible for c in self.children)

    def contains_t(self, t):
        return all(c.contains_t(t) for c in self.children)

    def cuts(self):
        return _merge_cuts(self.children)

    def window(self):
        w = [None, None, None, None]
        for c in self.children:
            cw = c.window()
            for i, pick in ((0, max), (1, min), (2, max), (3, min)):
                w[i] = _tighter(w[i], cw[i], pick)
        return tuple(w)

    def slope_window(self):
        lo = hi = None
        for c in self.children:
            clo, chi = c.slope_window()
            lo, hi = _tighter(lo, clo, max), _tighter(hi, chi, min)
        return lo, hi

    def to_json(self):
        return {"and": [c.to_json() for c in self.children]}


class Or(Region):
    def __init__(self, *children):
        self.children = tuple(children)
        self.affine_possible = any(c.affine_possible for c in self.children)
        self.ideal_possible = any(c.ideal_possible for c in self.children)

    def contains_t(self, t):
        return any(c.contains_t(t) for c in self.children)

    def cuts(self):
        return _merge_cuts(self.children)

    def window(self):
        parts = [c.window() for c in self.children if c.affine_possible]
        if not parts:
            return (None, None, None, None)
        w = list(parts[0])
        for cw in parts[1:]:
            for i, pick in ((0, min), (1, max), (2, min), (3, max)):
                w[i] = _looser(w[i], cw[i], pick)
        return tuple(w)

    def slope_window(self):
        parts = [c.slope_window() for c in self.children if c.ideal_possible]
        if not parts:
            return (None, None)
        lo, hi = parts[0]
        for clo, chi in parts[1:]:
            lo, hi = _looser(lo, clo, min), _looser(hi, chi, max)
        return lo, hi

    def to_json(self):
        return {"or": [c.to_json() for c in self.children]}


class Not(Region):
    def __init__(self, child):
        self.child = child

    def contains_t(self, t):
        return not self.child.contains_t(t)

    def cuts(self):
        return self.child.cuts()

    def to_json(self):
        return {"not": self.child.to_json()}


EVERYTHING = Or(IS_AFFINE, IS_IDEAL)
IDEAL_SLOPE_IN_POS = IdealSlopeIn(0, None)
IDEAL_SLOPE_IN_NEG = IdealSlopeIn(None, 0)


def region_contains(r: Region, p) -> bool:
    return p in r


def line_cuts(k, line: MoultonLine, region: Region) -> list[Fraction]:
    """Sorted line parameters at which membership in ``region`` may change.

    Parameters follow :func:`moulton.model.line_point`.  On a Graph line the
    kink abscissa 0 is always included.
    """
    xs, ys, ss = region.cuts()
    out: set[Fraction] = set()
    if isinstance(line, Graph):
        s, b = line.s, line.b
        out.add(Fraction(0))
        out |= xs
        left = as_k(k) * s if s < 0 else s
        for yc in ys:
            if s != 0:
                x = (yc - b) / s
                if x >= 0:
                    out.add(x)
            if left != 0:
                x = (yc - b) / left
                if x <= 0:
                    out.add(x)
    elif isinstance(line, Vertical):
        out |= ys
    else:
        out |= ss
    return sorted(out)


_ATOMS = {a.name: a for a in (X_POS, X_NEG, Y_POS, Y_NEG, IS_AFFINE, IS_IDEAL, NOT_ON_RAY)}


def region_from_json(obj) -> Region:
    if isinstance(obj, str):
        try:
            return _ATOMS[obj]
        except KeyError:
            raise ParseError(f"unknown region atom {obj!r}") from None
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ParseError(f"bad region expression {obj!r}")
    (key, val), = obj.items()
    if key == "and":
        return And(*map(region_from_json, val))
    if key == "or":
        return Or(*map(region_from_json, val))
    if key == "not":
        return Not(region_from_json(val))
    if key == "BOX":
        if len(val) != 4:
            raise ParseError("BOX needs four bounds")
        return Box(*val)
    if key == "IDEAL_SLOPE_IN":
        if len(val) != 2:
            raise ParseError("IDEAL_SLOPE_IN needs two bounds")
        return IdealSlopeIn(*val)
    raise ParseError(f"unknown region operator {key!r}")
