# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels; same API and results as ``_pykernels``.

Entries whose magnitude stays below 2**31 go through C ``long long``
arithmetic (products of two such values cannot overflow); anything larger is
delegated to the arbitrary-precision Python implementation.
"""

from cpython.long cimport PyLong_AsLongLongAndOverflow

from moulton import _pykernels as _py

from moulton._pykernels import (  # noqa: F401  (matrix ops are not hot)
    ZERO,
    canon_matrix,
    mat_adj,
    mat_det,
    mat_mul,
    mat_vec,
)

cdef enum:
    LIM = 2147483647


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline bint _ld(object v, long long *out) noexcept:
    cdef int overflow = 0
    cdef long long r
    if type(v) is not int:
        return False
    r = PyLong_AsLongLongAndOverflow(v, &overflow)
    if overflow or r > LIM or r < -LIM:
        return False
    out[0] = r
    return True


cdef inline bint _ld3(tuple t, long long *o) noexcept:
    return _ld(t[0], o) and _ld(t[1], o + 1) and _ld(t[2], o + 2)


cdef inline bint _fits(long long *o) noexcept nogil:
    return (-LIM <= o[0] <= LIM) and (-LIM <= o[1] <= LIM) and (-LIM <= o[2] <= LIM)


cdef inline void _cross(long long *u, long long *v, long long *r) noexcept nogil:
    r[0] = u[1] * v[2] - u[2] * v[1]
    r[1] = u[2] * v[0] - u[0] * v[2]
    r[2] = u[0] * v[1] - u[1] * v[0]


cdef tuple _canon_point_c(long long x, long long y, long long z):
    cdef long long g = _gcd(_gcd(x, y), z)
    if g == 0:
        return ZERO
    if z < 0 or (z == 0 and (x < 0 or (x == 0 and y < 0))):
        g = -g
    return (x // g, y // g, z // g)


cdef tuple _canon_line_c(long long a, long long b, long long c):
    cdef long long g = _gcd(_gcd(a, b), c)
    if g == 0:
        return ZERO
    if a < 0 or (a == 0 and (b < 0 or (b == 0 and c < 0))):
        g = -g
    return (a // g, b // g, c // g)


def canon_point(x, y, z):
    cdef long long o[3]
    if _ld(x, o) and _ld(y, o + 1) and _ld(z, o + 2):
        return _canon_point_c(o[0], o[1], o[2])
    return _py.canon_point(x, y, z)


def canon_line(a, b, c):
    cdef long long o[3]
    if _ld(a, o) and _ld(b, o + 1) and _ld(c, o + 2):
        return _canon_line_c(o[0], o[1], o[2])
    return _py.canon_line(a, b, c)


def cross(tuple u, tuple v):
    cdef long long a[3]
    cdef long long b[3]
    cdef long long r[3]
    if _ld3(u, a) and _ld3(v, b):
        _cross(a, b, r)
        return (r[0], r[1], r[2])
    return _py.cross(u, v)


def dot(tuple u, tuple v):
    cdef long long a[3]
    cdef long long b[3]
    if _ld3(u, a) and _ld3(v, b):
        # three products below 2**62 each: sum it in Python to stay exact
        return (a[0] * b[0] + a[1] * b[1]) + <object>(a[2] * b[2])
    return _py.dot(u, v)


def det3(tuple u, tuple v, tuple w):
    return dot(u, cross(v, w))


def join(tuple p, tuple q):
    cdef long long a[3]
    cdef long long b[3]
    cdef long long r[3]
    if _ld3(p, a) and _ld3(q, b):
        _cross(a, b, r)
        if _fits(r):
            return _canon_line_c(r[0], r[1], r[2])
        return _py.canon_line(r[0], r[1], r[2])
    return _py.join(p, q)


def meet(tuple l, tuple m):
    cdef long long a[3]
    cdef long long b[3]
    cdef long long r[3]
    if _ld3(l, a) and _ld3(m, b):
        _cross(a, b, r)
        if _fits(r):
            return _canon_point_c(r[0], r[1], r[2])
        return _py.canon_point(r[0], r[1], r[2])
    return _py.meet(l, m)


def m_incident(kn, kd, tuple p, tuple l):
    cdef long long P[3]
    cdef long long L[3]
    cdef long long skn, skd
    if not (_ld(kn, &skn) and _ld(kd, &skd) and _ld3(p, P) and _ld3(l, L)):
        return _py.m_incident(kn, kd, p, l)
    cdef object ax, by
    if P[2] != 0 and ((P[0] < 0) != (P[2] < 0)) and P[0] != 0 and ((L[0] > 0) == (L[1] > 0)) and L[0] != 0 and L[1] != 0:
        # left branch of a kinked line: kn*a*x + kd*(b*y + c*z) == 0
        ax = <object>skn * <object>(L[0] * P[0])
        by = <object>(L[1] * P[1]) + <object>(L[2] * P[2])
        return ax + <object>skd * by == 0
    return <object>(L[0] * P[0]) + <object>(L[1] * P[1]) + <object>(L[2] * P[2]) == 0


def m_join(kn, kd, tuple p, tuple q):
    cdef long long P[3]
    cdef long long Q[3]
    cdef long long r[3]
    cdef long long skn, skd
    if not (_ld(kn, &skn) and _ld(kd, &skd) and _ld3(p, P) and _ld3(q, Q)):
        return _py.m_join(kn, kd, p, q)
    _cross(P, Q, r)
    if r[0] != 0 and r[1] != 0 and ((r[0] > 0) == (r[1] > 0)):
        if P[2] != 0 and P[0] != 0 and ((P[0] < 0) != (P[2] < 0)):
            P[0] = skn * P[0]
            P[1] = skd * P[1]
            P[2] = skd * P[2]
        if Q[2] != 0 and Q[0] != 0 and ((Q[0] < 0) != (Q[2] < 0)):
            Q[0] = skn * Q[0]
            Q[1] = skd * Q[1]
            Q[2] = skd * Q[2]
        if not (_fits(P) and _fits(Q)):
            return _py.m_join(kn, kd, p, q)
        _cross(P, Q, r)
    if _fits(r):
        return _canon_line_c(r[0], r[1], r[2])
    return _py.canon_line(r[0], r[1], r[2])


def m_meet(kn, kd, tuple l, tuple m):
    cdef long long L[3]
    cdef long long M[3]
    cdef long long r[3]
    cdef long long skn, skd
    cdef bint changed = False
    if not (_ld(kn, &skn) and _ld(kd, &skd) and _ld3(l, L) and _ld3(m, M)):
        return _py.m_meet(kn, kd, l, m)
    _cross(L, M, r)
    if r[2] != 0 and r[0] != 0 and ((r[0] < 0) != (r[2] < 0)):
        if L[0] != 0 and L[1] != 0 and ((L[0] > 0) == (L[1] > 0)):
            L[0] = skn * L[0]
            L[1] = skd * L[1]
            L[2] = skd * L[2]
            changed = True
        if M[0] != 0 and M[1] != 0 and ((M[0] > 0) == (M[1] > 0)):
            M[0] = skn * M[0]
            M[1] = skd * M[1]
            M[2] = skd * M[2]
            changed = True
        if changed:
            if not (_fits(L) and _fits(M)):
                return _py.m_meet(kn, kd, l, m)
            _cross(L, M, r)
    if _fits(r):
        return _canon_point_c(r[0], r[1], r[2])
    return _py.canon_point(r[0], r[1], r[2])


def apply_point(tuple m, tuple v):
    x, y, z = mat_vec(m, v)
    return canon_point(x, y, z)
