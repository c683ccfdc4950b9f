"""Pure-Python integer kernels on homogeneous triples.

Every point and line of the real projective plane and of the Moulton planes is
carried as a tuple of three Python ints.  Canonical forms:

* points: divided by the gcd; a point with nonzero last coordinate has that
  coordinate positive (so the sign of ``x`` is the sign of the first entry),
  otherwise the first nonzero entry is positive;
* lines and matrices: divided by the gcd, first nonzero entry positive.

The Moulton plane with parameter ``k = kn/kd`` is handled by the shear
``(x, y) -> (k x, y)`` of the left half plane: the left branch of a kinked
line is mapped onto the right branch, so all Moulton constructions reduce to
cross and dot products.  A Moulton line is stored as the classical line that
carries its right branch.

This module is the fallback for the compiled ``_ckernels`` extension and must
stay behaviourally identical to it.
"""

from math import gcd

ZERO = (0, 0, 0)


def canon_point(x, y, z):
    g = gcd(x, y, z)
    if g == 0:
        return ZERO
    if z < 0 or (z == 0 and (x < 0 or (x == 0 and y < 0))):
        g = -g
    return (x // g, y // g, z // g)


def canon_line(a, b, c):
    g = gcd(a, b, c)
    if g == 0:
        return ZERO
    if a < 0 or (a == 0 and (b < 0 or (b == 0 and c < 0))):
        g = -g
    return (a // g, b // g, c // g)


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(u, v, w):
    return dot(u, cross(v, w))


def join(p, q):
    a, b, c = cross(p, q)
    return canon_line(a, b, c)


def meet(l, m):
    x, y, z = cross(l, m)
    return canon_point(x, y, z)


# -- Moulton plane -----------------------------------------------------------


def m_incident(kn, kd, p, l):
    x, y, z = p
    a, b, c = l
    if z != 0 and x * z < 0 and a * b > 0:
        return kn * a * x + kd * (b * y + c * z) == 0
    return a * x + b * y + c * z == 0


def m_join(kn, kd, p, q):
    a, b, c = cross(p, q)
    if a * b > 0:
        # negative slope: shear left-half affine points onto the right branch
        if p[2] != 0 and p[0] * p[2] < 0:
            p = (kn * p[0], kd * p[1], kd * p[2])
        if q[2] != 0 and q[0] * q[2] < 0:
            q = (kn * q[0], kd * q[1], kd * q[2])
        a, b, c = cross(p, q)
    return canon_line(a, b, c)


def m_meet(kn, kd, l, m):
    x, y, z = cross(l, m)
    if z != 0 and x * z < 0:
        changed = False
        if l[0] * l[1] > 0:
            l = (kn * l[0], kd * l[1], kd * l[2])
            changed = True
        if m[0] * m[1] > 0:
            m = (kn * m[0], kd * m[1], kd * m[2])
            changed = True
        if changed:
            x, y, z = cross(l, m)
    return canon_point(x, y, z)


# -- 3x3 matrices, row-major 9-tuples -----------------------------------------


def canon_matrix(m):
    g = gcd(*m)
    if g == 0:
        return tuple(m)
    for v in m:
        if v != 0:
            if v < 0:
                g = -g
            break
    return tuple(v // g for v in m)


def mat_vec(m, v):
    return (
        m[0] * v[0] + m[1] * v[1] + m[2] * v[2],
        m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
        m[6] * v[0] + m[7] * v[1] + m[8] * v[2],
    )


def apply_point(m, v):
    x, y, z = mat_vec(m, v)
    return canon_point(x, y, z)


def mat_mul(a, b):
    return (
        a[0] * b[0] + a[1] * b[3] + a[2] * b[6],
        a[0] * b[1] + a[1] * b[4] + a[2] * b[7],
        a[0] * b[2] + a[1] * b[5] + a[2] * b[8],
        a[3] * b[0] + a[4] * b[3] + a[5] * b[6],
        a[3] * b[1] + a[4] * b[4] + a[5] * b[7],
        a[3] * b[2] + a[4] * b[5] + a[5] * b[8],
        a[6] * b[0] + a[7] * b[3] + a[8] * b[6],
        a[6] * b[1] + a[7] * b[4] + a[8] * b[7],
        a[6] * b[2] + a[7] * b[5] + a[8] * b[8],
    )


def mat_det(m):
    return (
        m[0] * (m[4] * m[8] - m[5] * m[7])
        - m[1] * (m[3] * m[8] - m[5] * m[6])
        + m[2] * (m[3] * m[7] - m[4] * m[6])
    )


def mat_adj(m):
    return (
        m[4] * m[8] - m[5] * m[7],
        m[2] * m[7] - m[1] * m[8],
        m[1] * m[5] - m[2] * m[4],
        m[5] * m[6] - m[3] * m[8],
        m[0] * m[8] - m[2] * m[6],
        m[2] * m[3] - m[0] * m[5],
        m[3] * m[7] - m[4] * m[6],
        m[1] * m[6] - m[0] * m[7],
        m[0] * m[4] - m[1] * m[3],
    )
