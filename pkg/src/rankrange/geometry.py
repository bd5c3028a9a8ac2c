"""Small planar geometry helpers.

Points are complex numbers (x + iy). Everything here is exact-formula
numpy code with no state; the convex machinery only ever sees a handful
of points so clarity beats asymptotics.
"""

from __future__ import annotations

import numpy as np


def cross(u: complex, v: complex) -> float:
    """2D cross product u x v (positive if v is ccw of u)."""
    return u.real * v.imag - u.imag * v.real


def line_margin(a: complex, b: complex, z) -> np.ndarray:
    """Signed distance of z from the line through a->b; positive on the left."""
    e = b - a
    n = abs(e)
    z = np.asarray(z, dtype=complex)
    return (e.real * (z - a).imag - e.imag * (z - a).real) / n


def convex_hull(points):
    """Monotone-chain hull of complex points, ccw, no duplicate endpoints.

    Collinear points on the hull boundary are dropped. Returns a list; a
    degenerate input (all points within 1e-12 of a point or a line) gives
    a list of length 1 or 2.
    """
    pts = sorted(set((round(p.real, 15), round(p.imag, 15)) for p in points))
    pts = [complex(x, y) for x, y in pts]
    if len(pts) == 1:
        return pts
    if len(pts) == 2:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-1] - out[-2], p - out[-2]) <= 1e-15:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(list(reversed(pts)))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:  # collinear input
        return [pts[0], pts[-1]]
    return hull


def point_segment_distance(z: complex, a: complex, b: complex) -> float:
    e = b - a
    L2 = abs(e) ** 2
    if L2 == 0.0:
        return abs(z - a)
    t = ((z - a).real * e.real + (z - a).imag * e.imag) / L2
    t = min(1.0, max(0.0, t))
    return abs(z - (a + t * e))


def hull_signed_distance(z: complex, points) -> float:
    """Signed distance of z to conv(points): positive depth when inside,
    negative distance when outside. Handles degenerate hulls."""
    hull = convex_hull(points)
    if len(hull) == 1:
        return -abs(z - hull[0])
    if len(hull) == 2:
        return -point_segment_distance(z, hull[0], hull[1])
    margins = [line_margin(hull[i], hull[(i + 1) % len(hull)], z)
               for i in range(len(hull))]
    m = min(margins)
    if m >= 0.0:
        return float(m)
    # outside: true distance to the polygon
    return -min(point_segment_distance(z, hull[i], hull[(i + 1) % len(hull)])
                for i in range(len(hull)))


def clip_polygon(poly, a: complex, b: complex, sign: float):
    """Sutherland-Hodgman clip of a polygon (list of complex, ccw) against
    the half-plane sign * cross(b-a, z-a) >= 0."""
    if not poly:
        return []
    out = []
    n = len(poly)
    e = b - a
    def val(p):
        return sign * (e.real * (p - a).imag - e.imag * (p - a).real)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        vp, vq = val(p), val(q)
        if vp >= 0.0:
            out.append(p)
        if (vp > 0.0 and vq < 0.0) or (vp < 0.0 and vq > 0.0):
            t = vp / (vp - vq)
            out.append(p + t * (q - p))
    # drop consecutive duplicates
    dedup = []
    for p in out:
        if not dedup or abs(p - dedup[-1]) > 1e-14:
            dedup.append(p)
    if len(dedup) >= 2 and abs(dedup[0] - dedup[-1]) <= 1e-14:
        dedup.pop()
    return dedup


def polygon_area(poly) -> float:
    if len(poly) < 3:
        return 0.0
    s = 0.0
    for i in range(len(poly)):
        s += cross(poly[i], poly[(i + 1) % len(poly)])
    return 0.5 * s


def point_in_triangle(z: complex, a: complex, b: complex, c: complex,
                      tol: float = 0.0) -> bool:
    """Closed-triangle membership with slack tol (degenerate triangles fall
    back to segment/point distance)."""
    area = abs(cross(b - a, c - a))
    if area < 1e-14:
        d = min(point_segment_distance(z, a, b),
                point_segment_distance(z, b, c),
                point_segment_distance(z, a, c))
        return d <= tol
    m1 = line_margin(a, b, z)
    m2 = line_margin(b, c, z)
    m3 = line_margin(c, a, z)
    lo, hi = min(m1, m2, m3), max(m1, m2, m3)
    return lo >= -tol or hi <= tol
