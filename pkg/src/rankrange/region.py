"""Chord-constraint representation of the rank-k admissible region.

For a unitary spectrum sorted counterclockwise, the region is the
intersection of N disk segments: for each i the segment bounded by the
chord from eigenvalue i to eigenvalue i+k (cyclic) and the long
counterclockwise arc back. A degenerate chord (coincident endpoints)
carries either no constraint (the k-step angular span is 0, i.e. k+1
coincident eigenvalues) or pins the region to a single point (the span is
a full turn, i.e. the complementary N-k+1 eigenvalues coincide). The
brute-force oracle below implements the defining intersection of convex
hulls of (N-k+1)-point sub-multisets and is used to cross-validate the
chord semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .errors import EmptyRegion, InvalidRank, TooLarge
from .geometry import clip_polygon, convex_hull, hull_signed_distance, \
    line_margin, polygon_area
from .spectra import TWO_PI, EigenSystem

DEGENERATE_CHORD_TOL = 1e-9
MEMBERSHIP_TOL = 1e-9

INSIDE = "inside"
BOUNDARY = "boundary"
OUTSIDE = "outside"


@dataclass(frozen=True)
class ChordConstraint:
    """Half-plane (or point) constraint cut by one chord.

    ``span`` is the ccw angle from endpoint_a to endpoint_b (sum of k
    consecutive gaps, in [0, 2pi]). ``inward_sign`` orients the half-plane
    so that the midpoint of the ccw arc from endpoint_b back to endpoint_a
    has positive margin.
    """
    start_index: int
    end_index: int
    endpoint_a: complex
    endpoint_b: complex
    inward_sign: int
    degenerate: bool
    span: float

    def margin(self, z):
        """Signed inward distance from the chord line (vectorized over z)."""
        return self.inward_sign * line_margin(self.endpoint_a,
                                              self.endpoint_b, z)


@dataclass(frozen=True)
class OmegaRegion:
    """The full constraint set: N chords plus any point constraints."""
    k: int
    dim: int
    constraints: tuple
    point_constraints: tuple
    eigenvalues: np.ndarray

    def halfplanes(self):
        return [c for c in self.constraints
                if not c.degenerate]


def build_region(es: EigenSystem, k: int) -> OmegaRegion:
    """One constraint per start index i = 1..N with end index i+k cyclic."""
    n = es.dim
    if k < 1 or k > n:
        raise InvalidRank(f"rank k={k} outside 1..{n}")
    constraints = []
    points = []
    for i in range(1, n + 1):
        t0 = es.phase_extended(i)
        t1 = es.phase_extended(i + k)
        a = complex(np.exp(1j * t0))
        b = complex(np.exp(1j * t1))
        span = t1 - t0
        if abs(b - a) <= DEGENERATE_CHORD_TOL:
            degenerate = True
            sign = 1 if span > np.pi else -1
            if span > np.pi:
                # complementary eigenvalues coincide: region pinned to a
                points.append(a)
            constraints.append(ChordConstraint(
                start_index=i, end_index=(i + k - 1) % n + 1,
                endpoint_a=a, endpoint_b=b, inward_sign=sign,
                degenerate=True, span=span))
            continue
        mid = complex(np.exp(1j * (t0 + t1 + TWO_PI) / 2.0))
        sign = 1 if line_margin(a, b, mid) > 0 else -1
        constraints.append(ChordConstraint(
            start_index=i, end_index=(i + k - 1) % n + 1,
            endpoint_a=a, endpoint_b=b, inward_sign=sign,
            degenerate=False, span=span))
    unique_points = []
    for p in points:
        if all(abs(p - q) > 1e-12 for q in unique_points):
            unique_points.append(p)
    return OmegaRegion(k=k, dim=n, constraints=tuple(constraints),
                       point_constraints=tuple(unique_points),
                       eigenvalues=es.eigenvalues())


def constraint_margins(region: OmegaRegion, z):
    """Stacked inward margins of all half-plane constraints at z.

    Returns an array of shape (#halfplanes,) + shape(z); empty first axis
    when every constraint is degenerate.
    """
    hp = region.halfplanes()
    if not hp:
        return np.empty((0,) + np.shape(z))
    return np.stack([c.margin(z) for c in hp])


def region_margin(region: OmegaRegion, z):
    """Overall signed margin: min of chord margins, the disk margin and
    (negated) distance to any point constraint. Positive only for points
    with room inside every constraint."""
    z = np.asarray(z, dtype=complex)
    m = 1.0 - np.abs(z)
    hp = constraint_margins(region, z)
    if hp.shape[0]:
        m = np.minimum(m, hp.min(axis=0))
    for p in region.point_constraints:
        m = np.minimum(m, -np.abs(z - p))
    return m


def contains(region: OmegaRegion, z: complex, tol: float = MEMBERSHIP_TOL) -> str:
    """Membership verdict: inside | boundary | outside.

    inside: |z| <= 1 + tol, every half-plane satisfied with margin > tol,
    every point constraint matched within tol. boundary: within tol of an
    active constraint while violating none by more than tol.
    """
    hp = constraint_margins(region, z)
    hp_min = float(hp.min()) if hp.shape[0] else np.inf
    disk = 1.0 - abs(z)
    pt_miss = max((abs(z - p) for p in region.point_constraints), default=None)

    points_ok = pt_miss is None or pt_miss <= tol
    weak_ok = hp_min >= -tol and disk >= -tol and points_ok
    if weak_ok and hp_min > tol:
        return INSIDE
    if weak_ok:
        return BOUNDARY
    return OUTSIDE


class BruteForceOracle:
    """Membership via the defining intersection of sub-multiset hulls.

    Enumerates every (N-k+1)-point subset of the (indexed) eigenvalues and
    pre-extracts each subset's convex hull; a query point is inside iff it
    is inside every hull.
    """

    #: enumeration guard
    MAX_DIM = 16

    def __init__(self, es: EigenSystem, k: int):
        n = es.dim
        if k < 1 or k > n:
            raise InvalidRank(f"rank k={k} outside 1..{n}")
        if n > self.MAX_DIM:
            raise TooLarge(
                f"N={n} exceeds brute-force guard {self.MAX_DIM}")
        count = comb(n, n - k + 1)
        if count > 200_000:
            raise TooLarge(f"{count} subsets exceed enumeration budget")
        pts = es.eigenvalues()
        self.hulls = [tuple(pts[list(sub)])
                      for sub in combinations(range(n), n - k + 1)]

    def margin(self, z: complex) -> float:
        return min(hull_signed_distance(z, h) for h in self.hulls)

    def verdict(self, z: complex, tol: float = MEMBERSHIP_TOL) -> str:
        m = self.margin(z)
        if m > tol:
            return INSIDE
        if m >= -tol:
            return BOUNDARY
        return OUTSIDE


def brute_force_contains(es: EigenSystem, k: int, z: complex,
                         tol: float = MEMBERSHIP_TOL) -> str:
    """One-shot oracle query; build a BruteForceOracle for batches."""
    return BruteForceOracle(es, k).verdict(z, tol)


def _grid_best(region: OmegaRegion, xs, ys):
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    Z = X + 1j * Y
    M = region_margin(region, Z)
    idx = np.unravel_index(np.argmax(M), M.shape)
    return complex(Z[idx]), float(M[idx]), (xs[1] - xs[0] if len(xs) > 1 else 1.0)


def interior_point(region: OmegaRegion, resolution: int = 64):
    """Grid point of [-1,1]^2 maximizing the minimum constraint margin,
    sharpened by two rounds of local grid refinement. Returns None when no
    grid point achieves positive margin (e.g. point or empty regions)."""
    if resolution < 8:
        raise InvalidRank("resolution must be at least 8")
    xs = np.linspace(-1.0, 1.0, resolution)
    best, margin, cell = _grid_best(region, xs, xs)
    for _ in range(2):
        xs = np.linspace(best.real - cell, best.real + cell, resolution)
        ys = np.linspace(best.imag - cell, best.imag + cell, resolution)
        cand, m, cell = _grid_best(region, xs, ys)
        if m > margin:
            best, margin = cand, m
    if margin <= 0.0:
        return None
    return best


def boundary_polygon(region: OmegaRegion):
    """Exact boundary polygon: the eigenvalue hull clipped by every chord.

    Valid because the region is always contained in the hull of the
    spectrum, so the disk constraint is implied. Returns a ccw list of
    vertices (possibly a segment or single point for degenerate spectra).
    """
    if region.point_constraints:
        p = region.point_constraints[0]
        return [p]
    poly = convex_hull(region.eigenvalues)
    if len(poly) == 2:
        a, b = poly
        lo, hi = 0.0, 1.0
        for c in region.halfplanes():
            va = c.margin(a)
            vb = c.margin(b)
            if abs(vb - va) < 1e-15:
                if va < 0:
                    return []
                continue
            t = va / (va - vb)
            if vb < va:
                hi = min(hi, t)
            else:
                lo = max(lo, t)
        if lo > hi + 1e-12:
            return []
        return [a + lo * (b - a), a + hi * (b - a)]
    if len(poly) < 2:
        return poly
    if polygon_area(poly) < 0:
        poly = poly[::-1]
    for c in region.halfplanes():
        poly = clip_polygon(poly, c.endpoint_a, c.endpoint_b,
                            float(c.inward_sign))
        if not poly:
            return []
    return poly


def boundary_samples(region: OmegaRegion, count: int = 64):
    """Points along the region boundary, counterclockwise, vertices included;
    each edge is sampled at uniform length. Raises EmptyRegion when there is
    nothing to sample."""
    if count < 3:
        raise InvalidRank("count must be at least 3")
    poly = boundary_polygon(region)
    if not poly:
        raise EmptyRegion("region is empty at sampling resolution")
    if len(poly) == 1:
        return [poly[0]] * count
    if len(poly) == 2:
        a, b = poly
        ts = np.linspace(0.0, 1.0, count)
        return [a + t * (b - a) for t in ts]
    # rotate to a deterministic start vertex
    start = min(range(len(poly)), key=lambda i: (poly[i].real, poly[i].imag))
    poly = poly[start:] + poly[:start]
    edges = [(poly[i], poly[(i + 1) % len(poly)]) for i in range(len(poly))]
    lengths = np.array([abs(b - a) for a, b in edges])
    total = lengths.sum()
    if total == 0.0:
        return [poly[0]] * count
    # one sample at each vertex, the rest distributed by edge length
    counts = np.maximum(1, np.floor(count * lengths / total).astype(int))
    while counts.sum() > count:
        counts[np.argmax(counts)] -= 1
    while counts.sum() < count:
        counts[np.argmax(lengths / counts)] += 1
    out = []
    for (a, b), m in zip(edges, counts):
        ts = np.arange(m) / m
        out.extend(a + t * (b - a) for t in ts)
    return out
