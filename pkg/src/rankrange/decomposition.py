"""Plan selection, vector synthesis and projector assembly.

``plan`` emits the combinatorial template for each supported dimension
family: k disjoint triangles for N = 3k, one shared-vertex pairing for
N = 3k-1, two pairings for N = 3k-2 (k >= 5), and a direct convex
decomposition for k = 1. Weak-vertex probes decide the branch; when the
opening vertex is heavy the whole template is reflected through an
orientation-reversing relabeling and mapped back.

``construct_projector`` turns a plan into an orthonormal frame whose
compression of the input matrix is the scalar target, assembling plain
square-root-of-weight vectors on disjoint triangles and jointly solved
pairs on the 5-index pairing blocks. Planned supports are checked for
feasibility first (the target must lie in the rank-2 region of each
block's own 5 eigenvalues); when a planned block is infeasible for the
given target, a deterministic search re-partitions the indices among
feasible triangles and blocks before anything heavier runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import blocks
from .errors import (GramFailure, LambdaOutsideRegion, NoSolution,
                     ShapeMismatch, UnsupportedDimension)
from .region import BOUNDARY, INSIDE, MEMBERSHIP_TOL, build_region, contains
from .spectra import TWO_PI, EigenSystem, reflect_labels
from .triangles import (BarycentricWeights, TriangleSpec, solve_barycentric,
                        triangle, validate_triangle)

GRAM_GATE = 1e-9
COMPRESSION_GATE = 1e-9
# eigenvalues this close to the target act as exact matches: k of them give
# a projector with compression residual <= sqrt(k) * EIGEN_MATCH, inside
# the verification threshold
EIGEN_MATCH = 1e-9
FEASIBILITY_FLOOR = 1e-9

CASE_THREE_K = "three_k"
CASE_THREE_K_MINUS_1 = "three_k_minus_1"
CASE_THREE_K_MINUS_2_C1 = "three_k_minus_2_case1"
CASE_THREE_K_MINUS_2_C2 = "three_k_minus_2_case2"
CASE_RANK_1 = "rank1"


@dataclass(frozen=True)
class Pairing:
    first: int
    second: int
    shared: int


@dataclass(frozen=True)
class DecompositionPlan:
    dimension_case: str
    k: int
    dim: int
    triangles: tuple
    pairings: tuple
    reflection_pivot: int = None
    branch: str = None
    rank1_support: tuple = None

    def covered(self):
        out = []
        for t in self.triangles:
            out.extend(t.indices)
        return out


@dataclass(frozen=True)
class Projector:
    matrix: np.ndarray
    rank: int
    target: complex
    residuals: dict
    strategy: str
    plan: DecompositionPlan = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return projector_pass(self.residuals)


def projector_thresholds(tol: float = MEMBERSHIP_TOL) -> dict:
    scale = tol / MEMBERSHIP_TOL
    return {"hermiticity": 1e-10 * scale, "idempotency": 1e-9 * scale,
            "trace": 1e-9 * scale, "compression": 1e-8 * scale}


def projector_pass(residuals: dict, tol: float = MEMBERSHIP_TOL) -> bool:
    th = projector_thresholds(tol)
    return all(residuals[key] <= th[key] for key in th)


# ---------------------------------------------------------------------------
# planning


def three_k_patterns(k: int):
    """Index triples of the k disjoint triangles for N = 3k."""
    return [(m, k + m, 2 * k + m) for m in range(1, k + 1)]


def three_k_minus_1_patterns(k: int):
    """Triples for N = 3k-1 in canonical numbering (vertex 1 weak in the
    probe): probe, partner, then the k-2 remainder triangles. The remainder
    third index is 3k-m; the off-by-one variant 3k-m-1 collides with vertex
    2k+1 at m = k-2 and never covers index 3k-1."""
    tris = [(1, k + 1, 2 * k + 1), (1, k, 2 * k)]
    tris += [(k - m, 2 * k - m, 3 * k - m) for m in range(1, k - 1)]
    return tris, 1


def three_k_minus_2_patterns(k: int, case: int):
    """Triples for N = 3k-2 in canonical numbering; ``case`` picks which
    vertex of the second probe is weak (1: index 2k-2, 2: index 3k-3).
    The case-2 remainder runs over (m, k+m, 2k+m) for m = 2..k-4; the
    printed variant (m, k+m, 2k+m-1) collides with vertex 2k+1 at m = 2."""
    tris = [(1, k - 1, 2 * k - 1), (1, k + 1, 2 * k + 1),
            (k - 2, 2 * k - 2, 3 * k - 3)]
    if case == 1:
        tris += [(k, 2 * k - 2, 3 * k - 2), (2, k + 2, 2 * k)]
        tris += [(m, k + m, 2 * k + m - 1) for m in range(3, k - 2)]
        shared2 = 2 * k - 2
    else:
        tris += [(k - 3, 2 * k - 3, 3 * k - 3), (k, 2 * k, 3 * k - 2)]
        tris += [(m, k + m, 2 * k + m) for m in range(2, k - 3)]
        shared2 = 3 * k - 3
    return tris, (1, shared2)


def _tri(pattern, refl, n):
    idx = pattern if refl is None else refl.indices(pattern)
    return triangle(*idx, dim=n)


def _weight(es, t: TriangleSpec, lam, index) -> float:
    return solve_barycentric(es, t, lam).weight_of(index)


def _check_plan(plan: DecompositionPlan):
    n, k = plan.dim, plan.k
    counts = {}
    for j in plan.covered():
        counts[j] = counts.get(j, 0) + 1
    shared = {p.shared for p in plan.pairings}
    for j in range(1, n + 1):
        expected = 2 if j in shared else 1
        if counts.get(j, 0) != expected:
            raise NoSolution(
                f"plan covers index {j} {counts.get(j, 0)} times, "
                f"expected {expected}")
    for t in plan.triangles:
        if not validate_triangle(t, k):
            raise NoSolution(f"planned triangle {t.indices} violates gap rule")
    for p in plan.pairings:
        for pos in (p.first, p.second):
            if p.shared not in plan.triangles[pos].indices:
                raise NoSolution("pairing vertex missing from its triangle")


def plan(es: EigenSystem, k: int, lam: complex) -> DecompositionPlan:
    """Dimension dispatch and weak-vertex branching (pure combinatorics)."""
    n = es.dim
    lam = complex(lam)
    if k < 1:
        raise UnsupportedDimension(f"rank k={k} must be positive")
    if n == 3 * k:
        tris = tuple(triangle(*t, dim=n) for t in three_k_patterns(k))
        out = DecompositionPlan(CASE_THREE_K, k, n, tris, ())
    elif n == 3 * k - 1 and k >= 2:
        out = _plan_three_k_minus_1(es, k, lam)
    elif n == 3 * k - 2 and k >= 5:
        out = _plan_three_k_minus_2(es, k, lam)
    elif k == 1:
        return _plan_rank1(es, lam)
    else:
        raise UnsupportedDimension(
            f"no construction for N={n}, k={k}; supported: N=3k, N=3k-1 "
            f"(k>=2), N=3k-2 (k>=5), k=1")
    _check_plan(out)
    return out


def _plan_three_k_minus_1(es: EigenSystem, k: int, lam: complex):
    n = es.dim
    probe = triangle(1, k + 1, 2 * k + 1, dim=n)
    refl = None
    branch = "vertex1"
    if _weight(es, probe, lam, 1) > 0.5:
        # vertex 2k+1 is necessarily weak; renumber so it plays vertex 1
        refl = reflect_labels(es, 2 * k + 1)
        branch = "reflected"
    patterns, shared = three_k_minus_1_patterns(k)
    tris = [_tri(t, refl, n) for t in patterns]
    shared = shared if refl is None else refl(shared)
    return DecompositionPlan(CASE_THREE_K_MINUS_1, k, n, tuple(tris),
                             (Pairing(0, 1, shared),),
                             reflection_pivot=None if refl is None else refl.pivot,
                             branch=branch)


def _plan_three_k_minus_2(es: EigenSystem, k: int, lam: complex):
    n = es.dim
    probe1 = triangle(1, k - 1, 2 * k - 1, dim=n)
    refl = None
    if _weight(es, probe1, lam, 1) > 0.5:
        # vertex k-1 is weak instead; renumber so it plays vertex 1
        refl = reflect_labels(es, k - 1)
    probe2 = _tri((k - 2, 2 * k - 2, 3 * k - 3), refl, n)
    probe2_vertex = (2 * k - 2) if refl is None else refl(2 * k - 2)
    if _weight(es, probe2, lam, probe2_vertex) <= 0.5:
        case, case_no = CASE_THREE_K_MINUS_2_C1, 1
    else:
        case, case_no = CASE_THREE_K_MINUS_2_C2, 2
    patterns, (shared1, shared2) = three_k_minus_2_patterns(k, case_no)
    tris = [_tri(t, refl, n) for t in patterns]
    shared1 = shared1 if refl is None else refl(shared1)
    shared2 = shared2 if refl is None else refl(shared2)
    return DecompositionPlan(case, k, n, tuple(tris),
                             (Pairing(0, 1, shared1), Pairing(2, 3, shared2)),
                             reflection_pivot=None if refl is None else refl.pivot,
                             branch="case1" if case_no == 1 else "case2")


def _plan_rank1(es: EigenSystem, lam: complex) -> DecompositionPlan:
    support, _ = _caratheodory_support(es, lam)
    return DecompositionPlan(CASE_RANK_1, 1, es.dim, (), (),
                             rank1_support=tuple(support))


def _caratheodory_support(es: EigenSystem, lam: complex):
    """Deterministic scan for at most three eigenvalues whose hull holds lam."""
    lam = complex(lam)
    mu = es.eigenvalues()
    for j in range(es.dim):
        if abs(mu[j] - lam) <= MEMBERSHIP_TOL:
            return (j + 1,), (1.0,)
    for a, b in combinations(range(es.dim), 2):
        e = mu[b] - mu[a]
        L2 = abs(e) ** 2
        if L2 == 0.0:
            continue
        t = ((lam - mu[a]).real * e.real + (lam - mu[a]).imag * e.imag) / L2
        t = min(1.0, max(0.0, t))
        if abs(mu[a] + t * e - lam) <= MEMBERSHIP_TOL:
            return (a + 1, b + 1), (1.0 - t, t)
    for idx in combinations(range(es.dim), 3):
        t = triangle(*(j + 1 for j in idx), dim=es.dim)
        try:
            w = solve_barycentric(es, t, lam)
        except Exception:
            continue
        return t.indices, w.weights
    raise LambdaOutsideRegion(
        f"{lam} is not in the convex hull of the spectrum")


# ---------------------------------------------------------------------------
# feasibility margins for sub-spectra


def subspectrum_margin(phases, j: int, lam: complex) -> float:
    """Signed margin of lam inside the rank-j region of the given phases."""
    th = np.sort(np.asarray(phases, dtype=float))
    n = th.size
    if n == 0 or j > n:
        return -np.inf
    t0 = th
    t1 = th[(np.arange(n) + j) % n] + TWO_PI * ((np.arange(n) + j) // n)
    a = np.exp(1j * t0)
    b = np.exp(1j * t1)
    e = b - a
    elen = np.abs(e)
    live = elen > 1e-12
    m = 1.0 - abs(lam)
    if live.any():
        mid = np.exp(1j * (t0 + t1 + TWO_PI) / 2.0)
        cr_mid = e.real * (mid - a).imag - e.imag * (mid - a).real
        cr_lam = e.real * (lam - a).imag - e.imag * (lam - a).real
        sign = np.where(cr_mid > 0, 1.0, -1.0)
        m = min(m, float((sign[live] * cr_lam[live] / elen[live]).min()))
    dead = ~live
    if dead.any():
        pinned = dead & (t1 - t0 > np.pi)
        if pinned.any():
            m = min(m, float(-np.abs(lam - a[pinned]).max()))
    return float(m)


def _margin_of(es: EigenSystem, indices, j: int, lam: complex) -> float:
    return subspectrum_margin([es.phases[i - 1] for i in indices], j, lam)


# ---------------------------------------------------------------------------
# synthesis


def _bary_or_none(es, idx, lam):
    try:
        return solve_barycentric(es, triangle(*idx, dim=es.dim), lam)
    except Exception:
        return None


def _triangle_column(es, w: BarycentricWeights, n: int) -> np.ndarray:
    v = np.zeros(n, dtype=complex)
    for j, wi in zip(w.triangle.indices, w.weights):
        v[j - 1] = np.sqrt(max(0.0, wi))
    return v


def _block_columns(es, support, lam, n: int):
    S = np.array(sorted(support)) - 1
    d = es.eigenvalues()[S] - lam
    V = blocks.isotropic_pair(d)
    cols = []
    for c in range(2):
        v = np.zeros(n, dtype=complex)
        v[S] = V[:, c]
        cols.append(v)
    return cols


def _planned_pieces(pl: DecompositionPlan):
    """(kind, data) synthesis pieces for a plan: 'block' for each pairing's
    5-index union, 'tri' for every unpaired triangle."""
    paired_positions = set()
    pieces = []
    for p in pl.pairings:
        paired_positions.update((p.first, p.second))
        support = sorted(set(pl.triangles[p.first].indices)
                         | set(pl.triangles[p.second].indices))
        pieces.append(("block", tuple(support)))
    for pos, t in enumerate(pl.triangles):
        if pos not in paired_positions:
            pieces.append(("tri", t.indices))
    return pieces


def _try_pieces(es, lam, pieces, kk):
    """Synthesize columns for explicit pieces; None when infeasible."""
    n = es.dim
    cols = []
    for kind, idx in pieces:
        if kind == "tri":
            w = _bary_or_none(es, idx, lam)
            if w is None:
                return None
            cols.append(_triangle_column(es, w, n))
        else:
            if _margin_of(es, idx, 2, lam) < FEASIBILITY_FLOOR:
                return None
            try:
                cols.extend(_block_columns(es, idx, lam, n))
            except NoSolution:
                return None
    if len(cols) != kk:
        return None
    return cols


def _feasible_triples(es, active, lam):
    """All index triples of ``active`` whose triangle holds lam, with their
    smallest barycentric weight, by one batched Cramer solve."""
    act = np.asarray(active)
    pts = es.eigenvalues()[act - 1]
    n = act.size
    if n < 3:
        return []
    trips = np.array(list(combinations(range(n), 3)))
    xa, ya = pts[trips[:, 0]].real, pts[trips[:, 0]].imag
    xb, yb = pts[trips[:, 1]].real, pts[trips[:, 1]].imag
    xc, yc = pts[trips[:, 2]].real, pts[trips[:, 2]].imag
    X, Y = lam.real, lam.imag
    det = (xb * yc - xc * yb) - (xa * yc - xc * ya) + (xa * yb - xb * ya)
    da = (xb * yc - xc * yb) - (X * yc - xc * Y) + (X * yb - xb * Y)
    db = (X * yc - xc * Y) - (xa * yc - xc * ya) + (xa * Y - X * ya)
    dc = (xb * Y - X * yb) - (xa * Y - X * ya) + (xa * yb - xb * ya)
    ok = np.abs(det) > 1e-14
    w = np.full((trips.shape[0], 3), -1.0)
    w[ok] = np.stack([da[ok], db[ok], dc[ok]], axis=1) / det[ok, None]
    min_w = w.min(axis=1)
    feas = ok & (min_w >= -1e-12)
    order = np.argsort(-min_w[feas], kind="stable")
    rows = np.nonzero(feas)[0][order]
    return [(float(min_w[r]), tuple(int(act[c]) for c in trips[r]))
            for r in rows]


def _block_candidates(es, active, lam, tri_feas, kk, floor):
    """5-index blocks built from vertex-sharing feasible triangles, scored
    by the weaker of the block's own rank-2 margin and the remainder's."""
    top = tri_feas[:40]
    seen = set()
    cands = []
    for i in range(len(top)):
        for j in range(i + 1, len(top)):
            t1, t2 = top[i][1], top[j][1]
            if len(set(t1) & set(t2)) != 1:
                continue
            blk = tuple(sorted(set(t1) | set(t2)))
            if blk in seen:
                continue
            seen.add(blk)
            m_blk = _margin_of(es, blk, 2, lam)
            if m_blk < floor:
                continue
            rest = tuple(x for x in active if x not in blk)
            m_rest = _margin_of(es, rest, kk - 2, lam)
            if m_rest < floor:
                continue
            cands.append((min(m_blk, m_rest), blk, rest))
    cands.sort(key=lambda c: (-c[0], c[1]))
    return cands


def _search_pieces(es, kk, lam, active, depth=0):
    """Deterministic re-partition of ``active`` (sorted 1-based indices)
    into feasible triangles and 5-index pair blocks for rank kk."""
    active = tuple(sorted(active))
    n_act = len(active)
    if kk == 1:
        feas = _feasible_triples(es, active, lam)
        if feas:
            return [("tri", feas[0][1])]
        return None
    if kk == 2:
        if n_act == 5:
            if _margin_of(es, active, 2, lam) >= FEASIBILITY_FLOOR:
                return [("block", active)]
            return None
        if n_act == 6:
            best = None
            best_m = -np.inf
            for first in combinations(active, 3):
                rest = tuple(j for j in active if j not in first)
                w1 = _bary_or_none(es, first, lam)
                w2 = _bary_or_none(es, rest, lam)
                if w1 is None or w2 is None:
                    continue
                m = min(min(w1.weights), min(w2.weights))
                if m > best_m:
                    best_m, best = m, [("tri", first), ("tri", rest)]
            return best
        return None
    if n_act < 3 * kk - 2:
        return None

    blocks_required = 3 * kk - n_act  # 0, 1 or 2 pair blocks still needed
    current = _margin_of(es, active, kk, lam)
    threshold = max(FEASIBILITY_FLOOR, 0.25 * current)
    tri_feas = _feasible_triples(es, active, lam)

    def triangle_moves():
        scored = []
        for _, idx in tri_feas[:60]:
            rest = tuple(j for j in active if j not in idx)
            m = _margin_of(es, rest, kk - 1, lam)
            if m >= FEASIBILITY_FLOOR:
                scored.append((m, idx, rest))
        scored.sort(key=lambda c: (-c[0], c[1]))
        ordered = [c for c in scored if c[0] >= threshold] or scored
        for m, idx, rest in ordered[:12]:
            tail = _search_pieces(es, kk - 1, lam, rest, depth + 1)
            if tail is not None:
                return [("tri", idx)] + tail
        return None

    def block_moves():
        if blocks_required < 1 or kk < 3:
            return None
        for m, blk, rest in _block_candidates(es, active, lam, tri_feas,
                                              kk, FEASIBILITY_FLOOR)[:12]:
            tail = _search_pieces(es, kk - 2, lam, rest, depth + 1)
            if tail is not None:
                return [("block", blk)] + tail
        return None

    movers = (block_moves, triangle_moves) if blocks_required >= 2 \
        else (triangle_moves, block_moves)
    for mover in movers:
        found = mover()
        if found is not None:
            return found
    return None


def _assemble(es: EigenSystem, k: int, lam: complex, cols, strategy: str,
              pl: DecompositionPlan) -> Projector:
    V = np.stack(cols, axis=1)
    gram = V.conj().T @ V
    if np.abs(gram - np.eye(k)).max() > GRAM_GATE:
        raise GramFailure(
            f"frame Gram deviates by {np.abs(gram - np.eye(k)).max():.2e}")
    d = es.eigenvalues() - lam
    comp = V.conj().T @ (d[:, None] * V)
    if np.abs(np.diag(comp)).max() > COMPRESSION_GATE:
        raise GramFailure(
            f"diagonal compression residual {np.abs(np.diag(comp)).max():.2e}")
    if np.abs(comp).max() > COMPRESSION_GATE:
        raise GramFailure(
            f"off-diagonal compression residual {np.abs(comp).max():.2e}")
    P_eig = V @ V.conj().T
    B = es.basis
    P = B @ P_eig @ B.conj().T
    residuals = projector_residuals(P, es.matrix, lam, k)
    return Projector(matrix=P, rank=k, target=lam, residuals=residuals,
                     strategy=strategy, plan=pl)


def projector_residuals(P, sigma, lam, k) -> dict:
    P = np.asarray(P, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    return {
        "hermiticity": float(np.linalg.norm(P - P.conj().T)),
        "idempotency": float(np.linalg.norm(P @ P - P)),
        "trace": float(abs(np.trace(P) - k)),
        "compression": float(np.linalg.norm(P @ sigma @ P - lam * P)),
    }


def construct_projector(es: EigenSystem, k: int, lam: complex,
                        tol: float = MEMBERSHIP_TOL) -> Projector:
    """Rank-k projector P with P sigma P = lam P, built constructively.

    Raises LambdaOutsideRegion unless lam is strictly inside the rank-k
    region (k = 1 also accepts boundary points), UnsupportedDimension for
    dimension pairs without a construction, and GramFailure if an internal
    orthonormality check fails.
    """
    n = es.dim
    lam = complex(lam)
    if k < 1 or k > n:
        raise UnsupportedDimension(f"rank k={k} outside 1..{n}")

    region = build_region(es, k)
    verdict = contains(region, lam, tol)
    if verdict != INSIDE and not (k == 1 and verdict == BOUNDARY):
        raise LambdaOutsideRegion(
            f"{lam} is {verdict} for rank {k}; need a strict interior point")

    # eigenspace shortcut: a k-fold eigenvalue at lam is its own witness,
    # valid at any (N, k)
    close = [j for j in range(n) if abs(es.eigenvalue(j + 1) - lam) <= EIGEN_MATCH]
    if len(close) >= k:
        cols = []
        for j in close[:k]:
            v = np.zeros(n, dtype=complex)
            v[j] = 1.0
            cols.append(v)
        return _assemble(es, k, lam, cols, "eigenspace", None)

    supported = (n == 3 * k or (n == 3 * k - 1 and k >= 2)
                 or (n == 3 * k - 2 and k >= 5) or k == 1)
    if not supported:
        raise UnsupportedDimension(
            f"no construction for N={n}, k={k}; supported: N=3k, N=3k-1 "
            f"(k>=2), N=3k-2 (k>=5), k=1")

    pl = plan(es, k, lam)
    if pl.dimension_case == CASE_RANK_1:
        return caratheodory_rank1(es, lam)

    pieces = _planned_pieces(pl)
    cols = _try_pieces(es, lam, pieces, k)
    if cols is not None:
        return _assemble(es, k, lam, cols, "planned", pl)

    found = _search_pieces(es, k, lam, tuple(range(1, n + 1)))
    if found is not None:
        cols = _try_pieces(es, lam, found, k)
        if cols is not None:
            return _assemble(es, k, lam, cols, "adaptive", pl)

    cols = _global_fallback(es, k, lam)
    if cols is not None:
        return _assemble(es, k, lam, cols, "least_squares", pl)
    raise NoSolution(
        f"no feasible decomposition found for N={n}, k={k}, lam={lam}")


def _global_fallback(es, k, lam):
    d = es.eigenvalues() - lam
    n = es.dim
    rng = np.random.default_rng(20240611)
    seeds = []
    for _ in range(6):
        W = rng.standard_normal((n, k)) + 1j * rng.standard_normal((n, k))
        q, _ = np.linalg.qr(W)
        seeds.append(q)
    V = blocks.frame_solve(d, k, seeds)
    if V is None:
        return None
    return [V[:, c] for c in range(k)]


def caratheodory_rank1(es: EigenSystem, lam: complex) -> Projector:
    """Rank-1 witness: at most three eigenvalues whose hull carries lam."""
    lam = complex(lam)
    support, weights = _caratheodory_support(es, lam)
    v = np.zeros(es.dim, dtype=complex)
    for j, w in zip(support, weights):
        v[j - 1] = np.sqrt(max(0.0, w))
    v = v / np.linalg.norm(v)
    pl = DecompositionPlan(CASE_RANK_1, 1, es.dim, (), (),
                           rank1_support=tuple(support))
    return _assemble(es, 1, lam, [v], "caratheodory", pl)


@dataclass(frozen=True)
class VerificationReport:
    residuals: dict
    thresholds: dict
    passed: bool


def verify_projector(P, sigma, lam: complex, k: int,
                     tol: float = MEMBERSHIP_TOL) -> VerificationReport:
    """Standalone recheck of an alleged projector against a matrix."""
    P = np.asarray(P, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise ShapeMismatch(f"projector must be square, got {P.shape}")
    if P.shape != sigma.shape:
        raise ShapeMismatch(
            f"projector {P.shape} does not match matrix {sigma.shape}")
    residuals = projector_residuals(P, sigma, complex(lam), k)
    th = projector_thresholds(tol)
    passed = all(residuals[key] <= th[key] for key in th)
    return VerificationReport(residuals=residuals, thresholds=th,
                              passed=passed)
