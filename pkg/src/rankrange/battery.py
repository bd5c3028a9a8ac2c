"""Seeded end-to-end batteries: random instances over every supported
dimension family, constructed and verified, with per-instance records.

The record stream is deterministic for a fixed seed apart from the wall
time field, which is reported for information only.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .decomposition import construct_projector, verify_projector
from .errors import MathRejection, RankRangeError
from .region import build_region, interior_point
from .spectra import EigenSystem, ingest_matrix, ingest_spectrum

#: (case label, N, k) triples covering all construction branches
DEFAULT_SIZES = (
    ("three_k", 3, 1),
    ("three_k", 6, 2),
    ("three_k", 9, 3),
    ("three_k_minus_1", 5, 2),
    ("three_k_minus_1", 8, 3),
    ("three_k_minus_1", 11, 4),
    ("three_k_minus_2", 13, 5),
    ("three_k_minus_2", 16, 6),
    ("rank1", 7, 1),
)

MIN_REGION_MARGIN = 1e-3


@dataclass
class ReportRecord:
    n: int
    k: int
    target: complex
    case: str
    branch: str
    conjugated: bool
    seed: int
    passed: bool
    residuals: dict
    skipped: str = None
    wall_ms: float = 0.0

    def to_doc(self) -> dict:
        doc = {
            "n": self.n, "k": self.k,
            "lambda": [self.target.real, self.target.imag],
            "case": self.case, "branch": self.branch,
            "conjugated": self.conjugated, "seed": self.seed,
            "pass": self.passed, "residuals": self.residuals,
            "wall_ms": round(self.wall_ms, 3),
        }
        if self.skipped:
            doc["skipped"] = self.skipped
        return doc


def random_unitary(rng, n: int) -> np.ndarray:
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_instance(rng, n: int, conjugate: bool) -> EigenSystem:
    phases = np.sort(rng.uniform(0.0, 2.0 * np.pi, n))
    if not conjugate:
        return ingest_spectrum(phases)
    q = random_unitary(rng, n)
    u = q @ np.diag(np.exp(1j * phases)) @ q.conj().T
    return ingest_matrix(u, tol=1e-8)


def pick_target(es: EigenSystem, k: int):
    """Interior point of the rank-k region, or the point constraint when the
    region is a single point, or None when the region has no usable target."""
    region = build_region(es, k)
    z = interior_point(region, resolution=64)
    if z is not None:
        return z
    if region.point_constraints:
        return region.point_constraints[0]
    return None


def run_one(es: EigenSystem, k: int, case: str, conjugated: bool,
            seed: int) -> ReportRecord:
    start = time.perf_counter()
    target = pick_target(es, k)
    if target is None:
        return ReportRecord(es.dim, k, 0j, case, "", conjugated, seed,
                            passed=True, residuals={},
                            skipped="empty region",
                            wall_ms=1e3 * (time.perf_counter() - start))
    try:
        proj = construct_projector(es, k, target)
        report = verify_projector(proj.matrix, es.matrix, target, k)
        branch = proj.plan.branch if proj.plan is not None and proj.plan.branch \
            else proj.strategy
        return ReportRecord(es.dim, k, complex(target), case, branch,
                            conjugated, seed, passed=report.passed,
                            residuals=report.residuals,
                            wall_ms=1e3 * (time.perf_counter() - start))
    except MathRejection as exc:
        return ReportRecord(es.dim, k, complex(target), case, "", conjugated,
                            seed, passed=True, residuals={},
                            skipped=f"rejected: {exc}",
                            wall_ms=1e3 * (time.perf_counter() - start))
    except RankRangeError as exc:
        return ReportRecord(es.dim, k, complex(target), case, "", conjugated,
                            seed, passed=False,
                            residuals={"error": str(exc)},
                            wall_ms=1e3 * (time.perf_counter() - start))


def demo_battery(seed: int = 42, sizes=DEFAULT_SIZES, repeats: int = 3):
    """Deterministic instance stream covering every dimension case.

    Yields ReportRecords; spectra whose region is empty are skipped with a
    note rather than failed. Alternates diagonal and conjugated inputs.
    """
    records = []
    for pos, (case, n, k) in enumerate(sizes):
        for rep in range(repeats):
            sub_seed = int(np.random.SeedSequence(
                entropy=seed, spawn_key=(pos, rep)).generate_state(1)[0])
            rng = np.random.default_rng(sub_seed)
            conjugated = rep % 2 == 1
            es = random_instance(rng, n, conjugated)
            records.append(run_one(es, k, case, conjugated, sub_seed))
    # crafted degenerate instances: identity spectrum and an empty region
    ident = ingest_spectrum([0.0] * 4)
    records.append(run_one(ident, 2, "degenerate_point", False, seed))
    equilateral = ingest_spectrum([0.0, 2.0 * np.pi / 3, 4.0 * np.pi / 3])
    records.append(run_one(equilateral, 2, "empty_region", False, seed))
    return records


def branch_counts(records) -> dict:
    out = {}
    for r in records:
        if r.skipped:
            continue
        out[(r.case, r.branch)] = out.get((r.case, r.branch), 0) + 1
    return out
