"""The identity manifest and its verification drivers.

``list_identities`` returns the full manifest in stable id order; each
entry carries two independent evaluators (closed form / series on one
side, quadrature on the other).  ``verify`` checks one identity at one
parameter point, ``verify_grid`` sweeps a grid into a :class:`Report`,
and ``run_all`` does so for the whole manifest.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone

from .. import __version__
from ..specfun import EvalResult
from ._records import (Budgets, Constraint, ConstraintError, IdentityRecord,
                       ParamPoint, ParamSpace, UnknownIdentityError,
                       VerificationResult, compare_sides, point_key,
                       STATUS_FAIL, STATUS_INCONCLUSIVE, STATUS_PASS)
from . import _products, _kelvin, _weber

__all__ = [
    "Budgets",
    "Constraint",
    "ConstraintError",
    "IdentityRecord",
    "ParamPoint",
    "ParamSpace",
    "Report",
    "UnknownIdentityError",
    "VerificationResult",
    "DEFAULT_TOLERANCES",
    "list_identities",
    "get_identity",
    "evaluate_sides",
    "verify",
    "verify_grid",
    "run_all",
]

# Verification tolerance by difficulty class.  Conditionally convergent
# oscillatory tails and m-th-derivative noise cannot reach 1e-8 in
# binary64, hence the looser classes.
DEFAULT_TOLERANCES = {"easy": 1e-8, "oscillatory": 1e-5, "hard": 1e-4}
DEFAULT_ABS_FLOOR = 1e-14

def _id_sort_key(identity: str):
    # "I-2.4" -> (2, 4, ""), "I-K1a" -> (99, 1, "a"): numeric ids first
    body = identity[2:]
    if body.startswith("K"):
        tail = body[1:]
        num = "".join(ch for ch in tail if ch.isdigit())
        suf = "".join(ch for ch in tail if not ch.isdigit())
        return (99, 0, int(num or 0), suf)
    sec, _, eq = body.partition(".")
    return (int(sec), 0, int(eq), "")


_ALL = tuple(sorted(_products.RECORDS + _kelvin.RECORDS + _weber.RECORDS,
                    key=lambda r: _id_sort_key(r.id)))
_BY_ID = {r.id: r for r in _ALL}


def list_identities() -> tuple[IdentityRecord, ...]:
    """The full manifest, in stable id order."""
    return _ALL


def get_identity(identity: str) -> IdentityRecord:
    try:
        return _BY_ID[identity]
    except KeyError:
        raise UnknownIdentityError(
            f"unknown identity id {identity!r}; see list_identities()") from None


def _validate(record: IdentityRecord, point: ParamPoint) -> dict:
    pt = {k: float(v) for k, v in dict(point).items()}
    missing = set(record.params) - set(pt)
    extra = set(pt) - set(record.params)
    if missing or extra:
        raise ConstraintError(
            f"{record.id}: point must name exactly {record.params}; "
            f"missing={sorted(missing)}, unexpected={sorted(extra)}")
    violated = record.space.violated(pt)
    if violated is not None:
        raise ConstraintError(f"{record.id}: constraint violated: {violated.text}")
    return pt


def evaluate_sides(identity: str, point: ParamPoint,
                   budgets: Budgets = Budgets()) -> tuple[EvalResult, EvalResult]:
    """Evaluate LHS and RHS of one identity at one admissible point."""
    record = get_identity(identity)
    pt = _validate(record, point)
    return record.lhs(pt, budgets), record.rhs(pt, budgets)


def verify(identity: str, point: ParamPoint, rel_tol: float | None = None,
           abs_floor: float = DEFAULT_ABS_FLOOR,
           budgets: Budgets = Budgets()) -> VerificationResult:
    """Verify one identity at one point.

    rel_diff = |lhs-rhs| / max(|lhs|, |rhs|, abs_floor); pass needs both
    sides converged and rel_diff <= rel_tol.  Watch-flagged identities
    report converged disagreement as inconclusive with the measured
    lhs/rhs ratio in the note.
    """
    record = get_identity(identity)
    pt = _validate(record, point)
    if rel_tol is None:
        rel_tol = DEFAULT_TOLERANCES[record.difficulty]
    if not (rel_tol > 0.0 and abs_floor > 0.0):
        raise ConstraintError("verify: rel_tol and abs_floor must be > 0")
    lhs = record.lhs(pt, budgets)
    rhs = record.rhs(pt, budgets)
    return compare_sides(record, pt, lhs, rhs, rel_tol, abs_floor)


@dataclass
class Report:
    """Aggregated verification results with a lossless dict/JSON form."""

    artifact_version: str
    timestamp: str
    tolerance_policy: dict
    entries: list[VerificationResult]
    wall_time_s: float

    @property
    def summary(self) -> dict:
        counts = {STATUS_PASS: 0, STATUS_FAIL: 0, STATUS_INCONCLUSIVE: 0}
        for e in self.entries:
            counts[e.status] += 1
        return {"pass": counts[STATUS_PASS], "fail": counts[STATUS_FAIL],
                "inconclusive": counts[STATUS_INCONCLUSIVE],
                "wall_time_s": self.wall_time_s}

    def to_dict(self) -> dict:
        return {
            "artifact_version": self.artifact_version,
            "timestamp": self.timestamp,
            "tolerance_policy": dict(self.tolerance_policy),
            "entries": [
                {
                    "id": e.identity,
                    "params": dict(sorted(e.point.items())),
                    "lhs": e.lhs.value,
                    "rhs": e.rhs.value,
                    "lhs_err": e.lhs.abs_err_est,
                    "rhs_err": e.rhs.abs_err_est,
                    "abs_diff": e.abs_diff,
                    "rel_diff": e.rel_diff,
                    "status": e.status,
                    **({"note": e.note} if e.note else {}),
                }
                for e in self.entries
            ],
            "summary": self.summary,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        entries = []
        for e in d["entries"]:
            entries.append(VerificationResult(
                identity=e["id"], point=dict(e["params"]),
                lhs=EvalResult(e["lhs"], e["lhs_err"], True, 0),
                rhs=EvalResult(e["rhs"], e["rhs_err"], True, 0),
                abs_diff=e["abs_diff"], rel_diff=e["rel_diff"],
                status=e["status"], note=e.get("note", "")))
        return cls(d["artifact_version"], d["timestamp"],
                   dict(d["tolerance_policy"]), entries,
                   d["summary"]["wall_time_s"])


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _grid_of(record: IdentityRecord, space_override: ParamSpace | None):
    space = space_override if space_override is not None else record.space
    grid = tuple(space.grid())
    if not grid:
        raise ConstraintError(f"{record.id}: empty verification grid")
    return sorted(grid, key=point_key)


def _verify_points(record: IdentityRecord, points, rel_tol, abs_floor,
                   budgets: Budgets, jobs: int) -> list[VerificationResult]:
    tol = rel_tol if rel_tol is not None else DEFAULT_TOLERANCES[record.difficulty]

    def one(pt) -> VerificationResult:
        try:
            p = _validate(record, pt)
            lhs = record.lhs(p, budgets)
            rhs = record.rhs(p, budgets)
            return compare_sides(record, p, lhs, rhs, tol, abs_floor)
        except Exception as exc:  # a point failure must not abort the grid
            bad = EvalResult(float("nan"), float("inf"), False, 0)
            return VerificationResult(record.id, dict(pt), bad, bad,
                                      float("nan"), float("nan"),
                                      STATUS_INCONCLUSIVE,
                                      note=f"point error: {exc}")

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(one, points))
    else:
        results = [one(pt) for pt in points]
    results.sort(key=lambda r: (r.identity, point_key(r.point)))
    return results


def verify_grid(identity: str, space_override: ParamSpace | None = None,
                rel_tol: float | None = None,
                abs_floor: float = DEFAULT_ABS_FLOOR,
                budgets: Budgets = Budgets(), jobs: int = 1) -> Report:
    """Verify one identity over its default (or an overriding) grid."""
    record = get_identity(identity)
    points = _grid_of(record, space_override)
    t0 = time.perf_counter()
    entries = _verify_points(record, points, rel_tol, abs_floor, budgets, jobs)
    wall = time.perf_counter() - t0
    policy = dict(DEFAULT_TOLERANCES)
    if rel_tol is not None:
        policy = {record.difficulty: rel_tol}
    return Report(__version__, _utc_now(), policy, entries, wall)


def run_all(rel_tol: float | None = None,
            abs_floor: float = DEFAULT_ABS_FLOOR,
            budgets: Budgets = Budgets(), jobs: int = 1) -> Report:
    """Verify every identity on its default grid; one aggregated report."""
    t0 = time.perf_counter()
    work = []
    for record in _ALL:
        for pt in _grid_of(record, None):
            work.append((record, pt))
    tol_for = {r.id: (rel_tol if rel_tol is not None
                      else DEFAULT_TOLERANCES[r.difficulty]) for r in _ALL}

    def one(item) -> VerificationResult:
        record, pt = item
        try:
            p = _validate(record, pt)
            lhs = record.lhs(p, budgets)
            rhs = record.rhs(p, budgets)
            return compare_sides(record, p, lhs, rhs, tol_for[record.id], abs_floor)
        except Exception as exc:
            bad = EvalResult(float("nan"), float("inf"), False, 0)
            return VerificationResult(record.id, dict(pt), bad, bad,
                                      float("nan"), float("nan"),
                                      STATUS_INCONCLUSIVE, note=f"point error: {exc}")

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(one, work))
    else:
        entries = [one(item) for item in work]
    entries.sort(key=lambda r: (_id_sort_key(r.identity), point_key(r.point)))
    wall = time.perf_counter() - t0
    policy = dict(DEFAULT_TOLERANCES) if rel_tol is None else {"override": rel_tol}
    return Report(__version__, _utc_now(), policy, entries, wall)
