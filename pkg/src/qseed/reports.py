"""Analysis, verification and sweep reports over the matrix families.

Each verification pairs a closed-form route with an independent exact
oracle and reports pass/fail with a minimal counterexample on disagreement.
All report payloads are plain JSON-able dicts with deterministic content.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence

from .closedforms import (
    UnsupportedFamilyError,
    block_counts_closed,
    center_generators,
    corank_closed,
    degree_at_root,
    det_closed,
    inverse_H_closed,
    inverse_Lambda_closed,
    kernel_closed,
)
from .exactmat import IntMatrix, det, inverse, kernel, rank
from .families import Family, FamilySpec, build_H, build_T_basis
from .minors import (
    DEFAULT_SYMBOLIC_CAP,
    MinorId,
    exchange_check,
    family_map,
    lambda_symbolic,
    lambda_via_diagonals,
    minor_grid_id,
    quantum_minor,
    validate_monomial_map,
    xi_minor,
    xi_minor_by_columns,
)
from .ncalg import PqAlgebra
from .seeds import build_lambda, compatible_pair, default_frozen_positions, truncate_nonmutable
from .serialize import matrix_to_json, spec_to_json
from .skewform import skew_normal_form

VERIFY_CHECKS = ("inverse", "lambda", "minors", "seeds", "kernel", "exchange")


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("QSEED_WORKERS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def analyze_report(spec: FamilySpec, ms: Sequence[int] = ()) -> dict:
    """The per-spec report: corank, determinant, block counts, degrees and
    center generators."""
    report: dict = {"spec": spec_to_json(spec)}
    if spec.kind is Family.CUSTOM:
        h = build_H(spec)
        form = skew_normal_form(h)
        report["corank"] = form.corank
        report["det"] = str(det(h))
        blocks: Dict[str, int] = {}
        for d in form.block_values:
            blocks[str(d)] = blocks.get(str(d), 0) + 1
        report["blocks"] = {"1": blocks.get("1", 0), "2": blocks.get("2", 0), "4": blocks.get("4", 0)}
        report["centerGenerators"] = None
    else:
        report["corank"] = corank_closed(spec)
        d = det_closed(spec)
        report["det"] = None if d is None else str(d)
        counts = block_counts_closed(spec)
        report["blocks"] = {"1": counts.ones, "2": counts.twos, "4": counts.fours}
        try:
            gens = center_generators(spec)
            report["centerGenerators"] = [
                {"exponents": list(g.exponents), "label": g.label} for g in gens
            ]
        except UnsupportedFamilyError:
            report["centerGenerators"] = None
    report["degree"] = {str(m): degree_at_root(spec, m) for m in ms}
    return report


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _result(check: str, spec: FamilySpec, failures: list, details: dict) -> dict:
    return {
        "check": check,
        "spec": spec_to_json(spec),
        "status": "fail" if failures else "pass",
        "failures": failures,
        "details": details,
    }


def verify_inverse(spec: FamilySpec) -> dict:
    """Closed-form H^-1 and Lambda^-1 against the exact inversion oracle."""
    failures = []
    details = {}
    h = build_H(spec)
    oracle = inverse(h)
    closed = inverse_H_closed(spec)
    details["h_invertible"] = oracle is not None
    if (oracle is None) != (closed is None):
        failures.append("closed-form H inverse disagrees with the oracle about singularity")
    elif oracle is not None and closed != oracle:
        failures.append("closed-form H inverse differs from the oracle inverse")
    if spec.kind is not Family.EXTENDED:
        lam = build_lambda(spec)
        lam_oracle = inverse(lam)
        lam_closed = inverse_Lambda_closed(spec)
        details["lambda_invertible"] = lam_oracle is not None
        if lam_closed is not None:
            if lam_oracle is None:
                failures.append("closed-form Lambda inverse exists but Lambda is singular")
            elif lam_closed != lam_oracle:
                failures.append("closed-form Lambda inverse differs from the oracle")
        elif spec.kind in (Family.DIPPER_DONKIN, Family.FRT) and lam_oracle is not None:
            failures.append("covered family is invertible but the closed form returned nothing")
    return _result("inverse", spec, failures, details)


def verify_lambda(spec: FamilySpec, cap: int = DEFAULT_SYMBOLIC_CAP) -> dict:
    """Diagonal-sum Lambda against TT^t H TT, and the symbolic engine when
    the minor order is within the cap."""
    failures = []
    details = {}
    lam = build_lambda(spec)
    diag = lambda_via_diagonals(spec)
    if diag != lam:
        failures.append("diagonal-sum Lambda differs from TT^t H TT")
    if spec.kind in (Family.DIPPER_DONKIN, Family.FRT) and min(spec.n, spec.r) <= cap:
        sym = lambda_symbolic(spec, cap=cap)
        details["symbolic"] = True
        if sym != lam:
            failures.append("symbolic Lambda differs from TT^t H TT")
    else:
        details["symbolic"] = False
    return _result("lambda", spec, failures, details)


def verify_minors(spec: FamilySpec, cap: int = DEFAULT_SYMBOLIC_CAP) -> dict:
    """Monomial-map assumptions, expansion-order equality and bar-invariance
    of the anchored minors up to the cap."""
    failures = []
    alg = PqAlgebra(spec.n, spec.r)
    map_ = family_map(spec)
    violation = validate_monomial_map(map_)
    if violation is not None:
        failures.append(f"monomial map violates {violation.equation}: {violation.witness}")
    checked = 0
    for alpha in range(1, spec.n + 1):
        for j in range(1, spec.r + 1):
            mid = minor_grid_id(spec.n, spec.r, alpha, j)
            if mid.order > cap:
                continue
            if xi_minor(alg, mid) != xi_minor_by_columns(alg, mid):
                failures.append(f"expansion orders differ for minor at ({alpha},{j})")
            chi = quantum_minor(alg, mid, map_)
            if alg.bar(chi) != chi:
                failures.append(f"minor at ({alpha},{j}) is not bar-invariant")
            checked += 1
    return _result("minors", spec, failures, {"minors_checked": checked})


def verify_seeds(spec: FamilySpec) -> dict:
    """Compatible-pair construction, certification and truncation."""
    failures = []
    details = {}
    try:
        pair = compatible_pair(spec)  # certified at construction
        details["c"] = pair.c
        details["seed"] = {
            "lambda": matrix_to_json(pair.lam),
            "bTilde": matrix_to_json(pair.b_tilde),
            "c": pair.c,
            "frozen": [],
            "family": spec_to_json(spec),
            "basisChange": matrix_to_json(pair.basis_change),
        }
        frozen = default_frozen_positions(spec.n, spec.r)
        mutable = [k for k in range(pair.c) if k not in set(frozen)]
        if mutable:
            truncated = truncate_nonmutable(pair, spec=spec)
            details["truncated_columns"] = truncated.b_tilde.cols
            details["seed"]["frozen"] = [
                [k // spec.r + 1, k % spec.r + 1] for k in frozen
            ]
    except (AssertionError, ValueError) as exc:
        failures.append(f"seed construction failed: {exc}")
    return _result("seeds", spec, failures, details)


def verify_kernel(spec: FamilySpec) -> dict:
    """Closed-form kernels and centers against the nullspace oracle."""
    failures = []
    details = {}
    h = build_H(spec)
    lam = build_lambda(spec)
    kh, kl = kernel_closed(spec)  # membership certified at construction
    oracle_h = kernel(h)
    oracle_l = kernel(lam)
    details["corank"] = oracle_h.dimension
    if kh.dimension != oracle_h.dimension:
        failures.append(
            f"closed H-kernel dimension {kh.dimension} != oracle {oracle_h.dimension}"
        )
    if kl.dimension != oracle_l.dimension:
        failures.append(
            f"closed Lambda-kernel dimension {kl.dimension} != oracle {oracle_l.dimension}"
        )
    if kh.dimension and not failures:
        stacked = IntMatrix(list(kh.vectors) + list(oracle_h.vectors))
        if rank(stacked) != kh.dimension:
            failures.append("closed H-kernel does not span the oracle nullspace")
        stacked = IntMatrix(list(kl.vectors) + list(oracle_l.vectors))
        if rank(stacked) != kl.dimension:
            failures.append("closed Lambda-kernel does not span the oracle nullspace")
    gens = center_generators(spec)  # kernel membership certified
    if len(gens) != oracle_l.dimension:
        failures.append(
            f"{len(gens)} center generators for corank {oracle_l.dimension}"
        )
    details["center_labels"] = [g.label for g in gens]
    return _result("kernel", spec, failures, details)


def verify_exchange(spec: FamilySpec, cap: int = DEFAULT_SYMBOLIC_CAP) -> dict:
    """Exchange identity over all 2x2 minor configurations; FRT must solve
    with (a, c) = (0, 1) and the exchange element must have zero R/C balance."""
    failures = []
    solved = []
    for rows in itertools.combinations(range(1, spec.n + 1), 2):
        for cols in itertools.combinations(range(1, spec.r + 1), 2):
            res = exchange_check(rows, cols, spec, cap=max(cap, 2))
            solved.append(
                {"rows": list(rows), "cols": list(cols), "a": res.a, "c": res.c,
                 "ordering": res.ordering}
            )
            if spec.kind is Family.FRT and (res.a, res.c) != (0, 1):
                failures.append(
                    f"configuration {rows}x{cols} solved with ({res.a},{res.c}), not (0,1)"
                )
            if any(any(x != 0 for x in part) for part in res.rc_balance):
                failures.append(f"nonzero R/C balance at {rows}x{cols}")
    return _result("exchange", spec, failures, {"configurations": solved})


def verify_check(check: str, spec: FamilySpec, cap: Optional[int] = None) -> dict:
    cap = cap if cap is not None else DEFAULT_SYMBOLIC_CAP
    if check == "inverse":
        return verify_inverse(spec)
    if check == "lambda":
        return verify_lambda(spec, cap=cap)
    if check == "minors":
        return verify_minors(spec, cap=cap)
    if check == "seeds":
        return verify_seeds(spec)
    if check == "kernel":
        return verify_kernel(spec)
    if check == "exchange":
        return verify_exchange(spec, cap=cap)
    raise ValueError(f"unknown check {check!r}; choose from {VERIFY_CHECKS}")


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


def _sweep_row(args) -> dict:
    family, n, r, ms = args
    spec = FamilySpec(Family(family), n, r)
    h = build_H(spec)
    row: dict = {"family": family, "n": n, "r": r}
    mismatches = []

    closed_corank = corank_closed(spec)
    oracle_corank = spec.size - rank(h)
    row["corank"] = closed_corank
    if closed_corank != oracle_corank:
        mismatches.append(
            {"quantity": "corank", "closed": closed_corank, "oracle": oracle_corank}
        )

    closed_det = det_closed(spec)
    row["det"] = None if closed_det is None else str(closed_det)
    if closed_det is not None:
        oracle_det = det(h)
        if closed_det != oracle_det:
            mismatches.append(
                {"quantity": "det", "closed": str(closed_det), "oracle": str(oracle_det)}
            )

    counts = block_counts_closed(spec)
    form = skew_normal_form(h)
    ones = sum(1 for d in form.block_values if d == 1)
    twos = sum(1 for d in form.block_values if d == 2)
    fours = sum(1 for d in form.block_values if d == 4)
    other = len(form.block_values) - ones - twos - fours
    row["blocks"] = {"1": counts.ones, "2": counts.twos, "4": counts.fours}
    if other or (counts.ones, counts.twos, counts.fours, counts.corank) != (
        ones,
        twos,
        fours,
        form.corank,
    ):
        mismatches.append(
            {
                "quantity": "blocks",
                "closed": [counts.ones, counts.twos, counts.fours, counts.corank],
                "oracle": list(form.block_values) + [form.corank],
            }
        )

    row["degree"] = {str(m): _degree_from_form(form, m) for m in ms}
    row["verdict"] = "pass" if not mismatches else "fail"
    if mismatches:
        row["mismatches"] = mismatches
    return row


def _degree_from_form(form, m: int) -> int:
    from math import gcd as _gcd

    deg = 1
    for d in form.block_values:
        deg *= m // _gcd(d, m)
    return deg


def sweep_report(
    families: Sequence[str],
    n_range: Sequence[int],
    r_range: Sequence[int],
    ms: Sequence[int] = (),
    workers: Optional[int] = None,
) -> dict:
    """One row per (family, n, r) comparing every closed form against its
    oracle; the report fails on the first disagreement, with the offending
    row as a minimal counterexample."""
    jobs = [
        (family, n, r, tuple(ms))
        for family in families
        for n in range(n_range[0], n_range[1] + 1)
        for r in range(r_range[0], r_range[1] + 1)
    ]
    workers = workers if workers is not None else worker_count()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_row, jobs))
    else:
        rows = [_sweep_row(j) for j in jobs]
    rows.sort(key=lambda row: (row["family"], row["n"], row["r"]))
    bad = next((row for row in rows if row["verdict"] == "fail"), None)
    return {
        "status": "fail" if bad else "pass",
        "rows": rows,
        "counterexample": bad,
    }
