"""Canonical serialization: matrices and specs as JSON, CSV, LaTeX.

Matrix JSON is {"rows": R, "cols": C, "entries": [..strings..]} with entries
as decimal strings in row-major order; non-integral rationals use "p/q".
Identical inputs always serialize to byte-identical artifacts.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .exactmat import IntMatrix, RatMatrix
from .families import Family, FamilySpec

Matrix = Union[IntMatrix, RatMatrix]


def _entry_str(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def matrix_to_json(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [_entry_str(x) for row in m.data for x in row],
    }


def matrix_from_json(d: dict) -> Matrix:
    rows, cols = int(d["rows"]), int(d["cols"])
    entries = [Fraction(e) for e in d["entries"]]
    if len(entries) != rows * cols:
        raise ValueError("entry count does not match dimensions")
    grid = [entries[i * cols : (i + 1) * cols] for i in range(rows)]
    if all(x.denominator == 1 for x in entries):
        return IntMatrix([[x.numerator for x in row] for row in grid])
    return RatMatrix(grid)


def spec_to_json(spec: FamilySpec) -> dict:
    out = {"kind": spec.kind.value, "n": spec.n, "r": spec.r}
    if spec.A is not None:
        out["A"] = matrix_to_json(spec.A)
    if spec.M is not None:
        out["M"] = matrix_to_json(spec.M)
    return out


def spec_from_json(d: dict) -> FamilySpec:
    kind = Family(d["kind"])
    a = d.get("A")
    m = d.get("M")
    return FamilySpec(
        kind=kind,
        n=int(d["n"]),
        r=int(d["r"]),
        A=matrix_from_json(a) if a is not None else None,
        M=matrix_from_json(m) if m is not None else None,
    )


def matrix_to_csv(m: Matrix) -> str:
    return "\n".join(",".join(_entry_str(x) for x in row) for row in m.data) + "\n"


def matrix_to_latex(m: Matrix, block: int = 0) -> str:
    """Block-partitioned array in the displayed style; block is the block
    size along both axes (0 for no partition lines)."""
    cols = m.cols
    if block:
        groups = []
        for start in range(0, cols, block):
            groups.append("c" * min(block, cols - start))
        colspec = "|".join(groups)
    else:
        colspec = "c" * cols
    lines = [r"\left(\begin{array}{" + colspec + "}"]
    for i, row in enumerate(m.data):
        line = " & ".join(_entry_str(x) for x in row) + r" \\"
        lines.append(line)
        if block and (i + 1) % block == 0 and i + 1 < m.rows:
            lines.append(r"\hline")
    lines.append(r"\end{array}\right)")
    return "\n".join(lines) + "\n"


def render_matrix(m: Matrix, fmt: str, block: int = 0) -> str:
    if fmt == "json":
        return dumps(matrix_to_json(m))
    if fmt == "csv":
        return matrix_to_csv(m)
    if fmt == "latex":
        return matrix_to_latex(m, block=block)
    raise ValueError(f"unknown format {fmt!r}")


def dumps(obj) -> str:
    """Canonical JSON emission: sorted keys, two-space indent, newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
