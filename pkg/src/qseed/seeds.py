"""Quantum-seed data: quasi-commutation matrices, left reductions and
certified compatible pairs.

A compatible pair is (Lambda, B) with Lambda * B equal to -2I stacked on a
zero block, exactly.  The construction follows the left-reduction route:
K H = [[I, Y], [0, 0]], an upper-triangular change of basis T_{a,b,d} with
b = -Y d, and B read off from 2 (T^-1 K (T^t)^-1)^t.  Every pair is
certified at construction; the identity is never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Set, Tuple

from .exactmat import IntMatrix, RatMatrix, inverse
from .families import Family, FamilySpec, build_H, build_T_basis


class ReductionShapeError(ValueError):
    """The kernel meets the leading coordinate subspace, so no left reduction
    with trailing zero rows exists in this basis."""


@dataclass(frozen=True)
class LeftReduction:
    K: RatMatrix
    Y: Optional[RatMatrix]  # (nr - s) x s, absent when s = 0
    s: int  # corank


def left_reduce(h: IntMatrix) -> LeftReduction:
    """K with K h = [[I, Y], [0, 0]] exactly, via deterministic row reduction.

    Pivots are taken column by column using the earliest available row; the
    reduction succeeds when the pivot columns are exactly the leading
    rank-many columns, which holds for all the named families.
    """
    if not h.is_square:
        raise ValueError("left reduction needs a square matrix")
    size = h.rows
    a = [[Fraction(x) for x in row] for row in h.data]
    k = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    row = 0
    pivot_cols = []
    for col in range(size):
        piv = next((i for i in range(row, size) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        k[row], k[piv] = k[piv], k[row]
        p = a[row][col]
        if p != 1:
            a[row] = [x / p for x in a[row]]
            k[row] = [x / p for x in k[row]]
        for i in range(size):
            if i == row or a[i][col] == 0:
                continue
            q = a[i][col]
            a[i] = [x - q * y for x, y in zip(a[i], a[row])]
            k[i] = [x - q * y for x, y in zip(k[i], k[row])]
        pivot_cols.append(col)
        row += 1
    rank = len(pivot_cols)
    s = size - rank
    if pivot_cols != list(range(rank)):
        raise ReductionShapeError(
            f"pivot columns {pivot_cols} are not the leading {rank} columns"
        )
    kmat = RatMatrix(k)
    reduced = RatMatrix(a)
    y = (
        RatMatrix([row[rank:] for row in reduced.data[:rank]]) if s else None
    )
    return LeftReduction(K=kmat, Y=y, s=s)


@dataclass(frozen=True)
class CompatiblePair:
    lam: IntMatrix  # nr x nr skew
    b_tilde: RatMatrix  # nr x c
    c: int  # rank of lam
    basis_change: RatMatrix  # the T_{a,b,d} used
    frozen: tuple = ()  # minor positions excluded by truncation, if any

    def certify(self):
        if not self.lam.is_skew_symmetric():
            raise AssertionError("Lambda is not skew-symmetric")
        prod = self.lam.to_rat() * self.b_tilde
        size = self.lam.rows
        retained = _retained_columns(size, self.c, self.frozen)
        if self.b_tilde.cols != len(retained):
            raise AssertionError("B column count does not match retained positions")
        for out_col, pos in enumerate(retained):
            for i in range(size):
                want = Fraction(-2) if i == pos else Fraction(0)
                if prod[i, out_col] != want:
                    raise AssertionError(
                        f"compatibility identity fails at ({i}, {out_col})"
                    )


def _retained_columns(size: int, c: int, frozen: tuple) -> list:
    frozen_set = set(frozen)
    return [k for k in range(c) if k not in frozen_set]


def build_lambda(spec: FamilySpec) -> IntMatrix:
    """Lambda = TT^t H TT, the quasi-commutation matrix of the minor family."""
    if spec.kind is Family.EXTENDED:
        raise ValueError("the minor family is not defined for the extended matrix")
    h = build_H(spec)
    tt, _ = build_T_basis(spec.n, spec.r)
    lam = tt.transpose() * h * tt
    if not lam.is_skew_symmetric():
        raise AssertionError("Lambda is not skew-symmetric")
    return lam


def compatible_pair(
    spec: FamilySpec,
    block_params: Optional[Tuple[RatMatrix, RatMatrix, RatMatrix]] = None,
) -> CompatiblePair:
    """Certified compatible pair for the family's minor algebra.

    When block_params = (a, b, d) is omitted, a and d default to the leading
    and trailing diagonal blocks of TT and b to -Y d; supplied parameters
    violating b = -Y d are rejected with the residual.
    """
    if spec.kind is Family.EXTENDED:
        raise ValueError("compatible pairs are built for the minor families")
    h = build_H(spec)
    size = h.rows
    red = left_reduce(h)
    s = red.s
    c = size - s
    tt, _ = build_T_basis(spec.n, spec.r)
    tt_rat = tt.to_rat()

    if block_params is None:
        a = RatMatrix([row[:c] for row in tt_rat.data[:c]])
        if s:
            d = RatMatrix([row[c:] for row in tt_rat.data[c:]])
            b = -(red.Y * d)
        else:
            d = None
            b = None
    else:
        a, b, d = block_params
        if s == 0:
            raise ValueError("block parameters only apply to singular cases")
        residual = b - (-(red.Y * d))
        if any(x != 0 for row in residual.data for x in row):
            raise ValueError(
                f"b != -Y d; residual {[[str(x) for x in row] for row in residual.data]}"
            )

    if s:
        top = [list(ra) + list(rb) for ra, rb in zip(a.data, b.data)]
        bottom = [[Fraction(0)] * c + list(rd) for rd in d.data]
        t_abd = RatMatrix(top + bottom)
    else:
        t_abd = a

    lam_rat = t_abd.transpose() * h.to_rat() * t_abd
    if not lam_rat.is_integer():
        raise AssertionError("Lambda_{a,b,d} is not an integer matrix")
    lam = lam_rat.to_int()

    t_inv = inverse(t_abd)
    if t_inv is None:
        raise ValueError("basis change is singular")
    m = t_inv * red.K * t_inv.transpose()
    b_full = m.transpose().scale(2)
    b_tilde = RatMatrix([row[:c] for row in b_full.data])

    pair = CompatiblePair(
        lam=lam, b_tilde=b_tilde, c=c, basis_change=t_abd, frozen=()
    )
    pair.certify()
    return pair


def default_frozen_positions(n: int, r: int) -> tuple:
    """The n + r - 1 covariant minor positions: the whole last row block and
    the last column of the earlier blocks, as 0-based basis indices."""
    frozen = [(n - 1) * r + (j - 1) for j in range(1, r + 1)]
    frozen.extend((alpha - 1) * r + (r - 1) for alpha in range(1, n))
    return tuple(sorted(frozen))


def truncate_nonmutable(
    pair: CompatiblePair, frozen: Optional[Sequence[int]] = None, spec: Optional[FamilySpec] = None
) -> CompatiblePair:
    """Restrict B to the mutable columns and re-certify.

    frozen is a set of 0-based minor positions; by default the n + r - 1
    covariant minors (requires spec).  At least one mutable column must
    remain.
    """
    size = pair.lam.rows
    if frozen is None:
        if spec is None:
            raise ValueError("default freezing needs the family spec")
        frozen = default_frozen_positions(spec.n, spec.r)
    frozen = tuple(sorted(set(frozen)))
    if any(not 0 <= k < size for k in frozen):
        raise ValueError("frozen positions outside the minor grid")
    retained = _retained_columns(size, pair.c, frozen)
    if not retained:
        raise ValueError("truncation must leave at least one mutable column")
    cols = [
        [pair.b_tilde[i, k] for k in range(pair.c) if k in set(retained)]
        for i in range(size)
    ]
    truncated = CompatiblePair(
        lam=pair.lam,
        b_tilde=RatMatrix(cols),
        c=pair.c,
        basis_change=pair.basis_change,
        frozen=frozen,
    )
    truncated.certify()
    return truncated
