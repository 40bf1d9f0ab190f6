"""Constructors for the named matrix families and their building blocks.

The defining matrix of a quasi-polynomial algebra on generators w_{alpha j}
(alpha = 1..n slow, j = 1..r fast) is the nr x nr skew-symmetric block matrix
with diagonal blocks A, blocks M above the diagonal and N = -M^t below.  The
named families fix (A, M):

    dd  (Dipper-Donkin):  A = 0,            M = M_r
    frt (FRT):            A = -(M_r + N_r), M = I
    c1  (Combined I):     A = M_r + N_r,    M = M_r
    c2  (Combined II):    A = M_r + N_r,    M = N_r

Basis ordering everywhere is (alpha, j) lexicographic with alpha slow, so all
constructed matrices are directly comparable entry by entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .exactmat import (
    DimensionError,
    IntMatrix,
    RatMatrix,
    block_assemble,
    block_assemble_rat,
    inverse,
)


class Family(str, Enum):
    FRT = "frt"
    DIPPER_DONKIN = "dd"
    COMBINED_I = "c1"
    COMBINED_II = "c2"
    EXTENDED = "ext"
    CUSTOM = "custom"


@dataclass(frozen=True)
class FamilySpec:
    """Which algebra family plus its dimensions.

    Custom specs carry the block data (A, M) explicitly; A must be
    skew-symmetric and N is always derived as -M^t.
    """

    kind: Family
    n: int
    r: int
    A: Optional[IntMatrix] = None
    M: Optional[IntMatrix] = None

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError("dimensions must be >= 1")
        if self.kind is Family.CUSTOM:
            if self.A is None or self.M is None:
                raise ValueError("custom spec requires A and M")
            if self.A.rows != self.r or self.A.cols != self.r:
                raise DimensionError("A must be r x r")
            if self.M.rows != self.r or self.M.cols != self.r:
                raise DimensionError("M must be r x r")
            if not self.A.is_skew_symmetric():
                raise ValueError("custom A must be skew-symmetric")
        elif self.A is not None or self.M is not None:
            raise ValueError("A/M are only allowed for custom specs")

    @property
    def size(self) -> int:
        if self.kind is Family.EXTENDED:
            return self.n * self.r + self.n + self.r
        return self.n * self.r

    def blocks(self) -> tuple:
        """(A, M, N) for the quasi-polynomial defining matrix."""
        r = self.r
        if self.kind is Family.DIPPER_DONKIN:
            a, m = IntMatrix.zeros(r, r), m_lower(r)
        elif self.kind is Family.FRT:
            a, m = -(m_lower(r) + n_upper(r)), IntMatrix.identity(r)
        elif self.kind is Family.COMBINED_I:
            a, m = m_lower(r) + n_upper(r), m_lower(r)
        elif self.kind is Family.COMBINED_II:
            a, m = m_lower(r) + n_upper(r), n_upper(r)
        elif self.kind is Family.CUSTOM:
            a, m = self.A, self.M
        else:
            raise ValueError(f"{self.kind.value} has no (A, M) block data")
        return a, m, -m.transpose()


class Structural(str, Enum):
    N_R = "N_r"
    M_R = "M_r"
    S_R = "S_r"
    X_R = "X_r"
    T = "T"
    P = "P"
    Q = "Q"
    U_N = "U_n"
    E_TILDE = "E_tilde"
    E_UNIT = "E_unit"


@dataclass(frozen=True)
class StructuralKind:
    selector: Structural
    size: int
    i: Optional[int] = None
    j: Optional[int] = None


def n_upper(r: int) -> IntMatrix:
    """Upper-triangular (diagonal included) matrix of -1 entries."""
    return IntMatrix([[-1 if j >= i else 0 for j in range(r)] for i in range(r)])


def m_lower(r: int) -> IntMatrix:
    """-N_r^t: lower-triangular (diagonal included) matrix of +1 entries."""
    return -n_upper(r).transpose()


def s_cycle(r: int) -> IntMatrix:
    """Shift matrix with 1 on the superdiagonal and -1 in the corner; S^r = -I."""
    m = [[0] * r for _ in range(r)]
    for i in range(r - 1):
        m[i][i + 1] = 1
    m[r - 1][0] = -1
    return IntMatrix(m)


def x_companion(r: int) -> IntMatrix:
    """Companion-type shift with last row of -1 entries; X^(r+1) = I."""
    m = [[0] * r for _ in range(r)]
    for i in range(r - 1):
        m[i][i + 1] = 1
    m[r - 1] = [-1] * r
    return IntMatrix(m)


def t_shift(r: int) -> IntMatrix:
    """Nilpotent shift, 1 on the superdiagonal only."""
    m = [[0] * r for _ in range(r)]
    for i in range(r - 1):
        m[i][i + 1] = 1
    return IntMatrix(m)


def last_row_ones(r: int) -> IntMatrix:
    m = [[0] * r for _ in range(r)]
    m[r - 1] = [1] * r
    return IntMatrix(m)


def u_odd_pattern(n: int) -> IntMatrix:
    """Identity plus 1 entries in the last row at odd columns below n."""
    m = [[int(j == i) for j in range(n)] for i in range(n)]
    for col in range(0, n - 1, 2):
        m[n - 1][col] = 1
    return IntMatrix(m)


def e_tilde(n: int) -> IntMatrix:
    """Alternating-sign last column: +1 at row n, -1 at row n-1, and so on."""
    m = [[0] * n for _ in range(n)]
    for t in range(1, n + 1):
        m[t - 1][n - 1] = (-1) ** (n - t)
    return IntMatrix(m)


_SHIFT_LIKE = {Structural.S_R, Structural.X_R, Structural.T}


def structural(kind: StructuralKind) -> IntMatrix:
    """Emit one of the named r x r building-block matrices."""
    sel, size = kind.selector, kind.size
    if size < 1:
        raise DimensionError("size must be >= 1")
    if sel in _SHIFT_LIKE and size < 2:
        raise DimensionError(f"{sel.value} requires size >= 2")
    if sel is Structural.N_R:
        return n_upper(size)
    if sel is Structural.M_R:
        return m_lower(size)
    if sel is Structural.S_R:
        return s_cycle(size)
    if sel is Structural.X_R:
        return x_companion(size)
    if sel is Structural.T:
        return t_shift(size)
    if sel in (Structural.P, Structural.Q):
        return last_row_ones(size)
    if sel is Structural.U_N:
        return u_odd_pattern(size)
    if sel is Structural.E_TILDE:
        return e_tilde(size)
    if sel is Structural.E_UNIT:
        if kind.i is None or kind.j is None:
            raise ValueError("E_unit requires positions i, j")
        return IntMatrix.unit(size, size, kind.i, kind.j)
    raise ValueError(f"unknown selector {sel}")


def build_H(spec: FamilySpec) -> IntMatrix:
    """The nr x nr skew-symmetric defining matrix of the family."""
    if spec.kind is Family.EXTENDED:
        return build_H_extended(spec.n, spec.r)
    a, m, nn = spec.blocks()
    grid = [
        [a if al == be else (m if be > al else nn) for be in range(spec.n)]
        for al in range(spec.n)
    ]
    h = block_assemble(grid)
    if not h.is_skew_symmetric():
        raise AssertionError("assembled H is not skew-symmetric")
    return h


def build_H_extended(n: int, r: int) -> IntMatrix:
    """Defining matrix of the extended algebra with Laurent row/column operators.

    Layout: nr generator coordinates, then r column-operator coordinates, then
    n row-operator coordinates.  The generator blocks use the Dipper-Donkin
    normalization doubled (M = 2 M_r), the operator couplings are identity
    blocks and column-selector blocks E-hat_alpha = sum_s E_{s,alpha}.
    """
    if n < 1 or r < 1:
        raise ValueError("dimensions must be >= 1")
    mb = m_lower(r).scale(2)
    nb = -mb.transpose()
    zero_r = IntMatrix.zeros(r, r)
    eye_r = IntMatrix.identity(r)
    ehat = []
    for alpha in range(1, n + 1):
        e = [[0] * n for _ in range(r)]
        for s in range(r):
            e[s][alpha - 1] = 1
        ehat.append(IntMatrix(e))
    grid = []
    for al in range(n):
        row = [zero_r if be == al else (mb if be > al else nb) for be in range(n)]
        row.append(eye_r)
        row.append(ehat[al])
        grid.append(row)
    grid.append([-eye_r] * n + [IntMatrix.zeros(r, r), IntMatrix.zeros(r, n)])
    grid.append(
        [-ehat[al].transpose() for al in range(n)]
        + [IntMatrix.zeros(n, r), IntMatrix.zeros(n, n)]
    )
    h = block_assemble(grid)
    if not h.is_skew_symmetric():
        raise AssertionError("extended H is not skew-symmetric")
    return h


def build_T_basis(n: int, r: int) -> tuple:
    """Change-of-basis to the minor family: (TT, TT_inverse), both integer.

    TT is block upper-triangular with blocks T^(alpha-beta); its entry at
    (beta k, alpha j) is 1 exactly when (beta, k) = (alpha-x, j-x) for some
    x in 0..min(alpha,j)-1.  The inverse is block-bidiagonal with -T above
    the diagonal.
    """
    t = t_shift(r) if r >= 2 else IntMatrix([[0]])
    zero = IntMatrix.zeros(r, r)
    eye = IntMatrix.identity(r)
    powers = [eye]
    for _ in range(n - 1):
        powers.append(powers[-1] * t)
    tt = block_assemble(
        [[powers[be - al] if be >= al else zero for be in range(n)] for al in range(n)]
    )
    tinv = block_assemble(
        [
            [eye if be == al else (-t if be == al + 1 else zero) for be in range(n)]
            for al in range(n)
        ]
    )
    if tt * tinv != IntMatrix.identity(n * r):
        raise AssertionError("TT inverse identity failed")
    return tt, tinv


class AssumptionError(ValueError):
    """A standing invertibility assumption fails; the message names the matrix."""


def _standing_data(spec: FamilySpec):
    """(A, M, N, (A-N)^-1, X) with the standing assumptions validated."""
    a, m, nn = spec.blocks()
    an = inverse(a - nn)
    if an is None:
        raise AssumptionError("A - N is singular")
    x = an * (a - m).to_rat()
    eye = RatMatrix.identity(spec.r)
    if inverse(eye - x) is None:
        raise AssumptionError("I - X is singular (equivalently M - N is singular)")
    return a, m, nn, an, x


def build_F(spec: FamilySpec) -> RatMatrix:
    """F = (M - N X^n)(I - X)^{-1}; integer-valued for all named families."""
    _, m, nn, _, x = _standing_data(spec)
    eye = RatMatrix.identity(spec.r)
    f = (m.to_rat() - nn.to_rat() * x.pow(spec.n)) * inverse(eye - x)
    if spec.kind is not Family.CUSTOM and not f.is_integer():
        raise AssertionError(f"F is not integral for named family {spec.kind.value}")
    return f


def build_K2_H4(spec: FamilySpec) -> tuple:
    """Left-reduction witness (K2, H4) with K2 * H = H4 exactly.

    H4 is block upper-triangular with identity diagonal, last block column
    -X^(n-alpha) and corner (A-N)^{-1} F.
    """
    a, m, nn, an, x = _standing_data(spec)
    n, r = spec.n, spec.r
    f = build_F(spec)
    eye = RatMatrix.identity(r)
    zero = RatMatrix.zeros(r, r)
    xp = [eye]
    for _ in range(n):
        xp.append(xp[-1] * x)

    if n == 1:
        k2 = an
        h4 = an * f
    else:
        grid = []
        for al in range(n - 1):
            row = []
            for be in range(n):
                if be < al:
                    row.append(zero)
                elif be == al:
                    row.append(eye)
                elif be < n - 1:
                    row.append(xp[be - al] - xp[be - al - 1])
                else:
                    row.append(-xp[n - 2 - al])
            grid.append(row)
        ann = an * nn.to_rat()
        xsum = RatMatrix.zeros(r, r)
        for k in range(n - 1):
            xsum = xsum + xp[k]
        last = [-(ann * xp[be]) for be in range(n - 1)]
        last.append(eye + ann * xsum)
        grid.append(last)
        k2 = block_assemble_rat(grid) * block_assemble_rat(
            [[an if al == be else zero for be in range(n)] for al in range(n)]
        )
        h4_grid = []
        for al in range(n - 1):
            row = [eye if be == al else zero for be in range(n - 1)]
            row.append(-xp[n - 1 - al])
            h4_grid.append(row)
        h4_grid.append([zero] * (n - 1) + [an * f])
        h4 = block_assemble_rat(h4_grid)

    if k2 * build_H(spec).to_rat() != h4:
        raise AssertionError("K2 * H != H4")
    return k2, h4
