"""Closed-form evaluators for coranks, determinants, inverses, kernels,
centers, block counts and degrees of the named families.

Every formula here has an exact-arithmetic oracle on the other side
(fraction-free elimination, rational inversion, congruence reduction); the
test suite keeps the two routes in agreement.  Where the source results cover
only specific shapes (e.g. inverse formulas for full-rank cases), the
evaluator returns None rather than extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Optional

from .exactmat import (
    IntMatrix,
    KernelBasis,
    RatMatrix,
    block_assemble,
    block_assemble_rat,
    inverse,
)
from .families import (
    AssumptionError,
    Family,
    FamilySpec,
    build_F,
    build_H,
    build_K2_H4,
    build_T_basis,
    e_tilde,
    m_lower,
    n_upper,
    s_cycle,
    t_shift,
    u_odd_pattern,
    x_companion,
)
from .skewform import skew_normal_form


class UnsupportedFamilyError(ValueError):
    pass


def _named(spec: FamilySpec):
    if spec.kind in (Family.CUSTOM, Family.EXTENDED):
        raise UnsupportedFamilyError(
            f"no closed form for {spec.kind.value}; use the exact oracle"
        )


def corank_closed(spec: FamilySpec) -> int:
    """Corank of the defining matrix from the gcd formulas."""
    n, r = spec.n, spec.r
    if spec.kind is Family.DIPPER_DONKIN:
        return gcd(n - 1, r + 1) - 1
    if spec.kind is Family.FRT:
        s = gcd(n, r)
        return s if (n // s) % 2 and (r // s) % 2 else 0
    if spec.kind in (Family.COMBINED_I, Family.COMBINED_II):
        return gcd(n + 1, r + 1) - 1
    if spec.kind is Family.EXTENDED:
        return gcd(n, r)
    raise UnsupportedFamilyError("custom specs have no closed corank; use rank()")


def det_closed(spec: FamilySpec) -> Optional[int]:
    """Closed determinant value, or None where no closed value is stated."""
    if spec.kind is Family.CUSTOM:
        raise UnsupportedFamilyError("custom specs have no closed determinant")
    n, r = spec.n, spec.r
    c = corank_closed(spec)
    if c > 0:
        return 0
    if spec.kind is Family.DIPPER_DONKIN:
        return 1
    if spec.kind is Family.FRT:
        s = gcd(n, r)
        return 2 ** ((r - 1) * (n - 1) + s - 1)
    return None


@dataclass(frozen=True)
class BlockCountReport:
    ones: int
    twos: int
    fours: int
    corank: int
    det_d: int

    @property
    def total_blocks(self) -> int:
        return self.ones + self.twos + self.fours


def block_counts_closed(spec: FamilySpec) -> BlockCountReport:
    """Counts of 1-, 2- and 4-blocks in the canonical skew form."""
    if spec.kind is Family.CUSTOM:
        raise UnsupportedFamilyError("custom specs: use skew_normal_form directly")
    n, r = spec.n, spec.r
    c = corank_closed(spec)
    size = spec.size
    if spec.kind in (Family.DIPPER_DONKIN, Family.COMBINED_I, Family.COMBINED_II):
        ones, twos, fours = (size - c) // 2, 0, 0
    elif spec.kind is Family.FRT:
        s = gcd(n, r)
        d0 = (n + r - 1) // 2
        fours = 0 if c else (s - 1) // 2
        twos = (size - c) // 2 - d0 - fours
        ones = d0
    else:  # extended
        s = gcd(n, r)
        ones = n + r - 1
        twos = ((n - 1) * (r - 1) - s + 1) // 2
        fours = 0
    report = BlockCountReport(
        ones=ones, twos=twos, fours=fours, corank=c, det_d=4**twos * 16**fours
    )
    if 2 * report.total_blocks + c != size:
        raise AssertionError(f"inconsistent block counts for {spec}")
    return report


def degree_at_root(spec: FamilySpec, m: int) -> int:
    """P.I. degree at a primitive m-th root of the deformation parameter.

    Computed as the product of m / gcd(d_i, m) over the invariant block
    values d_i; zero modes contribute nothing.  For even m the usual parity
    caveats of the specialization apply; the formula is used as is.
    """
    if m < 2:
        raise ValueError("root order must be >= 2")
    form = skew_normal_form(build_H(spec))
    deg = 1
    for d in form.block_values:
        deg *= m // gcd(d, m)
    return deg


# ---------------------------------------------------------------------------
# inverse of H
# ---------------------------------------------------------------------------


def _assemble(n: int, block) -> RatMatrix:
    """Assemble an n x n grid of r x r rational blocks from block(alpha, beta)."""
    return block_assemble_rat(
        [[block(al, be) for be in range(1, n + 1)] for al in range(1, n + 1)]
    )


def _is_full_rank(spec: FamilySpec) -> bool:
    if spec.kind in (Family.CUSTOM,):
        f = build_F(spec)
        return inverse(f) is not None
    return corank_closed(spec) == 0


def inverse_H_closed(spec: FamilySpec) -> Optional[RatMatrix]:
    """Closed-form inverse of the defining matrix; None when singular."""
    if spec.kind is Family.EXTENDED:
        raise UnsupportedFamilyError("no closed inverse for the extended matrix")
    if not _is_full_rank(spec):
        return None
    n, r = spec.n, spec.r
    if spec.kind is Family.DIPPER_DONKIN and n == r:
        return _inverse_dd_square_even(n)
    if spec.kind is Family.DIPPER_DONKIN and n == r + 1:
        return _inverse_dd_n_r_plus_1(r)
    if spec.kind is Family.FRT:
        return _inverse_frt_full_rank(n, r)
    return _inverse_generic(spec)


def _inverse_dd_square_even(n: int) -> RatMatrix:
    # entries depend only on (b - a) mod (r + 1); residue 1 -> 0,
    # odd residues 3..r+1 -> 1, even residues -> -1
    r = n
    size = n * r

    def val(diff: int) -> int:
        cls = diff % (r + 1)
        if cls == 0:
            cls = r + 1
        if cls == 1:
            return 0
        return 1 if cls % 2 else -1

    rows = []
    for a in range(1, size + 1):
        rows.append(
            [0 if a == b else (val(b - a) if b > a else -val(a - b)) for b in range(1, size + 1)]
        )
    return RatMatrix(rows)


def _inverse_dd_n_r_plus_1(r: int) -> RatMatrix:
    n = r + 1
    x = x_companion(r).to_rat()
    t = t_shift(r).to_rat()
    eye = RatMatrix.identity(r)
    diag = (eye + x.pow(-1)) * (eye - t)
    cache = {}

    def lower(al, be):  # alpha > beta
        key = be - al
        if key not in cache:
            cache[key] = x.pow(be - al - 1) * (eye - t)
        return cache[key]

    def block(al, be):
        if al == be:
            return diag
        if al > be:
            return lower(al, be)
        return -lower(be, al).transpose()

    return _assemble(n, block)


def _inverse_frt_full_rank(n: int, r: int) -> RatMatrix:
    s = s_cycle(r).to_rat()
    eye = RatMatrix.identity(r)
    ipn = inverse(eye + s.pow(n))
    if ipn is None:
        raise AssertionError("I + S^n singular in a full-rank FRT case")
    diag = ((eye - s) * (eye + s.pow(n - 1)) * ipn).scale("1/2")
    w = (eye - s) * (eye - s) * ipn

    def lower(al, be):  # alpha > beta
        return (s.pow(n + be - al - 1) * w).scale("1/2")

    def block(al, be):
        if al == be:
            return diag
        if al > be:
            return lower(al, be)
        return -lower(be, al).transpose()

    return _assemble(n, block)


def _inverse_generic(spec: FamilySpec) -> Optional[RatMatrix]:
    # blocks of the inverse in terms of X, F and (A-N)^{-1}
    a, m, nn = spec.blocks()
    an = inverse(a - nn)
    if an is None:
        raise AssumptionError("A - N is singular")
    x = an * (a - m).to_rat()
    f = build_F(spec)
    finv = inverse(f)
    if finv is None:
        return None
    n, r = spec.n, spec.r
    eye = RatMatrix.identity(r)
    nrat = nn.to_rat()
    xp = [eye]
    for _ in range(n):
        xp.append(xp[-1] * x)

    def block(al, be):
        if al == be:
            return (eye - xp[n - al] * finv * nrat * xp[al - 1]) * an
        if al > be:
            return -(xp[n - al] * finv * nrat * xp[be - 1]) * an
        return -block(be, al).transpose()

    return _assemble(n, block)


# ---------------------------------------------------------------------------
# inverse of Lambda
# ---------------------------------------------------------------------------


def inverse_Lambda_closed(spec: FamilySpec) -> Optional[RatMatrix]:
    """Closed-form inverse of the quasi-commutation matrix; None when singular
    or for families without a stated closed form."""
    if spec.kind is Family.DIPPER_DONKIN:
        if corank_closed(spec) > 0:
            return None
        return _inverse_lambda_dd(spec.n, spec.r)
    if spec.kind is Family.FRT:
        if corank_closed(spec) > 0:
            return None
        return _inverse_lambda_frt(spec.n, spec.r)
    return None


def _e_unit_rat(r: int, i: int, j: int) -> RatMatrix:
    return IntMatrix.unit(r, r, i, j).to_rat()


def _inverse_lambda_dd(n: int, r: int) -> RatMatrix:
    x = x_companion(r).to_rat()
    t = t_shift(r).to_rat()
    eye = RatMatrix.identity(r)
    err = _e_unit_rat(r, r, r)
    g = (eye - x) * inverse(x - x.pow(n))  # (I-X)/(X-X^n)
    p_n = -(x.pow(n - 1) * g)

    # correction to the subdiagonal blocks; vanishes when (P_n)_rr = -1
    sub_corr = err.scale(1 + p_n[r - 1, r - 1])

    def lower(al, be):  # alpha > beta
        if al < n and be == al - 1:
            return eye - t.transpose() - sub_corr
        if al < n:  # n > alpha > beta + 1
            scalar = (x.pow(n + be - al) * g)[r - 1, r - 1]
            return err.scale(scalar)
        if be == n - 1:  # alpha = n
            return -(p_n * err) - t.transpose() + eye - err
        return (x.pow(be) * g) * err  # alpha = n, beta < n-1

    def block(al, be):
        if al == be:
            if al == n:
                return (p_n + eye) * (eye - t)
            return t.transpose() - t
        if al > be:
            return lower(al, be)
        return -lower(be, al).transpose()

    return _assemble(n, block)


def _inverse_lambda_frt(n: int, r: int) -> RatMatrix:
    s = s_cycle(r).to_rat()
    t = t_shift(r).to_rat()
    eye = RatMatrix.identity(r)
    err = _e_unit_rat(r, r, r)
    e1r = _e_unit_rat(r, 1, r)
    ipn = inverse(eye + s.pow(n))
    if ipn is None:
        raise AssertionError("I + S^n singular in a full-rank FRT case")
    w = (eye - s) * (eye - s) * ipn
    h_diag = ((eye - s) * (eye + s.pow(n - 1)) * ipn).scale("1/2")

    def h_lower(al, be):  # block of H^{-1} for alpha > beta
        return (s.pow(n + be - al - 1) * w).scale("1/2")

    def lower(al, be):  # alpha > beta
        if al == n and be == n - 1:
            return (
                -((eye + s.pow(n - 1)) * ipn * (e1r + err)).scale("1/2")
                - (s.pow(-1) - eye).scale("1/2")
            )
        if al == n:  # beta < n-1
            return -(s.pow(be) * w).scale("1/2") * e1r
        if be == al - 1:
            scalar = h_lower(al, be)[0, 0]
            return err.scale(scalar) - (t.transpose() - eye + err).scale("1/2")
        scalar = h_lower(al, be)[0, 0]  # n > alpha > beta + 1
        return err.scale(scalar)

    def block(al, be):
        if al == be:
            if al == n:
                return h_diag
            return (t.transpose() - t).scale("1/2")
        if al > be:
            return lower(al, be)
        return -lower(be, al).transpose()

    return _assemble(n, block)


# ---------------------------------------------------------------------------
# partial left inverse (Dipper-Donkin, n = r odd)
# ---------------------------------------------------------------------------


def partial_left_inverse_dd(n: int) -> tuple:
    """(Z_n, residual) with Z_n K2 H = I + residual for the odd square case.

    The residual is supported on the last block column: blocks
    -X^(n-alpha) E-tilde and corner -E-tilde, witnessing rank deficiency 1.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("partial left inverse requires odd n = r >= 3")
    spec = FamilySpec(Family.DIPPER_DONKIN, n, n)
    x = x_companion(n)
    t = t_shift(n)
    eye = IntMatrix.identity(n)
    it_inv = inverse(eye + t).to_int()
    v = it_inv * u_odd_pattern(n) * x
    zero = IntMatrix.zeros(n, n)
    grid = []
    for al in range(1, n):
        row = [eye if be == al else zero for be in range(1, n)]
        row.append(x.pow(n - al) * v)
        grid.append(row)
    grid.append([zero] * (n - 1) + [v])
    z_n = block_assemble(grid)

    k2, _ = build_K2_H4(spec)
    product = (z_n.to_rat() * k2 * build_H(spec).to_rat()).to_int()

    et = e_tilde(n)
    expected_grid = []
    for al in range(1, n):
        row = [eye if be == al else zero for be in range(1, n)]
        row.append(-(x.pow(n - al) * et))
        expected_grid.append(row)
    expected_grid.append([zero] * (n - 1) + [eye - et])
    expected = block_assemble(expected_grid)
    if product != expected:
        raise AssertionError("Z_n K2 H does not match the expected partial identity")
    residual = product - IntMatrix.identity(n * n)
    return z_n, residual


# ---------------------------------------------------------------------------
# kernels and centers
# ---------------------------------------------------------------------------


def _f_kernel_vectors(spec: FamilySpec) -> List[tuple]:
    """Integer basis of the kernel of F for the DD and FRT families."""
    n, r = spec.n, spec.r
    if spec.kind is Family.DIPPER_DONKIN:
        s = gcd(n - 1, r + 1)
        if s == 1:
            return []
        y = (r + 1) // s
        vecs = []
        for i in range(1, s):
            v = [0] * r
            for k in range(y):
                v[i + k * s - 1] += 1
            for k in range(1, y):
                v[k * s - 1] -= 1
            vecs.append(tuple(v))
        return vecs
    if spec.kind is Family.FRT:
        s = gcd(n, r)
        if not ((n // s) % 2 and (r // s) % 2):
            return []
        y = r // s
        vecs = []
        for i in range(1, s + 1):
            v = [0] * r
            for ell in range(y):
                v[i + ell * s - 1] += (-1) ** ell
            vecs.append(tuple(v))
        return vecs
    raise UnsupportedFamilyError("closed kernels cover the DD and FRT families only")


def _x_matrix(spec: FamilySpec) -> IntMatrix:
    return s_cycle(spec.r) if spec.kind is Family.FRT else x_companion(spec.r)


def _h_kernel_vector(spec: FamilySpec, v: tuple) -> tuple:
    # block beta of the kernel vector is X^(n-beta) v
    x = _x_matrix(spec)
    col = IntMatrix([[c] for c in v])
    out = []
    for be in range(1, spec.n + 1):
        out.extend((x.pow(spec.n - be) * col).column(0))
    return tuple(out)


def _lambda_kernel_vector(spec: FamilySpec, v: tuple) -> tuple:
    # block n is v itself; block beta <= n-1 is (X - T) X^(n-beta-1) v
    x = _x_matrix(spec)
    xt = x - t_shift(spec.r)
    col = IntMatrix([[c] for c in v])
    out = []
    for be in range(1, spec.n):
        out.extend((xt * x.pow(spec.n - be - 1) * col).column(0))
    out.extend(v)
    return tuple(out)


def _certify_in_kernel(mat: IntMatrix, vec: tuple, what: str):
    col = IntMatrix([[c] for c in vec])
    prod = mat * col
    if any(x for row in prod.data for x in row):
        raise AssertionError(f"{what} vector is not in the kernel")


def kernel_closed(spec: FamilySpec) -> tuple:
    """(kernel of H, kernel of Lambda) built from the F-nullspace vectors."""
    vecs = _f_kernel_vectors(spec)
    if not vecs:
        return KernelBasis((), 0), KernelBasis((), 0)
    h = build_H(spec)
    tt, _ = build_T_basis(spec.n, spec.r)
    lam = tt.transpose() * h * tt
    h_vecs = []
    l_vecs = []
    for v in vecs:
        hv = _h_kernel_vector(spec, v)
        lv = _lambda_kernel_vector(spec, v)
        _certify_in_kernel(h, hv, "closed-form H-kernel")
        _certify_in_kernel(lam, lv, "closed-form Lambda-kernel")
        h_vecs.append(hv)
        l_vecs.append(lv)
    return (
        KernelBasis(tuple(h_vecs), len(h_vecs)),
        KernelBasis(tuple(l_vecs), len(l_vecs)),
    )


@dataclass(frozen=True)
class CenterGenerator:
    """Exponent vector of a central Laurent monomial in the minor family."""

    exponents: tuple
    label: str


def _format_label(spec: FamilySpec, exps: tuple) -> str:
    sym = "xi" if spec.kind is Family.FRT else "chi"
    parts = []
    for idx, e in enumerate(exps):
        if e == 0:
            continue
        al, j = divmod(idx, spec.r)
        pos = f"{sym}[{al + 1},{j + 1}]"
        parts.append(pos if e == 1 else f"{pos}^{e}")
    return "*".join(parts) if parts else "1"


def _transpose_positions(spec: FamilySpec, exps: tuple) -> tuple:
    n, r = spec.n, spec.r
    out = [0] * (n * r)
    for idx, e in enumerate(exps):
        al, j = divmod(idx, r)
        out[j * r + al] = e
    return tuple(out)


def center_generators(spec: FamilySpec) -> List[CenterGenerator]:
    """Generators of the center of the Laurent minor algebra, as exponent
    vectors over the minor positions; empty in the full-rank cases."""
    n, r = spec.n, spec.r
    if spec.kind is Family.DIPPER_DONKIN:
        s = gcd(n - 1, r + 1)
        if s == 1:
            return []
        if n == r and n % 2 == 1:
            exps = [0] * (n * r)
            for gamma in range(1, n + 1):
                exps[(gamma - 1) * r + (n - 1)] += (-1) ** gamma
            for k in range(1, n):
                exps[(n - 1) * r + (k - 1)] += (-1) ** k
            gens = [tuple(exps)]
        else:
            x = (n - 1) // s
            y = (r + 1) // s
            gens = []
            for i in range(1, s):
                exps = [0] * (n * r)
                for k in range(x):
                    exps[(n - 1 - k * s - 1) * r + (r - 1)] -= 1
                    exps[(n - 1 - i - k * s - 1) * r + (r - 1)] += 1
                for k in range(1, y):
                    exps[(n - 1) * r + (k * s - 1)] -= 1
                for k in range(y):
                    exps[(n - 1) * r + (i + k * s - 1)] += 1
                gens.append(tuple(exps))
    elif spec.kind is Family.FRT:
        vecs = _f_kernel_vectors(spec)
        gens = []
        for v in vecs:
            b = _lambda_kernel_vector(spec, v)
            gens.append(_transpose_positions(spec, b) if n == r else b)
    else:
        raise UnsupportedFamilyError("centers are stated for the DD and FRT families")

    h = build_H(spec)
    tt, _ = build_T_basis(n, r)
    lam = tt.transpose() * h * tt
    out = []
    for exps in gens:
        _certify_in_kernel(lam, exps, "center generator")
        out.append(CenterGenerator(exponents=exps, label=_format_label(spec, exps)))
    return out
