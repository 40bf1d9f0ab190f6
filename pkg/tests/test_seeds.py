from fractions import Fraction

import pytest

from qseed.exactmat import IntMatrix, RatMatrix, inverse, rank
from qseed.families import Family, FamilySpec, build_H, build_T_basis
from qseed.seeds import (
    build_lambda,
    compatible_pair,
    default_frozen_positions,
    left_reduce,
    truncate_nonmutable,
)

DD = Family.DIPPER_DONKIN
FRT = Family.FRT


def test_build_lambda_dd44_first_row():
    lam = build_lambda(FamilySpec(DD, 4, 4))
    assert lam.data[0] == (0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0)


def test_build_lambda_1x1():
    assert build_lambda(FamilySpec(DD, 1, 1)) == IntMatrix([[0]])


@pytest.mark.parametrize("fam", [DD, FRT, Family.COMBINED_I, Family.COMBINED_II])
def test_build_lambda_skew_and_rank(fam):
    for n in range(2, 7):
        for r in range(2, 7):
            spec = FamilySpec(fam, n, r)
            lam = build_lambda(spec)
            assert lam.is_skew_symmetric()
            assert rank(lam) == rank(build_H(spec))


def test_left_reduce_invertible():
    h = build_H(FamilySpec(DD, 4, 4))
    red = left_reduce(h)
    assert red.s == 0 and red.Y is None
    assert red.K == inverse(h)


@pytest.mark.parametrize("fam,n,r,s", [(DD, 3, 3, 1), (FRT, 2, 2, 2)])
def test_left_reduce_shape(fam, n, r, s):
    h = build_H(FamilySpec(fam, n, r))
    red = left_reduce(h)
    assert red.s == s
    prod = red.K * h.to_rat()
    size = n * r
    for i in range(size):
        for j in range(size):
            if i < size - s and j < size - s:
                assert prod[i, j] == (1 if i == j else 0)
            elif i >= size - s:
                assert prod[i, j] == 0
            else:
                assert prod[i, j] == red.Y[i, j - (size - s)]


@pytest.mark.parametrize("fam", [DD, FRT])
def test_compatible_pair_sweep(fam):
    for n in range(2, 6):
        for r in range(2, 6):
            spec = FamilySpec(fam, n, r)
            pair = compatible_pair(spec)  # certified at construction
            assert pair.c == rank(build_H(spec))
            pair.certify()


def test_full_rank_pair_is_twice_inverse_transpose():
    spec = FamilySpec(DD, 4, 4)
    pair = compatible_pair(spec)
    lam_inv = inverse(build_lambda(spec))
    assert pair.b_tilde == lam_inv.transpose().scale(2)


def test_truncation_default_covariant():
    spec = FamilySpec(DD, 4, 4)
    pair = compatible_pair(spec)
    truncated = truncate_nonmutable(pair, spec=spec)
    assert truncated.b_tilde.rows == 16 and truncated.b_tilde.cols == 9
    frozen = default_frozen_positions(4, 4)
    assert len(frozen) == 4 + 4 - 1


def test_truncation_empty_frozen_is_identity():
    spec = FamilySpec(FRT, 3, 2)
    pair = compatible_pair(spec)
    assert truncate_nonmutable(pair, frozen=()).b_tilde == pair.b_tilde


def test_truncation_rejects_freezing_everything():
    spec = FamilySpec(DD, 3, 3)
    pair = compatible_pair(spec)
    with pytest.raises(ValueError):
        truncate_nonmutable(pair, frozen=tuple(range(9)))


def test_singular_case_certification():
    pair = compatible_pair(FamilySpec(DD, 3, 3))
    assert pair.c == 8
    prod = pair.lam.to_rat() * pair.b_tilde
    for i in range(9):
        for j in range(8):
            assert prod[i, j] == (Fraction(-2) if i == j else Fraction(0))


def test_block_params_must_satisfy_constraint():
    spec = FamilySpec(DD, 3, 3)
    red = left_reduce(build_H(spec))
    tt, _ = build_T_basis(3, 3)
    a = RatMatrix([row[:8] for row in tt.to_rat().data[:8]])
    d = RatMatrix([[1]])
    good = -(red.Y * d)
    pair = compatible_pair(spec, block_params=(a, good, d))
    pair.certify()
    bad = RatMatrix([[x[0] + 1] for x in good.data])
    with pytest.raises(ValueError, match="residual"):
        compatible_pair(spec, block_params=(a, bad, d))


def test_block_params_rejected_in_full_rank():
    spec = FamilySpec(DD, 2, 2)
    with pytest.raises(ValueError):
        compatible_pair(spec, block_params=(RatMatrix([[1]]),) * 3)


def test_basis_change_upper_triangular():
    pair = compatible_pair(FamilySpec(FRT, 2, 2))
    t = pair.basis_change
    for i in range(t.rows):
        for j in range(i):
            assert t[i, j] == 0
    assert inverse(t) is not None
