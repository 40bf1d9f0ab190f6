import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qseed.exactmat import IntMatrix, det
from qseed.families import Family, FamilySpec, build_H
from qseed.skewform import NotSkewSymmetricError, skew_normal_form


def skew_strategy(n_max=8, bound=6):
    def build(args):
        n, uppers = args
        m = [[0] * n for _ in range(n)]
        it = iter(uppers)
        for i in range(n):
            for j in range(i + 1, n):
                v = next(it)
                m[i][j] = v
                m[j][i] = -v
        return IntMatrix(m)

    return (
        st.integers(1, n_max)
        .flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.lists(
                    st.integers(-bound, bound),
                    min_size=n * (n - 1) // 2,
                    max_size=n * (n - 1) // 2,
                ),
            )
        )
        .map(build)
    )


def test_rejects_non_skew():
    with pytest.raises(NotSkewSymmetricError):
        skew_normal_form(IntMatrix([[0, 1], [1, 0]]))


def test_already_canonical():
    f = skew_normal_form(IntMatrix([[0, 1], [-1, 0]]))
    assert f.block_values == (1,) and f.corank == 0


def test_dd_44_all_unit_blocks():
    f = skew_normal_form(build_H(FamilySpec(Family.DIPPER_DONKIN, 4, 4)))
    assert f.block_values == (1,) * 8 and f.corank == 0


def test_frt_33_blocks():
    f = skew_normal_form(build_H(FamilySpec(Family.FRT, 3, 3)))
    assert f.block_values == (1, 1, 2) and f.corank == 3


@settings(max_examples=200, derandomize=True, deadline=None)
@given(skew_strategy())
def test_invariants_and_fixpoint(j):
    form = skew_normal_form(j)
    # unimodular congruence transform
    assert det(form.transform) in (1, -1)
    assert (
        form.transform.transpose() * j * form.transform == form.canonical_matrix()
    )
    # divisor chain
    vals = form.block_values
    assert all(d > 0 for d in vals)
    assert all(vals[t + 1] % vals[t] == 0 for t in range(len(vals) - 1))
    assert 2 * len(vals) + form.corank == j.rows
    # canonical output is a fixpoint
    again = skew_normal_form(form.canonical_matrix())
    assert again.block_values == vals and again.corank == form.corank


@settings(max_examples=200, derandomize=True, deadline=None)
@given(skew_strategy(n_max=6))
def test_block_product_matches_determinant(j):
    form = skew_normal_form(j)
    if form.corank == 0:
        p = 1
        for d in form.block_values:
            p *= d
        assert p * p == abs(det(j))
    else:
        assert det(j) == 0
