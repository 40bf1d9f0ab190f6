"""Canonical block-diagonal form of skew-symmetric integer matrices.

A skew-symmetric integer matrix J is congruent, by a unimodular L, to
Diag((0 d1; -d1 0), ..., (0 dk; -dk 0), 0, ..., 0) with d1 | d2 | ... | dk.
The block values are invariants of J; they control the degrees of the
associated algebras at roots of unity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmat import IntMatrix, det


class NotSkewSymmetricError(ValueError):
    pass


@dataclass(frozen=True)
class SkewForm:
    transform: IntMatrix
    block_values: tuple
    corank: int

    def canonical_matrix(self) -> IntMatrix:
        """The block-diagonal matrix transform^t * J * transform."""
        n = 2 * len(self.block_values) + self.corank
        m = [[0] * n for _ in range(n)]
        for k, d in enumerate(self.block_values):
            m[2 * k][2 * k + 1] = d
            m[2 * k + 1][2 * k] = -d
        return IntMatrix(m)


class _Worker:
    """Mutable congruence-reduction state: a = L^t J L throughout."""

    def __init__(self, j: IntMatrix):
        self.n = j.rows
        self.a = [list(r) for r in j.data]
        self.L = [[int(i == k) for k in range(self.n)] for i in range(self.n)]

    # every column operation is mirrored on rows, keeping a = L^t J L

    def swap(self, i: int, k: int):
        if i == k:
            return
        a, L = self.a, self.L
        for row in a:
            row[i], row[k] = row[k], row[i]
        a[i], a[k] = a[k], a[i]
        for row in L:
            row[i], row[k] = row[k], row[i]

    def add(self, i: int, k: int, c: int):
        """col_i += c * col_k (and row_i += c * row_k)."""
        if c == 0:
            return
        if i == k:
            raise ValueError("cannot add a column to itself under congruence")
        a, L = self.a, self.L
        for row in a:
            row[i] += c * row[k]
        rk = a[k]
        ri = a[i]
        for t in range(self.n):
            ri[t] += c * rk[t]
        for row in L:
            row[i] += c * row[k]

    def negate(self, i: int):
        a, L = self.a, self.L
        for row in a:
            row[i] = -row[i]
        a[i] = [-x for x in a[i]]
        for row in L:
            row[i] = -row[i]

    def _min_entry(self, p: int):
        best = None
        best_val = 0
        a = self.a
        for i in range(p, self.n):
            row = a[i]
            for k in range(p, self.n):
                v = abs(row[k])
                if v and (best is None or v < best_val):
                    best = (i, k)
                    best_val = v
                    if v == 1:
                        return best
        return best

    def reduce_from(self, p: int):
        """Clear everything beyond column p+1 against the pivot pair (p, p+1)."""
        n = self.n
        while p < n - 1:
            pos = self._min_entry(p)
            if pos is None:
                return p
            i, k = pos
            self.swap(p, i)
            if k == p:
                k = i
            self.swap(p + 1, k)
            if self.a[p][p + 1] < 0:
                self.negate(p + 1)
            # clear rows p and p+1 beyond the pivot pair
            while True:
                pv = self.a[p][p + 1]
                restart = False
                for t in range(p + 2, n):
                    v = self.a[p][t]
                    if v:
                        q = v // pv
                        self.add(t, p + 1, -q)
                        if self.a[p][t]:
                            # remainder smaller than pivot: promote it
                            self.swap(p + 1, t)
                            if self.a[p][p + 1] < 0:
                                self.negate(p + 1)
                            restart = True
                            break
                if restart:
                    continue
                for t in range(p + 2, n):
                    v = self.a[p + 1][t]
                    if v:
                        q = v // pv
                        self.add(t, p, q)
                        if self.a[p + 1][t]:
                            # move the smaller remainder into row p, then restart
                            self.swap(p, p + 1)
                            self.negate(p)  # fix the sign flipped by the pair swap
                            self.swap(p + 1, t)
                            if self.a[p][p + 1] < 0:
                                self.negate(p + 1)
                            restart = True
                            break
                if not restart:
                    break
            p += 2
        return p

    def block_values(self):
        return [self.a[2 * t][2 * t + 1] for t in range(self._nblocks())]

    def _nblocks(self):
        k = 0
        while 2 * k + 1 < self.n and self.a[2 * k][2 * k + 1] != 0:
            k += 1
        return k

    def sort_blocks(self):
        # selection sort on blocks via pair swaps
        vals = self.block_values()
        for t in range(len(vals)):
            m = min(range(t, len(vals)), key=lambda s: vals[s])
            if m != t:
                self.swap(2 * t, 2 * m)
                self.swap(2 * t + 1, 2 * m + 1)
                vals[t], vals[m] = vals[m], vals[t]

    def merge_pair(self, t: int):
        """Couple adjacent blocks t and t+1 so a re-reduction yields (gcd, lcm)."""
        self.add(2 * t, 2 * t + 2, 1)


def skew_normal_form(j: IntMatrix) -> SkewForm:
    """Unimodular congruence reduction of a skew-symmetric integer matrix.

    Repeatedly moves a nonzero entry of minimal absolute value into the pivot
    2x2 block and clears its two rows/columns by congruence-preserving integer
    operations; adjacent blocks violating the divisor chain are coupled and
    re-reduced until d1 | d2 | ... | dk holds.
    """
    if not j.is_skew_symmetric():
        raise NotSkewSymmetricError("input is not skew-symmetric")
    w = _Worker(j)
    w.reduce_from(0)
    while True:
        w.sort_blocks()
        vals = w.block_values()
        bad = next(
            (t for t in range(len(vals) - 1) if vals[t + 1] % vals[t] != 0), None
        )
        if bad is None:
            break
        w.merge_pair(bad)
        w.reduce_from(2 * bad)
    vals = tuple(w.block_values())
    corank = w.n - 2 * len(vals)
    transform = IntMatrix(w.L)
    form = SkewForm(transform=transform, block_values=vals, corank=corank)
    _certify(j, form)
    return form


def _certify(j: IntMatrix, form: SkewForm):
    if det(form.transform) not in (1, -1):
        raise AssertionError("congruence transform is not unimodular")
    lt = form.transform.transpose()
    if lt * j * form.transform != form.canonical_matrix():
        raise AssertionError("congruence identity failed")
    vals = form.block_values
    if any(d <= 0 for d in vals):
        raise AssertionError("non-positive block value")
    if any(vals[t + 1] % vals[t] for t in range(len(vals) - 1)):
        raise AssertionError("divisor chain violated")
