"""Quantum minors, monomial-map twists and the quasi-commutation matrix.

A monomial map attaches to each generator position (alpha, j) a Laurent
monomial in the R/C operators; the twisted generators W[a,j] = Z[a,j]*M[a,j]
span the twisted matrix algebra.  Quantum minors of the twisted family are
normalized to be fixed by the bar involution; their pairwise q-commutation
exponents assemble the skew matrix Lambda, which the change-of-basis identity
Lambda = TT^t H TT reproduces purely combinatorially.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .exactmat import IntMatrix
from .families import Family, FamilySpec, build_H
from .ncalg import LaurentScalar, NCPoly, PqAlgebra

DEFAULT_SYMBOLIC_CAP = 3


@dataclass(frozen=True)
class MinorId:
    """Row and column index sets of a quantum minor (1-based, increasing)."""

    rows: tuple
    cols: tuple

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        if len(rows) != len(cols) or not rows:
            raise ValueError("row and column sets must have equal size >= 1")
        if any(rows[i] >= rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError("row indices must be strictly increasing")
        if any(cols[i] >= cols[i + 1] for i in range(len(cols) - 1)):
            raise ValueError("column indices must be strictly increasing")

    @property
    def order(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class MonomialMap:
    """Per-position R/C exponent vectors of the twisting monomials."""

    n: int
    r: int
    rexps: tuple  # rexps[(alpha-1)*r + j-1]: tuple of length n
    cexps: tuple  # cexps[(alpha-1)*r + j-1]: tuple of length r

    def rvec(self, alpha: int, j: int) -> tuple:
        return self.rexps[(alpha - 1) * self.r + j - 1]

    def cvec(self, alpha: int, j: int) -> tuple:
        return self.cexps[(alpha - 1) * self.r + j - 1]

    def phi(self, alpha: int, j: int, beta: int, i: int) -> int:
        """Exponent in M[alpha,j] Z[beta,i] = q^phi Z[beta,i] M[alpha,j]."""
        return self.rvec(alpha, j)[beta - 1] + self.cvec(alpha, j)[i - 1]


def trivial_map(n: int, r: int) -> MonomialMap:
    zero_r = (0,) * n
    zero_c = (0,) * r
    return MonomialMap(n, r, (zero_r,) * (n * r), (zero_c,) * (n * r))


def dd_map(n: int, r: int) -> MonomialMap:
    """M[a,j] = R[a+1]...R[n] * C[j+1]^-1...C[r]^-1."""
    rexps = []
    cexps = []
    for alpha in range(1, n + 1):
        for j in range(1, r + 1):
            rexps.append(tuple(1 if beta > alpha else 0 for beta in range(1, n + 1)))
            cexps.append(tuple(-1 if i > j else 0 for i in range(1, r + 1)))
    return MonomialMap(n, r, tuple(rexps), tuple(cexps))


@dataclass(frozen=True)
class MapViolation:
    equation: str
    witness: dict


def validate_monomial_map(map_: MonomialMap, samples: int = 50, seed: int = 7):
    """None when the map satisfies all standing assumptions, else the first
    violation with witnesses."""
    n, r = map_.n, map_.r
    # exchange identity between positions sharing rows/columns
    for a in range(1, n + 1):
        for g in range(a, n + 1):
            for j in range(1, r + 1):
                for k in range(j, r + 1):
                    r_lhs = tuple(
                        x + y for x, y in zip(map_.rvec(a, j), map_.rvec(g, k))
                    )
                    r_rhs = tuple(
                        x + y for x, y in zip(map_.rvec(a, k), map_.rvec(g, j))
                    )
                    c_lhs = tuple(
                        x + y for x, y in zip(map_.cvec(a, j), map_.cvec(g, k))
                    )
                    c_rhs = tuple(
                        x + y for x, y in zip(map_.cvec(a, k), map_.cvec(g, j))
                    )
                    if r_lhs != r_rhs or c_lhs != c_rhs:
                        return MapViolation(
                            "exchange", {"positions": ((a, j), (g, k))}
                        )
    # factorization into row-indexed and column-indexed parts
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for j in range(1, r + 1):
                for i in range(1, r + 1):
                    r_lhs = tuple(
                        x + y for x, y in zip(map_.rvec(a, j), map_.rvec(b, i))
                    )
                    r_rhs = tuple(
                        x + y for x, y in zip(map_.rvec(a, i), map_.rvec(b, j))
                    )
                    c_lhs = tuple(
                        x + y for x, y in zip(map_.cvec(a, j), map_.cvec(b, i))
                    )
                    c_rhs = tuple(
                        x + y for x, y in zip(map_.cvec(a, i), map_.cvec(b, j))
                    )
                    if r_lhs != r_rhs or c_lhs != c_rhs:
                        return MapViolation(
                            "factorization", {"positions": ((a, j), (b, i))}
                        )
    # diagonal exponents vanish
    for a in range(1, n + 1):
        for j in range(1, r + 1):
            if map_.phi(a, j, a, j) != 0:
                return MapViolation(
                    "diagonal", {"position": (a, j), "phi": map_.phi(a, j, a, j)}
                )
    # sampled permutation independence of conjugation exponents
    rng = random.Random(seed)
    s_max = min(n, r)
    for _ in range(samples):
        s = rng.randint(1, s_max)
        rows = sorted(rng.sample(range(1, n + 1), s))
        cols = sorted(rng.sample(range(1, r + 1), s))
        beta = rng.randint(1, n)
        t = rng.randint(1, r)
        ref_psi = None
        ref_sum = None
        for sigma in itertools.permutations(range(s)):
            psi = sum(map_.phi(beta, t, rows[i], cols[sigma[i]]) for i in range(s))
            rsum = [0] * n
            csum = [0] * r
            for i in range(s):
                rv = map_.rvec(rows[i], cols[sigma[i]])
                cv = map_.cvec(rows[i], cols[sigma[i]])
                rsum = [x + y for x, y in zip(rsum, rv)]
                csum = [x + y for x, y in zip(csum, cv)]
            phi_total = sum(
                rsum[b - 1] + csum[i - 1]
                for (b, i) in [(beta, t)]
            )
            if ref_psi is None:
                ref_psi, ref_sum = psi, (tuple(rsum), tuple(csum), phi_total)
            elif psi != ref_psi or (tuple(rsum), tuple(csum), phi_total) != ref_sum:
                return MapViolation(
                    "permutation-independence",
                    {"rows": rows, "cols": cols, "sigma": sigma},
                )
    return None


def _inversions(perm: tuple) -> int:
    return sum(
        1
        for i in range(len(perm))
        for k in range(i + 1, len(perm))
        if perm[i] > perm[k]
    )


def xi_minor(alg: PqAlgebra, minor: MinorId) -> NCPoly:
    """Untwisted quantum minor: sum over permutations of (-q)^l(sigma) words."""
    m = minor.order
    if m > min(alg.n, alg.r):
        raise ValueError("minor order exceeds matrix dimensions")
    terms = {}
    for sigma in itertools.permutations(range(m)):
        word = tuple((minor.rows[i], minor.cols[sigma[i]]) for i in range(m))
        ell = _inversions(sigma)
        sc = LaurentScalar.q_power(ell, (-1) ** ell)
        mono = alg.monomial(word, coeff=sc)
        [(key, val)] = mono.terms.items()
        terms[key] = val
    return NCPoly(terms)


def xi_minor_by_columns(alg: PqAlgebra, minor: MinorId) -> NCPoly:
    """Column-ordered expansion of the same minor (equal to xi_minor)."""
    m = minor.order
    out = alg.zero()
    for tau in itertools.permutations(range(m)):
        word = tuple((minor.rows[tau[i]], minor.cols[i]) for i in range(m))
        ell = _inversions(tau)
        sc = LaurentScalar.q_power(ell, (-1) ** ell)
        out = alg.add(out, alg.normal_form(alg.monomial(word, coeff=sc)))
    return out


def quantum_minor(
    alg: PqAlgebra, minor: MinorId, map_: Optional[MonomialMap] = None
) -> NCPoly:
    """Bar-invariant quantum minor of the (possibly twisted) family.

    Without a map this is the plain minor.  With a map, the minor is
    multiplied on the right by the product of the twisting monomials over its
    diagonal positions and rescaled by the unique q-power that makes the
    result fixed under the bar involution.
    """
    xi = xi_minor(alg, minor)
    if map_ is None:
        return xi
    if (map_.n, map_.r) != (alg.n, alg.r):
        raise ValueError("monomial map dimensions do not match the algebra")
    rtail = [0] * alg.n
    ctail = [0] * alg.r
    for a, j in zip(minor.rows, minor.cols):
        rtail = [x + y for x, y in zip(rtail, map_.rvec(a, j))]
        ctail = [x + y for x, y in zip(ctail, map_.cvec(a, j))]
    chi_tilde = alg.mul(xi, alg.monomial((), rexp=rtail, cexp=ctail))
    barred = alg.bar(chi_tilde)
    t = _poly_power_ratio(barred, chi_tilde)
    if t is None:
        raise AssertionError("twisted minor is not bar-invariant up to a q-power")
    if t % 2:
        raise AssertionError("bar-normalization exponent is not an integer")
    chi = alg.q_shift(chi_tilde, t // 2)
    if alg.bar(chi) != chi:
        raise AssertionError("bar-fixed normalization failed")
    return chi


def _poly_power_ratio(p1: NCPoly, p2: NCPoly) -> Optional[int]:
    """t with p1 == q^t p2, or None."""
    if p1.terms.keys() != p2.terms.keys():
        return None
    t = None
    for m, s1 in p1.terms.items():
        k = s1.power_ratio(p2.terms[m])
        if k is None:
            return None
        if t is None:
            t = k
        elif t != k:
            return None
    return t


def family_map(spec: FamilySpec) -> MonomialMap:
    if spec.kind is Family.FRT:
        return trivial_map(spec.n, spec.r)
    if spec.kind is Family.DIPPER_DONKIN:
        return dd_map(spec.n, spec.r)
    raise ValueError(f"no monomial-map realization for family {spec.kind.value}")


def minor_grid_id(n: int, r: int, alpha: int, j: int) -> MinorId:
    """The maximal minor anchored at (alpha, j): largest row/column indices
    bounded by alpha and j respectively."""
    if alpha >= j:
        return MinorId(tuple(range(alpha - j + 1, alpha + 1)), tuple(range(1, j + 1)))
    return MinorId(tuple(range(1, alpha + 1)), tuple(range(j - alpha + 1, j + 1)))


def minor_family(
    alg: PqAlgebra, map_: Optional[MonomialMap]
) -> List[NCPoly]:
    """All nr anchored minors in basis order (alpha slow, j fast)."""
    out = []
    for alpha in range(1, alg.n + 1):
        for j in range(1, alg.r + 1):
            out.append(quantum_minor(alg, minor_grid_id(alg.n, alg.r, alpha, j), map_))
    return out


class NotQCommutingError(RuntimeError):
    pass


def lambda_symbolic(
    spec: FamilySpec, cap: int = DEFAULT_SYMBOLIC_CAP
) -> IntMatrix:
    """Quasi-commutation matrix of the anchored minor family, from the
    symbolic engine.  Dipper-Donkin exponents are halved to express the
    matrix in the traditional single-parameter normalization."""
    n, r = spec.n, spec.r
    if min(n, r) > cap:
        raise ValueError(
            f"symbolic minors of order {min(n, r)} exceed the cap {cap}; "
            "raise the cap explicitly for larger runs"
        )
    alg = PqAlgebra(n, r)
    map_ = family_map(spec)
    chis = minor_family(alg, map_)
    halve = spec.kind is Family.DIPPER_DONKIN
    size = n * r
    rows = [[0] * size for _ in range(size)]
    for a in range(size):
        for b in range(a + 1, size):
            lam = alg.q_exponent(chis[a], chis[b])
            if lam is None:
                raise NotQCommutingError(
                    f"minors {a} and {b} do not q-commute for {spec.kind.value}"
                )
            if halve:
                if lam % 2:
                    raise AssertionError("odd exponent in the doubled normalization")
                lam //= 2
            rows[a][b] = lam
            rows[b][a] = -lam
    return IntMatrix(rows)


def lambda_via_diagonals(spec: FamilySpec) -> IntMatrix:
    """Lambda entries as sums of H entries along minor diagonals; purely
    additive, so it scales to any n, r."""
    if spec.kind is Family.EXTENDED:
        raise ValueError("the minor family is not defined for the extended matrix")
    n, r = spec.n, spec.r
    h = build_H(spec)
    size = n * r

    def entry(alpha, j, beta, k):
        total = 0
        for y in range(min(alpha, j)):
            for x in range(min(beta, k)):
                row = (alpha - y - 1) * r + (j - y - 1)
                col = (beta - x - 1) * r + (k - x - 1)
                total += h[row, col]
        return total

    rows = [[0] * size for _ in range(size)]
    for a in range(size):
        alpha, j = divmod(a, r)
        for b in range(size):
            beta, k = divmod(b, r)
            rows[a][b] = entry(alpha + 1, j + 1, beta + 1, k + 1)
    return IntMatrix(rows)


@dataclass(frozen=True)
class ExchangeResult:
    a: int
    c: int
    ordering: str  # which product of the two flank minors realized the solve
    rc_balance: tuple  # (row balance, column balance) of the exchange element


def exchange_check(
    rows: tuple, cols: tuple, spec: FamilySpec, cap: int = DEFAULT_SYMBOLIC_CAP + 1
) -> ExchangeResult:
    """Solve  X X' = q^a X_o D + q^c Y_L Y_R  for the flank minors of the
    given configuration and report the q-exponents, the product ordering
    used, and the R/C balance of the exchange element."""
    rows, cols = tuple(rows), tuple(cols)
    m = len(rows)
    if m < 2:
        raise ValueError("exchange configurations need at least 2 rows/columns")
    if min(spec.n, spec.r) > cap or m > cap:
        raise ValueError("configuration exceeds the symbolic cap")
    alg = PqAlgebra(spec.n, spec.r)
    map_ = family_map(spec)

    def chi(rs, cs):
        if not rs:
            return alg.one()
        return quantum_minor(alg, MinorId(tuple(rs), tuple(cs)), map_)

    x_t = chi(rows[1:], cols[1:])
    x_b = chi(rows[:-1], cols[:-1])
    x_o = chi(rows[1:-1], cols[1:-1])
    d = chi(rows, cols)
    y_l = chi(rows[:-1], cols[1:])
    y_r = chi(rows[1:], cols[:-1])

    u = alg.mul(x_o, d)
    v = alg.mul(y_l, y_r)
    balance = _rc_balance(alg, u, v)

    for first, second, name in ((x_b, x_t, "bottom*top"), (x_t, x_b, "top*bottom")):
        p = alg.mul(first, second)
        solved = _solve_two_term(alg, p, u, v)
        if solved is not None:
            a, c = solved
            return ExchangeResult(a=a, c=c, ordering=name, rc_balance=balance)
    raise NotQCommutingError("no q-power combination solves the exchange identity")


def _term_rc_profile(alg: PqAlgebra, p: NCPoly):
    """Common (row-count, col-count, rexp, cexp) profile of all terms."""
    profile = None
    for mono in p.terms:
        rcount = [0] * alg.n
        ccount = [0] * alg.r
        for (a, j) in mono.word:
            rcount[a - 1] += 1
            ccount[j - 1] += 1
        cur = (tuple(rcount), tuple(ccount), mono.rexp, mono.cexp)
        if profile is None:
            profile = cur
        elif profile != cur:
            raise AssertionError("terms of a minor product have mixed R/C profiles")
    return profile


def _rc_balance(alg: PqAlgebra, u: NCPoly, v: NCPoly):
    """Conjugation-exponent differences of the two exchange summands:
    Z-letter row/column counts and R/C exponent tails, u minus v."""
    pu = _term_rc_profile(alg, u)
    pv = _term_rc_profile(alg, v)
    return tuple(
        tuple(a - b for a, b in zip(x, y)) for x, y in zip(pu, pv)
    )


def _solve_two_term(
    alg: PqAlgebra, p: NCPoly, u: NCPoly, v: NCPoly
) -> Optional[Tuple[int, int]]:
    """(a, c) with p == q^a u + q^c v, solved monomial-wise."""
    a = _ratio_on_difference(p, u, v)
    c = _ratio_on_difference(p, v, u)
    candidates = []
    if a is not None and c is not None:
        candidates.append((a, c))
    else:
        # fall back to a small search around exponent offsets
        span = range(-2 * len(p.terms) - 4, 2 * len(p.terms) + 5)
        if a is not None:
            candidates = [(a, cc) for cc in span]
        elif c is not None:
            candidates = [(aa, c) for aa in span]
        else:
            candidates = [(aa, cc) for aa in span for cc in span]
    for aa, cc in candidates:
        combo = alg.add(alg.q_shift(u, aa), alg.q_shift(v, cc))
        if combo == p:
            return aa, cc
    return None


def _ratio_on_difference(p: NCPoly, u: NCPoly, v: NCPoly) -> Optional[int]:
    """Power ratio p/u read off a monomial of u that v does not contain."""
    for m, su in u.terms.items():
        if m in v.terms or m not in p.terms:
            continue
        k = p.terms[m].power_ratio(su)
        if k is not None:
            return k
    return None
