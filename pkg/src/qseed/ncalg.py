"""Symbolic noncommutative algebra over Z[q, q^-1].

The ambient algebra has generators Z[alpha, j] (alpha = 1..n, j = 1..r)
subject to the standard quantum-matrix straightening relations, together
with mutually commuting Laurent generators R[alpha], C[j] that q-commute
with the Z's:

    Z[a,j] Z[a,k] = q Z[a,k] Z[a,j]            j < k
    Z[a,j] Z[b,j] = q Z[b,j] Z[a,j]            a < b
    Z[a,j] Z[b,l] = Z[b,l] Z[a,j]              a > b, j < l
    Z[a,j] Z[b,l] = Z[b,l] Z[a,j] + (q - q^-1) Z[a,l] Z[b,j]   a < b, j < l
    R[a]^e Z[b,i] = q^(e*delta_ab) Z[b,i] R[a]^e
    C[j]^e Z[a,i] = q^(e*delta_ji) Z[a,i] C[j]^e

Monomials are kept in PBW normal form: the Z-word sorted by (alpha, j)
lexicographic, R/C exponent vectors collected on the right.
"""

from __future__ import annotations

from typing import Dict, Iterable, NamedTuple, Optional, Tuple


class LaurentScalar:
    """Laurent polynomial in q with integer coefficients; exact arithmetic."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Dict[int, int]):
        self.c = {k: v for k, v in coeffs.items() if v}

    @classmethod
    def zero(cls) -> "LaurentScalar":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentScalar":
        return cls({0: 1})

    @classmethod
    def q_power(cls, k: int, coeff: int = 1) -> "LaurentScalar":
        return cls({k: coeff})

    @classmethod
    def q_minus_qinv(cls) -> "LaurentScalar":
        return cls({1: 1, -1: -1})

    def is_zero(self) -> bool:
        return not self.c

    def __add__(self, other: "LaurentScalar") -> "LaurentScalar":
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) + v
        return LaurentScalar(out)

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar({k: -v for k, v in self.c.items()})

    def __sub__(self, other: "LaurentScalar") -> "LaurentScalar":
        return self + (-other)

    def __mul__(self, other: "LaurentScalar") -> "LaurentScalar":
        out: Dict[int, int] = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + v1 * v2
        return LaurentScalar(out)

    def shift(self, k: int) -> "LaurentScalar":
        """Multiply by q^k."""
        return LaurentScalar({e + k: v for e, v in self.c.items()})

    def bar(self) -> "LaurentScalar":
        """q -> q^-1."""
        return LaurentScalar({-e: v for e, v in self.c.items()})

    def single_power(self) -> Optional[Tuple[int, int]]:
        """(exponent, coefficient) when the scalar is a single q-power."""
        if len(self.c) != 1:
            return None
        [(e, v)] = self.c.items()
        return e, v

    def power_ratio(self, other: "LaurentScalar") -> Optional[int]:
        """k such that self == q^k * other, or None."""
        if self.is_zero() or other.is_zero():
            return None
        e1 = min(self.c)
        e2 = min(other.c)
        k = e1 - e2
        return k if self == other.shift(k) else None

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentScalar) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            v = self.c[e]
            parts.append(f"{v:+d}*q^{e}" if e else f"{v:+d}")
        return "".join(parts)


class PqMonomial(NamedTuple):
    """Z-word (tuple of (alpha, j) pairs) with Laurent R/C exponent tails."""

    word: tuple
    rexp: tuple
    cexp: tuple


class NCPoly:
    """Finite sum of LaurentScalar * PqMonomial; a plain value object."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[PqMonomial, LaurentScalar]):
        self.terms = {m: s for m, s in terms.items() if not s.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"NCPoly<{len(self.terms)} terms>"


def _first_inversion(word: tuple) -> Optional[int]:
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            return i
    return None


class PqAlgebra:
    """Algebra context: dimensions, straightening cache and arithmetic."""

    def __init__(self, n: int, r: int):
        if n < 1 or r < 1:
            raise ValueError("dimensions must be >= 1")
        self.n = n
        self.r = r
        self._memo: Dict[tuple, Dict[tuple, LaurentScalar]] = {}

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    def _check_gen(self, alpha: int, j: int):
        if not (1 <= alpha <= self.n and 1 <= j <= self.r):
            raise ValueError(f"generator Z[{alpha},{j}] outside {self.n}x{self.r}")

    def zero(self) -> NCPoly:
        return NCPoly({})

    def one(self) -> NCPoly:
        return self.monomial(())

    def monomial(
        self,
        word: Iterable[Tuple[int, int]],
        rexp: Optional[Iterable[int]] = None,
        cexp: Optional[Iterable[int]] = None,
        coeff: Optional[LaurentScalar] = None,
    ) -> NCPoly:
        """Build a polynomial from a raw word; the word is NOT normalized."""
        word = tuple(tuple(g) for g in word)
        for alpha, j in word:
            self._check_gen(alpha, j)
        rexp = tuple(rexp) if rexp is not None else (0,) * self.n
        cexp = tuple(cexp) if cexp is not None else (0,) * self.r
        if len(rexp) != self.n or len(cexp) != self.r:
            raise ValueError("R/C exponent vectors have the wrong length")
        coeff = coeff if coeff is not None else LaurentScalar.one()
        return NCPoly({PqMonomial(word, rexp, cexp): coeff})

    def z(self, alpha: int, j: int) -> NCPoly:
        return self.monomial(((alpha, j),))

    def r_op(self, alpha: int, e: int = 1) -> NCPoly:
        self._check_gen(alpha, 1)
        rexp = [0] * self.n
        rexp[alpha - 1] = e
        return self.monomial((), rexp=rexp)

    def c_op(self, j: int, e: int = 1) -> NCPoly:
        self._check_gen(1, j)
        cexp = [0] * self.r
        cexp[j - 1] = e
        return self.monomial((), cexp=cexp)

    # ------------------------------------------------------------------
    # straightening
    # ------------------------------------------------------------------

    def _straighten(self, word: tuple) -> Dict[tuple, LaurentScalar]:
        memo = self._memo
        cached = memo.get(word)
        if cached is not None:
            return cached
        i = _first_inversion(word)
        if i is None:
            result = {word: LaurentScalar.one()}
            memo[word] = result
            return result
        (a, j), (b, l) = word[i], word[i + 1]
        head, tail = word[:i], word[i + 2 :]
        swapped = head + ((b, l), (a, j)) + tail
        pieces = []
        if a == b or j == l:
            # same row or same column: bigger-first = q^-1 * smaller-first
            pieces.append((LaurentScalar.q_power(-1), swapped))
        elif j < l:
            # a > b, j < l: the generators commute
            pieces.append((LaurentScalar.one(), swapped))
        else:
            # a > b, j > l: two-term rewrite with the (q - q^-1) correction
            pieces.append((LaurentScalar.one(), swapped))
            pieces.append(
                (-LaurentScalar.q_minus_qinv(), head + ((b, j), (a, l)) + tail)
            )
        total: Dict[tuple, LaurentScalar] = {}
        for sc, w in pieces:
            for w2, sc2 in self._straighten(w).items():
                prev = total.get(w2)
                acc = sc * sc2 if prev is None else prev + sc * sc2
                total[w2] = acc
        total = {w2: sc for w2, sc in total.items() if not sc.is_zero()}
        memo[word] = total
        return total

    def normal_form(self, p: NCPoly) -> NCPoly:
        """PBW normal form; idempotent and linear."""
        out: Dict[PqMonomial, LaurentScalar] = {}
        for mono, sc in p.terms.items():
            for w2, sc2 in self._straighten(mono.word).items():
                key = PqMonomial(w2, mono.rexp, mono.cexp)
                prev = out.get(key)
                acc = sc * sc2 if prev is None else prev + sc * sc2
                out[key] = acc
        return NCPoly(out)

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def add(self, p1: NCPoly, p2: NCPoly) -> NCPoly:
        out = dict(p1.terms)
        for m, s in p2.terms.items():
            prev = out.get(m)
            out[m] = s if prev is None else prev + s
        return NCPoly(out)

    def scale(self, p: NCPoly, sc: LaurentScalar) -> NCPoly:
        return NCPoly({m: sc * s for m, s in p.terms.items()})

    def q_shift(self, p: NCPoly, k: int) -> NCPoly:
        return NCPoly({m: s.shift(k) for m, s in p.terms.items()})

    def mul(self, p1: NCPoly, p2: NCPoly) -> NCPoly:
        """Product in PBW normal form."""
        out: Dict[PqMonomial, LaurentScalar] = {}
        for m1, s1 in p1.terms.items():
            for m2, s2 in p2.terms.items():
                # move the R/C tail of m1 across the Z-word of m2
                delta = 0
                for (beta, i) in m2.word:
                    delta += m1.rexp[beta - 1] + m1.cexp[i - 1]
                sc = (s1 * s2).shift(delta)
                rexp = tuple(x + y for x, y in zip(m1.rexp, m2.rexp))
                cexp = tuple(x + y for x, y in zip(m1.cexp, m2.cexp))
                for w2, sc2 in self._straighten(m1.word + m2.word).items():
                    key = PqMonomial(w2, rexp, cexp)
                    prev = out.get(key)
                    acc = sc * sc2 if prev is None else prev + sc * sc2
                    out[key] = acc
        return NCPoly(out)

    def bar(self, p: NCPoly) -> NCPoly:
        """The involutive anti-automorphism: q -> q^-1, generators fixed."""
        out: Dict[PqMonomial, LaurentScalar] = {}
        for mono, sc in p.terms.items():
            delta = 0
            for (beta, i) in mono.word:
                delta += mono.rexp[beta - 1] + mono.cexp[i - 1]
            base = sc.bar().shift(delta)
            for w2, sc2 in self._straighten(tuple(reversed(mono.word))).items():
                key = PqMonomial(w2, mono.rexp, mono.cexp)
                prev = out.get(key)
                acc = base * sc2 if prev is None else prev + base * sc2
                out[key] = acc
        return NCPoly(out)

    # ------------------------------------------------------------------
    # q-commutation
    # ------------------------------------------------------------------

    def q_exponent(self, u: NCPoly, v: NCPoly) -> Optional[int]:
        """lambda with u v = q^lambda v u, or None when u, v do not q-commute."""
        if u.is_zero() or v.is_zero():
            raise ValueError("q_exponent of a zero element")
        uv = self.mul(u, v)
        vu = self.mul(v, u)
        if uv.terms.keys() != vu.terms.keys():
            return None
        lam = None
        for m, s_uv in uv.terms.items():
            k = s_uv.power_ratio(vu.terms[m])
            if k is None:
                return None
            if lam is None:
                lam = k
            elif lam != k:
                return None
        return lam


def poly_text(p: NCPoly) -> str:
    """Deterministic textual form: `coef*q^k * Z[a,j]... * R[a]^e * C[j]^e`."""
    if p.is_zero():
        return "0"
    items = []
    for mono in sorted(p.terms, key=lambda m: (m.word, m.rexp, m.cexp)):
        sc = p.terms[mono]
        for e in sorted(sc.c):
            v = sc.c[e]
            factors = [f"{v:+d}" + (f"*q^{e}" if e else "")]
            if mono.word:
                factors.append("".join(f"Z[{a},{j}]" for a, j in mono.word))
            rpart = "".join(
                f"R[{i + 1}]^{x}" for i, x in enumerate(mono.rexp) if x
            )
            cpart = "".join(
                f"C[{i + 1}]^{x}" for i, x in enumerate(mono.cexp) if x
            )
            if rpart:
                factors.append(rpart)
            if cpart:
                factors.append(cpart)
            items.append(" * ".join(factors))
    return "  ".join(items)
