"""Laurent polynomials in delta with integer coefficients, and exact
determinants of matrices over them."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Iterable, Mapping, Sequence

SYMBOL = "δ"


class LaurentPoly:
    """An element of ``Z[delta, delta^-1]``.

    Stored as a sorted tuple of ``(exponent, coefficient)`` pairs with no
    zero coefficients.  Instances are immutable and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(terms, int):
            terms = {0: terms}
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], shift: int = 0) -> LaurentPoly:
        """``sum coeffs[k] * delta^(k + shift)``."""
        return cls((k + shift, c) for k, c in enumerate(coeffs) if c)

    # -- inspection --------------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    def coeffs(self) -> tuple[list[int], int]:
        """Dense coefficients from the lowest exponent, and that exponent."""
        if not self._terms:
            return [], 0
        lo, hi = self.min_exp, self.max_exp
        out = [0] * (hi - lo + 1)
        for e, c in self._terms:
            out[e - lo] = c
        return out, lo

    # -- arithmetic -----------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only unit monomials have negative powers")
            (e, c), = self._terms
            return LaurentPoly({e * k: c ** (-k)})
        out = LaurentPoly(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    # -- maps --------------------------------------------------------------------------

    def substitute_square(self) -> LaurentPoly:
        """The image under ``delta -> delta^2``."""
        return LaurentPoly((2 * e, c) for e, c in self._terms)

    def evaluate(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        if x == 0 and self._terms and self.min_exp < 0:
            raise ZeroDivisionError("negative power of delta evaluated at 0")
        total = Fraction(0)
        for e, c in self._terms:
            total += c * x**e
        return total

    def rational_roots(self) -> list[Fraction]:
        """All rational roots, ascending (``0`` included when ``delta``
        divides the polynomial part)."""
        if not self._terms:
            raise ValueError("the zero polynomial has every number as a root")
        coeffs, lo = self.coeffs()
        roots: set[Fraction] = set()
        if lo > 0:
            roots.add(Fraction(0))
        # coeffs[0] != 0, so 0 is not a root of the cleared polynomial
        a0, an = coeffs[0], coeffs[-1]
        for p in _divisors(abs(a0)):
            for q in _divisors(abs(an)):
                if gcd(p, q) != 1:
                    continue
                for s in (1, -1):
                    r = Fraction(s * p, q)
                    if _eval_dense(coeffs, r) == 0:
                        roots.add(r)
        return sorted(roots)

    # -- serialization ------------------------------------------------------------------

    def to_wire(self) -> list[list]:
        """``[[exponent, "coefficient"], ...]`` in ascending exponent order."""
        return [[e, str(c)] for e, c in self._terms]

    @classmethod
    def from_wire(cls, data: Iterable[Sequence]) -> LaurentPoly:
        return cls((int(e), int(c)) for e, c in data)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            if e == 0:
                mono = str(abs(c))
            else:
                var = SYMBOL if e == 1 else f"{SYMBOL}^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


DELTA = LaurentPoly.monomial(1)
ONE = LaurentPoly(1)
ZERO = LaurentPoly()


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _eval_dense(coeffs: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


# -- dense polynomial helpers for elimination (lowest degree first) --------------


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) == 1:
        c = a[0]
        return [c * x for x in b]
    if len(b) == 1:
        c = b[0]
        return [c * x for x in a]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _psub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)]
    return _trim(out)


def _pdivexact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient ``a / b`` in ``Z[x]``; raises if ``b`` does not divide ``a``."""
    if not a:
        return []
    if len(b) == 1:
        c = b[0]
        if c == 1:
            return list(a)
        out = []
        for x in a:
            q, r = divmod(x, c)
            if r:
                raise ArithmeticError("inexact division")
            out.append(q)
        return out
    a = list(a)
    lead = b[-1]
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        qk, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact division")
        q[k - db] = qk
        for j, y in enumerate(b):
            a[k - db + j] -= qk * y
    if any(a[:db]):
        raise ArithmeticError("inexact division")
    return _trim(q)


def det(matrix: Sequence[Sequence[LaurentPoly | int]]) -> LaurentPoly:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each row is first multiplied by a power of delta to clear negative
    exponents; elimination then runs in ``Z[delta]`` on sparse rows, choosing
    the sparsest available pivot row.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    shift = 0
    rows: list[dict[int, list[int]]] = []
    for row in matrix:
        row = [LaurentPoly._coerce(x) for x in row]
        nz = [x for x in row if x]
        if not nz:
            return ZERO
        lo = min(x.min_exp for x in nz)
        shift += lo
        dense = {}
        for j, x in enumerate(row):
            if x:
                c, e = x.coeffs()
                dense[j] = [0] * (e - lo) + c
        rows.append(dense)

    sign = 1
    prev = [1]
    for k in range(n):
        candidates = [i for i in range(k, n) if k in rows[i]]
        if not candidates:
            return ZERO
        p = min(candidates, key=lambda i: (len(rows[i]), len(rows[i][k])))
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        pivot_row = rows[k]
        piv = pivot_row[k]
        same = piv == prev
        for i in range(k + 1, n):
            r = rows[i]
            a = r.pop(k, None)
            if a is None:
                if not same:
                    for j in r:
                        r[j] = _pdivexact(_pmul(piv, r[j]), prev)
                continue
            new = {}
            for j in set(r) | set(pivot_row):
                if j == k:
                    continue
                val = _psub(_pmul(piv, r.get(j, [])), _pmul(a, pivot_row.get(j, [])))
                if val:
                    new[j] = _pdivexact(val, prev)
            rows[i] = new
        prev = piv
    return LaurentPoly.from_coeffs([sign * c for c in prev], shift)


def det_cofactor(matrix: Sequence[Sequence[LaurentPoly | int]]) -> LaurentPoly:
    """Determinant by the permutation expansion; for small oracle checks."""
    n = len(matrix)
    M = [[LaurentPoly._coerce(x) for x in row] for row in matrix]
    total = ZERO
    for perm in permutations(range(n)):
        term = ONE
        for i, j in enumerate(perm):
            term = term * M[i][j]
            if not term:
                break
        if term:
            inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
            total = total + (term if inversions % 2 == 0 else -term)
    return total


def det_rational(matrix: Sequence[Sequence[Fraction | int]]) -> Fraction:
    """Determinant of a rational matrix by Gaussian elimination."""
    M = [[Fraction(x) for x in row] for row in matrix]
    n = len(M)
    result = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            M[k], M[p] = M[p], M[k]
            result = -result
        piv = M[k][k]
        result *= piv
        for i in range(k + 1, n):
            f = M[i][k] / piv
            if f:
                Mi, Mk = M[i], M[k]
                for j in range(k, n):
                    Mi[j] -= f * Mk[j]
    return result


def evaluate_matrix(matrix: Sequence[Sequence[LaurentPoly]], x) -> list[list[Fraction]]:
    return [[LaurentPoly._coerce(e).evaluate(x) for e in row] for row in matrix]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse rational {text!r}") from exc
