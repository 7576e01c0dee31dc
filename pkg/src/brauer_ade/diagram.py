"""The classical Brauer algebra on ``m`` strands, i.e. type ``A_{m-1}``.

Diagrams are perfect matchings of ``2m`` points: ``0 .. m-1`` along the top
and ``m .. 2m-1`` along the bottom.  The product ``d1 * d2`` stacks ``d1``
above ``d2`` and each closed loop contributes a factor ``delta``.

Cell layers are indexed by the number ``t`` of arcs.  A layer is spanned by
pairs of half-diagrams (``t`` arcs plus ``m - 2t`` free points) together with
a permutation of the free points; its bilinear form takes values in the group
algebra of that symmetric group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Mapping, Sequence

from .laurent import DELTA, ONE, LaurentPoly, det, det_rational

# desk bound on strands for Gram determinants
MAX_STRANDS = 6


@dataclass(frozen=True, order=True)
class BrauerDiagram:
    m: int
    partner: tuple[int, ...]

    def __post_init__(self):
        p = self.partner
        if len(p) != 2 * self.m:
            raise ValueError(f"a diagram on {self.m} strands needs {2 * self.m} points")
        for x, y in enumerate(p):
            if not 0 <= y < 2 * self.m or y == x or p[y] != x:
                raise ValueError(f"{p} is not a perfect matching")

    @classmethod
    def from_pairs(cls, m: int, pairs: Iterable[tuple[int, int]]) -> BrauerDiagram:
        partner = [-1] * (2 * m)
        for a, b in pairs:
            partner[a], partner[b] = b, a
        return cls(m, tuple(partner))

    @classmethod
    def identity(cls, m: int) -> BrauerDiagram:
        return cls.from_pairs(m, [(i, m + i) for i in range(m)])

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in enumerate(self.partner) if x < y]

    def propagating(self) -> int:
        m = self.m
        return sum(1 for x in range(m) if self.partner[x] >= m)

    def flip(self) -> BrauerDiagram:
        """Reflect top and bottom (the anti-involution on diagrams)."""
        m = self.m
        swap = lambda x: x + m if x < m else x - m  # noqa: E731
        return BrauerDiagram.from_pairs(m, [(swap(a), swap(b)) for a, b in self.pairs()])

    def __str__(self):
        m = self.m
        label = lambda x: str(x + 1) if x < m else f"{x - m + 1}'"  # noqa: E731
        return "{" + ", ".join(f"{label(a)}-{label(b)}" for a, b in self.pairs()) + "}"


def compose(d1: BrauerDiagram, d2: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Stack ``d1`` above ``d2``; return the resulting diagram and the number
    of closed loops."""
    if d1.m != d2.m:
        raise ValueError(f"strand mismatch: {d1.m} vs {d2.m}")
    m = d1.m
    p1, p2 = d1.partner, d2.partner
    visited = [False] * m  # middle row

    def walk(side: int, x: int) -> int:
        # side 1: currently at point x of d1 heading along its arc; side 2 likewise
        while True:
            if side == 1:
                y = p1[x]
                if y < m:
                    return y
                visited[y - m] = True
                side, x = 2, y - m
            else:
                y = p2[x]
                if y >= m:
                    return y
                visited[y] = True
                side, x = 1, y + m

    partner = [-1] * (2 * m)
    for x in range(m):
        if partner[x] < 0:
            end = walk(1, x)
            partner[x], partner[end] = end, x
    for x in range(m, 2 * m):
        if partner[x] < 0:
            end = walk(2, x)
            partner[x], partner[end] = end, x

    loops = 0
    for start in range(m):
        if visited[start]:
            continue
        loops += 1
        x = start
        while True:
            visited[x] = True
            y = p2[x]  # top arc of d2, stays in middle row
            visited[y] = True
            z = p1[y + m] - m  # bottom arc of d1
            if z == start:
                break
            x = z
    return BrauerDiagram(m, tuple(partner)), loops


@lru_cache(maxsize=None)
def all_diagrams(m: int) -> tuple[BrauerDiagram, ...]:
    """Every Brauer diagram on ``m`` strands, by recursive matching."""

    def matchings(points: tuple[int, ...]):
        if not points:
            yield []
            return
        a = points[0]
        for k in range(1, len(points)):
            rest = points[1:k] + points[k + 1:]
            for tail in matchings(rest):
                yield [(a, points[k])] + tail

    return tuple(sorted(BrauerDiagram.from_pairs(m, ms) for ms in matchings(tuple(range(2 * m)))))


def double_factorial_odd(m: int) -> int:
    """``(2m - 1)!!``."""
    out = 1
    for k in range(1, 2 * m, 2):
        out *= k
    return out


# -- algebra elements -------------------------------------------------------------


class AlgebraElement:
    """A ``Z[delta^{+-1}]``-linear combination of Brauer diagrams."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Mapping[BrauerDiagram, LaurentPoly] | None = None):
        self.m = m
        self.terms: dict[BrauerDiagram, LaurentPoly] = {}
        for d, c in (terms or {}).items():
            if d.m != m:
                raise ValueError("diagram strand count differs from element")
            c = LaurentPoly._coerce(c)
            if c:
                self.terms[d] = self.terms.get(d, LaurentPoly()) + c
        self.terms = {d: c for d, c in self.terms.items() if c}

    @classmethod
    def basis(cls, d: BrauerDiagram, coeff: LaurentPoly | int = 1) -> AlgebraElement:
        return cls(d.m, {d: LaurentPoly._coerce(coeff)})

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        acc = dict(self.terms)
        for d, c in other.terms.items():
            acc[d] = acc.get(d, LaurentPoly()) + c
        return AlgebraElement(self.m, acc)

    def __neg__(self):
        return AlgebraElement(self.m, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            c = LaurentPoly._coerce(other)
            return AlgebraElement(self.m, {d: x * c for d, x in self.terms.items()})
        self._check(other)
        acc: dict[BrauerDiagram, LaurentPoly] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d, loops = compose(d1, d2)
                acc[d] = acc.get(d, LaurentPoly()) + c1 * c2 * DELTA**loops
        return AlgebraElement(self.m, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def _check(self, other):
        if not isinstance(other, AlgebraElement) or other.m != self.m:
            raise ValueError("strand mismatch between algebra elements")

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c}){d}" for d, c in sorted(self.terms.items()))


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def _check_index(i: int, m: int) -> None:
    if not 1 <= i <= m - 1:
        raise ValueError(f"generator index {i} out of range 1..{m - 1}")


def diagram_R(i: int, m: int) -> BrauerDiagram:
    _check_index(i, m)
    pairs = [(k, m + k) for k in range(m) if k not in (i - 1, i)]
    pairs += [(i - 1, m + i), (i, m + i - 1)]
    return BrauerDiagram.from_pairs(m, pairs)


def diagram_E(i: int, m: int) -> BrauerDiagram:
    _check_index(i, m)
    pairs = [(k, m + k) for k in range(m) if k not in (i - 1, i)]
    pairs += [(i - 1, i), (m + i - 1, m + i)]
    return BrauerDiagram.from_pairs(m, pairs)


def gen_R(i: int, m: int) -> AlgebraElement:
    return AlgebraElement.basis(diagram_R(i, m))


def gen_E(i: int, m: int) -> AlgebraElement:
    return AlgebraElement.basis(diagram_E(i, m))


def one(m: int) -> AlgebraElement:
    return AlgebraElement.basis(BrauerDiagram.identity(m))


def word_element(word: str | Sequence[str], m: int) -> AlgebraElement:
    """Product of generator tokens ``R<i>``, ``E<i>`` (``d`` for delta)."""
    tokens = word.split() if isinstance(word, str) else list(word)
    out = one(m)
    for tok in tokens:
        kind, idx = tok[0].upper(), tok[1:]
        if kind == "D":
            out = out * DELTA
        elif kind == "R":
            out = out * gen_R(int(idx), m)
        elif kind == "E":
            out = out * gen_E(int(idx), m)
        else:
            raise ValueError(f"unknown generator token {tok!r}")
    return out


def check_relations(m: int) -> dict[str, bool]:
    """Verify the defining relations of the Brauer monoid of type ``A_{m-1}``
    as identities in the diagram algebra."""
    from .braction import RELATIONS, relation_instances

    adjacent = lambda i, j: abs(i - j) == 1  # noqa: E731
    results = {"delta-unit": DELTA * DELTA**-1 == ONE}
    for label, nodes, lhs, rhs in relation_instances(m - 1, adjacent):
        if label == "E-quasi-idempotent":
            rhs = ["d"] + rhs
        ok = word_element(lhs, m) == word_element(rhs, m)
        results[label] = results.get(label, True) and ok
    return {k: results[k] for k in RELATIONS if k in results}


# -- E_B for root sets of A_{m-1} -----------------------------------------------------


def _root_strands(root: Sequence[int]) -> tuple[int, int]:
    """A positive root ``alpha_i + ... + alpha_j`` of ``A_{m-1}`` joins strands
    ``i`` and ``j + 1`` (1-based)."""
    support = [k for k, c in enumerate(root) if c]
    if not support or any(c != 1 for c in root if c) or support != list(range(support[0], support[-1] + 1)):
        raise ValueError(f"{tuple(root)} is not a positive root of type A")
    return support[0] + 1, support[-1] + 2


def e_beta(root: Sequence[int], m: int) -> AlgebraElement:
    """``E_beta = w E_i w^-1`` computed in the algebra, with ``beta = w alpha_i``."""
    from .braction import root_expressions
    from .rootsys import build_root_system

    sys = build_root_system(f"A{m - 1}")
    word, node = root_expressions(sys, tuple(root))[0]
    w = word_element([f"R{j}" for j in word], m)
    w_inv = word_element([f"R{j}" for j in reversed(word)], m)
    return w * gen_E(node, m) * w_inv


def e_beta_diagram(root: Sequence[int], m: int) -> BrauerDiagram:
    """The diagram of ``E_beta`` drawn directly: a cup and a cap on the two
    strands joined by ``beta``."""
    a, b = _root_strands(root)
    a, b = a - 1, b - 1
    pairs = [(k, m + k) for k in range(m) if k not in (a, b)] + [(a, b), (m + a, m + b)]
    return BrauerDiagram.from_pairs(m, pairs)


def e_B(X: Iterable[Sequence[int]], m: int) -> AlgebraElement:
    """``E_X``: the product of ``E_beta`` over a mutually orthogonal set."""
    X = [tuple(r) for r in X]
    strands = [_root_strands(r) for r in X]
    used = [s for pair in strands for s in pair]
    if len(used) != len(set(used)):
        raise ValueError(f"{X} is not mutually orthogonal")
    out = one(m)
    for r in sorted(X):
        out = out * e_beta(r, m)
    return out


def e_hat_B(X: Iterable[Sequence[int]], m: int) -> AlgebraElement:
    X = list(X)
    return e_B(X, m) * DELTA ** (-len(X))


# -- half diagrams and cell layers -------------------------------------------------------


@dataclass(frozen=True, order=True)
class HalfDiagram:
    m: int
    arcs: tuple[tuple[int, int], ...]

    @property
    def free(self) -> tuple[int, ...]:
        used = {x for a in self.arcs for x in a}
        return tuple(x for x in range(self.m) if x not in used)

    @property
    def t(self) -> int:
        return len(self.arcs)


@lru_cache(maxsize=None)
def half_diagrams(m: int, t: int) -> tuple[HalfDiagram, ...]:
    """All sets of ``t`` disjoint arcs on ``m`` points, in sorted order."""
    if not 0 <= 2 * t <= m:
        raise ValueError(f"no half-diagrams with {t} arcs on {m} points")

    def build(points: tuple[int, ...], k: int):
        if k == 0:
            yield ()
            return
        if len(points) < 2 * k:
            return
        a, rest = points[0], points[1:]
        # a stays free
        yield from build(rest, k)
        for j, b in enumerate(rest):
            for tail in build(rest[:j] + rest[j + 1:], k - 1):
                yield ((a, b),) + tail

    return tuple(sorted(HalfDiagram(m, tuple(sorted(arcs))) for arcs in build(tuple(range(m)), t)))


def layer_form(h: HalfDiagram, g: HalfDiagram) -> tuple[int, tuple[int, ...]] | None:
    """The layer form on a pair of half-diagrams.

    Glue the arcs of ``h`` to the arcs of ``g`` along a row of ``m`` points.
    Returns ``(loops, sigma)`` where free point ``k`` of ``h`` is joined to
    free point ``sigma[k]`` of ``g``, or ``None`` when two free points of
    ``h`` are joined (the product falls into a lower layer).
    """
    m = h.m
    ph = [-1] * m
    pg = [-1] * m
    for a, b in h.arcs:
        ph[a], ph[b] = b, a
    for a, b in g.arcs:
        pg[a], pg[b] = b, a
    g_free = {x: k for k, x in enumerate(g.free)}
    seen = [False] * m
    sigma = []
    for x in h.free:
        seen[x] = True
        cur = x
        while True:
            y = pg[cur]
            if y < 0:
                sigma.append(g_free[cur])
                break
            seen[y] = True
            z = ph[y]
            if z < 0:
                return None
            seen[z] = True
            cur = z
    loops = 0
    for start in range(m):
        if seen[start]:
            continue
        loops += 1
        cur = start
        while not seen[cur]:
            seen[cur] = True
            nxt = pg[cur]
            seen[nxt] = True
            cur = ph[nxt]
    return loops, tuple(sigma)


def _perm_compose(p, q):
    return tuple(p[x] for x in q)


def _perm_inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


@dataclass
class CellDatum:
    m: int
    t: int
    basis: tuple[HalfDiagram, ...]
    group: tuple[tuple[int, ...], ...]
    gram: list[list[tuple[int, tuple[int, ...]] | None]] = field(repr=False)
    scalar_gram: list[list[LaurentPoly]] = field(repr=False)
    det: LaurentPoly | None = None

    def is_involution_symmetric(self) -> bool:
        """``gram[j][i]`` is the group inverse of ``gram[i][j]``."""
        n = len(self.basis)
        for i in range(n):
            for j in range(n):
                a, b = self.gram[i][j], self.gram[j][i]
                if (a is None) != (b is None):
                    return False
                if a is not None and (a[0] != b[0] or _perm_inverse(a[1]) != b[1]):
                    return False
        return True


def _check_bounds(m: int, t: int, max_strands: int) -> None:
    if m < 1:
        raise ValueError("need at least one strand")
    if m > max_strands:
        raise ValueError(f"{m} strands exceeds the desk bound of {max_strands}")
    if not 0 <= 2 * t <= m:
        raise ValueError(f"arc count {t} out of range for {m} strands")


def cell_gram(m: int, t: int, *, max_strands: int = MAX_STRANDS, compute_det: bool = True) -> CellDatum:
    """Gram data of layer ``t`` of the Brauer algebra on ``m`` strands.

    The group-algebra valued matrix is blown up through the left regular
    representation of the symmetric group on the ``m - 2t`` free points.
    """
    _check_bounds(m, t, max_strands)
    basis = half_diagrams(m, t)
    k = m - 2 * t
    group = tuple(permutations(range(k)))
    pos = {g: n for n, g in enumerate(group)}
    gram = [[layer_form(h, g) for g in basis] for h in basis]
    size = len(basis) * len(group)
    zero = LaurentPoly()
    scalar = [[zero] * size for _ in range(size)]
    order = len(group)
    for a, row in enumerate(gram):
        for b, entry in enumerate(row):
            if entry is None:
                continue
            loops, sigma = entry
            coeff = DELTA**loops
            for c, g in enumerate(group):
                r = pos[_perm_compose(sigma, g)]
                scalar[a * order + r][b * order + c] = coeff
    datum = CellDatum(m, t, basis, group, gram, scalar)
    if compute_det:
        datum.det = det(scalar)
    return datum


@lru_cache(maxsize=None)
def gram_det(m: int, t: int, max_strands: int = MAX_STRANDS) -> LaurentPoly:
    return cell_gram(m, t, max_strands=max_strands).det


def layer_dimensions(m: int) -> dict[int, int]:
    """``#half(m, t)^2 * (m - 2t)!`` for each layer ``t``."""
    return {t: len(half_diagrams(m, t)) ** 2 * factorial(m - 2 * t) for t in range(m // 2 + 1)}


# -- semisimplicity ---------------------------------------------------------------------------


@dataclass
class SemisimplicityVerdict:
    m: int
    x: Fraction
    dets: dict[int, LaurentPoly]
    values: dict[int, Fraction]
    oracle_discriminant: Fraction | None = None

    @property
    def vanishing(self) -> list[tuple[int, int]]:
        return [(self.m, t) for t, v in self.values.items() if v == 0]

    @property
    def semisimple(self) -> bool:
        return not self.vanishing

    @property
    def oracle_agrees(self) -> bool | None:
        if self.oracle_discriminant is None:
            return None
        return (self.oracle_discriminant != 0) == self.semisimple


def semisimple_at(m: int, x: Fraction | int | str, *, with_oracle: bool = False) -> SemisimplicityVerdict:
    """Decide semisimplicity of the Brauer algebra on ``m`` strands at
    ``delta = x`` from the layer Gram determinants."""
    x = Fraction(x)
    dets = {t: gram_det(m, t) for t in range(m // 2 + 1)}
    values = {t: d.evaluate(x) for t, d in dets.items()}
    verdict = SemisimplicityVerdict(m, x, dets, values)
    if with_oracle:
        verdict.oracle_discriminant = trace_form_discriminant(m, x)
    return verdict


@lru_cache(maxsize=None)
def _product_table(m: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    basis = all_diagrams(m)
    pos = {d: k for k, d in enumerate(basis)}
    return tuple(
        tuple((pos[d], loops) for d, loops in (compose(a, b) for b in basis)) for a in basis
    )


def trace_form_discriminant(m: int, x: Fraction | int) -> Fraction:
    """Determinant of the trace form ``(a, b) -> tr(L_{ab})`` of the regular
    representation on the diagram basis, at ``delta = x``.  Nonzero exactly
    when the algebra is semisimple (characteristic zero)."""
    x = Fraction(x)
    table = _product_table(m)
    n = len(table)
    trace = [sum(x**loops for j, (k, loops) in enumerate(table[i]) if k == j) for i in range(n)]
    form = [[x**loops * trace[k] for k, loops in table[i]] for i in range(n)]
    return det_rational(form)


# -- type D reductions ----------------------------------------------------------------------


def z_set(n: int) -> list[int]:
    """The integer set ``{4-2n <= i <= n-2}`` minus the odd ``i`` with
    ``4-2n <= i <= 3-n``."""
    if n < 1:
        raise ValueError("n must be positive")
    full = set(range(4 - 2 * n, n - 1))
    odd_low = {i for i in range(4 - 2 * n, 4 - n) if i % 2}
    return sorted(full - odd_low)


def _is_prime(e: int) -> bool:
    return e >= 2 and all(e % p for p in range(2, int(e**0.5) + 1))


@dataclass
class DReport:
    n: int
    x: Fraction
    char: int
    not_semisimple: bool
    reason: str

    @property
    def verdict(self) -> str:
        return "not semisimple" if self.not_semisimple else "no obstruction"


def d_semisimplicity_report(n: int, x: Fraction | int | str, char_e: int | None = None) -> DReport:
    """Apply the two non-semisimplicity criteria for type ``D_n``.

    The criteria are sufficient conditions only; a negative answer is
    reported as "no obstruction", never as "semisimple".  In characteristic
    ``e > 0`` the parameter is reduced modulo ``e`` and compared with ``Z(n)``
    modulo ``e``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    x = Fraction(x)
    e = char_e or 0
    if e:
        if not _is_prime(e):
            raise ValueError(f"characteristic must be prime, got {e}")
        if x.denominator % e == 0:
            raise ValueError(f"{x} has no image in characteristic {e}")
        xe = x.numerator * pow(x.denominator, -1, e) % e
        is_zero = xe == 0
        in_z = (xe * xe) % e in {i % e for i in z_set(n)}
        gate = factorial(n) % e != 0
    else:
        is_zero = x == 0
        in_z = x * x in z_set(n)
        gate = True
    if not gate:
        return DReport(n, x, e, False, f"no obstruction: characteristic {e} divides {n}!")
    if in_z and not is_zero:
        return DReport(n, x, e, True, f"delta^2 in Z({n}) and delta != 0")
    if is_zero and n not in (1, 3, 5):
        return DReport(n, x, e, True, f"delta = 0 and n = {n} not in {{1, 3, 5}}")
    return DReport(n, x, e, False, "no obstruction from the type D criteria (they are one-directional)")


def lambda2_gram_D(n: int, t: int, max_strands: int = MAX_STRANDS) -> LaurentPoly:
    """Gram determinant of the second family of type ``D_n`` cells: the type
    ``A_{n-1}`` determinant with ``delta`` replaced by ``delta^2``."""
    return gram_det(n, t, max_strands).substitute_square()
