"""Block structure of Brauer and BMW algebras of simply-laced type.

Each W-orbit of admissible root sets contributes one block, Morita
equivalent to the group algebra (Brauer) or Hecke algebra (BMW) of the
parabolic subgroup on the nodes orthogonal to the orbit's maximal element.
The rank contributed by an orbit is ``|orbit|^2 * |W(C)|``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable

from . import diagram
from .admissible import (
    AdmissibleOrbit,
    build_poset,
    enumerate_all_orbits,
    enumerate_orbit,
    orbits_by_brute_force,
)
from .coxgroup import (
    TypeLabel,
    centralizer_nodes,
    identify_components,
    parabolic,
    parabolic_order,
    stabilizer_order,
    weyl_order,
)
from .errors import InvariantViolation
from .laurent import LaurentPoly
from .rootsys import DiagramSpec, RootSystem, build_root_system

DESCRIPTORS = {"brauer": "group-algebra", "bmw": "hecke-algebra"}


@dataclass(frozen=True)
class MoritaBlock:
    orbit_id: int
    representative: tuple[int, ...]
    orbit_size: int
    maximal_element: tuple[int, ...]
    centralizer_nodes: tuple[int, ...]
    centralizer_types: tuple[TypeLabel, ...]
    group_order: int
    algebra_descriptor: str

    @property
    def contribution(self) -> int:
        return self.orbit_size**2 * self.group_order


def _block_from_orbit(sys: RootSystem, k: int, orbit: AdmissibleOrbit, descriptor: str) -> MoritaBlock:
    X = orbit.maximal
    nodes = centralizer_nodes(sys, X)
    order = parabolic(sys, nodes).order
    closed = parabolic_order(sys, nodes)
    if order != closed:
        raise InvariantViolation(
            f"parabolic subgroup on nodes {nodes} of {sys.spec}: stabilizer chain gives "
            f"{order}, closed form gives {closed}"
        )
    stabilizer_order(orbit.orbit_size, weyl_order(sys))
    return MoritaBlock(
        orbit_id=k,
        representative=orbit.representative,
        orbit_size=orbit.orbit_size,
        maximal_element=X,
        centralizer_nodes=nodes,
        centralizer_types=tuple(identify_components(sys, nodes)),
        group_order=order,
        algebra_descriptor=descriptor,
    )


def blocks(
    spec: DiagramSpec | str,
    algebra: str = "brauer",
    *,
    opt_in_e8: bool = False,
    generator_order=None,
) -> list[MoritaBlock]:
    """One block per W-orbit, in orbit order."""
    if algebra not in DESCRIPTORS:
        raise ValueError(f"algebra must be one of {sorted(DESCRIPTORS)}, got {algebra!r}")
    sys = build_root_system(spec)
    orbits = enumerate_all_orbits(sys.spec, opt_in_e8=opt_in_e8, generator_order=generator_order)
    return [_block_from_orbit(sys, k, o, DESCRIPTORS[algebra]) for k, o in enumerate(orbits)]


# -- rank ----------------------------------------------------------------------------


@dataclass
class RankReport:
    spec: DiagramSpec
    contributions: list[int]
    oracle_total: int | None
    oracle_source: str

    @property
    def total(self) -> int:
        return sum(self.contributions)

    @property
    def match(self) -> bool | None:
        if self.oracle_total is None:
            return None
        return self.total == self.oracle_total


# diagram enumeration is exhaustive up to this many strands, closed form above
_ENUMERATION_STRANDS = 6


def diagram_count(m: int) -> tuple[int, str]:
    if m <= _ENUMERATION_STRANDS:
        return len(diagram.all_diagrams(m)), "diagram enumeration"
    return diagram.double_factorial_odd(m), "double factorial"


def rerun_total(sys: RootSystem) -> int:
    """``sum |orbit|^2 |W(C_X)|`` from an independent enumeration: every
    orthogonal subset is filtered by the orbit-local admissibility test and
    each orbit is seeded from its last set in canonical order."""
    total = 0
    for members in orbits_by_brute_force(sys):
        orbit = build_poset(sys, enumerate_orbit(sys, members[0]))
        nodes = centralizer_nodes(sys, orbit.maximal)
        total += orbit.orbit_size**2 * parabolic_order(sys, nodes)
    return total


def rank_check(spec: DiagramSpec | str, *, opt_in_e8: bool = False, oracle: bool = True) -> RankReport:
    """Total rank from the block decomposition, compared with an oracle.

    Type A uses the Brauer diagram count on ``n + 1`` strands; D and E use
    :func:`rerun_total`.  A mismatch raises :class:`InvariantViolation`.
    """
    sys = build_root_system(spec)
    contributions = [b.contribution for b in blocks(sys.spec, opt_in_e8=opt_in_e8)]
    oracle_total, source = None, "none"
    if oracle:
        if sys.spec.family == "A":
            oracle_total, source = diagram_count(sys.rank + 1)
        else:
            oracle_total, source = rerun_total(sys), "independent re-enumeration"
    report = RankReport(sys.spec, contributions, oracle_total, source)
    if report.match is False:
        raise InvariantViolation(
            f"rank of {sys.spec}: blocks give {report.total}, {source} gives {oracle_total}"
        )
    return report


# -- Wedderburn sizes -------------------------------------------------------------------


def partitions(k: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of ``k`` in reverse lexicographic order."""
    if largest is None:
        largest = k
    if k == 0:
        return [()]
    out = []
    for first in range(min(k, largest), 0, -1):
        for rest in partitions(k - first, first):
            out.append((first,) + rest)
    return out


def hook_dimension(shape: tuple[int, ...]) -> int:
    """Dimension of the Specht module of ``shape`` by the hook length formula."""
    n = sum(shape)
    conj = [sum(1 for r in shape if r > c) for c in range(shape[0])] if shape else []
    hooks = prod(shape[i] - j + conj[j] - i - 1 for i in range(len(shape)) for j in range(shape[i]))
    return factorial(n) // hooks


@dataclass(frozen=True)
class IrrepDatum:
    partition: tuple[tuple[int, ...], ...]
    dimension: int


@dataclass
class WedderburnBlock:
    block: MoritaBlock
    irreps: list[IrrepDatum] | None
    sizes: list[int] | None

    @property
    def available(self) -> bool:
        return self.sizes is not None

    @property
    def burnside_ok(self) -> bool:
        """``sum dim^2 == |W(C)|`` when dimensions are known."""
        if self.irreps is None:
            return True
        return sum(d.dimension**2 for d in self.irreps) == self.block.group_order


def _irreps_type_a(types: Iterable[TypeLabel]) -> list[IrrepDatum] | None:
    factors = []
    for label in types:
        if label.family != "A":
            return None
        factors.append(partitions(label.rank + 1))
    out = [IrrepDatum((), 1)]
    for shapes in factors:
        out = [
            IrrepDatum(d.partition + (s,), d.dimension * hook_dimension(s))
            for d in out
            for s in shapes
        ]
    return out


def wedderburn_sizes(spec: DiagramSpec | str, *, opt_in_e8: bool = False) -> list[WedderburnBlock]:
    """Matrix sizes ``|orbit| * dim(tau)`` of the generic semisimple algebra.

    Only blocks whose centralizer is a product of symmetric groups get
    sizes; the others carry ``None``.
    """
    out = []
    for b in blocks(spec, opt_in_e8=opt_in_e8):
        irreps = _irreps_type_a(b.centralizer_types)
        sizes = None if irreps is None else [b.orbit_size * d.dimension for d in irreps]
        wb = WedderburnBlock(b, irreps, sizes)
        if not wb.burnside_ok:
            raise InvariantViolation(f"irreducible dimensions of block {b.orbit_id} fail Burnside")
        out.append(wb)
    return out


# -- classical case -----------------------------------------------------------------------


@dataclass
class ClassicalLayer:
    t: int
    free_points: int
    det: LaurentPoly
    orbit_size: int
    group_order: int

    @property
    def nonsingular(self) -> bool:
        return not self.det.is_zero


def classical_block_report(m: int) -> list[ClassicalLayer]:
    """Match the cell layers of the Brauer algebra on ``m`` strands with the
    blocks of type ``A_{m-1}``: layer ``t`` pairs with the orbit of sets of
    ``t`` roots, whose centralizer is the symmetric group on ``m - 2t``
    points."""
    if m < 2:
        raise ValueError("need at least two strands")
    bl = {len(b.representative): b for b in blocks(f"A{m - 1}")}
    out = []
    for t in range(m // 2 + 1):
        b = bl[t]
        layer = ClassicalLayer(t, m - 2 * t, diagram.gram_det(m, t), b.orbit_size, b.group_order)
        if b.group_order != factorial(m - 2 * t):
            raise InvariantViolation(f"block of {t} roots has centralizer order {b.group_order}")
        if b.orbit_size != len(diagram.half_diagrams(m, t)):
            raise InvariantViolation(f"orbit of {t} roots does not match the half-diagram count")
        out.append(layer)
    return out


@dataclass
class QuasiHereditaryReport:
    m: int
    x: Fraction | None
    dets: dict[int, LaurentPoly]
    failing: list[tuple[int, int]] = field(default_factory=list)

    @property
    def quasi_hereditary(self) -> bool:
        return not self.failing


def quasi_hereditary_report(m: int, x: Fraction | int | str | None = None) -> QuasiHereditaryReport:
    """Flag quasi-heredity of the Brauer algebra on ``m`` strands from
    non-singularity of every layer form, generically or at ``delta = x``."""
    dets = {t: diagram.gram_det(m, t) for t in range(m // 2 + 1)}
    if x is None:
        failing = [(m, t) for t, d in dets.items() if d.is_zero]
        return QuasiHereditaryReport(m, None, dets, failing)
    x = Fraction(x)
    failing = [(m, t) for t, d in dets.items() if d.evaluate(x) == 0]
    return QuasiHereditaryReport(m, x, dets, failing)


_EXCLUDED_CHARS = {"A": (), "D": (2,), "E6": (2, 3), "E7": (2, 3), "E8": (2, 3, 5)}


def excluded_characteristics(spec: DiagramSpec | str) -> tuple[int, ...]:
    spec = spec if isinstance(spec, DiagramSpec) else DiagramSpec.parse(spec)
    key = str(spec) if spec.family == "E" else spec.family
    return _EXCLUDED_CHARS[key]


def char_condition(spec: DiagramSpec | str, p: int) -> bool:
    """Whether characteristic ``p`` (a prime, or 0) avoids the exclusions for the family."""
    if p < 0:
        raise ValueError("characteristic cannot be negative")
    return p not in excluded_characteristics(spec)


# -- cell poset in type D ----------------------------------------------------------------------

CellLabel = tuple[int, bool]  # (t, twisted)


def cell_label(c: CellLabel) -> str:
    t, twisted = c
    return f"({t},θ)" if twisted else str(t)


@dataclass
class CellPosetD:
    n: int
    untwisted: list[CellLabel]
    twisted: list[CellLabel]
    greater: set[tuple[CellLabel, CellLabel]]

    @property
    def elements(self) -> list[CellLabel]:
        return self.untwisted + self.twisted

    def above(self, a: CellLabel, b: CellLabel) -> bool:
        return (a, b) in self.greater

    def comparable(self, a: CellLabel, b: CellLabel) -> bool:
        return a == b or self.above(a, b) or self.above(b, a)

    def is_total(self) -> bool:
        els = self.elements
        return all(self.comparable(a, b) for a in els for b in els)

    def hasse_edges(self) -> list[tuple[CellLabel, CellLabel]]:
        """Covering pairs ``(a, b)`` with ``a > b``."""
        els = self.elements
        return [
            (a, b)
            for a, b in sorted(self.greater, key=lambda e: (self.elements.index(e[0]), self.elements.index(e[1])))
            if not any(self.above(a, c) and self.above(c, b) for c in els)
        ]

    def drawn_edges(self) -> list[tuple[CellLabel, CellLabel]]:
        """The edges of the illustrated diagram: a ladder with the extra
        diagonal from ``0`` to ``(1,θ)``."""
        have = set(self.elements)
        out = []
        for t, _ in self.untwisted:
            for target in ((t + 1, False), (t, True)):
                if target in have:
                    out.append(((t, False), target))
        out.append(((0, False), (1, True)))
        for t, _ in self.twisted:
            if (t + 1, True) in have:
                out.append(((t, True), (t + 1, True)))
        return sorted(out, key=lambda e: (self.elements.index(e[0]), self.elements.index(e[1])))

    def to_dot(self) -> str:
        lines = [f'digraph "cells_D{self.n}" {{']
        for c in self.elements:
            lines.append(f'  "{cell_label(c)}";')
        for a, b in self.hasse_edges():
            lines.append(f'  "{cell_label(a)}" -> "{cell_label(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _bullet_greater(a: CellLabel, b: CellLabel) -> bool:
    (t1, tw1), (t2, tw2) = a, b
    if not tw1 and not tw2:
        return t1 < t2
    if tw1 and tw2:
        return t1 < t2
    if not tw1 and tw2:
        return t1 <= t2
    return False


def cell_poset_D(n: int) -> CellPosetD:
    """The cell poset of the type ``D_n`` Brauer algebra, generated by the
    three comparison rules and closed transitively."""
    if n < 4:
        raise ValueError("type D needs n >= 4")
    untwisted = [(t, False) for t in range(n // 2 + 1)]
    twisted = [(t, True) for t in range(1, (n + 1) // 2 + 1)]
    els = untwisted + twisted
    greater = {(a, b) for a in els for b in els if _bullet_greater(a, b)}
    while True:
        extra = {(a, d) for a, b in greater for c, d in greater if b == c} - greater
        if not extra:
            break
        greater |= extra
    if any((b, a) in greater for a, b in greater):
        raise InvariantViolation(f"cell order for D{n} is not antisymmetric")
    return CellPosetD(n, untwisted, twisted, greater)


def orbit_count_D(n: int) -> int:
    return len(enumerate_all_orbits(f"D{n}", with_poset=False))
